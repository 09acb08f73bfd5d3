"""Exact scalars: rationals, cyclotomic integers, and factorization in the
Gaussian and Eisenstein integers.

Rationals are plain :class:`fractions.Fraction` values. Cyclotomic integers
live in ``Z[zeta_n]`` for the small set of conductors where torsion
eigenvalues of the groups we study can appear.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce

from sympy import factorint
from sympy.ntheory import sqrt_mod

ExactRational = Fraction

CONDUCTORS = (1, 2, 3, 4, 6, 12)

# Cyclotomic polynomials Phi_n, coefficients low degree first.
_PHI = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    6: (1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


def rat(num: int, den: int = 1) -> Fraction:
    """Lowest-terms rational with the sign carried by the numerator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _reduce(poly: list[int], conductor: int) -> tuple[int, ...]:
    phi = _PHI[conductor]
    d = len(phi) - 1
    p = list(poly) + [0] * max(0, d - len(poly))
    for k in range(len(p) - 1, d - 1, -1):
        c = p[k]
        if c:
            for j in range(d + 1):
                p[k - d + j] -= c * phi[j]
    return tuple(p[:d])


class CyclotomicInt:
    """An element of ``Z[zeta_n]`` stored in the power basis mod ``Phi_n``.

    Instances are immutable and hashable. Plain ints mix freely with them
    in arithmetic; two cyclotomic operands must share a conductor (use
    :meth:`embed` to move to a common one).
    """

    __slots__ = ("_n", "_c")

    def __init__(self, conductor: int, coeffs) -> None:
        if conductor not in _PHI:
            raise ValueError(f"unsupported conductor {conductor}; expected one of {CONDUCTORS}")
        self._n = conductor
        self._c = _reduce([int(c) for c in coeffs], conductor)

    @classmethod
    def from_int(cls, value: int, conductor: int) -> CyclotomicInt:
        return cls(conductor, [value])

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> CyclotomicInt:
        """The root of unity ``zeta_n ** k``."""
        poly = [0] * (k % conductor) + [1]
        return cls(conductor, poly)

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def embed(self, conductor: int) -> CyclotomicInt:
        if conductor % self._n:
            raise ValueError(f"cannot embed conductor {self._n} into {conductor}")
        step = conductor // self._n
        poly = [0] * (step * (len(self._c) - 1) + 1)
        for j, c in enumerate(self._c):
            poly[j * step] += c
        return CyclotomicInt(conductor, poly)

    def _lift(self, other) -> CyclotomicInt:
        if isinstance(other, CyclotomicInt):
            if other._n != self._n:
                raise ValueError(
                    f"conductor mismatch: {self._n} vs {other._n}; embed both into a common conductor first"
                )
            return other
        if isinstance(other, int):
            return CyclotomicInt.from_int(other, self._n)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self._n, [a + b for a, b in zip(self._c, other._c)])

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self._n, [-a for a in self._c])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        prod = [0] * (2 * len(self._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    prod[i + j] += a * b
        return CyclotomicInt(self._n, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CyclotomicInt:
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicInt.from_int(1, self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> CyclotomicInt:
        """Apply the automorphism ``zeta -> zeta**k``."""
        if math.gcd(k, self._n) != 1:
            raise ValueError(f"{k} is not a unit mod {self._n}")
        poly = [0] * self._n
        for j, c in enumerate(self._c):
            poly[(j * k) % self._n] += c
        return CyclotomicInt(self._n, poly)

    def conj(self) -> CyclotomicInt:
        return self.galois(-1 % self._n) if self._n > 2 else self

    def _other_conjugates(self) -> CyclotomicInt:
        ks = [k for k in range(2, self._n) if math.gcd(k, self._n) == 1]
        return reduce(lambda acc, k: acc * self.galois(k), ks, CyclotomicInt.from_int(1, self._n))

    def norm(self) -> int:
        """Norm from ``Q(zeta_n)`` down to ``Q``."""
        return (self * self._other_conjugates()).to_int()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self._c[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self._c[0]

    def divides(self, other) -> bool:
        try:
            self._lift(other).divexact(self)
        except ValueError:
            return False
        return True

    def divexact(self, other) -> CyclotomicInt:
        """Exact quotient ``self / other``; raises ValueError when it leaves the ring."""
        other = self._lift(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        num = self * other._other_conjugates()
        if any(c % n for c in num._c):
            raise ValueError(f"{other} does not divide {self}")
        return CyclotomicInt(self._n, [c // n for c in num._c])

    def inverse(self) -> CyclotomicInt:
        return CyclotomicInt.from_int(1, self._n).divexact(self)

    def is_zero(self) -> bool:
        return not any(self._c)

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self._n)
        return sum(c * z**j for j, c in enumerate(self._c))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_rational() and self._c[0] == other
        if isinstance(other, CyclotomicInt):
            return self._n == other._n and self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self._c[0])
        return hash((self._n, self._c))

    def __repr__(self) -> str:
        return f"CyclotomicInt({self._n}, {list(self._c)})"

    def __str__(self) -> str:
        sym = {3: "w", 4: "i"}.get(self._n, f"z{self._n}")
        terms = []
        for j, c in enumerate(self._c):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
                continue
            mono = sym if j == 1 else f"{sym}^{j}"
            coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
            terms.append(coef + mono)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


def cyc_mul(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    return a * b


def cyc_norm_to_Q(a: CyclotomicInt) -> int:
    return a.norm()


class QuadRing(str, Enum):
    """The two Euclidean imaginary quadratic rings handled here."""

    GAUSS = "gauss"
    EISENSTEIN = "eisenstein"

    @property
    def conductor(self) -> int:
        return 4 if self is QuadRing.GAUSS else 3

    @property
    def generator(self) -> CyclotomicInt:
        return CyclotomicInt.zeta(self.conductor)

    def element(self, a: int, b: int = 0) -> CyclotomicInt:
        """``a + b*i`` or ``a + b*w`` with ``w`` a primitive cube root of unity."""
        return CyclotomicInt(self.conductor, [a, b])

    def units(self) -> list[CyclotomicInt]:
        """All roots of unity in the ring, as powers of a generator of the unit group."""
        if self is QuadRing.GAUSS:
            return [CyclotomicInt.zeta(4, k) for k in range(4)]
        return [sixth_root(k) for k in range(6)]

    @property
    def ramified(self) -> CyclotomicInt:
        return self.element(1, 1) if self is QuadRing.GAUSS else self.element(1, -1)


def sixth_root(k: int) -> CyclotomicInt:
    """``xi_6 ** k`` written in ``Z[w]``; uses ``xi_6 = -w**2``."""
    return (-1) ** (k % 2) * CyclotomicInt.zeta(3, 2 * k)


def _as_ring_element(a, ring: QuadRing) -> CyclotomicInt:
    if isinstance(a, int):
        return ring.element(a)
    if a.conductor != ring.conductor:
        raise ValueError(f"{a!r} is not an element of the {ring.value} integers")
    return a


def normalize_associate(x: CyclotomicInt, ring: QuadRing) -> CyclotomicInt:
    """Rotate ``x`` by a unit into the canonical sector.

    Gaussian: first quadrant (re > 0, im >= 0). Eisenstein: argument in
    ``[0, pi/3)``, which in the basis ``a + b*w`` reads ``0 <= b < a``.
    """
    if x.is_zero():
        return x
    for u in ring.units():
        a, b = (u * x).coeffs
        if ring is QuadRing.GAUSS and a > 0 and b >= 0:
            return u * x
        if ring is QuadRing.EISENSTEIN and 0 <= b < a:
            return u * x
    raise AssertionError("no associate in the canonical sector")


def _round_quotient(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    num = a * b.conj()
    n = b.norm()
    return CyclotomicInt(a.conductor, [(2 * c + n) // (2 * n) for c in num.coeffs])


def ring_gcd(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    """Euclidean gcd in ``Z[i]`` or ``Z[w]`` (both norm-Euclidean under rounding)."""
    while not b.is_zero():
        a, b = b, a - _round_quotient(a, b) * b
    return a


def _primes_over(p: int, ring: QuadRing) -> list[CyclotomicInt]:
    if ring is QuadRing.GAUSS:
        if p == 2:
            return [normalize_associate(ring.element(1, 1), ring)]
        if p % 4 == 3:
            return [ring.element(p)]
        x = sqrt_mod(p - 1, p)
        pi = ring_gcd(ring.element(p), ring.element(x, 1))
    else:
        if p == 3:
            return [normalize_associate(ring.element(1, -1), ring)]
        if p % 3 == 2:
            return [ring.element(p)]
        s = sqrt_mod(p - 3, p)
        x = (s - 1) * pow(2, -1, p) % p
        pi = ring_gcd(ring.element(p), ring.element(x, -1))
    pi = normalize_associate(pi, ring)
    return sorted({pi, normalize_associate(pi.conj(), ring)}, key=lambda z: z.coeffs)


@dataclass(frozen=True)
class GaussianFactorization:
    """``unit * prod(prime ** exponent)``; each entry also records the prime's norm."""

    ring: QuadRing
    unit: CyclotomicInt
    prime_powers: tuple[tuple[CyclotomicInt, int, int], ...]

    def expand(self) -> CyclotomicInt:
        out = self.unit
        for prime, e, _ in self.prime_powers:
            out = out * prime**e
        return out


def gaussian_factor(a, ring: QuadRing) -> GaussianFactorization:
    """Factor a nonzero element of ``Z[i]`` or ``Z[w]`` into normalized primes."""
    a = _as_ring_element(a, ring)
    if a.is_zero():
        raise ValueError("cannot factor zero")
    rem = a
    powers = []
    for p in sorted(factorint(abs(a.norm()))):
        for pi in _primes_over(p, ring):
            e = 0
            while pi.divides(rem):
                rem = rem.divexact(pi)
                e += 1
            if e:
                powers.append((pi, e, abs(pi.norm())))
    if abs(rem.norm()) != 1:
        raise AssertionError(f"leftover non-unit {rem} while factoring {a}")
    return GaussianFactorization(ring, rem, tuple(powers))
