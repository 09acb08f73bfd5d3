"""Traces of torsion elements on symmetric powers of the standard representation.

``Tr(A | S^n V)`` is the complete homogeneous symmetric polynomial ``h_n``
of the eigenvalues of ``A``. Eigenvalues are handled as exponents of
``zeta_12`` and the sums are carried out exactly in ``Z[zeta_12]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd, lcm

from .exactnum import CyclotomicInt
from .torsion import BLOCKS, BlockDiagonalClass, TorsionClass, root12, root_exponent

_ZERO = CyclotomicInt.from_int(0, 12)
_ONE = CyclotomicInt.from_int(1, 12)


@dataclass(frozen=True)
class RepSpec:
    """``S^n V_m``, optionally twisted by ``det ** det_twist``."""

    dim: int
    sym_power: int = 0
    det_twist: int = 0

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("representation dimension must be at least 1")
        if self.sym_power < 0:
            raise ValueError("symmetric power must be non-negative")
        if self.det_twist not in (0, 1):
            raise ValueError("det twist exponent must be 0 or 1")

    @property
    def degree(self) -> int:
        return comb(self.sym_power + self.dim - 1, self.dim - 1)


@lru_cache(maxsize=None)
def _h(exps: tuple[int, ...], n: int) -> CyclotomicInt:
    # h_n(x_1..x_k) = sum_j x_k^j h_{n-j}(x_1..x_{k-1})
    if n == 0:
        return _ONE
    if not exps:
        return _ZERO
    *rest, last = exps
    rest = tuple(rest)
    total = _ZERO
    for j in range(n + 1):
        total = total + root12(last * j) * _h(rest, n - j)
    return total


def trace_sym_exact(eigs, n: int) -> CyclotomicInt:
    """``h_n`` of the eigenvalues as an element of ``Z[zeta_12]``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _h(tuple(sorted(root_exponent(e) for e in eigs)), n)


def trace_sym(eigs, n: int) -> int:
    """Trace on ``S^n V`` of an element with the given eigenvalues; must be a rational integer."""
    value = trace_sym_exact(eigs, n)
    if not value.is_rational():
        raise ArithmeticError(f"trace {value} on S^{n} is not a rational integer")
    return value.to_int()


@dataclass(frozen=True)
class TraceSequence:
    """``k -> Tr(block | S^k V)`` as ``slope[k % p] * k + values[k % p]``.

    Blocks without repeated eigenvalues give purely periodic sequences
    (zero slopes). ``I2`` gives ``k + 1`` and ``-I2`` gives ``(-1)^k (k + 1)``,
    so the slope is allowed to be periodic too.
    """

    tag: str
    period: int
    values: tuple[int, ...]
    slopes: tuple[int, ...]

    def __call__(self, k: int) -> int:
        r = k % self.period
        return self.slopes[r] * k + self.values[r]


def block_sequence(tag: str) -> TraceSequence:
    """Fit the trace sequence of an integer block from two periods of ``h_k``."""
    block = BLOCKS[tag]
    if block.ring != "Z":
        raise ValueError(f"trace sequences are defined for integer blocks, not {tag}")
    eigs = [root12(e) for e in block.exps]
    period = lcm(*(12 // gcd(12, e) for e in block.exps))
    vals, slopes = [], []
    for r in range(period):
        a, b = trace_sym(eigs, r), trace_sym(eigs, r + period)
        slope, rem = divmod(b - a, period)
        assert rem == 0
        slopes.append(slope)
        vals.append(a - slope * r)
    seq = TraceSequence(tag, period, tuple(vals), tuple(slopes))
    for k in range(3 * period):
        assert seq(k) == trace_sym(eigs, k), (tag, k)
    return seq


def trace_convolve(g: TraceSequence, h: TraceSequence, n: int) -> int:
    """Trace of the direct sum on ``S^n``: ``sum_i g(i) h(n-i)``."""
    return sum(g(i) * h(n - i) for i in range(n + 1))


def _class_exps(cls) -> tuple[int, ...]:
    if isinstance(cls, (TorsionClass, BlockDiagonalClass)):
        return cls.exps
    raise TypeError(f"expected a torsion class or block family, got {type(cls).__name__}")


def trace_rep_exact(cls, rep: RepSpec) -> CyclotomicInt:
    """``Tr(A^-1 | S^n V (x) det^e)`` in ``Z[zeta_12]``."""
    exps = _class_exps(cls)
    if len(exps) != rep.dim:
        raise ValueError(f"representation has dimension {rep.dim} but the element is {len(exps)}x{len(exps)}")
    inv = tuple(sorted((-e) % 12 for e in exps))
    value = _h(inv, rep.sym_power)
    if rep.det_twist:
        # det(A)^-1 is the product of the inverted eigenvalues.
        value = value * root12(sum(inv))
    return value


def trace_rep(cls, rep: RepSpec) -> int:
    value = trace_rep_exact(cls, rep)
    if not value.is_rational():
        raise ArithmeticError(f"trace {value} is not a rational integer")
    return value.to_int()
