"""Homological Euler characteristics by summing over torsion conjugacy classes.

Every formula here has the shape ``sum |R(A)| chi(C(A)) Tr(A^-1 | V)`` over
block-diagonal families ``A``, with ``R(A)`` the product of pairwise
resultants of the diagonal blocks. Gamma_1 groups weight two such sums by
multiplicative arithmetic functions of the level.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from sympy import factorint

from .exactnum import CyclotomicInt, QuadRing, gaussian_factor
from .reptrace import RepSpec, trace_rep, trace_rep_exact
from .torsion import (
    BLOCKS,
    RING_TAGS,
    BlockDiagonalClass,
    FieldKind,
    GroupKind,
    TorsionClass,
    check_level_ring,
    check_level_z,
    chi_centralizer,
    enumerate_families,
    vanishing_bound,
)

# --- arithmetic functions -------------------------------------------------------------


class ArithmeticKind(str, Enum):
    PHI = "phi"
    PHI2 = "phi2"
    PHI_GAUSS = "phiGauss"
    PHI_EISENSTEIN = "phiEisenstein"


@dataclass(frozen=True)
class ArithmeticFunctionValue:
    kind: ArithmeticKind
    argument: int | CyclotomicInt
    value: int


def _positive(N: int) -> int:
    if isinstance(N, bool) or not isinstance(N, int):
        raise TypeError(f"expected an integer, got {N!r}")
    if N < 1:
        raise ValueError(f"argument must be a positive integer, got {N}")
    return N


def phi(N: int) -> int:
    """Euler's totient: ``p^a (1 - 1/p)`` on prime powers."""
    out = _positive(N)
    for p in factorint(N):
        out = out // p * (p - 1)
    return out


def phi2(N: int) -> int:
    """``p^(2a) (1 - 1/p^2)`` on prime powers."""
    out = _positive(N) ** 2
    for p in factorint(N):
        out = out // (p * p) * (p * p - 1)
    return out


def phi_ring(gen, ring: QuadRing) -> int:
    """Number of units of ``O / (gen)``: ``N(p)^n (1 - 1/N(p))`` on prime powers."""
    ring = QuadRing(ring)
    fact = gaussian_factor(gen, ring)
    out = 1
    for _, e, norm in fact.prime_powers:
        out *= norm ** (e - 1) * (norm - 1)
    return out


_RING_PHI_KIND = {QuadRing.GAUSS: ArithmeticKind.PHI_GAUSS, QuadRing.EISENSTEIN: ArithmeticKind.PHI_EISENSTEIN}


def arithmetic_function(kind: ArithmeticKind | str, argument) -> ArithmeticFunctionValue:
    kind = ArithmeticKind(kind)
    if kind is ArithmeticKind.PHI:
        value = phi(argument)
    elif kind is ArithmeticKind.PHI2:
        value = phi2(argument)
    else:
        ring = QuadRing.GAUSS if kind is ArithmeticKind.PHI_GAUSS else QuadRing.EISENSTEIN
        value = phi_ring(argument, ring)
    return ArithmeticFunctionValue(kind, argument, value)


# --- summation engine ---------------------------------------------------------------------

_RING_NAMES = {"z": "Z", "gauss": "gauss", "eisenstein": "eisenstein"}
_RING_FIELD = {"Z": FieldKind.RATIONAL, "gauss": FieldKind.GAUSSIAN, "eisenstein": FieldKind.EISENSTEIN}


def _ring_name(ring) -> str:
    key = ring.value if isinstance(ring, QuadRing) else str(ring)
    try:
        return _RING_NAMES[key.lower()]
    except KeyError:
        raise ValueError(f"unsupported ring {ring!r}; expected Z, gauss or eisenstein") from None


def family_weight(family: BlockDiagonalClass) -> Fraction:
    """``|N(R(A))| * chi(C(A))`` for a block-diagonal family."""
    return family.resultant_norm * chi_centralizer(family)


def weighted_trace_sum(terms: Iterable[tuple[Fraction, object]], rep: RepSpec) -> Fraction:
    """``sum weight * Tr(A^-1 | V)`` done exactly in ``Z[zeta_12]``.

    Individual traces over the Gaussian or Eisenstein integers need not be
    rational; the full sum must be, and that is checked.
    """
    terms = [(Fraction(w), cls) for w, cls in terms]
    if not terms:
        return Fraction(0)
    den = lcm(*(w.denominator for w, _ in terms))
    total = CyclotomicInt.from_int(0, 12)
    for w, cls in terms:
        if w:
            total = total + trace_rep_exact(cls, rep) * (w.numerator * (den // w.denominator))
    if not total.is_rational():
        raise ArithmeticError(f"Euler characteristic sum {total}/{den} is not rational")
    return Fraction(total.to_int(), den)


def _check_dim(rep: RepSpec, m: int) -> None:
    if rep.dim != m:
        raise ValueError(f"representation has dimension {rep.dim} but the group acts on {m}-dimensional space")


def _negate(family: BlockDiagonalClass) -> BlockDiagonalClass:
    swap = {"+1": "-1", "-1": "+1", "I2": "-I2", "-I2": "I2", "T3": "T6", "T6": "T3", "T4": "T4"}
    return BlockDiagonalClass(tuple(swap[t] for t in family.blocks))


def chi_h_glm(ring, m: int, rep: RepSpec, *, paired: bool = False) -> Fraction:
    """``chi_h(GL_m(O), V)`` for ``O`` one of Z, Z[i], Z[xi_3].

    ``paired`` groups each integral family with its negative, whose
    contribution differs only by the sign ``(-1)^(n + m*e)``.
    """
    name = _ring_name(ring)
    _check_dim(rep, m)
    if vanishing_bound(_RING_FIELD[name], GroupKind.GL, m):
        return Fraction(0)
    families = enumerate_families(RING_TAGS[name], m)
    if not paired:
        return weighted_trace_sum(((family_weight(f), f) for f in families), rep)
    if name != "Z":
        raise ValueError("the +-A pairing is only used over Z")
    sign = (-1) ** (rep.sym_power + m * rep.det_twist)
    if sign < 0:
        return Fraction(0)
    seen: set[BlockDiagonalClass] = set()
    terms = []
    for f in families:
        if f in seen:
            continue
        g = _negate(f)
        seen.update((f, g))
        terms.append((family_weight(f) * (1 if g == f else 2), f))
    return weighted_trace_sum(terms, rep)


def brown_sum(classes: Sequence[TorsionClass], rep: RepSpec) -> Fraction:
    """``sum chi(C(A)) Tr(A^-1 | V)`` over an explicit torsion catalog."""
    return sum((c.chi_c * trace_rep(c, rep) for c in classes), Fraction(0))


# --- Gamma_1 -------------------------------------------------------------------------------

_GAMMA1_Z_TAGS = ("-1", "-I2", "T3", "T4", "T6")


def gamma1_z_families(m: int) -> tuple[list[BlockDiagonalClass], list[BlockDiagonalClass]]:
    """Families ``[A1, +1]`` and ``[A2, I2]`` with ``A1, A2`` avoiding the eigenvalue 1."""
    ones = [BlockDiagonalClass(f.blocks + ("+1",)) for f in enumerate_families(_GAMMA1_Z_TAGS, m - 1)]
    twos = [BlockDiagonalClass(f.blocks + ("I2",)) for f in enumerate_families(_GAMMA1_Z_TAGS, m - 2)] if m >= 2 else []
    return ones, twos


def chi_h_gamma1_z(m: int, N: int, rep: RepSpec) -> Fraction:
    """``chi_h(Gamma_1(m, N), V)`` for ``m`` in 2..4 and ``N`` coprime to 6.

    ``phi(N)`` weights the families with a single eigenvalue 1 and
    ``phi2(N)`` those with a 2x2 identity block. The centralizer Euler
    characteristics are those in ``GL_m(Z)``.
    """
    if m not in (2, 3, 4):
        raise ValueError(f"Gamma_1(m, N) formulas are implemented for m in 2..4, got {m}")
    check_level_z(N)
    _check_dim(rep, m)
    ones, twos = gamma1_z_families(m)
    s1 = weighted_trace_sum(((family_weight(f), f) for f in ones), rep)
    s2 = weighted_trace_sum(((family_weight(f), f) for f in twos), rep)
    return phi(N) * s1 + phi2(N) * s2


def gamma1_ring_families(ring: QuadRing, m: int) -> list[BlockDiagonalClass]:
    """Families ``[A0, 1]`` with ``A0`` built from distinct non-trivial roots of unity."""
    tags = RING_TAGS[_ring_name(ring)]
    one, rest = tags[0], tags[1:]
    assert BLOCKS[one].exps == (0,)
    return [BlockDiagonalClass(f.blocks + (one,)) for f in enumerate_families(rest, m - 1)]


def chi_h_gamma1_ring(ring, m: int, gen, rep: RepSpec) -> Fraction:
    """``chi_h(Gamma_1(m, a), V)`` over ``Z[i]`` or ``Z[xi_3]``, ``a = (gen)`` prime to the ramified prime."""
    ring = QuadRing(_ring_name(ring))
    if m < 1:
        raise ValueError("m must be at least 1")
    gen = check_level_ring(gen, ring)
    _check_dim(rep, m)
    families = gamma1_ring_families(ring, m)
    return phi_ring(gen, ring) * weighted_trace_sum(((family_weight(f), f) for f in families), rep)


# --- automorphism groups of projective modules ---------------------------------------------


def chi_h_aut_p(n: int, rep: RepSpec) -> Fraction:
    """``n * Tr([1, -1] | V)`` where ``n`` counts the rank-one splittings of ``P``.

    ``n`` is supplied by the caller; the data needed to compute it is not
    available here.
    """
    if n < 0:
        raise ValueError("the number of splittings must be non-negative")
    _check_dim(rep, 2)
    return Fraction(n * trace_rep(BlockDiagonalClass(("+1", "-1")), rep))
