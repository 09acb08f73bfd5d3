"""Torsion conjugacy classes, block families, and eigenvalue/vanishing rules.

The explicit catalogs cover GL_1(Z), GL_2(Z) and GL_3(Z). Larger groups and
the Gaussian/Eisenstein groups are handled through block-diagonal families,
which is all the summation engine needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .exactnum import CyclotomicInt, QuadRing, sixth_root
from .polymat import (
    IntMatrix,
    IntPoly,
    T,
    block_diag,
    identity,
    intmat,
    mat_pow,
    multi_resultant,
)


class HypothesisViolation(ValueError):
    """Input falls outside the hypotheses under which a formula holds."""


# Orbifold Euler characteristics used as inputs. Finite groups contribute
# 1/|G|; chi(SL_2 Z) is zeta(-1) = -1/12 (Harder); chi(GL_2 Z) is half of it.
CHI_CONSTANTS: dict[str, Fraction] = {
    "GL1(Z)": Fraction(1, 2),
    "GL2(Z)": Fraction(-1, 24),
    "SL2(Z)": Fraction(-1, 12),
    "GL3(Z)": Fraction(0),
    "SL3(Z)": Fraction(0),
    "Gamma1(2,2)": 3 * Fraction(-1, 24),
}


def chi_finite(order: int) -> Fraction:
    return Fraction(1, order)


# --- roots of unity -----------------------------------------------------------


def root12(e: int) -> CyclotomicInt:
    return CyclotomicInt.zeta(12, e)


def root_exponent(x: CyclotomicInt | int) -> int:
    """The ``e`` with ``x == zeta_12**e``; raises if ``x`` is not a 12th root of unity."""
    if isinstance(x, int):
        x = CyclotomicInt.from_int(x, 12)
    if 12 % x.conductor:
        raise ValueError(f"{x!r} does not live in Q(zeta_12)")
    y = x.embed(12)
    for e in range(12):
        if y == root12(e):
            return e
    raise ValueError(f"{x} is not a root of unity of order dividing 12")


def poly_from_roots(exps: Iterable[int]) -> IntPoly:
    """``prod (t - zeta_12**e)``; must have rational coefficients."""
    coeffs = [CyclotomicInt.from_int(1, 12)]
    for e in exps:
        lam = root12(e)
        new = [CyclotomicInt.from_int(0, 12)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] = new[k + 1] + c
            new[k] = new[k] - lam * c
        coeffs = new
    return IntPoly([c.to_int() for c in coeffs])


# --- blocks ----------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    tag: str
    ring: str  # "Z", "gauss" or "eisenstein"
    matrix: IntMatrix = field(compare=False, repr=False)
    exps: tuple[int, ...]  # eigenvalues as exponents of zeta_12
    chi: Fraction

    @property
    def dim(self) -> int:
        return len(self.exps)

    @property
    def char_poly(self) -> IntPoly:
        return poly_from_roots(self.exps)


T3 = intmat([[0, 1], [-1, -1]])
T4 = intmat([[0, 1], [-1, 0]])
T6 = intmat([[0, -1], [1, 1]])

_Z_BLOCKS = [
    Block("+1", "Z", intmat([[1]]), (0,), Fraction(1, 2)),
    Block("I2", "Z", identity(2), (0, 0), CHI_CONSTANTS["GL2(Z)"]),
    Block("-1", "Z", intmat([[-1]]), (6,), Fraction(1, 2)),
    Block("-I2", "Z", -identity(2), (6, 6), CHI_CONSTANTS["GL2(Z)"]),
    Block("T3", "Z", T3, (4, 8), chi_finite(6)),
    Block("T4", "Z", T4, (3, 9), chi_finite(4)),
    Block("T6", "Z", T6, (2, 10), chi_finite(6)),
]
_GAUSS_BLOCKS = [
    Block(f"i^{k}", "gauss", intmat([[CyclotomicInt.zeta(4, k)]]), (3 * k,), chi_finite(4)) for k in range(4)
]
_EIS_BLOCKS = [Block(f"xi6^{k}", "eisenstein", intmat([[sixth_root(k)]]), (2 * k,), chi_finite(6)) for k in range(6)]

BLOCKS: dict[str, Block] = {b.tag: b for b in _Z_BLOCKS + _GAUSS_BLOCKS + _EIS_BLOCKS}
RING_TAGS: dict[str, tuple[str, ...]] = {
    "Z": tuple(b.tag for b in _Z_BLOCKS),
    "gauss": tuple(b.tag for b in _GAUSS_BLOCKS),
    "eisenstein": tuple(b.tag for b in _EIS_BLOCKS),
}
_ORDER = {tag: k for tags in RING_TAGS.values() for k, tag in enumerate(tags)}


def _coprime(a: Block, b: Block) -> bool:
    return not set(a.exps) & set(b.exps)


@dataclass(frozen=True)
class BlockDiagonalClass:
    """A block-diagonal torsion matrix with pairwise coprime diagonal blocks.

    It stands for every conjugacy class whose diagonal has these blocks.
    The tags are stored in a fixed canonical order, so reordered diagonals
    compare equal.
    """

    blocks: tuple[str, ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(self.blocks, key=_ORDER.__getitem__))
        object.__setattr__(self, "blocks", blocks)
        rings = {BLOCKS[t].ring for t in blocks}
        if len(rings) > 1:
            raise ValueError(f"blocks from different rings: {blocks}")
        for a, b in combinations(blocks, 2):
            if not _coprime(BLOCKS[a], BLOCKS[b]):
                raise ValueError(f"blocks {a} and {b} share an eigenvalue")

    @property
    def ring(self) -> str:
        return BLOCKS[self.blocks[0]].ring if self.blocks else "Z"

    @property
    def dim(self) -> int:
        return sum(BLOCKS[t].dim for t in self.blocks)

    @property
    def exps(self) -> tuple[int, ...]:
        return tuple(e for t in self.blocks for e in BLOCKS[t].exps)

    @property
    def eigenvalues(self) -> tuple[CyclotomicInt, ...]:
        return tuple(root12(e) for e in self.exps)

    @property
    def matrix(self) -> IntMatrix:
        return block_diag(*(BLOCKS[t].matrix for t in self.blocks))

    @cached_property
    def resultant_norm(self) -> int:
        """``|N(R(A))|``: the absolute norm of the product of pairwise resultants."""
        if len(self.blocks) < 2:
            return 1
        if self.ring == "Z":
            return abs(multi_resultant(BLOCKS[t].char_poly for t in self.blocks))
        # Scalar blocks: R = prod_{i<j} (lambda_j - lambda_i) in the ring itself.
        scalars = [BLOCKS[t].matrix[0, 0] for t in self.blocks]
        r = CyclotomicInt.from_int(1, scalars[0].conductor)
        for a, b in combinations(scalars, 2):
            r = r * (b - a)
        return abs(r.norm())

    def __str__(self) -> str:
        return "[" + ",".join(self.blocks) + "]"


def chi_centralizer(family: BlockDiagonalClass) -> Fraction:
    """Euler characteristic of the centralizer of the block-diagonal representative."""
    out = Fraction(1)
    for t in family.blocks:
        out *= BLOCKS[t].chi
    return out


def enumerate_families(tags: Sequence[str], dim: int) -> list[BlockDiagonalClass]:
    """All pairwise-coprime choices of distinct tags whose sizes add up to ``dim``."""
    found = []
    for r in range(len(tags) + 1):
        for combo in combinations(tags, r):
            if sum(BLOCKS[t].dim for t in combo) != dim:
                continue
            if all(_coprime(BLOCKS[a], BLOCKS[b]) for a, b in combinations(combo, 2)):
                found.append(BlockDiagonalClass(combo))
    return sorted(set(found), key=lambda f: [_ORDER[t] for t in f.blocks])


# --- groups -----------------------------------------------------------------------


class GroupFamily(str, Enum):
    GLmZ = "GLmZ"
    SLmZ = "SLmZ"
    GLmGauss = "GLmGauss"
    GLmEisenstein = "GLmEisenstein"
    Gamma1_Z = "Gamma1_Z"
    Gamma1_Gauss = "Gamma1_Gauss"
    Gamma1_Eisenstein = "Gamma1_Eisenstein"
    SL2TotallyReal = "SL2TotallyReal"


_FAMILY_RING = {
    GroupFamily.GLmZ: "Z",
    GroupFamily.SLmZ: "Z",
    GroupFamily.Gamma1_Z: "Z",
    GroupFamily.GLmGauss: "gauss",
    GroupFamily.Gamma1_Gauss: "gauss",
    GroupFamily.GLmEisenstein: "eisenstein",
    GroupFamily.Gamma1_Eisenstein: "eisenstein",
}

_SHORT_NAMES = {
    "z": GroupFamily.GLmZ,
    "gauss": GroupFamily.GLmGauss,
    "eisenstein": GroupFamily.GLmEisenstein,
}


@dataclass(frozen=True)
class GroupSpec:
    """Which arithmetic group: family, matrix size, and level data for Gamma_1."""

    family: GroupFamily
    m: int
    level: int | CyclotomicInt | None = None
    field_data_ref: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", GroupFamily(self.family))
        if self.m < 1:
            raise ValueError("matrix size must be at least 1")
        fam = self.family
        if fam is GroupFamily.Gamma1_Z:
            check_level_z(self.level)
        elif fam in (GroupFamily.Gamma1_Gauss, GroupFamily.Gamma1_Eisenstein):
            ring = QuadRing.GAUSS if fam is GroupFamily.Gamma1_Gauss else QuadRing.EISENSTEIN
            check_level_ring(self.level, ring)

    @property
    def ring(self) -> str:
        return _FAMILY_RING.get(self.family, "Z")

    @classmethod
    def parse(cls, name: str) -> GroupSpec:
        """Read short names such as ``gl3z``, ``gl2gauss`` or ``gl2eisenstein``."""
        text = name.strip().lower()
        if text.startswith("gl"):
            digits = "".join(ch for ch in text[2:] if ch.isdigit())
            rest = text[2 + len(digits) :]
            if digits and rest in _SHORT_NAMES:
                return cls(_SHORT_NAMES[rest], int(digits))
        raise ValueError(f"unknown group {name!r}; expected e.g. gl2z, gl3z, gl2gauss, gl2eisenstein")


def check_level_z(N) -> int:
    if not isinstance(N, int) or N < 1:
        raise HypothesisViolation(f"level must be a positive integer, got {N!r}")
    if math.gcd(N, 6) != 1:
        raise HypothesisViolation(f"level must be coprime to 6, got {N}")
    if N == 1:
        raise HypothesisViolation("level 1 gives the whole group, where the Gamma_1 formula does not apply")
    return N


def check_level_ring(gen, ring: QuadRing) -> CyclotomicInt:
    if isinstance(gen, int):
        gen = ring.element(gen)
    if gen.conductor != ring.conductor:
        raise HypothesisViolation(f"{gen} is not an element of the {ring.value} integers")
    n = abs(gen.norm())
    if n == 0:
        raise HypothesisViolation("the zero ideal is not a valid level")
    if n == 1:
        raise HypothesisViolation("the unit ideal is rejected as a level: Gamma_1 would be the whole group")
    if ring.ramified.divides(gen):
        raise HypothesisViolation(f"ideal ({gen}) must be coprime to the ramified prime ({ring.ramified})")
    return gen


def block_families(group: GroupSpec | str) -> list[BlockDiagonalClass]:
    """Admissible block-diagonal families for the GL_m summation formulas."""
    if isinstance(group, str):
        group = GroupSpec.parse(group)
    if group.family not in (GroupFamily.GLmZ, GroupFamily.GLmGauss, GroupFamily.GLmEisenstein):
        raise ValueError(f"no block families for {group.family.value}")
    return enumerate_families(RING_TAGS[group.ring], group.m)


# --- explicit catalogs ----------------------------------------------------------


@dataclass(frozen=True)
class TorsionClass:
    label: str
    rep: IntMatrix = field(compare=False, repr=False)
    order: int
    exps: tuple[int, ...]
    centralizer_desc: str
    chi_c: Fraction
    printed_chi: Fraction | None = None  # the commonly quoted value, where it has the wrong sign

    @property
    def eigenvalues(self) -> tuple[CyclotomicInt, ...]:
        return tuple(root12(e) for e in self.exps)

    @property
    def dim(self) -> int:
        return self.rep.shape[0]


def _order(A: IntMatrix) -> int:
    I = identity(A.shape[0])
    P = A
    for k in range(1, 13):
        if (P == I).all():
            return k
        P = P @ A
    raise ValueError("matrix is not torsion of order dividing 12")


def _cls(label, rows, exps, desc, chi, printed=None) -> TorsionClass:
    rep = intmat(rows)
    return TorsionClass(label, rep, _order(rep), tuple(exps), desc, Fraction(chi), printed)


_C2C2 = Fraction(1, 4)

_GL1 = (
    _cls("a", [[1]], (0,), "GL1(Z)", Fraction(1, 2)),
    _cls("b", [[-1]], (6,), "GL1(Z)", Fraction(1, 2)),
)

_GL2 = (
    _cls("a", [[1, 0], [0, 1]], (0, 0), "GL2(Z)", CHI_CONSTANTS["GL2(Z)"]),
    _cls("b", [[-1, 0], [0, -1]], (6, 6), "GL2(Z)", CHI_CONSTANTS["GL2(Z)"]),
    _cls("c1", [[1, 0], [0, -1]], (0, 6), "C2 x C2", _C2C2, -_C2C2),
    _cls("c2", [[1, 1], [0, -1]], (0, 6), "C2 x C2", _C2C2, -_C2C2),
    _cls("d", T3.tolist(), (4, 8), "C6", chi_finite(6)),
    _cls("e", T6.tolist(), (2, 10), "C6", chi_finite(6)),
    _cls("f", T4.tolist(), (3, 9), "C4", chi_finite(4)),
)

_GL2xGL1 = CHI_CONSTANTS["GL2(Z)"] * Fraction(1, 2)
_G12xGL1 = CHI_CONSTANTS["Gamma1(2,2)"] * Fraction(1, 2)

_GL3 = (
    _cls("a", [[1, 0, 0], [0, 1, 0], [0, 0, 1]], (0, 0, 0), "GL3(Z)", CHI_CONSTANTS["GL3(Z)"]),
    _cls("b", [[-1, 0, 0], [0, -1, 0], [0, 0, -1]], (6, 6, 6), "GL3(Z)", CHI_CONSTANTS["GL3(Z)"]),
    _cls("c1", [[1, 0, 0], [0, 1, 0], [0, 0, -1]], (0, 0, 6), "GL2(Z) x GL1(Z)", _GL2xGL1),
    _cls("c2", [[1, 0, 1], [0, 1, 0], [0, 0, -1]], (0, 0, 6), "Gamma1(2,2) x GL1(Z)", _G12xGL1),
    _cls("d1", [[-1, 0, 0], [0, -1, 0], [0, 0, 1]], (6, 6, 0), "GL2(Z) x GL1(Z)", _GL2xGL1),
    _cls("d2", [[-1, 0, -1], [0, -1, 0], [0, 0, 1]], (6, 6, 0), "Gamma1(2,2) x GL1(Z)", _G12xGL1),
    _cls("e1", [[0, 1, 0], [-1, -1, 0], [0, 0, 1]], (4, 8, 0), "C6 x C2", chi_finite(12)),
    _cls("e2", [[0, 1, 1], [-1, -1, 0], [0, 0, 1]], (4, 8, 0), "C3 x C2", chi_finite(6)),
    _cls("f1", [[0, -1, 0], [1, 1, 0], [0, 0, -1]], (2, 10, 6), "C6 x C2", chi_finite(12)),
    _cls("f2", [[0, -1, -1], [1, 1, 0], [0, 0, -1]], (2, 10, 6), "C3 x C2", chi_finite(6)),
    _cls("g", [[0, 1, 0], [-1, -1, 0], [0, 0, -1]], (4, 8, 6), "C6 x C2", chi_finite(12)),
    _cls("h", [[0, -1, 0], [1, 1, 0], [0, 0, 1]], (2, 10, 0), "C6 x C2", chi_finite(12)),
    _cls("i1", [[0, 1, 0], [-1, 0, 0], [0, 0, 1]], (3, 9, 0), "C4 x C2", chi_finite(8)),
    _cls("i2", [[0, 1, 1], [-1, 0, 0], [0, 0, 1]], (3, 9, 0), "C4 x C2", chi_finite(8)),
    _cls("j1", [[0, -1, 0], [1, 0, 0], [0, 0, -1]], (3, 9, 6), "C4 x C2", chi_finite(8)),
    _cls("j2", [[0, -1, -1], [1, 0, 0], [0, 0, -1]], (3, 9, 6), "C4 x C2", chi_finite(8)),
)

CATALOGS: dict[int, tuple[TorsionClass, ...]] = {1: _GL1, 2: _GL2, 3: _GL3}


def torsion_catalog(group: GroupSpec | str) -> list[TorsionClass]:
    """Every torsion conjugacy class of GL_m(Z), m <= 3, with its centralizer."""
    if isinstance(group, str):
        group = GroupSpec.parse(group)
    if group.family is not GroupFamily.GLmZ or group.m not in CATALOGS:
        raise ValueError(
            f"no explicit torsion catalog for {group.family.value} with m={group.m}; use block_families instead"
        )
    return list(CATALOGS[group.m])


GL2Z_GENERATORS = (
    intmat([[0, -1], [1, 0]]),
    intmat([[1, 1], [0, 1]]),
    intmat([[1, 0], [0, -1]]),
)


def centralizer_generators(A: IntMatrix) -> list[IntMatrix]:
    """Generators of the centralizer in GL_k(Z) of a diagonal torsion block (k <= 2)."""
    k = A.shape[0]
    if k == 1:
        return [intmat([[-1]])]
    if k == 2 and A[0, 1] == 0 and A[1, 0] == 0 and A[0, 0] == A[1, 1]:
        return list(GL2Z_GENERATORS)
    if k == 2:
        # Irreducible char poly: the centralizer is the unit group of Z[A].
        return [A, -identity(2)]
    raise ValueError("centralizer generators only for 1x1 and 2x2 blocks")


# --- eigenvalue and vanishing rules ---------------------------------------------


class FieldKind(str, Enum):
    RATIONAL = "Q"
    GAUSSIAN = "Q(i)"
    EISENSTEIN = "Q(xi3)"
    IMAGINARY_QUADRATIC = "imaginary quadratic"
    TOTALLY_REAL = "totally real"
    OTHER = "other"


class GroupKind(str, Enum):
    GL = "GL"
    SL = "SL"


_ALLOWED = {
    FieldKind.RATIONAL: {0, 6, 3, 9, 4, 8, 2, 10},
    FieldKind.GAUSSIAN: {0, 6, 3, 9},
    FieldKind.EISENSTEIN: {0, 6, 4, 8, 2, 10},
    FieldKind.IMAGINARY_QUADRATIC: {0, 6},
}


def eigenvalue_constraint(field: FieldKind, group_kind: GroupKind, eigs) -> bool:
    """Whether a torsion element with these eigenvalues can have a centralizer with
    nonzero Euler characteristic."""
    field, group_kind = FieldKind(field), GroupKind(group_kind)
    exps = [root_exponent(x) for x in eigs]
    counts = {e: exps.count(e) for e in set(exps)}
    if field is FieldKind.OTHER:
        return False
    if field is FieldKind.TOTALLY_REAL:
        if group_kind is GroupKind.GL:
            return False
        return len(exps) <= 2 and (len(exps) < 2 or (exps[0] + exps[1]) % 12 == 0)
    if field is FieldKind.IMAGINARY_QUADRATIC and group_kind is GroupKind.SL:
        return False
    if not set(exps) <= _ALLOWED[field]:
        return False
    if field is FieldKind.RATIONAL:
        if any(counts.get(e, 0) > 2 for e in (0, 6)):
            return False
        if any(c > 1 for e, c in counts.items() if e not in (0, 6)):
            return False
        if group_kind is GroupKind.SL and counts.get(6, 0) not in (0, 2):
            return False
        return True
    return all(c <= 1 for c in counts.values())


_GL_BOUND = {
    FieldKind.RATIONAL: 10,
    FieldKind.GAUSSIAN: 4,
    FieldKind.EISENSTEIN: 6,
    FieldKind.IMAGINARY_QUADRATIC: 2,
}


def vanishing_bound(field: FieldKind, group_kind: GroupKind, m: int) -> bool:
    """True when chi_h vanishes for every finite-index subgroup and every coefficient module."""
    field, group_kind = FieldKind(field), GroupKind(group_kind)
    if m < 1:
        raise ValueError("m must be at least 1")
    if field in _GL_BOUND:
        return m > _GL_BOUND[field]
    if field is FieldKind.TOTALLY_REAL and group_kind is GroupKind.SL:
        return m > 2
    return True


def vanishing_reason(field: FieldKind, group_kind: GroupKind, m: int) -> str:
    field, group_kind = FieldKind(field), GroupKind(group_kind)
    if field in _GL_BOUND:
        return f"{group_kind.value}_m over {field.value}: chi_h vanishes for m > {_GL_BOUND[field]} (m={m})"
    if field is FieldKind.TOTALLY_REAL and group_kind is GroupKind.SL:
        return f"SL_m over a totally real field: chi_h vanishes for m > 2 (m={m})"
    return f"{group_kind.value}_m over this field: chi_h always vanishes"
