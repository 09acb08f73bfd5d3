"""Off-diagonal classification for block upper-triangular torsion matrices.

For ``A = [[A11, A12], [0, A22]]`` whose diagonal blocks share no
eigenvalue, the conjugacy class of ``A`` with fixed diagonal is decided by
the image of ``A12`` in the finite cokernel ``Q`` of the Sylvester
operator ``X -> X A22 - A11 X``, up to the action of the centralizers
``C(A11) x C(A22)`` by ``X -> B11 X B22^-1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .polymat import (
    IntMatrix,
    SmithForm,
    char_poly,
    intmat,
    inverse_unimodular,
    resultant,
    smith_normal_form,
    sylvester_op,
    unvec,
    vec,
)

Point = tuple[int, ...]
Generator = tuple[IntMatrix, IntMatrix]


@dataclass(frozen=True)
class QMod:
    """The finite group ``Z^k / image(P)`` written as a product of cyclic factors."""

    A11: IntMatrix
    A22: IntMatrix
    snf: SmithForm
    moduli: tuple[int, ...]
    coord_map: IntMatrix
    lift_basis: tuple[IntMatrix, ...]

    @property
    def cardinality(self) -> int:
        out = 1
        for d in self.moduli:
            out *= d
        return out

    def coords(self, X: IntMatrix) -> Point:
        """Reduced coordinates of an off-diagonal block."""
        v = vec(X)
        return tuple(int(sum(c * x for c, x in zip(row, v))) % d for row, d in zip(self.coord_map, self.moduli))

    def lift(self, point: Point) -> IntMatrix:
        m1, m2 = self.A11.shape[0], self.A22.shape[0]
        X = intmat([[0] * m2 for _ in range(m1)])
        for p, basis in zip(point, self.lift_basis):
            X = X + p * basis
        return X

    def points(self) -> list[Point]:
        return list(product(*(range(d) for d in self.moduli)))


def qmod(A11: IntMatrix, A22: IntMatrix) -> QMod:
    if resultant(char_poly(A11), char_poly(A22)) == 0:
        raise ValueError("singular Sylvester operator: the diagonal blocks share an eigenvalue")
    m1, m2 = A11.shape[0], A22.shape[0]
    P = sylvester_op(A11, A22)
    snf = smith_normal_form(P)
    keep = [k for k, d in enumerate(snf.diag) if d > 1]
    L_inv = inverse_unimodular(snf.left)
    coord_map = intmat([list(snf.left[k]) for k in keep]) if keep else intmat([[0] * (m1 * m2)])[:0]
    lifts = tuple(unvec(list(L_inv[:, k]), m1, m2) for k in keep)
    return QMod(A11, A22, snf, tuple(snf.diag[k] for k in keep), coord_map, lifts)


@dataclass(frozen=True)
class FiniteAction:
    """Centralizer pairs acting on a ``QMod`` through linear maps on coordinates."""

    q: QMod
    matrices: tuple[tuple[Point, ...], ...]
    element_count: int

    def apply(self, g: int, point: Point) -> Point:
        cols = self.matrices[g]
        return tuple(
            sum(p * col[i] for p, col in zip(point, cols)) % d for i, d in enumerate(self.q.moduli)
        )

    def neighbours(self, point: Point) -> Iterable[Point]:
        for g in range(len(self.matrices)):
            yield self.apply(g, point)


def _check_commutes(B: IntMatrix, A: IntMatrix, which: str) -> None:
    if (B @ A != A @ B).any():
        raise ValueError(f"generator does not centralize {which}")


def finite_action(q: QMod, gens: Sequence[Generator]) -> FiniteAction:
    mats = []
    for B11, B22 in gens:
        _check_commutes(B11, q.A11, "A11")
        _check_commutes(B22, q.A22, "A22")
        B22_inv = inverse_unimodular(B22)
        cols = tuple(q.coords(B11 @ X @ B22_inv) for X in q.lift_basis)
        mats.append(cols)
    action = FiniteAction(q, tuple(mats), q.cardinality)
    pts = q.points()
    for g in range(len(mats)):
        if len({action.apply(g, p) for p in pts}) != len(pts):
            raise ValueError("induced map is not a bijection of Q")
    return action


@dataclass(frozen=True)
class OrbitDecomposition:
    """Orbits listed by their lexicographically least point, with sizes."""

    orbits: tuple[tuple[Point, int], ...]

    def __len__(self) -> int:
        return len(self.orbits)

    @property
    def sizes(self) -> list[int]:
        return [size for _, size in self.orbits]


def _orbit(action: FiniteAction, start: Point) -> set[Point]:
    seen = {start}
    todo = deque([start])
    while todo:
        p = todo.popleft()
        for nxt in action.neighbours(p):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def orbits(q: QMod, gens: Sequence[Generator]) -> OrbitDecomposition:
    action = finite_action(q, gens)
    remaining = set(q.points())
    found = []
    while remaining:
        orb = _orbit(action, min(remaining))
        remaining -= orb
        found.append((min(orb), len(orb)))
    return OrbitDecomposition(tuple(sorted(found)))


def orbit_representative(q: QMod, gens: Sequence[Generator], point: Point) -> Point:
    """Lexicographically least point in the orbit of ``point``."""
    return min(_orbit(finite_action(q, gens), tuple(point)))


def stabilizer_index(q: QMod, gens: Sequence[Generator], point: Point) -> int:
    """Index of the stabilizer of ``point``, i.e. the size of its orbit."""
    if len(point) != len(q.moduli) or any(not 0 <= x < d for x, d in zip(point, q.moduli)):
        raise ValueError(f"point {point} is not reduced for moduli {q.moduli}")
    return len(_orbit(finite_action(q, gens), tuple(point)))


def chi_sum_over_fiber(chi11: Fraction, chi22: Fraction, resultant_norm: int) -> Fraction:
    """Sum of centralizer Euler characteristics over all classes with a fixed diagonal."""
    if resultant_norm < 1:
        raise ValueError("resultant norm must be positive")
    return Fraction(resultant_norm) * chi11 * chi22
