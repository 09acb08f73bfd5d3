"""Integer polynomials and exact matrices.

Matrices are numpy arrays of ``dtype=object`` holding Python ints (or
:class:`~brownchi.exactnum.CyclotomicInt`), so every product and
determinant stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod

import numpy as np

IntMatrix = np.ndarray


class IntPoly:
    """Polynomial with integer coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int = 1, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other) -> IntPoly:
        return other if isinstance(other, IntPoly) else IntPoly([other])

    def __add__(self, other) -> IntPoly:
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> IntPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> IntPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> IntPoly:
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else "t" if k == 1 else f"t^{k}"
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            parts.append(("-" if c < 0 else "+") + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


T = IntPoly.monomial()


def intmat(rows) -> IntMatrix:
    """Build an exact matrix from nested sequences (ints stay Python ints)."""
    arr = np.empty((len(rows), len(rows[0]) if len(rows) else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            arr[i, j] = x
    return arr


def identity(n: int) -> IntMatrix:
    return intmat([[int(i == j) for j in range(n)] for i in range(n)])


def block_diag(*blocks: IntMatrix) -> IntMatrix:
    n = sum(b.shape[0] for b in blocks)
    out = intmat([[0] * n for _ in range(n)])
    k = 0
    for b in blocks:
        d = b.shape[0]
        out[k : k + d, k : k + d] = b
        k += d
    return out


def mat_key(A: IntMatrix) -> tuple:
    return tuple(tuple(row) for row in A.tolist())


def _require_square(A: IntMatrix, what: str = "matrix") -> int:
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"{what} must be square, got shape {A.shape}")
    return A.shape[0]


def companion(f: IntPoly) -> IntMatrix:
    """Companion block: ones on the superdiagonal, last row ``-c_0 .. -c_{d-1}``."""
    if not f.is_monic() or f.degree < 1:
        raise ValueError(f"companion matrix needs a monic polynomial of degree >= 1, got {f}")
    d = f.degree
    C = intmat([[0] * d for _ in range(d)])
    for i in range(d - 1):
        C[i, i + 1] = 1
    for j in range(d):
        C[d - 1, j] = -f.coeffs[j]
    return C


def _berkowitz(A: IntMatrix) -> list:
    """Coefficients of det(tI - A), highest degree first, without division."""
    n = A.shape[0]
    if n == 0:
        return [1]
    vect = [1, -A[0, 0]]
    for r in range(1, n):
        R = A[r, :r]
        S = A[:r, r]
        M = A[:r, :r]
        col = [1, -A[r, r]]
        w = S
        for _ in range(r):
            col.append(-(R @ w))
            w = M @ w
        new = []
        for i in range(r + 2):
            new.append(sum(col[i - j] * vect[j] for j in range(min(i, r) + 1)))
        vect = new
    return vect


def char_poly(A: IntMatrix) -> IntPoly:
    """Monic characteristic polynomial ``det(tI - A)``."""
    _require_square(A)
    return IntPoly(reversed(_berkowitz(A)))


def det(M: IntMatrix):
    """Exact determinant: fraction-free Bareiss for integers, cofactors otherwise."""
    n = _require_square(M)
    if n == 0:
        return 1
    if all(isinstance(x, int) for x in M.flat):
        return _bareiss(M.tolist())
    return _cofactor(M)


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _cofactor(M: IntMatrix):
    n = M.shape[0]
    if n == 1:
        return M[0, 0]
    total = 0
    for j in range(n):
        if M[0, j] == 0:
            continue
        minor = np.delete(np.delete(M, 0, axis=0), j, axis=1)
        term = M[0, j] * _cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def sylvester_matrix(f: IntPoly, g: IntPoly) -> IntMatrix:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fh = list(reversed(f.coeffs))
    gh = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fh + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gh + [0] * (size - n - 1 - i))
    return intmat(rows) if rows else np.empty((0, 0), dtype=object)


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant as the determinant of the Sylvester matrix; zero iff a common root."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    return det(sylvester_matrix(f, g))


def multi_resultant(fs) -> int:
    """Product of the pairwise resultants over all unordered pairs."""
    fs = list(fs)
    if len(fs) < 2:
        raise ValueError("multi_resultant needs at least two polynomials")
    return prod(resultant(f, g) for f, g in combinations(fs, 2))


def vec(X: IntMatrix) -> list:
    """Column-stacking of a matrix."""
    return list(X.flatten(order="F"))


def unvec(v, rows: int, cols: int) -> IntMatrix:
    X = np.empty((rows, cols), dtype=object)
    for k, x in enumerate(v):
        X[k % rows, k // rows] = x
    return X


def sylvester_op(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    """Matrix of ``X -> X B - A X`` on column-stacked ``m1 x m2`` matrices.

    With column stacking, right multiplication by ``B`` is ``kron(B.T, I)``
    and left multiplication by ``A`` is ``kron(I, A)``.
    """
    m1 = _require_square(A, "A")
    m2 = _require_square(B, "B")
    size = m1 * m2
    out = intmat([[0] * size for _ in range(size)])
    # Column (a, b) of X sits at index a + m1*b.
    for b in range(m2):
        for b2 in range(m2):
            for a in range(m1):
                out[a + m1 * b, a + m1 * b2] += B[b2, b]
    for b in range(m2):
        for a in range(m1):
            for a2 in range(m1):
                out[a + m1 * b, a2 + m1 * b] -= A[a, a2]
    return out


@dataclass(frozen=True)
class SmithForm:
    """``left @ M @ right`` is diagonal with entries ``diag`` (a divisibility chain)."""

    diag: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix


def smith_normal_form(M: IntMatrix) -> SmithForm:
    rows, cols = M.shape
    D = [[int(x) for x in row] for row in M.tolist()]
    L = [[int(i == j) for j in range(rows)] for i in range(rows)]
    R = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for mat in (D, R):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        for mat in (D, L):
            mat[dst] = [x + q * y for x, y in zip(mat[dst], mat[src])]

    def add_col(dst, src, q):
        for mat in (D, R):
            for row in mat:
                row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            nonzero = [(abs(D[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if D[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, rows):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, cols):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            L[t] = [-x for x in L[t]]

    diag = tuple(D[t][t] for t in range(min(rows, cols)))
    return SmithForm(diag, intmat(L), intmat(R))


def inverse_unimodular(U: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = _require_square(U)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(U.tolist())]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return intmat([[int(x) for x in row] for row in inv])


def mat_pow(A: IntMatrix, k: int) -> IntMatrix:
    out = identity(A.shape[0])
    for _ in range(k):
        out = out @ A
    return out
