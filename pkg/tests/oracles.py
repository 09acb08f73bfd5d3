"""Independent reference computations used to check the package.

None of these import ``brownchi``: each recomputes a quantity from its
definition by brute force.
"""

from __future__ import annotations

from itertools import product
from math import gcd

import numpy as np

# --- GL_2(Z) torsion classes by exhaustive search -------------------------------------------

Mat2 = tuple[int, int, int, int]  # (a, b, c, d) for [[a, b], [c, d]]


def _mul(x: Mat2, y: Mat2) -> Mat2:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _det(x: Mat2) -> int:
    return x[0] * x[3] - x[1] * x[2]


def _inv(x: Mat2) -> Mat2:
    a, b, c, d = x
    det = _det(x)
    return (d * det, -b * det, -c * det, a * det)


def _order(x: Mat2, limit: int = 12) -> int | None:
    p = x
    for k in range(1, limit + 1):
        if p == (1, 0, 0, 1):
            return k
        p = _mul(p, x)
    return None


def gl2_torsion_classes(entry_bound: int = 3, conj_bound: int = 6) -> list[set[Mat2]]:
    """Finite-order matrices with entries in ``[-entry_bound, entry_bound]``, grouped by
    conjugation with matrices whose entries lie in ``[-conj_bound, conj_bound]``."""
    r = range(-entry_bound, entry_bound + 1)
    torsion = {m for m in product(r, repeat=4) if abs(_det(m)) == 1 and _order(m) is not None}
    rc = range(-conj_bound, conj_bound + 1)
    conjugators = [(p, _inv(p)) for p in product(rc, repeat=4) if abs(_det(p)) == 1]
    parent = {m: m for m in torsion}

    def find(m):
        while parent[m] != m:
            parent[m] = parent[parent[m]]
            m = parent[m]
        return m

    for m in torsion:
        for p, p_inv in conjugators:
            n = _mul(_mul(p, m), p_inv)
            if n in parent:
                a, b = find(m), find(n)
                if a != b:
                    parent[a] = b
    classes: dict[Mat2, set[Mat2]] = {}
    for m in torsion:
        classes.setdefault(find(m), set()).add(m)
    return list(classes.values())


def order_of(x: Mat2) -> int | None:
    return _order(x)


# --- symmetric power matrices ------------------------------------------------------------------


def _monomials(m: int, n: int) -> list[tuple[int, ...]]:
    if m == 1:
        return [(n,)]
    return [(k,) + rest for k in range(n, -1, -1) for rest in _monomials(m - 1, n - k)]


def sym_power_traces(A, n_max: int) -> list[int]:
    """``Tr(A | S^n V)`` for ``n = 0..n_max`` from the explicit action on monomials.

    ``A`` acts on variables by ``x_j -> sum_i A[i, j] x_i``; the image of a
    degree-``n`` monomial is the image of a degree-``n-1`` monomial times one
    linear form, so the matrices are built degree by degree.
    """
    A = np.array(A, dtype=object)
    m = A.shape[0]
    traces = [1]
    prev_index = {(0,) * m: 0}
    prev = np.ones((1, 1), dtype=object)
    for n in range(1, n_max + 1):
        mons = _monomials(m, n)
        index = {mon: k for k, mon in enumerate(mons)}
        cur = np.zeros((len(mons), len(mons)), dtype=object)
        for col, alpha in enumerate(mons):
            j = next(t for t, e in enumerate(alpha) if e)
            lower = list(alpha)
            lower[j] -= 1
            src = prev[:, prev_index[tuple(lower)]]
            for beta, k in prev_index.items():
                coeff = src[k]
                if coeff == 0:
                    continue
                for i in range(m):
                    if A[i, j] == 0:
                        continue
                    up = list(beta)
                    up[i] += 1
                    cur[index[tuple(up)], col] += coeff * A[i, j]
        traces.append(int(sum(cur[k, k] for k in range(len(mons)))))
        prev, prev_index = cur, index
    return traces


# --- unit counting in O / (g) -----------------------------------------------------------------


def _hnf2(rows: list[tuple[int, int]]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Upper-triangular basis ``[[p, q], [0, r]]`` with ``p, r > 0`` for a rank-2 lattice in Z^2."""
    rows = [list(r) for r in rows if any(r)]
    # Euclid on the first column.
    while sum(1 for r in rows if r[0]) > 1:
        rows.sort(key=lambda r: (r[0] == 0, abs(r[0])))
        pivot = rows[0]
        for r in rows[1:]:
            if r[0]:
                k = r[0] // pivot[0]
                r[0] -= k * pivot[0]
                r[1] -= k * pivot[1]
        rows = [r for r in rows if any(r)]
    rows.sort(key=lambda r: (r[0] == 0, abs(r[0])))
    top = rows[0]
    second = 0
    for r in rows[1:]:
        second = gcd(second, r[1])
    if top[0] < 0:
        top = [-top[0], -top[1]]
    second = abs(second)
    return (top[0], top[1] % second if second else top[1]), (0, second)


def count_units_mod(g: tuple[int, int], omega_sq: tuple[int, int]) -> int:
    """Units of ``Z[omega] / (g)`` where ``omega^2 = omega_sq[0] + omega_sq[1] * omega``.

    Elements are pairs ``(x, y) = x + y*omega``. The ideal is the lattice
    spanned by ``g`` and ``g*omega``; a residue ``r`` is a unit when
    ``r*s - 1`` lies in the lattice for some residue ``s``.
    """
    s0, s1 = omega_sq

    def mul(u, v):
        a, b = u
        c, d = v
        return (a * c + b * d * s0, a * d + b * c + b * d * s1)

    g_omega = mul(g, (0, 1))
    (p, q), (_, r) = _hnf2([g, g_omega])

    def reduce(v):
        x, y = v
        k = x // p
        return (x - k * p, (y - k * q) % r)

    residues = [(x, y) for x in range(p) for y in range(r)]
    assert len({reduce(v) for v in residues}) == p * r
    one = reduce((1, 0))
    return sum(1 for u in residues if any(reduce(mul(u, v)) == one for v in residues))


GAUSS_OMEGA_SQ = (-1, 0)  # i^2 = -1
EISENSTEIN_OMEGA_SQ = (-1, -1)  # w^2 = -1 - w
