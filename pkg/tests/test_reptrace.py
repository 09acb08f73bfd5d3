from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from brownchi.reptrace import (
    RepSpec,
    TraceSequence,
    block_sequence,
    trace_convolve,
    trace_rep,
    trace_rep_exact,
    trace_sym,
    trace_sym_exact,
)
from brownchi.torsion import BLOCKS, RING_TAGS, BlockDiagonalClass, root12, torsion_catalog

Z_TAGS = RING_TAGS["Z"]


def eigs(*exps):
    return [root12(e) for e in exps]


@pytest.mark.parametrize("n", range(25))
def test_identity_block(n):
    assert trace_sym(eigs(0, 0), n) == n + 1


def test_lemma_examples():
    assert trace_sym(BlockDiagonalClass(("T6",)).eigenvalues, 3) == -1
    assert trace_sym(BlockDiagonalClass(("T4",)).eigenvalues, 2) == -1


@pytest.mark.parametrize("k", range(6))
def test_convolution_examples(k):
    t3, one, i2, minus, t6 = (block_sequence(t) for t in ("T3", "+1", "I2", "-1", "T6"))
    assert trace_convolve(t3, one, 3 * k) == 1
    assert trace_convolve(i2, minus, 2 * k + 1) == k + 1
    assert trace_convolve(t6, one, 6 * k + 2) == 2


def test_trace_sequence_shape():
    seq = block_sequence("-I2")
    assert isinstance(seq, TraceSequence)
    assert seq.period == 2
    assert [seq(k) for k in range(6)] == [1, -2, 3, -4, 5, -6]
    with pytest.raises(ValueError):
        block_sequence("i^1")


@pytest.mark.parametrize("a, b", [p for p in combinations(Z_TAGS, 2) if not set(BLOCKS[p[0]].exps) & set(BLOCKS[p[1]].exps)])
def test_convolution_matches_merged_multiset(a, b):
    g, h = block_sequence(a), block_sequence(b)
    merged = eigs(*BLOCKS[a].exps, *BLOCKS[b].exps)
    for n in range(25):
        assert trace_convolve(g, h, n) == trace_sym(merged, n)


ALL_CLASSES = [c for g in ("gl1z", "gl2z", "gl3z") for c in torsion_catalog(g)]


@pytest.mark.parametrize("cls", ALL_CLASSES, ids=lambda c: f"{c.dim}{c.label}")
def test_parity_and_inversion(cls):
    neg = eigs(*((e + 6) % 12 for e in cls.exps))
    for n in range(25):
        rep = RepSpec(cls.dim, n)
        assert trace_sym(neg, n) == (-1) ** n * trace_sym(cls.eigenvalues, n)
        assert trace_rep(cls, rep) == trace_sym(cls.eigenvalues, n)


def test_trace_rep_examples():
    assert trace_rep(BlockDiagonalClass(("T3", "T4")), RepSpec(4, 3)) == 2
    for cls in torsion_catalog("gl1z")[:1] + torsion_catalog("gl2z")[:1] + torsion_catalog("gl3z")[:1]:
        m = cls.dim
        for n in range(10):
            assert trace_rep(cls, RepSpec(m, n)) == comb(n + m - 1, m - 1)
    for k in range(4):
        fam = BlockDiagonalClass((f"i^{k}", f"i^{(k + 1) % 4}"))
        for n in range(5):
            assert trace_rep(fam, RepSpec(2, 4 * n)) == 1


def test_det_twist():
    fam = BlockDiagonalClass(("+1", "-1"))
    assert trace_rep(fam, RepSpec(2, 0, 1)) == -1
    assert trace_rep(BlockDiagonalClass(("T4",)), RepSpec(2, 2, 1)) == -1


def test_errors():
    with pytest.raises(ValueError, match="dimension"):
        trace_rep(BlockDiagonalClass(("T3",)), RepSpec(3, 1))
    with pytest.raises(ArithmeticError):
        trace_sym(eigs(3), 1)
    with pytest.raises(ValueError):
        RepSpec(0)
    with pytest.raises(ValueError):
        RepSpec(2, -1)
    with pytest.raises(ValueError):
        RepSpec(2, 0, 2)
    assert not trace_rep_exact(BlockDiagonalClass(("i^1",)), RepSpec(1, 1)).is_rational()


@given(st.lists(st.integers(0, 11), min_size=1, max_size=4), st.integers(0, 15))
def test_trace_is_symmetric_in_eigenvalues(exps, n):
    assert trace_sym_exact(eigs(*exps), n) == trace_sym_exact(eigs(*reversed(exps)), n)
