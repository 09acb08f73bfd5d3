from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from brownchi.eulerchar import (
    ArithmeticKind,
    arithmetic_function,
    brown_sum,
    chi_h_aut_p,
    chi_h_gamma1_ring,
    chi_h_gamma1_z,
    chi_h_glm,
    gamma1_ring_families,
    gamma1_z_families,
    phi,
    phi2,
    phi_ring,
)
from brownchi.exactnum import QuadRing
from brownchi.reptrace import RepSpec
from brownchi.torsion import HypothesisViolation, torsion_catalog

from oracles import EISENSTEIN_OMEGA_SQ, GAUSS_OMEGA_SQ, count_units_mod


def test_phi_examples():
    assert (phi(1), phi2(1)) == (1, 1)
    assert (phi(5), phi2(5)) == (4, 24)
    assert phi2(25) == 600
    for bad in (0, -3):
        with pytest.raises(ValueError):
            phi(bad)
        with pytest.raises(ValueError):
            phi2(bad)


@settings(max_examples=200)
@given(st.integers(1, 5000), st.integers(1, 5000))
def test_phi_multiplicative(a, b):
    assume(gcd(a, b) == 1)
    assert phi(a * b) == phi(a) * phi(b)
    assert phi2(a * b) == phi2(a) * phi2(b)


@settings(max_examples=200)
@given(st.sampled_from(list(QuadRing)), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_phi_ring_multiplicative(ring, a, b, c, d):
    x, y = ring.element(a, b), ring.element(c, d)
    assume(not x.is_zero() and not y.is_zero())
    assume(gcd(abs(x.norm()), abs(y.norm())) == 1)
    assert phi_ring(x * y, ring) == phi_ring(x, ring) * phi_ring(y, ring)


@pytest.mark.parametrize("ring, omega_sq", [(QuadRing.GAUSS, GAUSS_OMEGA_SQ), (QuadRing.EISENSTEIN, EISENSTEIN_OMEGA_SQ)])
@pytest.mark.parametrize("a, b", [(1, 1), (2, 0), (2, 1), (3, 0), (1, 2), (4, 1), (3, 3), (6, 0)])
def test_phi_ring_counts_units(ring, omega_sq, a, b):
    assert phi_ring(ring.element(a, b), ring) == count_units_mod((a, b), omega_sq)


def test_phi_ring_examples():
    g = QuadRing.GAUSS
    assert phi_ring(1, g) == 1
    assert phi_ring(g.element(2, 1), g) == 4
    assert phi_ring(3, g) == 8
    with pytest.raises(ValueError):
        phi_ring(0, g)


def test_arithmetic_function_record():
    v = arithmetic_function("phi2", 25)
    assert v.kind is ArithmeticKind.PHI2 and v.value == 600
    assert arithmetic_function(ArithmeticKind.PHI_EISENSTEIN, 7).value == 36


def test_glm_examples():
    assert chi_h_glm("Z", 2, RepSpec(2, 10)) == -1
    assert chi_h_glm("gauss", 2, RepSpec(2, 4)) == 1
    assert chi_h_glm("Z", 1, RepSpec(1)) == 1
    assert chi_h_glm("Z", 11, RepSpec(11)) == 0
    assert chi_h_glm("gauss", 5, RepSpec(5)) == 0
    with pytest.raises(ValueError, match="dimension"):
        chi_h_glm("Z", 3, RepSpec(2))
    with pytest.raises(ValueError):
        chi_h_glm("quaternion", 2, RepSpec(2))


@pytest.mark.parametrize("m", [2, 4])
def test_odd_powers_vanish(m):
    for k in range(12):
        assert chi_h_glm("Z", m, RepSpec(m, 2 * k + 1)) == 0


def test_gl2_mod_12_drift():
    for n in range(37):
        assert chi_h_glm("Z", 2, RepSpec(2, n + 12)) - chi_h_glm("Z", 2, RepSpec(2, n)) == (-1 if n % 2 == 0 else 0)


@pytest.mark.parametrize("m", range(1, 11))
def test_pairing_optimization_agrees(m):
    for det in (0, 1):
        for n in range(8):
            rep = RepSpec(m, n, det)
            assert chi_h_glm("Z", m, rep, paired=True) == chi_h_glm("Z", m, rep)


def test_brown_sum_examples():
    catalog = torsion_catalog("gl2z")
    assert brown_sum(catalog, RepSpec(2)) == 1
    assert brown_sum(catalog, RepSpec(2, 2)) == 0
    assert brown_sum([], RepSpec(2)) == 0


def test_gamma1_families():
    ones, twos = gamma1_z_families(4)
    assert sorted(str(f) for f in ones) == ["[+1,-1,T3]", "[+1,-1,T4]", "[+1,-1,T6]"]
    assert sorted(str(f) for f in twos) == ["[I2,-I2]", "[I2,T3]", "[I2,T4]", "[I2,T6]"]


def test_gamma1_z_examples():
    assert chi_h_gamma1_z(3, 5, RepSpec(3)) == 0
    assert chi_h_gamma1_z(2, 5, RepSpec(2, 1)) == -2
    for N in (5, 7, 11, 13, 35, 49):
        # The Gamma_1(4, N) sum: phi(N) from [A1, 1] and -phi2(N)/12 from [A2, I2].
        assert chi_h_gamma1_z(4, N, RepSpec(4)) == phi(N) - F(phi2(N), 12)
        assert chi_h_gamma1_z(4, N, RepSpec(4)).denominator == 1


def test_gamma1_z_errors():
    with pytest.raises(HypothesisViolation, match="coprime to 6"):
        chi_h_gamma1_z(3, 6, RepSpec(3))
    with pytest.raises(HypothesisViolation):
        chi_h_gamma1_z(3, 1, RepSpec(3))
    with pytest.raises(ValueError):
        chi_h_gamma1_z(5, 7, RepSpec(5))


def test_gamma1_ring_examples():
    g, e = QuadRing.GAUSS, QuadRing.EISENSTEIN
    assert chi_h_gamma1_ring(g, 2, g.element(2, 1), RepSpec(2)) == 2
    for gen in (2, e.element(3, 1), 7):
        assert chi_h_gamma1_ring(e, 2, gen, RepSpec(2)) == F(phi_ring(gen, e), 3)
    assert len(gamma1_ring_families(g, 2)) == 3
    assert len(gamma1_ring_families(e, 2)) == 5


def test_gamma1_ring_errors():
    g = QuadRing.GAUSS
    with pytest.raises(HypothesisViolation, match="unit ideal"):
        chi_h_gamma1_ring(g, 2, 1, RepSpec(2))
    with pytest.raises(HypothesisViolation, match="ramified"):
        chi_h_gamma1_ring(g, 2, 2, RepSpec(2))
    with pytest.raises(HypothesisViolation, match="ramified"):
        chi_h_gamma1_ring(QuadRing.EISENSTEIN, 2, 3, RepSpec(2))


def test_aut_p():
    assert chi_h_aut_p(3, RepSpec(2)) == 3
    assert chi_h_aut_p(2, RepSpec(2, 1)) == 0
    assert chi_h_aut_p(2, RepSpec(2, 0, 1)) == -2
    with pytest.raises(ValueError):
        chi_h_aut_p(-1, RepSpec(2))
