"""Zero-divisor certificates, kernel-dimension sequences, Ore pairs."""

from fractions import Fraction

import pytest

from folnerlab import (AlgebraError, ExhaustionReport, MatrixOverPol,
                       NotFoundReport, OrePair, ZeroDivisorCertificate,
                       algebra_for, ball, boundary_decomposition,
                       exact_mvn_dim_finite, kernel_dim_sequence, ore_pair,
                       weighted_size, zero_divisor_search)

from conftest import random_element, small_support

AZ = algebra_for("group:Z")
AZ2 = algebra_for("group:Z^2")
AZXZ2 = algebra_for("group:ZxZ/2")
AZMOD2 = algebra_for("group:Z/2")
AZ6 = algebra_for("group:Z/6")
AHEIS = algebra_for("group:heisenberg")


# ---------------------------------------------------------------------------
# zero_divisor_search

def test_zero_divisor_zxz2_example():
    e = AZXZ2.group_element((0, 0))
    t = AZXZ2.group_element((0, 1))
    cert = zero_divisor_search(e - t, side="left", max_radius=2)
    assert isinstance(cert, ZeroDivisorCertificate)
    assert cert.radius <= 1
    assert not cert.witness.is_zero()
    assert ((e - t) * cert.witness).is_zero()
    # the kernel is spanned by e + t, so the witness is proportional to it
    w = cert.witness
    assert w.coeff((0, 0)) == w.coeff((0, 1))


def test_zero_divisor_zmod2_example():
    e = AZMOD2.group_element(0)
    t = AZMOD2.group_element(1)
    cert = zero_divisor_search(e + t, side="left", max_radius=1)
    assert (cert.witness * (e + t)).is_zero() or ((e + t) * cert.witness).is_zero()
    assert cert.witness.coeff(0) == -cert.witness.coeff(1)


def test_zero_divisor_not_found_on_z():
    a = AZ.group_element({0: 1, 1: -1})
    rep = zero_divisor_search(a, side="left", max_radius=6)
    assert isinstance(rep, NotFoundReport)
    assert len(rep.kernel_dims) == 7
    assert all(d == 0 for _, d in rep.kernel_dims)


def test_zero_divisor_right_side():
    e = AZXZ2.group_element((0, 0))
    t = AZXZ2.group_element((0, 1))
    cert = zero_divisor_search(e - t, side="right", max_radius=2)
    assert (cert.witness * (e - t)).is_zero()


def test_zero_divisor_regular_on_heisenberg_both_sides():
    x = AHEIS.group_element((1, 0, 0))
    one = AHEIS.one()
    for side in ("left", "right"):
        rep = zero_divisor_search(one - x, side=side, max_radius=3)
        assert isinstance(rep, NotFoundReport)


def test_zero_divisor_rejects_zero():
    with pytest.raises(AlgebraError):
        zero_divisor_search(AZ.zero())


# ---------------------------------------------------------------------------
# kernel_dim_sequence

def test_sequence_projection_converges_to_half():
    e = AZXZ2.group_element((0, 0))
    t = AZXZ2.group_element((0, 1))
    p = (e + t).scale(Fraction(1, 2))
    seq = kernel_dim_sequence(p, side="left", radii=range(1, 5))
    for _, est in seq:
        assert est.lower == est.upper == Fraction(1, 2)
        assert est.width() == 0


def test_sequence_laplacian_all_zero_with_shrinking_brackets():
    lap = AZ.group_element({-1: -1, 0: 2, 1: -1})
    seq = kernel_dim_sequence(lap, side="right", radii=[1, 2, 4, 8])
    widths = []
    for radius, est in seq:
        assert est.lower == 0
        widths.append(est.width())
    assert widths == sorted(widths, reverse=True)
    assert widths[-1] == Fraction(2, 17)


def test_sequence_finite_full_window_matches_oracle(rng):
    labels = list(AZ6.ring.irreducibles())
    for _ in range(5):
        a = random_element(AZ6, rng, labels)
        # radius 6 saturates Irred(Z/6) whenever the support generates
        seq = kernel_dim_sequence(a, side="right", radii=[6])
        (_, est) = seq[0]
        if set(est.window) == set(labels):
            assert est.lower == est.upper == \
                exact_mvn_dim_finite(MatrixOverPol.from_element(a))


def test_sequence_lower_bounds_nondecreasing():
    e = AZXZ2.group_element((0, 0))
    t = AZXZ2.group_element((0, 1))
    g = AZXZ2.group_element((1, 0))
    a = (e - t) * (e + g)  # zero divisor with actual kernel growth
    seq = kernel_dim_sequence(a, side="left", radii=range(1, 6))
    lows = [est.lower for _, est in seq]
    assert all(x <= y for x, y in zip(lows, lows[1:]))
    for _, est in seq:
        assert est.lower <= est.upper


# ---------------------------------------------------------------------------
# ore_pair

def test_ore_commutative_hand_witness(rng):
    for _ in range(4):
        a = small_support(AZ, rng, [1, -1])
        s = small_support(AZ, rng, [1])
        pair = ore_pair(a, s, max_radius=12)
        assert isinstance(pair, OrePair)
        assert not pair.t.is_zero()
        assert pair.residual().is_zero()
        # commutativity: the hand pair (t, b) = (s, a) also solves a t = s b
        assert (a * s - s * a).is_zero()


def test_ore_unit_left_factor(rng):
    s = small_support(AZ2, rng, [(1, 0), (0, 1)])
    pair = ore_pair(AZ2.one(), s, max_radius=12)
    assert isinstance(pair, OrePair)
    # a = 1 forces t = s b
    assert (pair.t - s * pair.b).is_zero()


def test_ore_heisenberg_generators():
    one = AHEIS.one()
    x = AHEIS.group_element((1, 0, 0))
    y = AHEIS.group_element((0, 1, 0))
    pair = ore_pair(one - x, one - y, max_radius=10)
    assert isinstance(pair, OrePair)
    assert not pair.t.is_zero()
    assert ((one - x) * pair.t - (one - y) * pair.b).is_zero()
    # window satisfied the strict counting inequality
    ring = AHEIS.ring
    S = (one - x).support() | (one - y).support()
    dec = boundary_decomposition(ring, pair.window, S, side="left")
    assert 2 * weighted_size(ring, dec.boundary) < weighted_size(ring, pair.window)
    assert 2 * weighted_size(ring, dec.interior) > weighted_size(ring, pair.window)


def test_ore_on_non_domain_still_verifies():
    e = AZXZ2.group_element((0, 0))
    t = AZXZ2.group_element((0, 1))
    out = ore_pair(e + t, e - t, max_radius=6)
    if isinstance(out, OrePair):
        assert not out.t.is_zero()
        assert out.residual().is_zero()
    else:
        assert isinstance(out, ZeroDivisorCertificate)
        assert out.product_is_zero()
    # prefer_ore scans the whole kernel basis first
    out2 = ore_pair(e + t, e - t, max_radius=6, prefer_ore=True)
    if isinstance(out2, OrePair):
        assert out2.residual().is_zero()


def test_ore_exhaustion_report():
    one = AHEIS.one()
    x = AHEIS.group_element((1, 0, 0))
    y = AHEIS.group_element((0, 1, 0))
    rep = ore_pair(one - x, one - y, max_radius=2)
    assert isinstance(rep, ExhaustionReport)
    assert rep.strategy == "ore-ball"
    assert all(2 * row.boundary_weight >= row.window_weight for row in rep.profile)


def test_ore_rejects_zero_inputs():
    with pytest.raises(AlgebraError):
        ore_pair(AZ.zero(), AZ.one())
    with pytest.raises(AlgebraError):
        ore_pair(AZ.one(), AZ.zero())


# ---------------------------------------------------------------------------
# finite-level regularity: nonzero elements of domain providers have
# full-column-rank restricted matrices on every window

def test_regularity_z2_random_elements(rng):
    from folnerlab import kernel_dim_estimate

    gens = [(i, j) for i in (-1, 0, 1) for j in (-1, 0, 1) if (i, j) != (0, 0)]
    F = ball(AZ2.ring, gens, 3)
    for _ in range(5):
        a = random_element(AZ2, rng, [(0, 0)] + gens)
        for side in ("left", "right"):
            est = kernel_dim_estimate(MatrixOverPol.from_element(a), F, side=side)
            assert est.nullity == 0


def test_regularity_heisenberg_random_elements(rng):
    from folnerlab import kernel_dim_estimate

    gens = [(1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0)]
    F = ball(AHEIS.ring, gens, 2)
    for _ in range(5):
        a = random_element(AHEIS, rng, [(0, 0, 0)] + gens, max_terms=3)
        for side in ("left", "right"):
            est = kernel_dim_estimate(MatrixOverPol.from_element(a), F, side=side)
            assert est.nullity == 0
