from fractions import Fraction

import pytest

from hecke_skein.annulus import (
    AnnulusElem,
    SeriesC,
    a_ij,
    a_ij_word,
    braid_A,
    braidsum_sides,
    evaluate,
    mirror,
    mixed_chain,
    pi_sum,
    power_sum,
    series_A,
    series_A_mirror,
    series_derivative,
    series_H,
    series_inverse,
    series_log,
    series_mul,
    series_substitute_scale,
    series_t_times,
)
from hecke_skein.closure import braid_trace
from hecke_skein.scalars import ONE, delta, qint, s, v, z

h = AnnulusElem.h
s_inv = s ** -1


def test_series_H():
    assert str(series_H(0)) == "[1] + O(t^1)"
    H = series_H(2)
    assert H.coeffs == [AnnulusElem.one(), h(1), h(2)]
    for k, c in enumerate(series_H(6).coeffs):
        assert c.is_homogeneous(k)
    with pytest.raises(ValueError):
        series_H(-1)


def test_substitution():
    H = series_H(3)
    assert series_substitute_scale(H, 1) == H
    scaled = series_substitute_scale(H, s)
    assert scaled.coeffs[:3] == [AnnulusElem.one(), h(1).scale(s), h(2).scale(s ** 2)]
    assert series_substitute_scale(scaled, s_inv) == H


def test_inverse_is_geometric_series():
    x = SeriesC([AnnulusElem.one(), h(1), AnnulusElem.zero()])
    assert series_inverse(x).coeffs == [AnnulusElem.one(), -h(1), h(1) * h(1)]
    H = series_H(5)
    assert series_mul(H, series_inverse(H)) == SeriesC.one(5)


def test_log_and_derivative():
    L = series_log(series_H(2))
    assert L[2] == h(2) - (h(1) * h(1)).scale(Fraction(1, 2))
    assert series_derivative(series_H(2)).coeffs == [h(1), h(2).scale(2)]


def test_unit_constant_required():
    bad = SeriesC([AnnulusElem.constant(2), h(1)])
    with pytest.raises(ValueError):
        series_inverse(bad)
    with pytest.raises(ValueError):
        series_log(bad)


def test_braid_A_examples():
    assert braid_A(1) == h(1)
    assert braid_A(2) == h(2).scale(qint(2)) - (h(1) * h(1)).scale(s_inv)
    for m in range(1, 7):
        assert braid_A(m).is_homogeneous(m)
    with pytest.raises(ValueError):
        braid_A(0)
    with pytest.raises(ValueError):
        braid_A(3, degree=2)


def test_mirror_examples():
    for i in range(1, 5):
        assert mirror(h(i)) == h(i)
    assert mirror(braid_A(2)) == h(2).scale(qint(2)) - (h(1) * h(1)).scale(s)
    for m in range(1, 6):
        assert mirror(mirror(braid_A(m))) == braid_A(m)


def test_power_sum_examples():
    assert power_sum(1) == h(1)
    assert power_sum(2) == h(2).scale(2) - h(1) * h(1)
    assert power_sum(3) == h(3).scale(3) - (h(1) * h(2)).scale(3) + h(1) ** 3


@pytest.mark.parametrize("m", range(1, 9))
def test_power_sums_satisfy_newton_identities(m):
    # m h_m = sum_{k=1..m} P_k h_{m-k}, independent of the logarithm
    total = AnnulusElem.zero()
    for k in range(1, m + 1):
        total = total + power_sum(k) * h(m - k)
    assert total == h(m).scale(m)
    assert mirror(power_sum(m)) == power_sum(m)


def test_rendering():
    assert str(power_sum(2)) == "2*h2 - 1*h1^2"
    assert str(AnnulusElem.zero()) == "0"
    assert str(h(1).scale(s)) == "(1*v^0*s^1)*h1"


def test_mixed_braids():
    assert a_ij(0, 0) == h(1)
    assert a_ij(1, 0) == braid_A(2)
    assert a_ij(0, 1) == mirror(braid_A(2))
    assert a_ij(1, 1) == a_ij(0, 2) + (braid_A(1) * mirror(braid_A(2))).scale(z)
    assert a_ij_word(1, 2) == [-3, -2, 1]
    assert len(mixed_chain(5)) == 5


def test_pi_sum_examples():
    assert pi_sum(1) == h(1)
    expected = h(2).scale(2 * qint(2)) - (h(1) * h(1)).scale(s + s_inv)
    assert pi_sum(2) == expected
    assert pi_sum(2) == power_sum(2).scale(qint(2))


@pytest.mark.parametrize("m", range(1, 9))
def test_braidsum(m):
    lhs, rhs = braidsum_sides(m)
    assert lhs == rhs


@pytest.mark.parametrize("i,j", [(i, j) for i in range(1, 8) for j in range(1, 8) if i + j <= 8])
def test_crossing_switch_difference(i, j):
    assert a_ij(i, j - 1) - a_ij(i - 1, j) == (braid_A(i) * mirror(braid_A(j))).scale(z)


def test_series_times_mirror_series_is_one():
    assert series_mul(series_A(8), series_A_mirror(8)) == SeriesC.one(8)


def test_logarithmic_derivative_identities():
    M = 8
    A = series_A(M)
    log_A = series_log(A)
    expected = SeriesC([AnnulusElem.zero()] + [
        power_sum(m).scale((s ** m - s ** -m) / m) for m in range(1, M + 1)
    ])
    assert log_A == expected
    pis = SeriesC([pi_sum(m).scale(z) for m in range(1, M + 1)])
    assert series_derivative(log_A) == pis
    assert series_t_times(pis).degree == M


def test_evaluation_examples():
    assert evaluate(AnnulusElem.one()) == ONE
    assert evaluate(h(1)) == delta()
    assert evaluate(power_sum(2)) == (v ** -2 - v ** 2) / (s ** 2 - s ** -2)


@pytest.mark.parametrize("m", range(1, 5))
def test_evaluation_matches_closed_braids(m):
    # the h-coordinates of A_m and A_{i,j} must evaluate to the Homfly of the braids
    assert evaluate(braid_A(m)) == braid_trace(list(range(m - 1, 0, -1)), m)
    for i in range(m):
        assert evaluate(a_ij(i, m - 1 - i)) == braid_trace(a_ij_word(i, m - 1 - i), m)
