import pytest
from hypothesis import given, strategies as st

from cyclrc.bounds import (
    CONSISTENT,
    MET,
    SLACK,
    VIOLATED,
    disjoint_d6_dimension_bound,
    disjoint_d10_dimension_bound,
    evaluate_bounds,
    f4_hamming_size_bound,
    f4_sphere_volume,
    floor_log2_ratio,
    lrc_singleton_bound,
)
from cyclrc.cyclic import DistanceEstimate


def test_singleton_examples():
    assert lrc_singleton_bound(15, 10, 2) == 2
    assert lrc_singleton_bound(15, 6, 2) == 8


@given(st.integers(1, 200), st.data())
def test_singleton_reduces_to_classical(n, data):
    k = data.draw(st.integers(1, n))
    assert lrc_singleton_bound(n, k, k) == n - k + 1


def test_singleton_rejects():
    with pytest.raises(ValueError):
        lrc_singleton_bound(15, 0, 2)
    with pytest.raises(ValueError):
        lrc_singleton_bound(15, 4, 0)


def test_d6_bound_values():
    assert [disjoint_d6_dimension_bound(m) for m in (4, 6, 8)] == [6, 36, 162]


def test_d10_bound_values():
    assert disjoint_d10_dimension_bound(4) == 2
    assert disjoint_d10_dimension_bound(4, even_k=False) == 3
    assert disjoint_d10_dimension_bound(6) == 30


@pytest.mark.parametrize("fn", [disjoint_d6_dimension_bound, disjoint_d10_dimension_bound])
@pytest.mark.parametrize("m", [2, 3, 5])
def test_dimension_bounds_reject_m(fn, m):
    with pytest.raises(ValueError):
        fn(m)


@pytest.mark.parametrize("m", range(4, 17, 2))
def test_d10_general_is_even_plus_one_and_matches_sphere_packing(m):
    n = (1 << m) - 1
    assert disjoint_d10_dimension_bound(m, False) == disjoint_d10_dimension_bound(m, True) + 1
    assert f4_hamming_size_bound(n // 3, 5) == 2 * n // 3 + 1 - 2 * m


def test_f4_examples():
    assert f4_sphere_volume(5, 2) == 106
    assert f4_hamming_size_bound(5, 5) == 3
    assert f4_hamming_size_bound(5, 3) == 6
    assert f4_hamming_size_bound(1, 3) == 0
    with pytest.raises(ValueError):
        f4_hamming_size_bound(5, 4)


@pytest.mark.parametrize("m", [4, 6, 8, 10])
def test_f4_hamming_codes_are_perfect(m):
    # GF(4) Hamming code: n' = (4^(m/2) - 1)/3, k' = n' - m/2, so 2k' bits
    n_prime = (4 ** (m // 2) - 1) // 3
    assert f4_hamming_size_bound(n_prime, 3) == 2 * (n_prime - m // 2)
    assert 4 ** (n_prime - m // 2) * f4_sphere_volume(n_prime, 1) == 4**n_prime


@given(st.integers(1, 1 << 200), st.integers(1, 1 << 200))
def test_floor_log2_ratio(num, den):
    e = floor_log2_ratio(num, den)
    lo = den * 2**e if e >= 0 else den
    hi_num = num if e >= 0 else num * 2 ** (-e)
    assert lo <= hi_num
    assert (den * 2 ** (e + 1) if e + 1 >= 0 else den) > (num if e + 1 >= 0 else num * 2 ** (-(e + 1)))


def _exact(d):
    return DistanceEstimate(d, d, True)


def test_verdicts_for_built_in_families():
    rep = evaluate_bounds(15, 10, 2, _exact(2), m=4, disjoint_groups=True)
    assert rep.verdicts == {"singleton": MET}
    rep = evaluate_bounds(15, 6, 2, _exact(6), m=4, disjoint_groups=True)
    assert rep.verdicts["singleton"] == SLACK
    assert rep.verdicts["thm1"] == MET and rep.thm1_k_max == 6
    assert rep.verdicts["f4_hamming"] == MET
    rep = evaluate_bounds(15, 2, 2, _exact(10), m=4, disjoint_groups=True)
    assert rep.verdicts["thm2"] == MET and rep.thm2_k_max == 2
    assert rep.verdicts["thm1"] == SLACK


def test_interval_distance_is_not_confirmed():
    rep = evaluate_bounds(63, 36, 2, DistanceEstimate(6, 8, False), m=6, disjoint_groups=True)
    assert rep.verdicts["thm1"] == CONSISTENT


def test_violation_detected():
    rep = evaluate_bounds(15, 10, 2, _exact(3), m=4, disjoint_groups=True)
    assert rep.verdicts["singleton"] == VIOLATED and rep.violated
    rep = evaluate_bounds(15, 7, 2, _exact(6), m=4, disjoint_groups=True)
    assert rep.verdicts["thm1"] == VIOLATED


def test_dimension_bounds_need_disjoint_groups_below_m10():
    rep = evaluate_bounds(63, 36, 2, _exact(6), m=6, disjoint_groups=False)
    assert "thm1" not in rep.verdicts
    rep = evaluate_bounds(1023, 672, 2, _exact(6), m=10, disjoint_groups=False)
    assert rep.verdicts["thm1"] == MET
