import pytest

from cyclrc.constructions import (
    ConstructionError,
    available,
    construct,
    distance6,
    distance10,
    singleton_optimal,
)
from cyclrc.gf import make_field
from cyclrc.locality import verify_availability, verify_locality
from cyclrc.poly import BinaryPolynomial as P


def test_singleton_optimal_m4():
    res = singleton_optimal(4, 2)
    assert (res.code.n, res.code.k) == (15, 10)
    assert res.code.h == P.from_exponents([0, 5, 10])
    assert (res.claimed_distance, res.distance_is_exact) == (2, True)


def test_singleton_optimal_m6():
    res = singleton_optimal(6, 2)
    assert (res.code.n, res.code.k) == (63, 42)


@pytest.mark.parametrize("m,r", [(4, 3), (4, 1), (6, 4), (5, 2)])
def test_singleton_optimal_preconditions(m, r):
    with pytest.raises(ConstructionError):
        singleton_optimal(m, r)


@pytest.mark.parametrize("m,r", [(4, 2), (4, 4), (6, 2), (6, 6), (8, 2), (8, 4), (10, 2), (12, 2), (12, 4)])
def test_singleton_optimal_dimension(m, r):
    res = singleton_optimal(m, r)
    n = (1 << m) - 1
    assert res.code.k == r * n // (r + 1)
    step = n // (r + 1)
    assert res.code.h == P.from_exponents(range(0, n, step))


@pytest.mark.parametrize("m", [4, 6, 8, 10, 12])
def test_distance6_dimension(m):
    res = distance6(m)
    assert res.code.k == 2 * ((1 << m) - 1) // 3 - m


def test_distance6_examples():
    assert (distance6(4).code.k, distance6(6).code.k) == (6, 36)
    assert distance6(4).distance_is_exact and not distance6(6).distance_is_exact


@pytest.mark.parametrize("m", [5, 2, 3, 7])
def test_even_m_families_reject(m):
    with pytest.raises(ConstructionError, match="m must be even and > 2"):
        distance6(m)
    with pytest.raises(ConstructionError, match="m must be even and > 2"):
        distance10(m)


@pytest.mark.parametrize("m", [4, 6, 8, 10, 12])
def test_distance10_dimension(m):
    assert distance10(m).code.k == 2 * ((1 << m) - 1) // 3 - 2 * m


def test_distance10_m4_run():
    code = distance10(4).code
    assert {11, 12, 13, 14, 0, 1, 2, 3, 4} <= set(code.zeros)
    assert code.k == 2


def test_available_m6():
    res = available(6)
    assert (res.code.n, res.code.k) == (63, 27)
    assert res.code.h == P.from_exponents([0, 9, 27])
    assert (res.locality_r, res.availability_t, res.claimed_distance) == (2, 3, 4)


@pytest.mark.parametrize("m", [3, 6, 9, 12])
def test_available_h_is_hamming_in_y(m):
    res = available(m)
    n = (1 << m) - 1
    assert res.code.k == 3 * n // 7
    assert res.code.h == P.from_exponents([0, n // 7, 3 * n // 7])
    residues = {j % 7 for j in res.code.zeros}
    assert residues in ({0, 3, 5, 6}, {0, 1, 2, 4})
    assert all((j % 7 in residues) for j in res.code.zeros)


def test_available_uses_verbatim_residues_when_alpha_allows():
    # with alpha^-1 as the primitive element (reciprocal polynomial) the residues flip
    f = make_field(6, P(0x43).reciprocal())
    res = available(6, field=f)
    assert {j % 7 for j in res.code.zeros} == {0, 3, 5, 6}
    assert res.code.h == P.from_exponents([0, 9, 27])


@pytest.mark.parametrize("m", [4, 5, 8])
def test_available_rejects(m):
    with pytest.raises(ConstructionError):
        available(m)


@pytest.mark.parametrize(
    "family,m", [("c1", 4), ("c1", 6), ("c2", 4), ("c2", 6), ("d10", 4), ("d10", 6), ("avail", 6)]
)
def test_results_certify_their_locality(family, m):
    res = construct(family, m)
    assert res.claimed_dimension == res.code.k
    ok, _ = verify_locality(res.code, res.locality_r)
    assert ok
    cert = verify_availability(res.code, res.locality_r, res.availability_t)
    assert cert.validate(res.code)


def test_construct_dispatch_errors():
    with pytest.raises(ConstructionError):
        construct("nope", 4)
    with pytest.raises(ConstructionError):
        construct("c2", 4, r=4)
    assert construct("c1", 4, r=4).code.k == 12


def test_field_mismatch():
    with pytest.raises(ConstructionError):
        distance6(4, field=make_field(6))
