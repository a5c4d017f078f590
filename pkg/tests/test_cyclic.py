import json

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from cyclrc.cyclic import (
    CodeError,
    DistanceEstimate,
    all_nonzero_cosets_subsets,
    bch_bound,
    build_code,
    code_from_dict,
    code_to_dict,
    dual_code,
    generator_times_parity_is_zero,
    load_code,
    matrix_ranks,
    min_distance,
    min_distance_by_multiples,
    save_code,
)
from cyclrc.gf import cyclotomic_cosets, make_field
from cyclrc.poly import BinaryPolynomial as P

from oracles import all_codewords, min_weight

F16 = make_field(4)
MULT3 = [0, 3, 6, 9, 12]
C1_ZEROS = MULT3
C2_ZEROS = MULT3 + [1, 2, 4, 8]
D10_ZEROS = C2_ZEROS + [7, 11, 13, 14]


@st.composite
def defining_sets(draw, ms=(4, 6, 8)):
    m = draw(st.sampled_from(ms))
    cos = cyclotomic_cosets((1 << m) - 1)
    picks = draw(st.lists(st.booleans(), min_size=len(cos), max_size=len(cos)))
    if all(picks) or not any(picks):
        picks = [i == 0 for i in range(len(cos))]
    return m, sorted(j for c, p in zip(cos, picks) if p for j in c.members)


def test_build_example1():
    code = build_code(F16, C1_ZEROS)
    assert code.g == P.from_exponents([0, 5])
    assert code.h == P.from_exponents([0, 5, 10])
    assert code.k == 10


def test_build_example2():
    assert build_code(F16, C2_ZEROS).k == 6


@pytest.mark.parametrize("zeros", [[1, 3], [], list(range(15)), [15], [-1]])
def test_build_rejects(zeros):
    with pytest.raises(CodeError):
        build_code(F16, zeros)


@pytest.mark.parametrize(
    "zeros,expected", [(C2_ZEROS, 6), (C1_ZEROS, 2), (D10_ZEROS, 10), ([1, 2, 4, 8], 3)]
)
def test_bch_bound(zeros, expected):
    assert bch_bound(build_code(F16, zeros)) == expected


@pytest.mark.parametrize("zeros,d", [(C1_ZEROS, 2), (C2_ZEROS, 6), (D10_ZEROS, 10)])
def test_min_distance_exact(zeros, d):
    code = build_code(F16, zeros)
    est = min_distance(code)
    assert est == DistanceEstimate(d, d, True)
    assert est.witness.bit_count() == d
    assert code.is_codeword(est.witness)


def test_c1_witness_is_lexicographically_first():
    # weight-2 words are {i, i+5}; the smallest support is {0, 5}
    est = min_distance(build_code(F16, C1_ZEROS))
    assert est.witness == (1 << 0) | (1 << 5)


def test_d10_three_codewords():
    code = build_code(F16, D10_ZEROS)
    words = all_codewords(code.g.mask, 15, code.k)
    assert len([w for w in words if w]) == 3
    assert min_weight(words) == 10


def test_search_path_without_budget():
    code = build_code(F16, C2_ZEROS)
    est = min_distance(code, budget=1, seed=7)
    assert est.method == "search"
    assert (est.lower, est.upper, est.exact) == (6, 6, True)
    assert est.seed == 7


def test_search_path_reports_interval_when_unresolved():
    # BCH gives 3 for the [15,11] Hamming code and search finds 3: still exact
    est = min_distance(build_code(F16, [1, 2, 4, 8]), budget=1)
    assert est.exact and est.lower == 3
    # even-weight [15,14]: BCH bound 2, found 2
    est = min_distance(build_code(F16, [0]), budget=1)
    assert est.lower == est.upper == 2


def test_search_is_deterministic():
    code = build_code(make_field(6), [j for j in range(63) if j % 3 == 0] + [1, 2, 4, 8, 16, 32])
    a = min_distance(code, budget=1, seed=3)
    b = min_distance(code, budget=1, seed=3)
    assert (a.lower, a.upper, a.witness) == (b.lower, b.upper, b.witness)


def test_distance_estimate_invariants():
    with pytest.raises(ValueError):
        DistanceEstimate(5, 4, False)
    with pytest.raises(ValueError):
        DistanceEstimate(4, 5, True)


@pytest.mark.parametrize("zeros", list(all_nonzero_cosets_subsets(15)))
def test_min_distance_matches_multiple_enumeration_for_all_m4_codes(zeros):
    code = build_code(F16, zeros)
    est = min_distance(code)
    assert est.exact
    assert est.lower == min_distance_by_multiples(code)
    assert est.lower == min_weight(all_codewords(code.g.mask, 15, code.k))
    assert bch_bound(code) <= est.lower


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(defining_sets())
def test_structure_properties(ms):
    m, zeros = ms
    code = build_code(make_field(m), zeros)
    n = code.n
    assert code.g * code.h == P.x_n_minus_1(n)
    assert code.k == n - len(zeros)
    assert generator_times_parity_is_zero(code)
    assert matrix_ranks(code) == (code.k, n - code.k)
    f = code.field
    from cyclrc.poly import poly_eval

    for j in range(0, n, max(1, n // 40)):
        assert (poly_eval(code.g, f, f.alpha_pow(j)) == 0) == (j in zeros)


@settings(max_examples=40, deadline=None)
@given(defining_sets(ms=(4, 6)), st.integers(0, 1 << 62), st.integers(0, 100))
def test_codewords_are_multiples_of_g_and_shift_closed(ms, msg, s):
    m, zeros = ms
    code = build_code(make_field(m), zeros)
    c = code.encode(msg % (1 << code.k))
    assert code.is_codeword(c)
    assert code.is_codeword(code.shift(c, s))


@settings(max_examples=40, deadline=None)
@given(defining_sets(ms=(4, 6)))
def test_dual_of_dual(ms):
    m, zeros = ms
    code = build_code(make_field(m), zeros)
    dual = dual_code(code)
    assert dual.k == code.n - code.k
    assert dual.g == code.h.reciprocal()
    assert dual_code(dual) == code


def test_dual_of_example1():
    dual = dual_code(build_code(F16, C1_ZEROS))
    assert dual.k == 5
    for i in range(5):
        word = (1 << i) | (1 << (i + 5)) | (1 << (i + 10))
        assert dual.is_codeword(word)


@pytest.mark.parametrize("m,r", [(4, 2), (6, 2), (4, 4), (6, 6), (8, 4)])
def test_c1_dual_contains_spread_pattern(m, r):
    f = make_field(m)
    n = f.n
    step = n // (r + 1)
    dual = dual_code(build_code(f, range(0, n, r + 1)))
    for i in range(step):
        assert dual.is_codeword(sum(1 << (i + a * step) for a in range(r + 1)))


def test_code_file_round_trip(tmp_path):
    code = build_code(F16, C2_ZEROS)
    d = code_to_dict(code)
    assert set(d) == {"m", "n", "primitive_poly_hex", "zeros", "g_hex", "h_hex", "k"}
    assert code_from_dict(json.loads(json.dumps(d))) == code
    path = tmp_path / "c.json"
    save_code(code, path, family="c2")
    loaded, raw = load_code(path)
    assert loaded == code and raw["family"] == "c2"


def test_code_file_mismatch_detected():
    d = code_to_dict(build_code(F16, C2_ZEROS))
    d["g_hex"] = "0x21"
    with pytest.raises(CodeError, match="g_hex"):
        code_from_dict(d)
    with pytest.raises(CodeError, match="malformed"):
        code_from_dict({"m": 4})
