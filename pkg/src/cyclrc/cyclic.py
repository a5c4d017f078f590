"""Binary cyclic codes of length n = 2^m - 1 described by their zeros.

Codewords are ints: bit i is the coefficient of x^i, coordinates are
0-indexed, and a cyclic shift is multiplication by x mod x^n - 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable

import numpy as np

from .gf import GaloisField, coset_of, cyclotomic_cosets, make_field, minimal_polynomial
from .linalg import (
    from_words,
    gf2_rank,
    popcount_rows,
    span_table,
    support,
    systematic_form,
    to_words,
)
from .poly import BinaryPolynomial, clmul, cyclic_shift, poly_divrem

DEFAULT_BUDGET = 1 << 28
DEFAULT_SEED = 20140101
DEFAULT_ISD_ITERATIONS = 200


class CodeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CyclicCode:
    field: GaloisField
    zeros: tuple[int, ...]
    g: BinaryPolynomial
    h: BinaryPolynomial

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    def __repr__(self):
        return f"CyclicCode([{self.n}, {self.k}], zeros={len(self.zeros)})"

    def __eq__(self, other):
        return isinstance(other, CyclicCode) and self.field == other.field and self.zeros == other.zeros

    def __hash__(self):
        return hash((self.field, self.zeros))

    @cached_property
    def generator_rows(self) -> tuple[int, ...]:
        """k rows, row i = x^i g(x)."""
        return tuple(self.g.mask << i for i in range(self.k))

    @cached_property
    def parity_check_rows(self) -> tuple[int, ...]:
        """n - k rows, row i = x^i times the reciprocal of h(x)."""
        hr = self.h.reciprocal().mask
        return tuple(hr << i for i in range(self.n - self.k))

    def encode(self, message: int) -> int:
        """Non-systematic encoding: message polynomial times g(x)."""
        if message >> self.k:
            raise CodeError(f"message has more than k={self.k} bits")
        return clmul(message, self.g.mask)

    def is_codeword(self, word: int) -> bool:
        if word >> self.n:
            return False
        return poly_divrem(BinaryPolynomial(word), self.g)[1].is_zero()

    def shift(self, word: int, s: int = 1) -> int:
        return cyclic_shift(word, s, self.n)


def _check_zeros(n: int, zeros: Iterable[int]) -> tuple[int, ...]:
    zs = set()
    for j in zeros:
        if not 0 <= j < n:
            raise CodeError(f"zero exponent {j} outside 0..{n - 1}")
        zs.add(j)
    if not zs:
        raise CodeError("defining set is empty (g = 1 gives the full space)")
    if len(zs) == n:
        raise CodeError("defining set is full (g = x^n - 1 gives the zero code)")
    for j in zs:
        if (2 * j) % n not in zs:
            raise CodeError(f"defining set is not closed under doubling: {j} in, {(2 * j) % n} missing")
    return tuple(sorted(zs))


def build_code(field: GaloisField, zeros: Iterable[int]) -> CyclicCode:
    zs = _check_zeros(field.n, zeros)
    g = BinaryPolynomial(1)
    seen = set()
    for j in zs:
        if j in seen:
            continue
        c = coset_of(j, field.n)
        seen.update(c.members)
        g = g * minimal_polynomial(field, c.representative)
    h, rem = poly_divrem(BinaryPolynomial.x_n_minus_1(field.n), g)
    if not rem.is_zero():
        raise AssertionError("g(x) does not divide x^n - 1")
    return CyclicCode(field, zs, g, h)


def code_from_cosets(field: GaloisField, representatives: Iterable[int]) -> CyclicCode:
    zeros = set()
    for r in representatives:
        zeros.update(coset_of(r, field.n).members)
    return build_code(field, zeros)


def dual_code(code: CyclicCode) -> CyclicCode:
    """Cyclic code generated by the reciprocal of h(x)."""
    n = code.n
    zs = set(code.zeros)
    return build_code(code.field, {(-j) % n for j in range(n) if j not in zs})


def longest_cyclic_run(zeros: Iterable[int], n: int) -> int:
    zs = set(zeros)
    if len(zs) >= n:
        return n
    best = 0
    for j in zs:
        if (j - 1) % n in zs:
            continue
        run = 0
        while (j + run) % n in zs:
            run += 1
        best = max(best, run)
    return best


def bch_bound(code: CyclicCode) -> int:
    """Longest run of consecutive zeros (cyclically) plus one."""
    return longest_cyclic_run(code.zeros, code.n) + 1


@dataclass(frozen=True)
class DistanceEstimate:
    lower: int
    upper: int
    exact: bool
    witness: int | None = dc_field(default=None, compare=False)
    method: str = dc_field(default="enumeration", compare=False)
    seed: int | None = dc_field(default=None, compare=False)
    iterations: int = dc_field(default=0, compare=False)

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact != (self.lower == self.upper):
            raise ValueError("exact flag must agree with lower == upper")

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact}


def _lex_key(word: int) -> tuple[int, ...]:
    return support(word)


def _canonical_shift(word: int, n: int) -> int:
    """Lexicographically smallest support among the cyclic shifts of word."""
    return min((cyclic_shift(word, s, n) for s in range(n)), key=_lex_key)


class _Best:
    """Running minimum weight with lexicographic tie-break on support."""

    def __init__(self):
        self.weight = None
        self.word = None

    def offer(self, weights: np.ndarray, words: np.ndarray, skip_zero=True):
        if len(weights) == 0:
            return
        w = weights
        if skip_zero:
            w = np.where(w == 0, np.iinfo(np.int64).max, w)
        low = int(w.min())
        if low == np.iinfo(np.int64).max:
            return
        if self.weight is not None and low > self.weight:
            return
        idx = np.flatnonzero(w == low)[:64]
        cands = [from_words(words[i]) for i in idx]
        cand = min(cands, key=_lex_key)
        if self.weight is None or low < self.weight or _lex_key(cand) < _lex_key(self.word):
            self.weight, self.word = low, cand


def _enumerate_min_weight(rows: list[int], n: int) -> tuple[int, int]:
    """Exact minimum nonzero weight of the row space (rows independent)."""
    k = len(rows)
    b = min(k, 16)
    table = span_table(rows[:b], n)
    high = to_words(rows[b:], n)
    best = _Best()
    cur = np.zeros(table.shape[1], dtype=np.uint64)
    for step in range(1 << (k - b)):
        if step:
            bit = (step & -step).bit_length() - 1
            cur = cur ^ high[bit]
        block = table ^ cur
        best.offer(popcount_rows(block), block)
    return best.weight, best.word


def _sweep_low_info_weight(rows: list[int], n: int, max_combo: int, limit: int, best: _Best) -> int:
    """Try every sum of at most ``max_combo`` rows of a systematic generator.

    Returns the number of combinations examined (stops early at ``limit``).
    """
    k = len(rows)
    P = to_words(rows, n)
    done = 0
    best.offer(popcount_rows(P), P)
    done += k
    if max_combo < 2 or k < 2:
        return done
    ii, jj = np.triu_indices(k, 1)
    pairs = P[ii] ^ P[jj]
    best.offer(popcount_rows(pairs), pairs)
    done += len(pairs)
    if max_combo < 3:
        return done
    # pairs are ordered by first index; start[i] = first pair whose first index is i
    start = np.searchsorted(ii, np.arange(k + 1))
    for i in range(k - 2):
        if done >= limit:
            return done
        block = P[i] ^ pairs[start[i + 1] :]
        best.offer(popcount_rows(block), block)
        done += len(block)
    if max_combo < 4:
        return done
    for p in range(len(pairs)):
        j = jj[p]
        if j + 1 >= k:
            continue
        if done >= limit:
            return done
        block = pairs[p] ^ pairs[start[j + 1] :]
        best.offer(popcount_rows(block), block)
        done += len(block)
    return done


def min_distance(
    code: CyclicCode,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    iterations: int = DEFAULT_ISD_ITERATIONS,
) -> DistanceEstimate:
    """Minimum distance: exact when 2^k <= budget, otherwise a [BCH, best found] interval.

    The fallback upper bound comes from sums of at most four rows of a
    systematic generator matrix followed by ``iterations`` rounds of random
    information-set search seeded with ``seed``.
    """
    n, k = code.n, code.k
    rows = list(code.generator_rows)
    if (1 << k) <= budget:
        d, word = _enumerate_min_weight(rows, n)
        return DistanceEstimate(d, d, True, _canonical_shift(word, n), "enumeration")

    lower = bch_bound(code)
    best = _Best()
    sys_rows, _ = systematic_form(rows, range(n))
    _sweep_low_info_weight(sys_rows, n, 4, budget, best)
    rng = np.random.default_rng(seed)
    done = 0
    for _ in range(iterations):
        if best.weight <= lower:
            break
        perm = [int(c) for c in rng.permutation(n)]
        sys_rows, _ = systematic_form(rows, perm)
        _sweep_low_info_weight(sys_rows, n, 2, budget, best)
        done += 1
    upper = best.weight
    lower = min(lower, upper)
    return DistanceEstimate(
        lower, upper, lower == upper, _canonical_shift(best.word, n), "search", seed, done
    )


def min_distance_by_multiples(code: CyclicCode) -> int:
    """Reference: minimum weight over all a(x) g(x) with deg a < k."""
    g = code.g.mask
    return min(clmul(a, g).bit_count() for a in range(1, 1 << code.k))


def generator_times_parity_is_zero(code: CyclicCode) -> bool:
    for gr in code.generator_rows:
        for hr in code.parity_check_rows:
            if (gr & hr).bit_count() & 1:
                return False
    return True


def matrix_ranks(code: CyclicCode) -> tuple[int, int]:
    return gf2_rank(code.generator_rows), gf2_rank(code.parity_check_rows)


def all_nonzero_cosets_subsets(n: int):
    """Every 2-closed defining set strictly between empty and full, as sorted tuples."""
    cos = cyclotomic_cosets(n)
    for size in range(1, len(cos)):
        for pick in combinations(cos, size):
            yield tuple(sorted(j for c in pick for j in c.members))


# -- code files ---------------------------------------------------------------


def code_to_dict(code: CyclicCode, **extra) -> dict:
    d = {
        "m": code.m,
        "n": code.n,
        "primitive_poly_hex": code.field.primitive_poly.to_hex(),
        "zeros": list(code.zeros),
        "g_hex": code.g.to_hex(),
        "h_hex": code.h.to_hex(),
        "k": code.k,
    }
    d.update(extra)
    return d


def code_from_dict(data: dict) -> CyclicCode:
    try:
        m = int(data["m"])
        field = make_field(m, int(data["primitive_poly_hex"], 16))
        code = build_code(field, [int(j) for j in data["zeros"]])
        stored = (int(data["n"]), int(data["g_hex"], 16), int(data["h_hex"], 16), int(data["k"]))
    except (KeyError, TypeError) as e:
        raise CodeError(f"malformed code file: {e!r}") from e
    actual = (code.n, code.g.mask, code.h.mask, code.k)
    names = ("n", "g_hex", "h_hex", "k")
    for name, s, a in zip(names, stored, actual):
        if s != a:
            raise CodeError(f"stored {name} does not match recomputation from zeros ({s:#x} != {a:#x})")
    return code


def save_code(code: CyclicCode, path, **extra) -> None:
    Path(path).write_text(json.dumps(code_to_dict(code, **extra), indent=2) + "\n")


def load_code(path) -> tuple[CyclicCode, dict]:
    data = json.loads(Path(path).read_text())
    return code_from_dict(data), data
