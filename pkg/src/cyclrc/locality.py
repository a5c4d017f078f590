"""Certify locality and availability from the complete list of low-weight dual codewords.

A parity check of weight r + 1 containing coordinate i repairs i from the
other r coordinates of its support.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .cyclic import CyclicCode
from .linalg import from_words, in_span, span_table, transpose

log = logging.getLogger(__name__)

MITM_MAX_WEIGHT = 5
DUAL_ENUMERATION_MAX_DIM = 28


@dataclass(frozen=True, order=True)
class ParityCheck:
    support: tuple[int, ...]
    n: int

    @classmethod
    def from_word(cls, word: int, n: int) -> ParityCheck:
        sup = []
        while word:
            low = word & -word
            sup.append(low.bit_length() - 1)
            word ^= low
        return cls(tuple(sup), n)

    @cached_property
    def as_vector(self) -> int:
        v = 0
        for j in self.support:
            v |= 1 << j
        return v

    @property
    def weight(self) -> int:
        return len(self.support)

    def __contains__(self, i: int) -> bool:
        return i in self.support


@dataclass(frozen=True)
class RepairGroup:
    coordinates: tuple[int, ...]


def is_dual_word(code: CyclicCode, vector: int) -> bool:
    return all((row & vector).bit_count() % 2 == 0 for row in code.generator_rows)


def find_low_weight_duals(code: CyclicCode, w: int) -> list[ParityCheck]:
    """Every dual codeword of weight exactly w, sorted by support.

    Meet-in-the-middle over column sums of the generator matrix for
    w <= 5; for larger w the dual row space is enumerated when its dimension
    is at most 28.
    """
    if w < 1:
        raise ValueError("weight must be >= 1")
    n = code.n
    if w > n:
        return []
    if w <= MITM_MAX_WEIGHT:
        cols = transpose(code.generator_rows, n)
        return sorted(ParityCheck(s, n) for s in _zero_sum_subsets(cols, w))
    if n - code.k <= DUAL_ENUMERATION_MAX_DIM:
        table = span_table(list(code.parity_check_rows), n)
        weights = np.bitwise_count(table).sum(axis=1)
        hits = np.flatnonzero(weights == w)
        return sorted(ParityCheck.from_word(from_words(table[i]), n) for i in hits)
    raise ValueError(
        f"complete search for weight {w} needs w <= {MITM_MAX_WEIGHT} "
        f"or n - k <= {DUAL_ENUMERATION_MAX_DIM}"
    )


def _zero_sum_subsets(cols: Sequence[int], w: int) -> Iterable[tuple[int, ...]]:
    """Index sets of size w whose columns XOR to zero (each set once, ascending)."""
    n = len(cols)
    small = w // 2
    big = w - small
    if small == 0:
        for i in range(n):
            if cols[i] == 0:
                yield (i,)
        return
    table: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for t in combinations(range(n), small):
        acc = 0
        for i in t:
            acc ^= cols[i]
        table[acc].append(t)
    for s in combinations(range(n), big):
        acc = 0
        for i in s:
            acc ^= cols[i]
        for t in table.get(acc, ()):
            if t[0] > s[-1]:
                yield s + t


def verify_locality(code: CyclicCode, r: int, checks: list[ParityCheck] | None = None):
    """(certified, cover): cover maps each covered coordinate to one weight-(r+1) check."""
    if checks is None:
        checks = find_low_weight_duals(code, r + 1)
    cover: dict[int, ParityCheck] = {}
    for c in checks:
        for i in c.support:
            cover.setdefault(i, c)
    return len(cover) == code.n, dict(sorted(cover.items()))


def extract_independent_cover(checks: Sequence[ParityCheck], n: int | None = None) -> list[ParityCheck]:
    """A linearly independent subset of ``checks`` whose supports still cover every coordinate.

    Greedy: keep each check (in support order) that raises the rank, then
    drop checks from the back while coverage survives. Minimal, not
    necessarily minimum.
    """
    checks = sorted(set(checks))
    if n is None:
        n = checks[0].n if checks else 0
    covered = set()
    for c in checks:
        covered.update(c.support)
    if covered != set(range(n)):
        missing = sorted(set(range(n)) - covered)
        raise ValueError(f"checks do not cover coordinates {missing[:10]}")
    basis: dict[int, int] = {}
    kept = []
    for c in checks:
        v = c.as_vector
        if in_span(v, basis):
            continue
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
        kept.append(c)
    counts = [0] * n
    for c in kept:
        for i in c.support:
            counts[i] += 1
    for idx in range(len(kept) - 1, -1, -1):
        c = kept[idx]
        if all(counts[i] > 1 for i in c.support):
            for i in c.support:
                counts[i] -= 1
            kept.pop(idx)
    return kept


def find_disjoint_groups(
    code: CyclicCode, r: int, checks: list[ParityCheck] | None = None
) -> list[RepairGroup] | None:
    """Partition of the coordinates into repair groups of size r + 1, or None."""
    n = code.n
    if n % (r + 1):
        raise ValueError(f"r + 1 = {r + 1} does not divide n = {n}")
    step = n // (r + 1)
    pattern = [tuple(i + a * step for a in range(r + 1)) for i in range(step)]
    vecs = [sum(1 << j for j in g) for g in pattern]
    if all(is_dual_word(code, v) for v in vecs):
        return [RepairGroup(g) for g in pattern]
    if checks is None:
        checks = find_low_weight_duals(code, r + 1)
    by_coord: dict[int, list[ParityCheck]] = defaultdict(list)
    for c in checks:
        for i in c.support:
            by_coord[i].append(c)
    if len(by_coord) < n:
        return None
    chosen: list[ParityCheck] = []
    used = [False] * n

    def search() -> bool:
        try:
            i = used.index(False)
        except ValueError:
            return True
        for c in by_coord[i]:
            if any(used[j] for j in c.support):
                continue
            for j in c.support:
                used[j] = True
            chosen.append(c)
            if search():
                return True
            chosen.pop()
            for j in c.support:
                used[j] = False
        return False

    if not search():
        return None
    return [RepairGroup(c.support) for c in sorted(chosen)]


class AvailabilityError(Exception):
    def __init__(self, coordinate: int, found: int, t: int):
        super().__init__(f"coordinate {coordinate} has only {found} of {t} required repair sets")
        self.coordinate = coordinate
        self.found = found
        self.t = t


@dataclass(frozen=True)
class AvailabilityCertificate:
    r: int
    t: int
    per_coordinate: dict[int, tuple[ParityCheck, ...]]
    exhaustive: bool = True

    def validate(self, code: CyclicCode) -> bool:
        """Independent re-check of every listed check and pairwise intersection."""
        if sorted(self.per_coordinate) != list(range(code.n)):
            return False
        for i, cs in self.per_coordinate.items():
            if len(cs) < self.t:
                return False
            for c in cs:
                if i not in c.support or len(c.support) != self.r + 1:
                    return False
                if not is_dual_word(code, c.as_vector):
                    return False
            for a, b in combinations(cs, 2):
                if set(a.support) & set(b.support) != {i}:
                    return False
        return True


def _meets_only_at(i: int, group: Sequence[ParityCheck]) -> bool:
    seen = set()
    for c in group:
        rest = set(c.support) - {i}
        if rest & seen:
            return False
        seen |= rest
    return True


def _repair_sets_for(i: int, through: list[ParityCheck], t: int) -> tuple[tuple[ParityCheck, ...], bool]:
    if t <= 3:
        for group in combinations(through, t):
            if _meets_only_at(i, group):
                return group, True
        return (), True
    picked: list[ParityCheck] = []
    for c in through:
        if _meets_only_at(i, picked + [c]):
            picked.append(c)
            if len(picked) == t:
                break
    return tuple(picked), False


def verify_availability(
    code: CyclicCode, r: int, t: int, checks: list[ParityCheck] | None = None
) -> AvailabilityCertificate:
    """Find, for every coordinate, t weight-(r+1) checks meeting pairwise only there.

    Raises AvailabilityError at the first coordinate that cannot be certified.
    For t > 3 the per-coordinate search is greedy and a miss is not proof of absence.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if checks is None:
        checks = find_low_weight_duals(code, r + 1)
    by_coord: dict[int, list[ParityCheck]] = defaultdict(list)
    for c in sorted(checks):
        for i in c.support:
            by_coord[i].append(c)
    per = {}
    exhaustive = True
    for i in range(code.n):
        group, ex = _repair_sets_for(i, by_coord.get(i, []), t)
        exhaustive &= ex
        if len(group) < t:
            raise AvailabilityError(i, len(group), t)
        per[i] = group
    if not exhaustive:
        log.warning("availability certificate for t=%d found greedily", t)
    return AvailabilityCertificate(r, t, per, exhaustive)


def max_availability(checks: Sequence[ParityCheck], n: int) -> int:
    """Largest t for which every coordinate has t checks meeting pairwise only there (exact)."""
    by_coord: dict[int, list[ParityCheck]] = defaultdict(list)
    for c in checks:
        for i in c.support:
            by_coord[i].append(c)
    best_overall = None
    for i in range(n):
        through = [frozenset(c.support) - {i} for c in by_coord.get(i, [])]
        best = 0

        def grow(start, used, size):
            nonlocal best
            best = max(best, size)
            if size + len(through) - start <= best:
                return
            for idx in range(start, len(through)):
                if not (through[idx] & used):
                    grow(idx + 1, used | through[idx], size + 1)

        grow(0, frozenset(), 0)
        best_overall = best if best_overall is None else min(best_overall, best)
        if best_overall == 0:
            break
    return best_overall or 0


# -- contraction to an additive code over GF(4) -------------------------------

# symbols 0, 1, w, w^2 encoded 0, 1, 2, 3 so that XOR is GF(4) addition
_PROJECTION = {0b000: 0, 0b011: 1, 0b101: 2, 0b110: 3}
F4_SYMBOLS = ("0", "1", "w", "W")


class ContractionError(ValueError):
    pass


@dataclass(frozen=True)
class F4Image:
    length: int
    log2_size: int
    distance: int
    words: np.ndarray = field(repr=False, compare=False)  # (2^k, length) uint8 symbols

    @property
    def size(self) -> int:
        return 1 << self.log2_size

    def to_dict(self) -> dict:
        return {"length": self.length, "log2_size": self.log2_size, "distance": self.distance}


def _validate_groups(code: CyclicCode, groups: Sequence[RepairGroup]) -> list[tuple[int, int, int]]:
    n = code.n
    triples = [tuple(sorted(g.coordinates)) for g in groups]
    if any(len(t) != 3 for t in triples):
        raise ContractionError("contraction needs repair groups of size 3")
    flat = sorted(j for t in triples for j in t)
    if flat != list(range(n)):
        raise ContractionError("groups do not partition the coordinates")
    for t in triples:
        if not is_dual_word(code, sum(1 << j for j in t)):
            raise ContractionError(f"group {t} does not carry a dual weight-3 word")
    return triples


def contract_word(word: int, groups: Sequence[RepairGroup]) -> tuple[int, ...]:
    """GF(4) image of a binary word: 011 -> 1, 101 -> w, 110 -> w^2 per group."""
    out = []
    for g in groups:
        a, b, c = sorted(g.coordinates)
        key = ((word >> a) & 1) << 2 | ((word >> b) & 1) << 1 | ((word >> c) & 1)
        if key not in _PROJECTION:
            raise ContractionError(f"projection {key:03b} onto group {(a, b, c)} is not even")
        out.append(_PROJECTION[key])
    return tuple(out)


def contract_to_f4(code: CyclicCode, groups: Sequence[RepairGroup], max_k: int = 24) -> F4Image:
    """Map every codeword groupwise to GF(4) and measure the image.

    Enumerates all 2^k codewords; refuses codes with k > max_k.
    """
    triples = _validate_groups(code, groups)
    if code.k > max_k:
        raise ContractionError(f"k = {code.k} too large to enumerate the image (max {max_k})")
    table = span_table(list(code.generator_rows), code.n)
    nbytes = table.shape[1] * 8
    bits = np.unpackbits(table.view(np.uint8).reshape(len(table), nbytes), axis=1, bitorder="little")
    idx = np.array(triples)
    keys = (bits[:, idx[:, 0]] << 2) | (bits[:, idx[:, 1]] << 1) | bits[:, idx[:, 2]]
    lut = np.full(8, 255, dtype=np.uint8)
    for k, v in _PROJECTION.items():
        lut[k] = v
    words = lut[keys]
    if (words == 255).any():
        row, col = map(int, np.argwhere(words == 255)[0])
        raise ContractionError(f"codeword {row} projects outside the even patterns on group {triples[col]}")
    weights = (words != 0).sum(axis=1)
    distance = int(weights[1:].min()) if len(words) > 1 else 0
    return F4Image(len(triples), code.k, distance, words)
