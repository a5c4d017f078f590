"""Whole-code analysis reports and the exhaustive defining-set search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bounds import BoundReport, evaluate_bounds
from .cyclic import (
    DEFAULT_BUDGET,
    DEFAULT_ISD_ITERATIONS,
    DEFAULT_SEED,
    CyclicCode,
    DistanceEstimate,
    bch_bound,
    build_code,
    min_distance,
)
from .gf import GaloisField, cyclotomic_cosets
from .locality import (
    AvailabilityError,
    ContractionError,
    contract_to_f4,
    find_disjoint_groups,
    find_low_weight_duals,
    max_availability,
    verify_availability,
    verify_locality,
)

F4_ENUMERATION_MAX_K = 22


def analyze(
    code: CyclicCode,
    r: int = 2,
    t: int = 1,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    iterations: int = DEFAULT_ISD_ITERATIONS,
) -> dict:
    """AnalysisReport as a JSON-ready dict; ``report["bounds"]["violated"]`` flags failures."""
    n, k = code.n, code.k
    dist = min_distance(code, budget=budget, seed=seed, iterations=iterations)
    checks = find_low_weight_duals(code, r + 1)
    certified, _ = verify_locality(code, r, checks)
    groups = find_disjoint_groups(code, r, checks) if certified and n % (r + 1) == 0 else None

    avail_ok = False
    if certified:
        try:
            avail_ok = verify_availability(code, r, t, checks).validate(code)
        except AvailabilityError:
            avail_ok = False

    f4 = None
    if groups is not None and r == 2:
        if k <= F4_ENUMERATION_MAX_K:
            try:
                f4 = contract_to_f4(code, groups, max_k=F4_ENUMERATION_MAX_K).to_dict()
            except ContractionError:
                f4 = None
        else:
            # each nonzero group image has binary weight 2
            f4 = {
                "length": n // 3,
                "log2_size": k,
                "distance": dist.lower // 2 if dist.exact else None,
            }

    bounds = evaluate_bounds(
        n, k, r, dist, m=code.m, locality_certified=certified, disjoint_groups=groups is not None
    )
    if code.m > 8 and certified and r == 2:
        bounds.notes.append("m > 8: d = 6 dimension bound holds without assuming disjoint groups")
    return {
        "n": n,
        "k": k,
        "zeros": list(code.zeros),
        "distance": dist.to_dict(),
        "distance_method": dist.method,
        "witness_support": _support(dist.witness),
        "bch_bound": bch_bound(code),
        "locality": {"r": r, "certified": certified, "checks": len(checks)},
        "disjoint_groups": [list(g.coordinates) for g in groups] if groups is not None else None,
        "availability": {"t": t, "certified": avail_ok},
        "f4_image": f4,
        "bounds": {**bounds.to_dict(), "violated": bounds.violated},
        "seeds": {"search_seed": seed, "search_iterations": dist.iterations, "budget": budget},
    }


def _support(word):
    if word is None:
        return None
    return [i for i in range(word.bit_length()) if word >> i & 1]


@dataclass
class SearchResult:
    zeros: tuple[int, ...]
    n: int
    k: int
    distance: DistanceEstimate
    locality_r: int | None
    availability_t: int
    bound_verdicts: BoundReport
    pareto: bool = False

    def to_dict(self) -> dict:
        return {
            "zeros": list(self.zeros),
            "n": self.n,
            "k": self.k,
            "distance": self.distance.to_dict(),
            "locality_r": self.locality_r,
            "availability_t": self.availability_t,
            "bound_verdicts": self.bound_verdicts.to_dict(),
            "pareto": self.pareto,
        }


def search_defining_sets(
    field: GaloisField,
    r: int = 2,
    require_locality: bool = False,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    iterations: int = DEFAULT_ISD_ITERATIONS,
    max_sets: int | None = None,
) -> tuple[list[SearchResult], bool]:
    """Analyze every proper nonempty union of cyclotomic cosets.

    Returns (results sorted by d desc then k desc, complete). Pareto flags
    mark (k, d) points not dominated by another entry with certified locality
    (or by any entry when r-locality is not present anywhere).
    """
    n = field.n
    cosets = cyclotomic_cosets(n)
    results = []
    complete = True
    seen = 0
    for size in range(1, len(cosets)):
        for pick in combinations(cosets, size):
            if max_sets is not None and seen >= max_sets:
                complete = False
                break
            seen += 1
            zeros = sorted(j for c in pick for j in c.members)
            code = build_code(field, zeros)
            checks = find_low_weight_duals(code, r + 1)
            certified, _ = verify_locality(code, r, checks)
            if require_locality and not certified:
                continue
            dist = min_distance(code, budget=budget, seed=seed, iterations=iterations)
            groups = None
            if certified and n % (r + 1) == 0:
                groups = find_disjoint_groups(code, r, checks)
            t = max_availability(checks, n) if certified else 0
            report = evaluate_bounds(
                n, code.k, r, dist, m=field.m, locality_certified=certified, disjoint_groups=groups is not None
            )
            results.append(SearchResult(tuple(zeros), n, code.k, dist, r if certified else None, t, report))
        if not complete:
            break
    _mark_pareto(results)
    results.sort(key=lambda s: (-s.distance.lower, -s.k, s.zeros))
    return results, complete


def _mark_pareto(results: list[SearchResult]):
    pool = [s for s in results if s.locality_r is not None] or results
    for s in pool:
        s.pareto = not any(
            (o.k >= s.k and o.distance.lower >= s.distance.lower)
            and (o.k > s.k or o.distance.lower > s.distance.lower)
            for o in pool
        )
