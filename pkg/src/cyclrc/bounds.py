"""Closed-form dimension and distance bounds for binary LRCs, in exact integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .cyclic import DistanceEstimate

MET = "met_with_equality"
SLACK = "slack"
VIOLATED = "violated"
CONSISTENT = "consistent_not_confirmed"


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def lrc_singleton_bound(n: int, k: int, r: int) -> int:
    """Largest d allowed for an [n, k] code with locality r: n - k - ceil(k/r) + 2."""
    if not 1 <= k <= n or r < 1:
        raise ValueError(f"need 1 <= k <= n and r >= 1, got n={n}, k={k}, r={r}")
    return n - k - _ceil_div(k, r) + 2


def _check_m(m: int):
    if m % 2 or m <= 2:
        raise ValueError("m must be even and > 2")


def disjoint_d6_dimension_bound(m: int) -> int:
    """Max k for a length-(2^m - 1), d = 6, 2-local code with disjoint repair groups.

    For m > 8 the same value bounds every 2-local d = 6 code, disjoint groups or not.
    """
    _check_m(m)
    n = (1 << m) - 1
    return 2 * n // 3 - m


def disjoint_d10_dimension_bound(m: int, even_k: bool = True) -> int:
    """Max k for a length-(2^m - 1), d = 10, 2-local code with disjoint repair groups.

    The general value is one larger than the even-k value.
    """
    _check_m(m)
    n = (1 << m) - 1
    return 2 * n // 3 - 2 * m + (0 if even_k else 1)


def floor_log2_ratio(num: int, den: int) -> int:
    """floor(log2(num / den)) for positive integers, with no floating point."""
    if num <= 0 or den <= 0:
        raise ValueError("arguments must be positive")

    def fits(e):
        return den << e <= num if e >= 0 else den <= num << -e

    # den * 2^e has the bit length of num, so the answer is e or e - 1
    e = num.bit_length() - den.bit_length()
    if not fits(e):
        e -= 1
    return e


def f4_sphere_volume(n_prime: int, radius: int) -> int:
    return sum(comb(n_prime, i) * 3**i for i in range(radius + 1))


def f4_hamming_size_bound(n_prime: int, d_prime: int) -> int:
    """floor(log2) of the sphere-packing bound 4^n' / V(n', (d'-1)/2) over GF(4)."""
    if d_prime not in (3, 5):
        raise ValueError(f"unsupported distance d'={d_prime}; expected 3 or 5")
    if n_prime < 1:
        raise ValueError("n' must be positive")
    return floor_log2_ratio(4**n_prime, f4_sphere_volume(n_prime, (d_prime - 1) // 2))


def _distance_verdict(est: DistanceEstimate, bound: int) -> str:
    if est.lower > bound:
        return VIOLATED
    if est.upper < bound:
        return SLACK
    if est.exact:
        return MET
    return CONSISTENT


def _dimension_verdict(k: int, bound: int, confirmed: bool) -> str:
    if k > bound:
        return VIOLATED
    if k < bound:
        return SLACK
    return MET if confirmed else CONSISTENT


@dataclass
class BoundReport:
    singleton_d_max: int
    thm1_k_max: int | None = None
    thm2_k_max: int | None = None
    f4_hamming_k_max: int | None = None
    verdicts: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def violated(self) -> bool:
        return VIOLATED in self.verdicts.values()

    def to_dict(self) -> dict:
        return {
            "singleton_d_max": self.singleton_d_max,
            "thm1_k_max": self.thm1_k_max,
            "thm2_k_max": self.thm2_k_max,
            "f4_hamming_k_max": self.f4_hamming_k_max,
            "verdicts": dict(self.verdicts),
            "notes": list(self.notes),
        }


def evaluate_bounds(
    n: int,
    k: int,
    r: int,
    distance: DistanceEstimate,
    m: int | None = None,
    locality_certified: bool = True,
    disjoint_groups: bool = False,
) -> BoundReport:
    """Stamp verdicts for every bound that applies to the measured (n, k, d, r).

    The dimension bounds for r = 2 need n = 2^m - 1 with m even and > 2,
    certified locality, and either disjoint repair groups or m > 8.
    Equality counts as confirmed only when the distance is exact.
    """
    report = BoundReport(lrc_singleton_bound(n, k, r))
    if locality_certified:
        report.verdicts["singleton"] = _distance_verdict(distance, report.singleton_d_max)
    else:
        report.notes.append("locality not certified; the LRC Singleton bound is informational")

    applies = (
        locality_certified
        and r == 2
        and m is not None
        and m % 2 == 0
        and m > 2
        and n == (1 << m) - 1
        and (disjoint_groups or m > 8)
    )
    if not applies:
        return report
    if not disjoint_groups:
        report.notes.append("no disjoint repair groups; the d >= 6 dimension bound still holds because m > 8")
    d_low = distance.lower
    n_prime = n // 3
    if d_low >= 6:
        report.thm1_k_max = disjoint_d6_dimension_bound(m)
        report.verdicts["thm1"] = _dimension_verdict(k, report.thm1_k_max, distance.exact and distance.lower == 6)
        report.f4_hamming_k_max = f4_hamming_size_bound(n_prime, 3)
    if d_low >= 10 and disjoint_groups:
        report.thm2_k_max = disjoint_d10_dimension_bound(m, even_k=(k % 2 == 0))
        report.verdicts["thm2"] = _dimension_verdict(k, report.thm2_k_max, distance.exact and distance.lower == 10)
        report.f4_hamming_k_max = f4_hamming_size_bound(n_prime, 5)
        if k % 2:
            report.notes.append("odd k: the general d = 10 bound has no known construction meeting it")
    if report.f4_hamming_k_max is not None:
        report.verdicts["f4_hamming"] = _dimension_verdict(k, report.f4_hamming_k_max, distance.exact)
    return report
