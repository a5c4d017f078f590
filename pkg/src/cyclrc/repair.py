"""Erasure repair: local repair through one parity check, and global erasure decoding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cyclic import CyclicCode
from .locality import AvailabilityCertificate, ParityCheck


class RepairError(ValueError):
    pass


class ErasureDecodingError(Exception):
    """Erased columns of H are dependent; ``witness`` is a nonzero codeword inside the erasures."""

    def __init__(self, erased, witness: int):
        super().__init__(f"erasures {sorted(erased)} are not recoverable: a codeword is supported on them")
        self.erased = frozenset(erased)
        self.witness = witness


@dataclass(frozen=True)
class RepairTrace:
    coordinate: int
    reads: tuple[int, ...]
    value: int

    def to_dict(self) -> dict:
        return {"coordinate": self.coordinate, "reads": list(self.reads), "value": self.value}


def local_repair(word: int, i: int, check: ParityCheck, erased: Iterable[int] = ()) -> RepairTrace:
    """Recover bit i as the XOR of the other bits on the check's support.

    Bit i of ``word`` is ignored; ``erased`` lists any other missing coordinates.
    """
    if i not in check.support:
        raise RepairError(f"check {check.support} does not contain coordinate {i}")
    reads = tuple(j for j in check.support if j != i)
    blocked = set(erased) & set(reads)
    if blocked:
        raise RepairError(f"coordinates {sorted(blocked)} of the repair set are also erased")
    value = 0
    for j in reads:
        value ^= (word >> j) & 1
    return RepairTrace(i, reads, value)


def apply_repair(word: int, trace: RepairTrace) -> int:
    bit = 1 << trace.coordinate
    return (word & ~bit) | (trace.value << trace.coordinate)


def erasure_decode(code: CyclicCode, word: int, erased: Iterable[int]) -> int:
    """Fill the erased coordinates from the parity checks.

    Solves H_E x_E = H_S x_S by Gaussian elimination (pivot = lowest
    erased index). Succeeds iff the erased columns of H are independent,
    which always holds for fewer than d erasures.
    """
    erased = sorted(set(erased))
    if not erased:
        return word
    n = code.n
    if erased[0] < 0 or erased[-1] >= n:
        raise RepairError("erased coordinate out of range")
    emask = 0
    for j in erased:
        emask |= 1 << j
    known = word & ~emask & ((1 << n) - 1)
    ne = len(erased)
    # each equation: bits 0..ne-1 are unknowns, bit ne is the right-hand side
    eqs = []
    for row in code.parity_check_rows:
        lhs = 0
        for col, j in enumerate(erased):
            if (row >> j) & 1:
                lhs |= 1 << col
        rhs = (row & known).bit_count() & 1
        eqs.append(lhs | rhs << ne)
    pivot_row: dict[int, int] = {}  # unknown column -> equation index
    used = set()
    for col in range(ne):
        bit = 1 << col
        ridx = next((idx for idx, e in enumerate(eqs) if e & bit and idx not in used), None)
        if ridx is None:
            # column col is a sum of earlier pivot columns
            dep = [col] + [c2 for c2, r2 in pivot_row.items() if eqs[r2] & bit]
            raise ErasureDecodingError(erased, sum(1 << erased[c] for c in dep))
        used.add(ridx)
        pivot_row[col] = ridx
        prow = eqs[ridx]
        for idx in range(len(eqs)):
            if idx != ridx and eqs[idx] & bit:
                eqs[idx] ^= prow
    out = known
    for col, ridx in pivot_row.items():
        if eqs[ridx] >> ne & 1:
            out |= 1 << erased[col]
    return out


def choose_repair_set(
    cert: AvailabilityCertificate, i: int, busy: Iterable[int] = (), erased: Iterable[int] = ()
) -> ParityCheck | None:
    """First certified check for i that avoids busy and erased coordinates, else None."""
    blocked = (set(busy) | set(erased)) - {i}
    for c in cert.per_coordinate.get(i, ()):
        if not blocked & set(c.support):
            return c
    return None
