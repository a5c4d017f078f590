"""GF(2) linear algebra on int-packed rows, plus numpy word-array helpers for bulk XOR/popcount."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


def gf2_rank(rows: Iterable[int]) -> int:
    basis: dict[int, int] = {}  # leading bit -> row
    for v in rows:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def gf2_reduce_basis(rows: Iterable[int]) -> dict[int, int]:
    """Echelon basis keyed by leading bit."""
    basis: dict[int, int] = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return basis


def in_span(vec: int, basis: dict[int, int]) -> bool:
    while vec:
        top = vec.bit_length() - 1
        if top not in basis:
            return False
        vec ^= basis[top]
    return True


def systematic_form(rows: Sequence[int], columns: Sequence[int]) -> tuple[list[int], list[int]]:
    """Gauss-Jordan on ``rows`` pivoting through ``columns`` in the given order.

    Returns (reduced rows, pivot columns); row i has a 1 at pivot i and 0 at
    every other pivot. Rows must be linearly independent.
    """
    work = list(rows)
    pivots = []
    r = 0
    for c in columns:
        if r == len(work):
            break
        bit = 1 << c
        p = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        pr = work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= pr
        pivots.append(c)
        r += 1
    if r != len(work):
        raise ValueError("rows are linearly dependent")
    return work, pivots


def transpose(rows: Sequence[int], ncols: int) -> list[int]:
    """Column j of the row-packed matrix, packed as an int over row indices."""
    if not rows:
        return [0] * ncols
    arr = to_bit_array(rows, ncols)
    return [int(v) for v in (from_bit_array(arr.T))]


def to_bit_array(rows: Sequence[int], ncols: int) -> np.ndarray:
    """(len(rows), ncols) uint8 array; column j = bit j."""
    nbytes = (ncols + 7) // 8
    buf = b"".join(int(r).to_bytes(nbytes, "little") for r in rows)
    packed = np.frombuffer(buf, dtype=np.uint8).reshape(len(rows), nbytes)
    return np.unpackbits(packed, axis=1, bitorder="little")[:, :ncols]


def from_bit_array(arr: np.ndarray) -> list[int]:
    arr = np.asarray(arr, dtype=np.uint8)
    packed = np.packbits(arr, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def int_to_bits(word: int, n: int) -> np.ndarray:
    return to_bit_array([word], n)[0]


def bits_to_int(bits: Iterable[int]) -> int:
    out = 0
    for i, b in enumerate(bits):
        if b:
            out |= 1 << i
    return out


def support(word: int) -> tuple[int, ...]:
    out = []
    while word:
        low = word & -word
        out.append(low.bit_length() - 1)
        word ^= low
    return tuple(out)


def to_words(rows: Sequence[int], n: int) -> np.ndarray:
    """Pack ints into a (len(rows), ceil(n/64)) uint64 array."""
    nw = max(1, (n + 63) // 64)
    out = np.zeros((len(rows), nw), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(rows):
        for w in range(nw):
            out[i, w] = (r >> (64 * w)) & mask
    return out


def from_words(words: np.ndarray) -> int:
    out = 0
    for w, v in enumerate(np.asarray(words, dtype=np.uint64)):
        out |= int(v) << (64 * w)
    return out


def popcount_rows(words: np.ndarray) -> np.ndarray:
    return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)


def span_table(rows: Sequence[int], n: int) -> np.ndarray:
    """All 2^len(rows) combinations; entry s is the XOR of rows selected by the bits of s."""
    nw = max(1, (n + 63) // 64)
    table = np.zeros((1 << len(rows), nw), dtype=np.uint64)
    packed = to_words(rows, n)
    for i in range(len(rows)):
        half = 1 << i
        table[half : 2 * half] = table[:half] ^ packed[i]
    return table
