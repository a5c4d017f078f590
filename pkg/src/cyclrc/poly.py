"""Polynomials over GF(2), packed into Python ints (bit i = coefficient of x^i)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from .gf import GaloisField


@dataclass(frozen=True, order=True)
class BinaryPolynomial:
    """Immutable element of GF(2)[x].

    The zero polynomial reports degree -1.
    """

    mask: int = 0

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("coefficient mask must be non-negative")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> BinaryPolynomial:
        mask = 0
        for e in exponents:
            mask ^= 1 << e
        return cls(mask)

    @classmethod
    def from_hex(cls, text: str) -> BinaryPolynomial:
        return cls(int(text, 16))

    @classmethod
    def x_n_minus_1(cls, n: int) -> BinaryPolynomial:
        return cls((1 << n) | 1)

    @property
    def degree(self) -> int:
        return self.mask.bit_length() - 1

    def is_zero(self) -> bool:
        return self.mask == 0

    def coeff(self, i: int) -> int:
        return (self.mask >> i) & 1

    def exponents(self) -> list[int]:
        m = self.mask
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def weight(self) -> int:
        return self.mask.bit_count()

    def reciprocal(self) -> BinaryPolynomial:
        """x^deg * p(1/x); the bit string reversed."""
        if self.mask == 0:
            return self
        d = self.degree
        return BinaryPolynomial(int(format(self.mask, f"0{d + 1}b")[::-1], 2))

    def to_hex(self) -> str:
        return hex(self.mask)

    def __add__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(self.mask ^ other.mask)

    __sub__ = __add__

    def __mul__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return poly_mul(self, other)

    def __divmod__(self, other: BinaryPolynomial):
        return poly_divrem(self, other)

    def __floordiv__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return poly_divrem(self, other)[0]

    def __mod__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return poly_divrem(self, other)[1]

    def __str__(self) -> str:
        if self.mask == 0:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(terms)


def clmul(a: int, b: int) -> int:
    """Carry-less product of two coefficient masks."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def poly_mul(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(clmul(a.mask, b.mask))


def poly_divrem(a: BinaryPolynomial, b: BinaryPolynomial) -> tuple[BinaryPolynomial, BinaryPolynomial]:
    if b.mask == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.degree
    q, r = 0, a.mask
    while r and r.bit_length() - 1 >= db:
        shift = r.bit_length() - 1 - db
        q |= 1 << shift
        r ^= b.mask << shift
    return BinaryPolynomial(q), BinaryPolynomial(r)


def poly_eval(p: BinaryPolynomial, field: GaloisField, e: int) -> int:
    """Horner evaluation of p at the field element e."""
    acc = 0
    for i in range(p.degree, -1, -1):
        acc = field.mul(acc, e) ^ p.coeff(i)
    return acc


def mulmod_xn(a: int, b: int, n: int) -> int:
    """Product of two masks reduced mod x^n - 1."""
    prod = clmul(a, b)
    mask = (1 << n) - 1
    out = 0
    while prod:
        out ^= prod & mask
        prod >>= n
    return out


def cyclic_shift(word: int, s: int, n: int) -> int:
    """Multiply a length-n word by x^s mod x^n - 1."""
    s %= n
    mask = (1 << n) - 1
    return ((word << s) | (word >> (n - s))) & mask
