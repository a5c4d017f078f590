"""GF(2^m) arithmetic via log/antilog tables, cyclotomic cosets and minimal polynomials.

Field elements are plain ints holding the polynomial-basis coordinates
(bit i is the coefficient of alpha^i).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .poly import BinaryPolynomial

# One primitive polynomial per extension degree, LSB = constant term.
DEFAULT_PRIMITIVE_POLYS = {
    2: 0x7,  # x^2 + x + 1
    3: 0xB,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x89,  # x^7 + x^3 + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}

MIN_M, MAX_M = 2, 16


class FieldError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GaloisField:
    """GF(2^m) with alpha a root of ``primitive_poly``.

    ``exp_table[i]`` is alpha^i for 0 <= i < n and ``log_table[a]`` its
    inverse (``log_table[0]`` is unused and set to -1).
    """

    m: int
    primitive_poly: BinaryPolynomial
    exp_table: tuple[int, ...] = dc_field(repr=False)
    log_table: tuple[int, ...] = dc_field(repr=False)

    @property
    def n(self) -> int:
        return (1 << self.m) - 1

    @property
    def order(self) -> int:
        return 1 << self.m

    def alpha_pow(self, j: int) -> int:
        return self.exp_table[j % self.n]

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self.log_table[a]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % self.n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp_table[(-self.log_table[a]) % self.n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self.exp_table[(self.log_table[a] * e) % self.n]

    def __eq__(self, other):
        return (
            isinstance(other, GaloisField)
            and self.m == other.m
            and self.primitive_poly == other.primitive_poly
        )

    def __hash__(self):
        return hash((self.m, self.primitive_poly.mask))


def _exp_table(m: int, poly: int) -> list[int] | None:
    """Powers of x mod poly; None if x does not have order 2^m - 1."""
    n = (1 << m) - 1
    table = []
    a = 1
    for i in range(n):
        if i and a == 1:
            return None
        table.append(a)
        a <<= 1
        if a >> m:
            a ^= poly
        if a == 0:
            return None
    return table if a == 1 else None


@lru_cache(maxsize=None)
def _make_field(m: int, poly: int) -> GaloisField:
    if not MIN_M <= m <= MAX_M:
        raise FieldError(f"unsupported extension degree m={m}; need {MIN_M} <= m <= {MAX_M}")
    if poly.bit_length() - 1 != m:
        raise FieldError(f"polynomial {poly:#x} does not have degree {m}")
    exp = _exp_table(m, poly)
    if exp is None:
        raise FieldError(f"polynomial {poly:#x} is not primitive over GF(2)")
    log = [-1] * (1 << m)
    for i, a in enumerate(exp):
        log[a] = i
    return GaloisField(m, BinaryPolynomial(poly), tuple(exp), tuple(log))


def make_field(m: int, primitive_poly: int | BinaryPolynomial | None = None) -> GaloisField:
    """Build GF(2^m); the default primitive polynomial comes from the built-in table."""
    if not isinstance(m, int) or not MIN_M <= m <= MAX_M:
        raise FieldError(f"unsupported extension degree m={m}; need {MIN_M} <= m <= {MAX_M}")
    if primitive_poly is None:
        poly = DEFAULT_PRIMITIVE_POLYS[m]
    elif isinstance(primitive_poly, BinaryPolynomial):
        poly = primitive_poly.mask
    else:
        poly = int(primitive_poly)
    return _make_field(m, poly)


def gf_mul(f: GaloisField, a: int, b: int) -> int:
    return f.mul(a, b)


def gf_inv(f: GaloisField, a: int) -> int:
    return f.inv(a)


@dataclass(frozen=True)
class CyclotomicCoset:
    n: int
    representative: int
    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def __contains__(self, j):
        return j % self.n in self.members


def coset_of(j: int, n: int) -> CyclotomicCoset:
    j %= n
    members = {j}
    x = (2 * j) % n
    while x not in members:
        members.add(x)
        x = (2 * x) % n
    ordered = tuple(sorted(members))
    return CyclotomicCoset(n, ordered[0], ordered)


@lru_cache(maxsize=None)
def _cosets(n: int) -> tuple[CyclotomicCoset, ...]:
    seen = set()
    out = []
    for j in range(n):
        if j in seen:
            continue
        c = coset_of(j, n)
        seen.update(c.members)
        out.append(c)
    return tuple(out)


def cyclotomic_cosets(n: int) -> list[CyclotomicCoset]:
    """2-cyclotomic cosets modulo odd n, sorted by representative."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"cyclotomic cosets need an odd modulus, got n={n}")
    return list(_cosets(n))


def minimal_polynomial(f: GaloisField, exponent: int) -> BinaryPolynomial:
    """Minimal polynomial of alpha^exponent: product of (x - alpha^j) over its coset."""
    coset = coset_of(exponent, f.n)
    # coefficients over GF(2^m), index = power of x
    coeffs = [1]
    for j in coset.members:
        root = f.alpha_pow(j)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= f.mul(c, root)
        coeffs = nxt
    mask = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):
            raise AssertionError("minimal polynomial has a coefficient outside GF(2)")
        mask |= c << i
    return BinaryPolynomial(mask)
