"""Arithmetic over GF(2^m) in polynomial basis.

Field elements are plain ints in [0, 2^m): bit i is the coefficient of x^i,
so the zero element is 0 and the residue of x (the generator alpha) is 2.
Each degree uses a fixed, published primitive polynomial so that every
encoder in this package is bit-reproducible across runs and machines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

from .gf2 import BitMatrix

# Primitive polynomials over GF(2), one per extension degree.  Bit i is the
# coefficient of x^i (the x^m term included).  Standard minimal-weight table
# (Zierler/Stahnke); each makes x a generator of the multiplicative group.
PRIMITIVE_POLYS = {
    1: 0b11,                    # x + 1
    2: 0b111,                   # x^2 + x + 1
    3: 0b1011,                  # x^3 + x + 1
    4: 0b10011,                 # x^4 + x + 1
    5: 0b100101,                # x^5 + x^2 + 1
    6: 0b1000011,               # x^6 + x + 1
    7: 0b10000011,              # x^7 + x + 1
    8: 0b100011101,             # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,            # x^9 + x^4 + 1
    10: 0b10000001001,          # x^10 + x^3 + 1
    11: 0b100000000101,         # x^11 + x^2 + 1
    12: 0b1000001010011,        # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,       # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,      # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,     # x^15 + x + 1
    16: 0b10001000000001011,    # x^16 + x^12 + x^3 + x + 1
    17: 0b100000000000001001,   # x^17 + x^3 + 1
    18: 0b1000000000010000001,  # x^18 + x^7 + 1
    19: 0b10000000000000100111,
    20: 0b100000000000000001001,
    21: 0b1000000000000000000101,
    22: 0b10000000000000000000011,
    23: 0b100000000000000000100001,
    24: 0b1000000000000000010000111,
    25: 0b10000000000000000000001001,
    26: 0b100000000000000000001000111,
    27: 0b1000000000000000000000100111,
    28: 0b10000000000000000000000001001,
    29: 0b100000000000000000000000000101,
    30: 0b1000000000000000000000001010011,
    31: 0b10000000000000000000000000001001,
}

_LOG_TABLE_MAX_M = 16


@dataclass(frozen=True)
class Gf2m:
    """The field GF(2^m) with a fixed primitive polynomial.

    alpha (= 2, the residue of x) generates the multiplicative group, so
    alpha**(2^m - 1) == 1 and no smaller positive power is 1.
    """

    m: int
    poly: int
    _exp: tuple = field(default=None, repr=False, compare=False)
    _log: tuple = field(default=None, repr=False, compare=False)

    @property
    def order(self) -> int:
        """Number of field elements, 2^m."""
        return 1 << self.m

    @property
    def alpha(self) -> int:
        return 2 if self.m > 1 else 1

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def _mul_slow(self, a: int, b: int) -> int:
        result = 0
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a >> self.m:
                a ^= self.poly
        return result

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            n = self.order - 1
            return self._exp[(self._log[a] + self._log[b]) % n]
        return self._mul_slow(a, b)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        n = self.order - 1
        if self._log is not None:
            return self._exp[(self._log[a] * e) % n]
        e %= n
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def alpha_pow(self, e: int) -> int:
        return self.pow(self.alpha, e)


def field_make(m: int) -> Gf2m:
    """Build GF(2^m), 1 <= m <= 31, with the published primitive polynomial."""
    if m not in PRIMITIVE_POLYS:
        raise ValueError(f"extension degree must be in 1..31, got {m}")
    f = Gf2m(m, PRIMITIVE_POLYS[m])
    if m <= _LOG_TABLE_MAX_M and m > 1:
        n = f.order - 1
        exp = [0] * n
        log = [0] * f.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = f._mul_slow(x, f.alpha)
        if x != 1:
            raise AssertionError(f"polynomial for m={m} is not primitive")
        object.__setattr__(f, "_exp", tuple(exp))
        object.__setattr__(f, "_log", tuple(log))
    return f


def field_arith(f: Gf2m, a: int, b: int, op: str) -> int:
    """Dispatch wrapper: op in {'add', 'mul', 'inv', 'pow'} (inv ignores b)."""
    if op == "add":
        return f.add(a, b)
    if op == "mul":
        return f.mul(a, b)
    if op == "inv":
        return f.inv(a)
    if op == "pow":
        return f.pow(a, b)
    raise ValueError(f"unknown field operation {op!r}")


def binary_expand(entries: List[List[int]], f: Gf2m) -> BitMatrix:
    """Expand a matrix over GF(2^m) into its binary image.

    Each field entry becomes an m-bit column block; the coefficient of x^0
    lands in the first (topmost) of the m rows.  A matrix with r field rows
    and c columns expands to an (r*m) x c binary matrix, whose GF(2) rank is
    the redundancy in bits of the code the field matrix defines.
    """
    if not entries:
        return BitMatrix(0, 0, ())
    ncols = len(entries[0])
    rows: List[int] = []
    for frow in entries:
        if len(frow) != ncols:
            raise ValueError("ragged field matrix")
        for bit in range(f.m):
            rows.append(sum(((v >> bit) & 1) << j for j, v in enumerate(frow)))
    return BitMatrix(len(entries) * f.m, ncols, tuple(rows))
