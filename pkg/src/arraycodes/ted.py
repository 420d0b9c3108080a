"""Combined tail-erasure + deletion correcting codes.

Each row contributes the tuple (VT syndrome, last e bits), packed into one
symbol of GF(2^(h+e)); the n symbols must form a codeword of an outer
Reed-Solomon code of distance t+e+1.  Any row shortened by the channel is
an outer erasure; once its tuple is back, a row missing k >= 2 bits gets
its known tail re-attached and the one remaining gap is a plain VT
deletion, whatever mix of tail loss and deletion actually occurred.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence

from .arrays import BitArray, RaggedArray
from .errors import (CapacityExceededError, ChannelContractError,
                     CorruptInputError, NotACodewordError)
from .field import field_make
from .rs import ReedSolomon
from .vt import (data_positions, vt_decode, vt_modulus_exponent, vt_syndrome,
                 vt_systematic_encode)


def theta_symbol(row_bits: Sequence[int], e: int, h: int) -> int:
    """Pack a row's (VT syndrome mod 2^h, last e bits) into one element of
    GF(2^(h+e)): syndrome in the low h bits, tail above it (earliest tail
    bit lowest)."""
    L = len(row_bits)
    s = vt_syndrome(row_bits, 1 << h)
    tail = 0
    for k in range(e):
        tail |= (int(row_bits[L - e + k]) & 1) << k
    return s | (tail << h)


@dataclass(frozen=True)
class TedCode:
    """(t,1,e) tail-erasure-deletion code over n x L arrays.

    The symbol packing puts the h syndrome bits low and the e tail bits
    high (tail bit of position L-e+1 first); the packing is a fixed
    bijection, so serialized codecs stay stable.
    """

    n: int
    L: int
    t: int
    e: int

    def __post_init__(self):
        if self.n < 1 or self.L < 1:
            raise ValueError("n and L must be positive")
        if self.t < 0 or self.e < 1:
            raise ValueError("need t >= 0 and e >= 1")
        if self.R >= self.n:
            raise ValueError("t + e must be smaller than n")
        h = self.h
        if not self.e < (self.L + 1) - (1 << (h - 1)):
            raise ValueError(
                f"systematic encoding needs e < (L+1) - 2^(h-1) = "
                f"{self.L + 1 - (1 << (h - 1))}; the last e positions would "
                f"collide with the VT redundancy positions")
        if self.n > (1 << (h + self.e)) - 1:
            raise ValueError(
                f"outer Reed-Solomon code over GF(2^{h + self.e}) supports at "
                f"most {(1 << (h + self.e)) - 1} rows")

    @property
    def h(self) -> int:
        return vt_modulus_exponent(self.L)

    @property
    def R(self) -> int:
        """Outer erasure capacity, t + e redundancy rows."""
        return self.t + self.e

    @property
    def message_bits(self) -> int:
        """K = n*L - R*(e+h)."""
        return self.n * self.L - self.R * (self.e + self.h)

    @cached_property
    def outer(self) -> ReedSolomon:
        return ReedSolomon(field_make(self.h + self.e), self.n, self.n - self.R)

    def theta(self, row_bits: Sequence[int]) -> int:
        """Pack (syndrome, last e bits) into one GF(2^(h+e)) element."""
        if len(row_bits) != self.L:
            raise ValueError("row must have full length")
        return theta_symbol(row_bits, self.e, self.h)

    def _unpack(self, symbol: int):
        s = symbol & ((1 << self.h) - 1)
        tail = [(symbol >> (self.h + k)) & 1 for k in range(self.e)]
        return s, tail

    def membership(self, x: BitArray) -> bool:
        if (x.n, x.L) != (self.n, self.L):
            raise ValueError("array shape mismatch")
        symbols = [self.theta(x.row_bits(i)) for i in range(1, self.n + 1)]
        return self.outer.is_codeword(symbols)

    def encode(self, message: Sequence[int]) -> BitArray:
        K = self.message_bits
        if len(message) != K:
            raise ValueError(f"message must have {K} bits")
        n, L, R, h, e = self.n, self.L, self.R, self.h, self.e
        rows: List[List[int]] = []
        for i in range(n - R):
            rows.append([int(b) & 1 for b in message[i * L:(i + 1) * L]])
        symbols = self.outer.encode([self.theta(r) for r in rows])
        rest = message[(n - R) * L:]
        per_row = L - e - h
        for i in range(R):
            data = [int(b) & 1 for b in rest[i * per_row:(i + 1) * per_row]]
            s, tail = self._unpack(symbols[n - R + i])
            # The feasibility precondition keeps the last e positions out of
            # the power positions, so appending the tail to the data lands
            # the tail bits exactly at positions L-e+1 .. L.
            row = vt_systematic_encode(data + tail, s, L)
            if row[L - e:] != tail:
                raise AssertionError("tail placement violated; encoder bug")
            rows.append(row)
        return BitArray.from_lists(rows)

    def message_of(self, x: BitArray) -> List[int]:
        out: List[int] = []
        for i in range(1, self.n - self.R + 1):
            out.extend(x.row_bits(i))
        slots = data_positions(self.L)[: self.L - self.e - self.h]
        for i in range(self.n - self.R + 1, self.n + 1):
            bits = x.row_bits(i)
            out.extend(bits[j - 1] for j in slots)
        return out

    def decode(self, received: RaggedArray) -> BitArray:
        if (received.n, received.L) != (self.n, self.L):
            raise ValueError("array shape mismatch")
        n, L, e = self.n, self.L, self.e
        short = {}
        for i in range(1, n + 1):
            length = received.row_length(i)
            missing = L - length
            if missing == 0:
                continue
            if missing > e + 1:
                raise ChannelContractError(
                    f"row {i} lost {missing} bits; at most e+1 = {e + 1} can "
                    f"disappear from one row of this channel")
            short[i] = missing
        if len(short) > self.R:
            raise CapacityExceededError(
                f"{len(short)} damaged rows exceed capacity t+e = {self.R}")
        symbols: List[int] = []
        for i in range(1, n + 1):
            if i in short:
                symbols.append(None)
            else:
                symbols.append(self.theta(received.row_bits(i)))
        try:
            codeword = self.outer.decode_erasures(symbols)
        except NotACodewordError as exc:
            raise CorruptInputError("intact rows disagree with the outer code") from exc
        rows: List[List[int]] = []
        for i in range(1, n + 1):
            bits = received.row_bits(i)
            if i not in short:
                rows.append(bits)
                continue
            s, tail = self._unpack(codeword[i - 1])
            k = short[i]
            if k > 1:
                # Re-attach the k-1 known trailing bits; whatever mix of tail
                # loss and deletion occurred, the result is the original row
                # minus exactly one bit.
                bits = bits + tail[e - (k - 1):]
            full = vt_decode(bits, s, L)
            if full[L - e:] != tail:
                raise CorruptInputError(
                    f"row {i} decodes with the wrong tail; input out of contract")
            rows.append(full)
        out = BitArray.from_lists(rows)
        if not self.membership(out):
            raise CorruptInputError("decoded array fails the membership rule")
        return out

    def descriptor(self) -> dict:
        return {"kind": "ted", "n": self.n, "L": self.L, "t": self.t, "e": self.e,
                "outer": {"q": 1 << (self.h + self.e), "n": self.n,
                          "k": self.n - self.R}}
