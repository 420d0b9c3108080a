"""Systematic Reed-Solomon codes over GF(2^m), erasure decoding only.

Codewords are evaluations of a degree < k polynomial at the points
alpha^0 .. alpha^(n-1); the message occupies the first k coordinates
(systematic by interpolation).  Only erasures occur in this package, so
decoding is plain interpolation from k surviving symbols plus a consistency
check against the rest; no error-locator machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import CapacityExceededError, NotACodewordError
from .field import Gf2m


def _lagrange_interpolate(f: Gf2m, points: Sequence[Tuple[int, int]]) -> List[int]:
    """Coefficients (low first) of the unique poly of degree < len(points)
    through the given (x, y) pairs with distinct x."""
    k = len(points)
    coeffs = [0] * k
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        # basis poly prod_{j != i} (x - xj) / (xi - xj)
        basis = [1]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # multiply basis by (x + xj)  (char 2)
            nxt = [0] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d + 1] ^= c
                nxt[d] ^= f.mul(c, xj)
            basis = nxt
            denom = f.mul(denom, xi ^ xj)
        scale = f.mul(yi, f.inv(denom))
        for d, c in enumerate(basis):
            coeffs[d] ^= f.mul(scale, c)
    return coeffs


def _poly_eval(f: Gf2m, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = f.mul(acc, x) ^ c
    return acc


@dataclass(frozen=True)
class ReedSolomon:
    """[n, k, n-k+1] systematic Reed-Solomon code over a Gf2m field."""

    field: Gf2m
    n: int
    k: int

    def __post_init__(self):
        if not (1 <= self.k <= self.n):
            raise ValueError("need 1 <= k <= n")
        if self.n > self.field.order - 1:
            raise ValueError(
                f"length {self.n} exceeds 2^m - 1 = {self.field.order - 1}; "
                "extended evaluation points are not supported")

    @property
    def distance(self) -> int:
        return self.n - self.k + 1

    @property
    def erasure_capacity(self) -> int:
        return self.n - self.k

    def _point(self, position: int) -> int:
        """Evaluation point of 1-indexed position: alpha^(position-1)."""
        return self.field.alpha_pow(position - 1)

    def encode(self, message: Sequence[int]) -> List[int]:
        """Systematic encoding: output[0:k] equals the message."""
        if len(message) != self.k:
            raise ValueError(f"message must have {self.k} symbols")
        pairs = [(self._point(i + 1), int(m)) for i, m in enumerate(message)]
        coeffs = _lagrange_interpolate(self.field, pairs)
        out = list(message[: self.k])
        out = [int(m) for m in out]
        for pos in range(self.k + 1, self.n + 1):
            out.append(_poly_eval(self.field, coeffs, self._point(pos)))
        return out

    def decode_erasures(self, received: Sequence[Optional[int]]) -> List[int]:
        """Fill in erased symbols (None entries); returns the full codeword.

        Raises CapacityExceededError with more than n - k erasures and
        NotACodewordError when the survivors are mutually inconsistent.
        """
        if len(received) != self.n:
            raise ValueError("received word has the wrong length")
        known = [(self._point(i + 1), int(v)) for i, v in enumerate(received) if v is not None]
        if self.n - len(known) > self.erasure_capacity:
            raise CapacityExceededError(
                f"{self.n - len(known)} erasures exceed capacity {self.erasure_capacity}")
        coeffs = _lagrange_interpolate(self.field, known[: self.k])
        codeword = [_poly_eval(self.field, coeffs, self._point(i + 1)) for i in range(self.n)]
        for i, v in enumerate(received):
            if v is not None and codeword[i] != v:
                raise NotACodewordError("surviving symbols are not consistent with any codeword")
        return codeword

    def message_of(self, codeword: Sequence[int]) -> List[int]:
        return [int(v) for v in codeword[: self.k]]

    def is_codeword(self, word: Sequence[int]) -> bool:
        if len(word) != self.n:
            return False
        pairs = [(self._point(i + 1), int(v)) for i, v in enumerate(word[: self.k])]
        coeffs = _lagrange_interpolate(self.field, pairs)
        return all(_poly_eval(self.field, coeffs, self._point(i + 1)) == word[i]
                   for i in range(self.k, self.n))
