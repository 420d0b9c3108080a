"""Varshamov-Tenengolts codes with a power-of-two modulus.

VT_a(L) here is the set of binary words x of length L whose weighted sum
sum_j j*x_j is congruent to a modulo 2^h, h = ceil(log2(L+1)).  Every coset
corrects a single deletion with the classic VT reinsertion rule, and the
power-of-two modulus admits a systematic encoder whose redundancy sits at
the positions {1, 2, 4, ..., 2^(h-1)}.
"""

from __future__ import annotations

from typing import List, Sequence

from .errors import CorruptInputError


def vt_modulus_exponent(L: int) -> int:
    """h = ceil(log2(L+1)), so 2^h is the smallest power of two > L."""
    if L < 1:
        raise ValueError("codeword length must be positive")
    return L.bit_length()


def vt_syndrome(bits: Sequence[int], q: int) -> int:
    """Weighted position sum sum_j j*x_j modulo q (positions 1-indexed)."""
    return sum(j * b for j, b in enumerate(bits, start=1)) % q


def power_positions(L: int) -> List[int]:
    """Redundancy positions {2^i} within 1..L for the systematic encoder."""
    h = vt_modulus_exponent(L)
    return [1 << i for i in range(h)]


def data_positions(L: int) -> List[int]:
    powers = set(power_positions(L))
    return [j for j in range(1, L + 1) if j not in powers]


def vt_decode(y: Sequence[int], a: int, L: int) -> List[int]:
    """Recover the VT_a(L) codeword from which one bit of y was deleted.

    With received weight w and deficiency D = (a - syndrome(y)) mod 2^h:
    a deleted 0 has exactly D ones to its right, a deleted 1 has D - w - 1
    zeros to its left.  Raises CorruptInputError when no consistent
    reinsertion exists.
    """
    if len(y) != L - 1:
        raise ValueError("input must be one bit short of the codeword length")
    q = 1 << vt_modulus_exponent(L)
    w = sum(y)
    deficiency = (a - vt_syndrome(y, q)) % q
    if deficiency > L:
        raise CorruptInputError("syndrome deficiency exceeds any insertion weight")
    out = list(y)
    if deficiency <= w:
        # insert a 0 with `deficiency` ones to its right
        ones_seen = 0
        pos = len(y)
        while pos > 0 and ones_seen < deficiency:
            if y[pos - 1] == 1:
                ones_seen += 1
            pos -= 1
        if ones_seen != deficiency:
            raise CorruptInputError("not enough ones for the required reinsertion")
        out.insert(pos, 0)
    else:
        zeros_needed = deficiency - w - 1
        zeros_seen = 0
        pos = 0
        while pos < len(y) and zeros_seen < zeros_needed:
            if y[pos] == 0:
                zeros_seen += 1
            pos += 1
        if zeros_seen != zeros_needed:
            raise CorruptInputError("not enough zeros for the required reinsertion")
        out.insert(pos, 1)
    if vt_syndrome(out, q) != a % q:
        raise CorruptInputError("reinsertion does not reach the target syndrome")
    return out


def vt_systematic_encode(data: Sequence[int], a: int, L: int) -> List[int]:
    """Place data on the non-power positions and fix the syndrome to a.

    The power positions start at 0 and then position 2^i receives bit i of
    the deficiency (a - partial syndrome) mod 2^h; the weights 1, 2, ...,
    2^(h-1) represent every residue exactly once, so one pass suffices.
    """
    h = vt_modulus_exponent(L)
    q = 1 << h
    slots = data_positions(L)
    if len(data) != len(slots):
        raise ValueError(f"expected {len(slots)} data bits for L={L}, got {len(data)}")
    x = [0] * (L + 1)   # 1-indexed
    for j, bit in zip(slots, data):
        x[j] = int(bit) & 1
    deficiency = (a - vt_syndrome(x[1:], q)) % q
    for i in range(h):
        if (deficiency >> i) & 1:
            x[1 << i] = 1
    return x[1:]


def vt_codewords(L: int, a: int):
    """Yield every codeword of VT_a(L) (exponential; for exhaustive tests)."""
    q = 1 << vt_modulus_exponent(L)
    for value in range(1 << L):
        bits = [(value >> j) & 1 for j in range(L)]
        if vt_syndrome(bits, q) == a % q:
            yield bits
