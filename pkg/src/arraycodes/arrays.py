"""Data model for n x L binary arrays, erasure patterns and channel outputs.

Rows are stored as bitset ints with bit (j-1) holding position j, matching
the 1-indexed position convention used throughout (position 1 is the first
symbol of a row, position L the last; tail erasures remove a suffix).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple


def _row_to_int(bits: Sequence[int]) -> int:
    return sum((int(b) & 1) << j for j, b in enumerate(bits))


def _int_to_row(value: int, length: int) -> List[int]:
    return [(value >> j) & 1 for j in range(length)]


@dataclass(frozen=True)
class BitArray:
    """A dense n x L binary array."""

    n: int
    L: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count mismatch")
        limit = 1 << self.L
        if any(r < 0 or r >= limit for r in self.rows):
            raise ValueError("row value exceeds declared length")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitArray":
        n = len(entries)
        L = len(entries[0]) if n else 0
        for row in entries:
            if len(row) != L:
                raise ValueError("all rows must have the same length")
        return cls(n, L, tuple(_row_to_int(r) for r in entries))

    def bit(self, i: int, j: int) -> int:
        """Entry at row i, position j (both 1-indexed)."""
        return (self.rows[i - 1] >> (j - 1)) & 1

    def to_lists(self) -> List[List[int]]:
        return [_int_to_row(r, self.L) for r in self.rows]

    def row_bits(self, i: int) -> List[int]:
        return _int_to_row(self.rows[i - 1], self.L)

    def flat_bits(self) -> List[int]:
        """Row-major flattening, position (i-1)*L + (j-1)."""
        out: List[int] = []
        for r in self.rows:
            out.extend(_int_to_row(r, self.L))
        return out

    def xor(self, other: "BitArray") -> "BitArray":
        if (self.n, self.L) != (other.n, other.L):
            raise ValueError("dimension mismatch")
        return BitArray(self.n, self.L, tuple(a ^ b for a, b in zip(self.rows, other.rows)))


@dataclass(frozen=True)
class ErasedArray:
    """An array whose rows lost a suffix: entry (i, j) reads '?' for
    j > L - erased[i-1], otherwise the stored bit.

    The '?' region is kept as a per-row suffix length because the suffix
    structure is an invariant of the channel, not incidental data.
    """

    n: int
    L: int
    rows: Tuple[int, ...]          # surviving prefix bits, suffix bits zeroed
    erased: Tuple[int, ...]        # per-row count of erased tail positions

    def __post_init__(self):
        if len(self.rows) != self.n or len(self.erased) != self.n:
            raise ValueError("row count mismatch")
        for r, e in zip(self.rows, self.erased):
            if e < 0 or e > self.L:
                raise ValueError("erasure count out of range")
            if r >> (self.L - e):
                raise ValueError("bits present inside the erased suffix")

    def known_length(self, i: int) -> int:
        return self.L - self.erased[i - 1]

    def entry(self, i: int, j: int) -> Optional[int]:
        """Bit at (i, j), or None where the value was erased."""
        if j > self.known_length(i):
            return None
        return (self.rows[i - 1] >> (j - 1)) & 1

    def to_lists(self) -> List[List[object]]:
        out: List[List[object]] = []
        for i in range(1, self.n + 1):
            out.append([self.entry(i, j) if self.entry(i, j) is not None else "?"
                        for j in range(1, self.L + 1)])
        return out


@dataclass(frozen=True)
class RaggedArray:
    """Channel output with some truncated rows; original length L declared."""

    n: int
    L: int
    rows: Tuple[Tuple[int, int], ...]   # (bits, length) per row

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count mismatch")
        for bits, length in self.rows:
            if length < 0 or length > self.L:
                raise ValueError("row length out of range")
            if bits >> length:
                raise ValueError("bits beyond declared row length")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], L: int) -> "RaggedArray":
        rows = tuple((_row_to_int(r), len(r)) for r in entries)
        return cls(len(entries), L, rows)

    def row_length(self, i: int) -> int:
        return self.rows[i - 1][1]

    def row_bits(self, i: int) -> List[int]:
        bits, length = self.rows[i - 1]
        return _int_to_row(bits, length)

    def to_lists(self) -> List[List[int]]:
        return [self.row_bits(i) for i in range(1, self.n + 1)]


def apply_te_pattern(x: BitArray, p: Sequence[int]) -> ErasedArray:
    """Erase the last p_i positions of each row of x."""
    if len(p) != x.n:
        raise ValueError("pattern length does not match row count")
    rows = []
    for r, pi in zip(x.rows, p):
        if pi < 0 or pi > x.L:
            raise ValueError("per-row erasure count out of range")
        keep = x.L - pi
        rows.append(r & ((1 << keep) - 1))
    return ErasedArray(x.n, x.L, tuple(rows), tuple(int(v) for v in p))


def rho_te_row(x: int, y: int, L: int) -> int:
    """Per-row distance: L - (leftmost differing position) + 1, or 0 if equal."""
    diff = x ^ y
    if diff == 0:
        return 0
    first = (diff & -diff).bit_length()   # 1-indexed position of first difference
    return L - first + 1

def rho_te_distance(x: BitArray, y: BitArray) -> int:
    """Tail-erasure distance: sum of per-row values.

    Equals the minimum total number of tail erasures that make the two
    arrays indistinguishable; it is a metric.
    """
    if (x.n, x.L) != (y.n, y.L):
        raise ValueError("dimension mismatch")
    return sum(rho_te_row(a, b, x.L) for a, b in zip(x.rows, y.rows))


def te_weight(x: BitArray) -> int:
    zero = BitArray(x.n, x.L, tuple(0 for _ in range(x.n)))
    return rho_te_distance(x, zero)


def enumerate_patterns(e: int, L: int, n: int) -> Iterator[Tuple[int, ...]]:
    """Yield every pattern p with ||p||_1 <= e and ||p||_inf <= L exactly once.

    Order is lexicographic in (p_1, ..., p_n), which keeps exhaustive runs
    reproducible.
    """
    if e < 0 or L < 0 or n < 0:
        raise ValueError("parameters must be non-negative")
    cap = min(e, L)

    def rec(prefix: Tuple[int, ...], budget: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        for v in range(0, min(cap, budget) + 1):
            yield from rec(prefix + (v,), budget - v)

    yield from rec((), e)


def count_patterns(e: int, L: int, n: int) -> int:
    """|P(e, L, n)| by direct recursion with memoisation."""
    cap = min(e, L)
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def count(rows_left: int, budget: int) -> int:
        if rows_left == 0:
            return 1
        return sum(count(rows_left - 1, budget - v) for v in range(0, min(cap, budget) + 1))

    return count(n, e)


def lcs_length(x: Sequence[int], y: Sequence[int]) -> int:
    """Longest common subsequence length by dynamic programming."""
    m, n = len(x), len(y)
    prev = [0] * (n + 1)
    for i in range(1, m + 1):
        cur = [0] * (n + 1)
        xi = x[i - 1]
        for j in range(1, n + 1):
            if xi == y[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = cur[j - 1] if cur[j - 1] >= prev[j] else prev[j]
        prev = cur
    return prev[n]


def fll_distance(x: Sequence[int], y: Sequence[int]) -> int:
    """Fixed-length Levenshtein distance between equal-length words.

    The minimum s such that x turns into y via s deletions plus s
    insertions; equals length minus the LCS length.
    """
    if len(x) != len(y):
        raise ValueError("words must have equal length")
    return len(x) - lcs_length(x, y)


INF = float("inf")


def d_sdc_distance(x: BitArray, y: BitArray, s: int):
    """Row-deletion distance: infinity if some row pair has FLL distance
    beyond s, otherwise the number of differing rows."""
    if (x.n, x.L) != (y.n, y.L):
        raise ValueError("dimension mismatch")
    if s < 0:
        raise ValueError("s must be non-negative")
    differing = 0
    for a, b in zip(x.rows, y.rows):
        if a == b:
            continue
        if s == 0 or fll_distance(_int_to_row(a, x.L), _int_to_row(b, x.L)) > s:
            return INF
        differing += 1
    return differing


def d1_dc_distance(x: BitArray, y: BitArray):
    """Infinity if any row pair differs outside position 1, otherwise the
    number of rows differing in position 1."""
    if (x.n, x.L) != (y.n, y.L):
        raise ValueError("dimension mismatch")
    differing = 0
    for a, b in zip(x.rows, y.rows):
        diff = a ^ b
        if diff & ~1:
            return INF
        if diff & 1:
            differing += 1
    return differing


def run_count(bits: Sequence[int]) -> int:
    """Number of maximal constant blocks in a word (0 for the empty word)."""
    if not bits:
        return 0
    runs = 1
    for a, b in zip(bits, bits[1:]):
        if a != b:
            runs += 1
    return runs


def run_stats(x: BitArray) -> Tuple[List[int], int]:
    """Per-row run counts and their total."""
    per_row = [run_count(x.row_bits(i)) for i in range(1, x.n + 1)]
    return per_row, sum(per_row)


# --- shared text format -----------------------------------------------------
#
# One row per line over {0, 1, ?}; '#' starts a comment line.  A directive
# comment '# L=<int>' declares the original row length for ragged input.

def format_bit_array(x: BitArray) -> str:
    return "\n".join("".join(str(b) for b in x.row_bits(i)) for i in range(1, x.n + 1)) + "\n"


def format_erased(x: ErasedArray) -> str:
    lines = []
    for i in range(1, x.n + 1):
        known = x.known_length(i)
        bits = "".join(str((x.rows[i - 1] >> (j - 1)) & 1) for j in range(1, known + 1))
        lines.append(bits + "?" * x.erased[i - 1])
    return "\n".join(lines) + "\n"


def format_ragged(x: RaggedArray) -> str:
    lines = [f"# L={x.L}"]
    lines.extend("".join(str(b) for b in x.row_bits(i)) for i in range(1, x.n + 1))
    return "\n".join(lines) + "\n"


def _data_lines(text: str) -> Tuple[List[str], Optional[int]]:
    lines = []
    declared_L: Optional[int] = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("L="):
                declared_L = int(body[2:])
            continue
        if any(c not in "01?" for c in line):
            raise ValueError(f"bad character in array line: {line!r}")
        lines.append(line)
    return lines, declared_L


def parse_bit_array(text: str) -> BitArray:
    lines, _ = _data_lines(text)
    if any("?" in line for line in lines):
        raise ValueError("unexpected erasure marks in a plain bit array")
    return BitArray.from_lists([[int(c) for c in line] for line in lines])


def parse_erased(text: str) -> ErasedArray:
    lines, declared = _data_lines(text)
    L = declared if declared is not None else (len(lines[0]) if lines else 0)
    rows, erased = [], []
    for line in lines:
        if len(line) != L:
            raise ValueError("erased-array lines must all have the declared length")
        known = line.rstrip("?")
        if "?" in known:
            raise ValueError("'?' entries must form a row suffix")
        rows.append(_row_to_int([int(c) for c in known]))
        erased.append(L - len(known))
    return ErasedArray(len(lines), L, tuple(rows), tuple(erased))


def parse_ragged(text: str, L: Optional[int] = None) -> RaggedArray:
    lines, declared = _data_lines(text)
    if declared is not None:
        L = declared
    if L is None:
        L = max((len(line) for line in lines), default=0)
    if any("?" in line for line in lines):
        raise ValueError("ragged input must not contain '?'")
    return RaggedArray.from_lists([[int(c) for c in line] for line in lines], L)
