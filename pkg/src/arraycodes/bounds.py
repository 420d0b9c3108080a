"""Cardinality bounds and ball volumes for the three error models.

Everything that can be exact is exact: big integers for counts and
products, Fractions for ratio bounds.  The one exception is the combined
upper bound whose denominator contains sqrt/ln; it is evaluated in double
precision and labelled as asymptotic guidance.  Brute-force counterparts
(ball enumeration, maximum code search) live here too so each formula can
be cross-checked at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .arrays import (BitArray, d1_dc_distance, fll_distance,
                     rho_te_distance, run_stats)


@dataclass(frozen=True)
class BoundReport:
    name: str
    params: Tuple[Tuple[str, object], ...]
    value: object
    provenance: str                 # "formula" | "brute-force" | "construction"
    note: str = ""

    def record(self) -> str:
        parts = [f"name={self.name}"]
        parts.extend(f"{k}={v}" for k, v in self.params)
        parts.append(f"value={self.value}")
        parts.append(f"provenance={self.provenance}")
        if self.note:
            parts.append(f"note={self.note!r}")
        return " ".join(parts)


def _report(name: str, params: dict, value, provenance: str, note: str = "") -> BoundReport:
    return BoundReport(name, tuple(sorted(params.items())), value, provenance, note)


# --- tail-erasure ball volumes ----------------------------------------------

def _multinomial(n: int, parts: Sequence[int]) -> int:
    if sum(parts) > n:
        return 0
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    out //= math.factorial(n - sum(parts))
    return out


def _partitions_with_bounded_parts(k: int, max_part: int):
    """Yield multiplicity vectors (t_1, ..., t_max_part) with sum i*t_i = k."""
    def rec(remaining: int, part: int, acc: List[int]):
        if part == 0:
            if remaining == 0:
                yield tuple(acc)
            return
        for count in range(remaining // part, -1, -1):
            yield from rec(remaining - part * count, part - 1, acc + [count])

    for mults_rev in rec(k, max_part, []):
        # rec appends multiplicities from largest part down; reorder t_1..t_max
        yield tuple(reversed(mults_rev))


def v_te_general(r: int, n: int, L: int) -> int:
    """Ball volume under the tail-erasure metric, any radius.

    Sums over distributions of k total erasures into rows: t_i rows at
    per-row weight i contribute multinomial(n; t_0..t_k') * prod 2^((i-1) t_i),
    k' = min(k, L).
    """
    if r < 0 or n < 0 or L < 0:
        raise ValueError("arguments must be non-negative")
    total = 0
    for k in range(r + 1):
        if k == 0:
            total += 1
            continue
        kp = min(k, L)
        for mults in _partitions_with_bounded_parts(k, kp):
            if sum(mults) > n:
                continue
            coeff = _multinomial(n, mults)
            weight = 1
            for i, t_i in enumerate(mults, start=1):
                if t_i:
                    weight <<= (i - 1) * t_i
            total += coeff * weight
    return total


def v_te_small(r: int, n: int, L: int) -> int:
    """Simplified volume for r <= L:
    1 + sum_{k=1..r} sum_{i=1..k} C(n,i) C(k-1,i-1) 2^(k-i)."""
    if r > L:
        raise ValueError("this expression requires r <= L")
    if r < 0:
        raise ValueError("radius must be non-negative")
    total = 1
    for k in range(1, r + 1):
        for i in range(1, k + 1):
            total += math.comb(n, i) * math.comb(k - 1, i - 1) * (1 << (k - i))
    return total


def ball_count_brute(center: BitArray, r: int) -> int:
    """|{Y : rho_TE(center, Y) <= r}| by full enumeration (tiny arrays only)."""
    n, L = center.n, center.L
    count = 0
    for value in range(1 << (n * L)):
        rows = tuple((value >> (i * L)) & ((1 << L) - 1) for i in range(n))
        y = BitArray(n, L, rows)
        if rho_te_distance(center, y) <= r:
            count += 1
    return count


def te_sphere_packing(n: int, L: int, d: int) -> Dict[str, object]:
    """Packing bound M <= 2^(nL) / V(floor((d-1)/2)) plus the implied
    redundancy lower bound ceil(log2 V)."""
    r = (d - 1) // 2
    vol = v_te_general(r, n, L)
    m_max = (1 << (n * L)) // vol
    red_lb = (vol - 1).bit_length()   # ceil(log2 vol) for vol >= 1
    if vol == 1:
        red_lb = 0
    return {"radius": r, "volume": vol, "m_max": m_max,
            "redundancy_lower_bound": red_lb,
            "report": _report("te-sphere-packing", {"n": n, "L": L, "d": d},
                              m_max, "formula",
                              note=f"redundancy >= {red_lb}")}


def claim8_bound(n: int, d: int, a_nd: int, a_nd_provenance: str = "supplied") -> BoundReport:
    """Column-split bound: at most A(n,d) * 2^(n(d-2)) arrays."""
    if d < 2:
        raise ValueError("needs d >= 2")
    value = a_nd * (1 << (n * (d - 2)))
    return _report("te-column-split", {"n": n, "d": d, "A(n,d)": a_nd},
                   value, "formula", note=f"A(n,d) {a_nd_provenance}")


def singleton_te(n: int, L: int, M: int) -> int:
    """d <= nL - ceil(log2 M) + 1."""
    if M < 1:
        raise ValueError("M must be positive")
    return n * L - (M - 1).bit_length() + 1


# --- deletion-side bounds -----------------------------------------------------

def fll_ball(bits: Sequence[int], s: int) -> Set[Tuple[int, ...]]:
    """All equal-length words within FLL distance s of the given word."""
    L = len(bits)
    out = set()
    for value in range(1 << L):
        y = tuple((value >> j) & 1 for j in range(L))
        if fll_distance(list(bits), list(y)) <= s:
            out.add(y)
    return out


def dc_sphere_exact(x: BitArray, s: int, t: int) -> int:
    """|{Y : d_sDC(x, Y) = t}| from per-row FLL ball sizes."""
    sizes = [len(fll_ball(x.row_bits(i), s)) - 1 for i in range(1, x.n + 1)]
    total = 0
    for rows in combinations(range(x.n), t):
        prod = 1
        for i in rows:
            prod *= sizes[i]
        total += prod
    return total


def v1_dc_ball_size(x: BitArray, r: int) -> int:
    """|{Y : d1_DC(x, Y) <= r}| by enumerating first-column flips (any array
    at finite d1 distance differs from x only there) and measuring the
    distance, not assuming it."""
    count = 0
    for flips in range(1 << x.n):
        rows = tuple(row ^ ((flips >> i) & 1) for i, row in enumerate(x.rows))
        y = BitArray(x.n, x.L, rows)
        if d1_dc_distance(x, y) <= r:
            count += 1
    return count


def dc_bound_part1(n: int, L: int, t: int, s: int, m_s_L: int,
                   m_provenance: str = "supplied") -> BoundReport:
    """Largest (t,s) code is at most (M_s(L))^t * 2^(L(n-t))."""
    if not (0 <= t <= n):
        raise ValueError("need 0 <= t <= n")
    value = (m_s_L ** t) * (1 << (L * (n - t)))
    return _report("dc-first-rows", {"n": n, "L": L, "t": t, "s": s, "M_s(L)": m_s_L},
                   value, "formula", note=f"M_s(L) {m_provenance}")


def dc_bound_part2(n: int, L: int, t: int, s: int) -> Dict[str, object]:
    """Packing bound for t, s >= 2, exact rational."""
    if t < 2 or s < 2:
        raise ValueError("this bound needs t >= 2 and s >= 2")
    th, sh = t // 2, s // 2
    denom = (Fraction(n, th) * Fraction(L, sh) ** sh) ** th
    value = Fraction(1 << (n * L)) / denom
    red_lb = float(th * (math.log2(n) + sh * math.log2(L)))
    return {"value": value,
            "redundancy_lower_bound": red_lb,
            "report": _report("dc-packing", {"n": n, "L": L, "t": t, "s": s},
                              value, "formula",
                              note=f"redundancy >= ~{red_lb:.3f} asymptotically")}


def dc_bound_part3(n: int, L: int, t: int) -> Dict[str, object]:
    """Packing bound for s = 1, t >= 2: (2^(nL)+1) / (n/floor(t/2))^floor(t/2)."""
    if t < 2:
        raise ValueError("this bound needs t >= 2")
    th = t // 2
    value = Fraction((1 << (n * L)) + 1) / (Fraction(n, th) ** th)
    red_lb = float(th * math.log2(n))
    return {"value": value,
            "redundancy_lower_bound": red_lb,
            "report": _report("dc-packing-s1", {"n": n, "L": L, "t": t, "s": 1},
                              value, "formula",
                              note=f"redundancy >= ~{red_lb:.3f} asymptotically")}


def dc_bound_part2_part3(n: int, L: int, t: int, s: int) -> Dict[str, object]:
    if s == 1:
        return dc_bound_part3(n, L, t)
    return dc_bound_part2(n, L, t, s)


# --- maximum-code searches ----------------------------------------------------

def _max_independent_set(adjacency: List[int], cap: Optional[int] = None) -> int:
    """Branch-and-bound maximum independent set; adjacency[v] is a bitset.

    The pruning bound is a greedy clique cover of the candidate set (each
    cover clique contributes at most one vertex), which is what makes the
    confusability graphs tractable.  The optional cap allows early exit
    once a known upper bound is met.
    """
    nverts = len(adjacency)
    full = (1 << nverts) - 1
    best = 0

    def greedy(candidates: int) -> int:
        size = 0
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            size += 1
            candidates &= ~(adjacency[v] | (1 << v))
        return size

    def clique_cover_bound(candidates: int) -> int:
        count = 0
        rem = candidates
        while rem:
            count += 1
            low = rem & -rem
            v = low.bit_length() - 1
            rem &= ~low
            joint = adjacency[v]
            grow = rem & joint
            while grow:
                ulow = grow & -grow
                u = ulow.bit_length() - 1
                rem &= ~ulow
                joint &= adjacency[u]
                grow = rem & joint
        return count

    best = greedy(full)
    if cap is not None and best >= cap:
        return best

    def expand(candidates: int, size: int):
        # recursion only on the include branch (depth <= solution size);
        # exclusion iterates in place
        nonlocal best
        while candidates:
            if size + clique_cover_bound(candidates) <= best:
                return
            if cap is not None and best >= cap:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            expand(candidates & ~(adjacency[v] | low), size + 1)
            candidates &= ~low
        if size > best:
            best = size

    expand(full, 0)
    return best


@lru_cache(maxsize=None)
def m_s_brute(L: int, s: int) -> int:
    """Exact largest s-deletion-correcting code of length L (confusability
    graph independence number).  Guarded at L <= 10; exponential, with s = 1
    comfortable up to L = 7 and slow beyond."""
    if L > 10:
        raise ValueError("combinatorial guard: L <= 10")
    if s >= L:
        return 1
    if s == 0:
        return 1 << L
    words = [[(v >> j) & 1 for j in range(L)] for v in range(1 << L)]
    adjacency = [0] * (1 << L)
    for a in range(1 << L):
        for b in range(a + 1, 1 << L):
            if fll_distance(words[a], words[b]) <= s:
                adjacency[a] |= 1 << b
                adjacency[b] |= 1 << a
    return _max_independent_set(adjacency)


def _hamming_dist(a: int, b: int) -> int:
    return bin(a ^ b).count("1")


def _greedy_lexicode(n: int, d: int) -> int:
    chosen: List[int] = []
    for v in range(1 << n):
        if all(_hamming_dist(v, c) >= d for c in chosen):
            chosen.append(v)
    return len(chosen)


def a_n_d_upper(n: int, d: int) -> int:
    """Cheapest valid upper bounds on A(n,d): Singleton, sphere packing,
    and Plotkin where it applies."""
    best = 1 << (n - d + 1)
    radius = (d - 1) // 2
    vol = sum(math.comb(n, i) for i in range(radius + 1))
    best = min(best, (1 << n) // vol)
    if d % 2 == 0 and 2 * d > n:
        best = min(best, 2 * (d // (2 * d - n)))
    if d % 2 == 1 and 2 * d + 1 > n:
        best = min(best, 2 * ((d + 1) // (2 * d + 1 - n)))
    return best


def a_n_d_brute(n: int, d: int) -> int:
    """Exact A(n,d) for small n: greedy lexicode meets a bound where it can,
    branch-and-bound otherwise."""
    if d == 1:
        return 1 << n
    upper = a_n_d_upper(n, d)
    greedy = _greedy_lexicode(n, d)
    if greedy == upper:
        return greedy
    if n > 12:
        raise ValueError("combinatorial guard: n <= 12 unless greedy meets a bound")
    adjacency = [0] * (1 << n)
    for a in range(1 << n):
        for b in range(a + 1, 1 << n):
            if _hamming_dist(a, b) < d:
                adjacency[a] |= 1 << b
                adjacency[b] |= 1 << a
    return _max_independent_set(adjacency, cap=upper)


# --- combined-model bound ------------------------------------------------------

def delete_append_ball(x: BitArray, i: int) -> Set[BitArray]:
    """Arrays reachable by deleting one bit of row i then appending a bit."""
    out: Set[BitArray] = set()
    row = x.row_bits(i)
    seen_deleted = set()
    for pos in range(x.L):
        shortened = tuple(row[:pos] + row[pos + 1:])
        if shortened in seen_deleted:
            continue
        seen_deleted.add(shortened)
        for b in (0, 1):
            new_row = list(shortened) + [b]
            rows = list(x.rows)
            rows[i - 1] = sum(v << j for j, v in enumerate(new_row))
            out.add(BitArray(x.n, x.L, tuple(rows)))
    return out


def ted_ball(x: BitArray) -> Dict[str, object]:
    """The per-row delete-append balls, their union, and the run-count
    identities |ball_i| = 2 r(x_i), |union| <= 2 R(X)."""
    per_row = {i: delete_append_ball(x, i) for i in range(1, x.n + 1)}
    union: Set[BitArray] = set()
    for ball in per_row.values():
        union |= ball
    runs, total_runs = run_stats(x)
    sizes_ok = all(len(per_row[i]) == 2 * runs[i - 1] for i in range(1, x.n + 1))
    return {"per_row": per_row, "union": union, "run_counts": runs,
            "total_runs": total_runs, "sizes_match_2r": sizes_ok,
            "union_le_2R": len(union) <= 2 * total_runs}


def ted_upper_bound(n: int, L: int) -> Dict[str, object]:
    """Finite evaluation 2^(nL) / (nL - 2 sqrt(nL ln nL)) next to the
    asymptotic 2^(nL)/(nL); both are guidance, not exact bounds."""
    N = n * L
    denom = N - 2.0 * math.sqrt(N * math.log(N))
    if denom <= 0:
        raise ValueError(
            f"finite expression nonpositive for nL = {N}; defined for nL >= 9")
    finite = Fraction(1 << N) / Fraction(denom)
    asymptotic = Fraction(1 << N, N)
    return {"finite": finite, "asymptotic": asymptotic,
            "redundancy_guidance": math.log2(n) + math.log2(L),
            "report": _report("ted-upper", {"n": n, "L": L},
                              float(finite), "formula",
                              note="asymptotic guidance only")}
