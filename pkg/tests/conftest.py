import random
from itertools import combinations

from arraycodes.arrays import BitArray, enumerate_patterns


def random_array(rng: random.Random, n: int, L: int) -> BitArray:
    return BitArray(n, L, tuple(rng.randrange(1 << L) for _ in range(n)))


def all_arrays(n: int, L: int):
    for value in range(1 << (n * L)):
        yield BitArray(n, L, tuple((value >> (i * L)) & ((1 << L) - 1)
                                   for i in range(n)))


def min_pattern_erasures(x: BitArray, y: BitArray, patterns_by_weight) -> int:
    """Independent oracle for the distance: the lightest pattern whose
    erasure makes the two arrays identical (direct masked comparison)."""
    for weight, patterns in patterns_by_weight:
        for masks in patterns:
            if all((a & m) == (b & m) for a, b, m in zip(x.rows, y.rows, masks)):
                return weight
    raise AssertionError("full erasure always equalizes")


def patterns_grouped_by_weight(e: int, L: int, n: int):
    """Patterns as per-row keep-masks, grouped and sorted by total weight."""
    groups = {}
    for p in enumerate_patterns(e, L, n):
        masks = tuple((1 << (L - pi)) - 1 for pi in p)
        groups.setdefault(sum(p), []).append(masks)
    return sorted(groups.items())


def fll_oracle(x, y) -> int:
    """Minimum s with some s deletions on each side giving equal words."""
    L = len(x)
    for s in range(L + 1):
        xs = {tuple(v for i, v in enumerate(x) if i not in dead)
              for dead in combinations(range(L), s)}
        for dead in combinations(range(L), s):
            if tuple(v for i, v in enumerate(y) if i not in dead) in xs:
                return s
    return L


def code_corrects_all_te(codewords, e: int, L: int, n: int) -> bool:
    """Direct correctability check: no two codewords collide after any
    pattern of at most e tail erasures."""
    for p in enumerate_patterns(e, L, n):
        masks = [(1 << (L - pi)) - 1 for pi in p]
        seen = {}
        for cw in codewords:
            key = tuple(r & m for r, m in zip(cw.rows, masks))
            if key in seen and seen[key] != cw:
                return False
            seen[key] = cw
    return True
