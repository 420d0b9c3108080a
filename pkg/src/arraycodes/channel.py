"""Channel simulators and round-trip harnesses.

A concrete channel instance is data, not randomness: a TE instance is a
pattern tuple, a deletion instance maps rows to deletion positions, and a
combined instance applies the tail erasures first (order does not matter
per row; the reachable outputs coincide) followed by the deletions on the
truncated rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from .arrays import (BitArray, RaggedArray, apply_te_pattern,
                     enumerate_patterns)

TeInstance = Tuple[int, ...]                 # erasure counts per row
DelInstance = Tuple[Tuple[int, Tuple[int, ...]], ...]   # (row, positions), 1-indexed
TedInstance = Tuple[TeInstance, DelInstance]


@dataclass(frozen=True)
class ChannelSpec:
    kind: str                       # "te" | "del" | "ted"
    e: int = 0
    t: int = 0
    s: int = 0

    def __post_init__(self):
        if self.kind not in ("te", "del", "ted"):
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if self.kind == "te" and self.e < 0:
            raise ValueError("e must be non-negative")
        if self.kind in ("del", "ted") and (self.t < 0 or self.s < 0):
            raise ValueError("t and s must be non-negative")


def apply_deletions(x: BitArray, instance: DelInstance) -> RaggedArray:
    rows = [x.row_bits(i) for i in range(1, x.n + 1)]
    for row, positions in instance:
        if not 1 <= row <= x.n:
            raise ValueError(f"row {row} out of range")
        bits = rows[row - 1]
        for pos in sorted(positions, reverse=True):
            if not 1 <= pos <= len(bits):
                raise ValueError(f"deletion position {pos} out of range")
            del bits[pos - 1]
        rows[row - 1] = bits
    return RaggedArray.from_lists(rows, x.L)


def apply_ted(x: BitArray, instance: TedInstance) -> RaggedArray:
    pattern, deletions = instance
    erased = apply_te_pattern(x, pattern)
    rows = []
    for i in range(1, x.n + 1):
        known = erased.known_length(i)
        rows.append([(erased.rows[i - 1] >> (j - 1)) & 1 for j in range(1, known + 1)])
    for row, positions in deletions:
        bits = rows[row - 1]
        for pos in sorted(positions, reverse=True):
            if not 1 <= pos <= len(bits):
                raise ValueError(f"deletion position {pos} beyond truncated row")
            del bits[pos - 1]
        rows[row - 1] = bits
    return RaggedArray.from_lists(rows, x.L)


def apply_channel(x: BitArray, spec: ChannelSpec, instance):
    """Apply a concrete instance; returns ErasedArray for TE, else RaggedArray."""
    if spec.kind == "te":
        if sum(instance) > spec.e:
            raise ValueError("instance exceeds the e budget")
        return apply_te_pattern(x, instance)
    if spec.kind == "del":
        _check_del_instance(instance, spec.t, spec.s)
        return apply_deletions(x, instance)
    pattern, deletions = instance
    if sum(pattern) > spec.e:
        raise ValueError("instance exceeds the e budget")
    _check_del_instance(deletions, spec.t, spec.s)
    return apply_ted(x, instance)


def _check_del_instance(instance: DelInstance, t: int, s: int) -> None:
    if len(instance) > t:
        raise ValueError("too many deletion rows")
    seen = set()
    for row, positions in instance:
        if row in seen:
            raise ValueError("duplicate row in deletion instance")
        seen.add(row)
        if not 1 <= len(positions) <= s:
            raise ValueError("per-row deletion count out of range")


def enumerate_deletion_instances(row_lengths: Sequence[int], t: int, s: int,
                                 include_empty: bool = False) -> Iterator[DelInstance]:
    """Every way to pick up to t rows and 1..s deletion positions in each.

    Row positions refer to the current row lengths (after any earlier
    truncation).  The empty instance is excluded unless requested, matching
    the instance counts used by the exhaustive harnesses.
    """
    n = len(row_lengths)
    if include_empty:
        yield ()

    def row_choices(row: int) -> List[Tuple[int, Tuple[int, ...]]]:
        length = row_lengths[row - 1]
        out = []
        for count in range(1, min(s, length) + 1):
            for positions in combinations(range(1, length + 1), count):
                out.append((row, positions))
        return out

    for nrows in range(1, t + 1):
        for rows in combinations(range(1, n + 1), nrows):
            choice_lists = [row_choices(r) for r in rows]
            if any(not c for c in choice_lists):
                continue
            idx = [0] * nrows
            while True:
                yield tuple(choice_lists[k][idx[k]] for k in range(nrows))
                k = nrows - 1
                while k >= 0:
                    idx[k] += 1
                    if idx[k] < len(choice_lists[k]):
                        break
                    idx[k] = 0
                    k -= 1
                if k < 0:
                    break


def enumerate_channel_instances(spec: ChannelSpec, n: int, L: int,
                                max_work: Optional[int] = 2_000_000) -> Iterator:
    """Deterministic stream of all distinct instances of a channel.

    TE instances delegate to the pattern enumerator (zero pattern included);
    deletion instances exclude the empty one; combined instances pair every
    pattern with every deletion layout on the truncated rows (the empty
    deletion layout included, so pure-TE damage is covered).
    """
    count = 0
    if spec.kind == "te":
        for p in enumerate_patterns(spec.e, L, n):
            count += 1
            if max_work is not None and count > max_work:
                raise RuntimeError("instance enumeration exceeds the work cap")
            yield p
        return
    if spec.kind == "del":
        for inst in enumerate_deletion_instances([L] * n, spec.t, spec.s):
            count += 1
            if max_work is not None and count > max_work:
                raise RuntimeError("instance enumeration exceeds the work cap")
            yield inst
        return
    for p in enumerate_patterns(spec.e, L, n):
        lengths = [L - pi for pi in p]
        for inst in enumerate_deletion_instances(lengths, spec.t, spec.s,
                                                 include_empty=True):
            count += 1
            if max_work is not None and count > max_work:
                raise RuntimeError("instance enumeration exceeds the work cap")
            yield (p, inst)


def random_instance(spec: ChannelSpec, n: int, L: int, rng: random.Random):
    """Uniform rows without replacement, then uniform positions."""
    if spec.kind == "te":
        budget = spec.e
        p = [0] * n
        rows = list(range(n))
        rng.shuffle(rows)
        for row in rows:
            if budget == 0:
                break
            take = rng.randint(0, min(budget, L))
            p[row] = take
            budget -= take
        return tuple(p)
    if spec.kind == "del":
        nrows = rng.randint(0, spec.t)
        chosen = rng.sample(range(1, n + 1), nrows)
        inst = []
        for row in sorted(chosen):
            count = rng.randint(1, spec.s)
            inst.append((row, tuple(sorted(rng.sample(range(1, L + 1), count)))))
        return tuple(inst)
    pattern = random_instance(ChannelSpec("te", e=spec.e), n, L, rng)
    lengths = [L - pi for pi in pattern]
    nrows = rng.randint(0, spec.t)
    candidates = [r for r in range(1, n + 1) if lengths[r - 1] >= spec.s]
    chosen = rng.sample(candidates, min(nrows, len(candidates)))
    inst = []
    for row in sorted(chosen):
        count = rng.randint(1, spec.s)
        inst.append((row, tuple(sorted(rng.sample(range(1, lengths[row - 1] + 1), count)))))
    return (pattern, tuple(inst))


@dataclass
class RunRecord:
    codec: dict
    spec: ChannelSpec
    mode: str
    seed: Optional[int]
    trials: int = 0
    failures: int = 0
    first_counterexample: Optional[dict] = None

    def note_failure(self, message, instance, received, detail: str) -> None:
        self.failures += 1
        if self.first_counterexample is None:
            self.first_counterexample = {
                "message": list(message),
                "instance": repr(instance),
                "received": received.to_lists(),
                "detail": detail,
            }

    def summary(self) -> str:
        status = "ok" if self.failures == 0 else "FAILED"
        return (f"roundtrip {status}: codec={self.codec} channel={self.spec} "
                f"mode={self.mode} seed={self.seed} trials={self.trials} "
                f"failures={self.failures}")


def roundtrip_harness(codec, spec: ChannelSpec, *, messages: int = 20,
                      exhaustive: bool = True, seed: int = 0,
                      instances: Optional[int] = None) -> RunRecord:
    """Encode random messages, push them through every (or `instances`
    sampled) channel instance, decode, compare.

    Failures are recorded, not raised; the first counterexample keeps the
    full (message, instance, received) triple for replay.
    """
    rng = random.Random(seed)
    n, L = codec.n, codec.L
    record = RunRecord(codec.descriptor(), spec,
                       "exhaustive" if exhaustive else "random", seed)
    msgs = [[rng.randrange(2) for _ in range(codec.message_bits)]
            for _ in range(messages)]
    arrays = [(m, codec.encode(m)) for m in msgs]
    if exhaustive:
        stream = list(enumerate_channel_instances(spec, n, L))
    else:
        stream = [random_instance(spec, n, L, rng) for _ in range(instances or 100)]
    for message, x in arrays:
        for inst in stream:
            received = apply_channel(x, spec, inst)
            record.trials += 1
            try:
                decoded = codec.decode(received)
            except Exception as exc:
                record.note_failure(message, inst, received, f"decoder raised {exc!r}")
                continue
            if decoded != x:
                record.note_failure(message, inst, received, "wrong codeword")
    return record
