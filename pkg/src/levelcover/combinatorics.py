"""Exact combinatorics over subsets of {1, ..., n}.

The currency of the whole package: a subset is a strictly increasing
tuple of 1-based element ids, and an r-uniform set system is a `Family`
kept duplicate-free in colexicographic order, so ranking, equality and
serialized output are reproducible byte for byte.  All arithmetic is
exact (Python integers and rationals), never floating point.

Colex order compares the largest differing elements, which makes the
rank of a subset computable in O(r) from binomials and keeps families
of the same rank totally ordered independently of the ambient n.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

Subset = tuple[int, ...]


def binomial(n: int, r: int) -> int:
    """Exact binomial coefficient C(n, r); zero when r > n."""
    if n < 0 or r < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(n, r)


def colex_key(s: Subset) -> Subset:
    """Sort key realizing colex order on same-size increasing tuples."""
    return s[::-1]


def validate_subset(s: Subset, n: int | None = None) -> None:
    """Raise ValueError unless s is strictly increasing within [1, n]."""
    for a, b in zip(s, s[1:]):
        if a >= b:
            raise ValueError(f"elements not strictly increasing: {s!r}")
    if s and s[0] < 1:
        raise ValueError(f"elements must be at least 1: {s!r}")
    if n is not None and s and s[-1] > n:
        raise ValueError(f"element {s[-1]} outside [1, {n}]")


@dataclass(frozen=True)
class Family:
    """A duplicate-free r-uniform set system, members in colex order.

    Equality is plain member-list equality, which is canonical because
    `build` sorts and deduplicates.
    """

    rank: int
    members: tuple[Subset, ...]

    @classmethod
    def build(
        cls,
        rank: int,
        members: Iterable[Iterable[int]],
        n: int | None = None,
    ) -> "Family":
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        seen: set[Subset] = set()
        for m in members:
            t = tuple(m)
            if len(t) != rank:
                raise ValueError(f"member {t!r} does not have rank {rank}")
            validate_subset(t, n)
            seen.add(t)
        return cls(rank, tuple(sorted(seen, key=colex_key)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __contains__(self, s: object) -> bool:
        return s in self.members

    def member_set(self) -> frozenset[Subset]:
        return frozenset(self.members)


def enumerate_ksubsets(n: int, r: int) -> Iterator[Subset]:
    """Yield all r-subsets of [1, n] in colex order.

    The stream is deterministic and each call returns an independent,
    restartable generator.
    """
    if n < 0 or r < 0 or r > n:
        raise ValueError(f"need 0 <= r <= n, got n={n} r={r}")
    if r == 0:
        yield ()
        return
    cur = list(range(1, r + 1))
    while True:
        yield tuple(cur)
        i = 0
        while i < r - 1 and cur[i] + 1 == cur[i + 1]:
            i += 1
        if cur[i] == n:
            return
        cur[i] += 1
        for j in range(i):
            cur[j] = j + 1


def rank_colex(s: Subset) -> int:
    """Colex rank of a subset among all subsets of its size; {1..r} has rank 0."""
    validate_subset(s)
    return sum(math.comb(e - 1, i + 1) for i, e in enumerate(s))


def unrank_colex(size: int, rank: int) -> Subset:
    """Inverse of rank_colex for the given subset size."""
    if size < 0 or rank < 0:
        raise ValueError("size and rank must be nonnegative")
    out = []
    rem = rank
    for i in range(size, 0, -1):
        c = i - 1
        while math.comb(c + 1, i) <= rem:
            c += 1
        out.append(c + 1)
        rem -= math.comb(c, i)
    return tuple(reversed(out))


def near_equal_partition(n: int, p: int) -> tuple[Subset, ...]:
    """Split [1, n] into p consecutive runs whose sizes differ by at most 1.

    The first n mod p parts get the larger size, so the output is a
    fixed function of (n, p).
    """
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got n={n} p={p}")
    base, extra = divmod(n, p)
    parts = []
    start = 1
    for i in range(p):
        size = base + (1 if i < extra else 0)
        parts.append(tuple(range(start, start + size)))
        start += size
    return tuple(parts)


def turan_graph(n: int, s: int) -> Family:
    """Edge family of the complete s-partite graph on near-equal parts."""
    parts = near_equal_partition(n, s)
    part_of = {}
    for i, part in enumerate(parts):
        for e in part:
            part_of[e] = i
    edges = [
        (a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if part_of[a] != part_of[b]
    ]
    return Family.build(2, edges, n)


def turan_count(n: int, s: int) -> int:
    """Edge count of turan_graph(n, s), via the part-size formula."""
    parts = near_equal_partition(n, s)
    return math.comb(n, 2) - sum(math.comb(len(p), 2) for p in parts)


def shadow2(f: Family) -> Family:
    """All pairs contained in at least one member of f (f.rank >= 2)."""
    if f.rank < 2:
        raise ValueError(f"shadow2 needs rank >= 2, got {f.rank}")
    pairs: set[Subset] = set()
    for m in f:
        for i in range(len(m)):
            for j in range(i + 1, len(m)):
                pairs.add((m[i], m[j]))
    return Family(2, tuple(sorted(pairs, key=colex_key)))


def complement_pairs(e: Family, n: int) -> Family:
    """The pairs of [1, n] not present in e."""
    if e.rank != 2:
        raise ValueError(f"complement_pairs needs rank 2, got {e.rank}")
    present = e.member_set()
    for m in e:
        validate_subset(m, n)
    rest = [p for p in enumerate_ksubsets(n, 2) if p not in present]
    return Family(2, tuple(rest))


# ---------------------------------------------------------------------------
# Serialization.  Text format: first line "n <n> r <r>", then one member per
# line with space-separated ascending ids, lines in colex order.  The JSON
# equivalent is {"n": ..., "r": ..., "members": [[...], ...]}.

def family_to_text(f: Family, n: int) -> str:
    lines = [f"n {n} r {f.rank}"]
    lines.extend(" ".join(str(e) for e in m) for m in f)
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> tuple[Family, int]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty family text")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "n" or head[2] != "r":
        raise ValueError(f"bad family header: {lines[0]!r}")
    n, r = int(head[1]), int(head[3])
    members = [tuple(int(tok) for tok in ln.split()) for ln in lines[1:]]
    return Family.build(r, members, n), n


def family_to_json(f: Family, n: int) -> dict:
    return {"n": n, "r": f.rank, "members": [list(m) for m in f]}


def family_from_json(obj: dict) -> tuple[Family, int]:
    n = int(obj["n"])
    r = int(obj["r"])
    return Family.build(r, [tuple(m) for m in obj["members"]], n), n


def family_dumps(f: Family, n: int) -> str:
    return json.dumps(family_to_json(f, n))


def family_loads(text: str) -> tuple[Family, int]:
    return family_from_json(json.loads(text))
