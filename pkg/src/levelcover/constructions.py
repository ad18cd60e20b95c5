"""Explicit dominating-pair constructions and the greedy cover engine.

Three families of constructions live here:

* ``gk1_construct``: the exact optimum for G_{k,1}; n - k singletons plus
  the one k-set on the remaining elements.
* ``gk2_construct``: for G_{k,2}, all pairs inside the k-1 near-equal
  parts (so every k-set traps a pair by pigeonhole) plus a greedy cover
  of the cross pairs by blocks shaped "complete graph on k vertices
  minus its one inner edge".
* ``g53_construct`` / ``g43_construct``: the two- and three-part
  constructions for levels (5,3) and (4,3), with block classes defined
  by intersection types and, for (4,3), an even-label-sum filter on one
  class.

The cover step is a deterministic maximum-coverage greedy: pick the
block covering the most uncovered points, ties broken by the smallest
block id, ids assigned by colex rank of the generating set.  The
achieved ratio (chosen * m / N) is reported so callers can compare the
result against the ideal N / m.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .combinatorics import (
    Family,
    Subset,
    binomial,
    colex_key,
    near_equal_partition,
)
from .domination import DominatingPair


@dataclass(frozen=True)
class Block:
    block_id: int
    generator: Subset          # the k-set the block came from
    points: tuple[int, ...]    # indices into the universe family


@dataclass(frozen=True)
class CoverInstance:
    """A point universe plus candidate blocks, input to greedy_cover.

    ``m`` is the design block size; every block built from a generator
    family covers exactly m universe points.
    """

    universe: Family
    blocks: tuple[Block, ...]
    m: int

    def __post_init__(self) -> None:
        npts = len(self.universe)
        for b in self.blocks:
            for p in b.points:
                if not 0 <= p < npts:
                    raise ValueError(f"block {b.block_id} has bad point index {p}")


@dataclass(frozen=True)
class GreedyCover:
    chosen: tuple[int, ...]    # block ids in pick order
    n_points: int
    m: int
    ratio: Fraction            # len(chosen) * m / n_points


@dataclass
class DegreeProfile:
    """Point degree and two-degrees (by case) of a gk2 block family.

    Case values are None when the case cannot occur at the given k
    (fewer parts than the case needs).
    """

    point: int
    pair_cases: dict[str, int | None]


PAIR_CASES = (
    "overlap-2parts",
    "overlap-3parts",
    "disjoint-3parts",
    "disjoint-4parts",
)


def gk1_construct(n: int, k: int) -> DominatingPair:
    """Optimal pair for G_{k,1}: singletons of [1, n-k] plus the top k-set."""
    if not 2 <= k < n:
        raise ValueError(f"need 2 <= k < n, got k={k} n={n}")
    lsets = Family.build(1, [(i,) for i in range(1, n - k + 1)], n)
    ksets = Family.build(k, [tuple(range(n - k + 1, n + 1))], n)
    return DominatingPair(n, k, 1, lsets, ksets)


def partition_edges(n: int, k: int) -> Family:
    """All pairs inside the k-1 near-equal parts of [1, n]."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n < k - 1:
        raise ValueError(f"need n >= k - 1, got n={n} k={k}")
    edges = []
    for part in near_equal_partition(n, k - 1):
        edges.extend(combinations(part, 2))
    return Family.build(2, edges, n)


def _doubled_part_ksets(parts: tuple[Subset, ...]) -> list[Subset]:
    """k-sets meeting every part, exactly one part in two elements."""
    ksets = []
    for di, dpart in enumerate(parts):
        others = [p for i, p in enumerate(parts) if i != di]
        for pair in combinations(dpart, 2):
            for transversal in product(*others):
                ksets.append(tuple(sorted(pair + transversal)))
    ksets.sort(key=colex_key)
    return ksets


def block_family_any(n: int, k: int) -> CoverInstance:
    """gk2 cover instance over the near-equal partition, any n >= k - 1."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    parts = near_equal_partition(n, k - 1)
    if min(len(p) for p in parts) < 2:
        raise ValueError(f"parts too small for a doubled part: n={n} k={k}")
    part_of = {}
    for i, part in enumerate(parts):
        for e in part:
            part_of[e] = i
    cross = [
        (a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if part_of[a] != part_of[b]
    ]
    universe = Family.build(2, cross, n)
    index = {p: i for i, p in enumerate(universe)}
    m = binomial(k, 2) - 1
    blocks = []
    for bid, A in enumerate(_doubled_part_ksets(parts)):
        pts = sorted(
            index[p] for p in combinations(A, 2) if part_of[p[0]] != part_of[p[1]]
        )
        blocks.append(Block(bid, A, tuple(pts)))
    return CoverInstance(universe, tuple(blocks), m)


def block_family(n: int, k: int) -> CoverInstance:
    """Strict gk2 cover instance; requires (k - 1) | n."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n % (k - 1) != 0:
        raise ValueError(f"(k - 1) must divide n, got n={n} k={k}")
    return block_family_any(n, k)


def greedy_cover(inst: CoverInstance) -> GreedyCover:
    """Deterministic maximum-coverage greedy over a CoverInstance.

    Every universe point must lie in at least one block, otherwise the
    uncoverable point is reported in the error.  Uses lazy re-evaluation:
    a popped block whose gain went stale is re-queued at its true gain,
    which is sound because gains only ever shrink.
    """
    npts = len(inst.universe)
    seen = [False] * npts
    for b in inst.blocks:
        for p in b.points:
            seen[p] = True
    for p, ok in enumerate(seen):
        if not ok:
            raise ValueError(
                f"universe point {inst.universe.members[p]} lies in no block"
            )

    covered = [False] * npts
    remaining = npts
    heap = [(-len(b.points), b.block_id) for b in inst.blocks]
    heapq.heapify(heap)
    by_id = {b.block_id: b for b in inst.blocks}
    chosen: list[int] = []
    while remaining:
        neg_gain, bid = heapq.heappop(heap)
        block = by_id[bid]
        gain = sum(1 for p in block.points if not covered[p])
        if gain != -neg_gain:
            if gain > 0:
                heapq.heappush(heap, (-gain, bid))
            continue
        chosen.append(bid)
        for p in block.points:
            if not covered[p]:
                covered[p] = True
                remaining -= 1
    ratio = Fraction(len(chosen) * inst.m, npts) if npts else Fraction(0)
    return GreedyCover(tuple(chosen), npts, inst.m, ratio)


def _pair_with_cover(
    n: int, k: int, l: int, lsets: Family, inst: CoverInstance
) -> tuple[DominatingPair, GreedyCover]:
    cover = greedy_cover(inst)
    gens = [inst.blocks[bid].generator for bid in cover.chosen]
    ksets = Family.build(k, gens, n)
    return DominatingPair(n, k, l, lsets, ksets), cover


def gk2_with_cover(n: int, k: int) -> tuple[DominatingPair, GreedyCover]:
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n < 2 * (k - 1):
        # every part must be able to host the doubled pair
        raise ValueError(f"need n >= 2(k - 1), got n={n} k={k}")
    return _pair_with_cover(n, k, 2, partition_edges(n, k), block_family_any(n, k))


def gk2_construct(n: int, k: int) -> DominatingPair:
    """Partition pairs plus a greedy cover of the cross pairs, for G_{k,2}."""
    return gk2_with_cover(n, k)[0]


def g53_with_cover(n: int) -> tuple[DominatingPair, GreedyCover]:
    if n % 2 != 0:
        raise ValueError(f"n must be even, got {n}")
    if n < 10:
        raise ValueError(f"need n >= 10, got {n}")
    half = n // 2
    parts = near_equal_partition(n, 2)
    inner = []
    for part in parts:
        inner.extend(combinations(part, 3))
    lsets = Family.build(3, inner, n)
    inner_set = lsets.member_set()
    cross = [t for t in combinations(range(1, n + 1), 3) if t not in inner_set]
    universe = Family.build(3, cross, n)
    index = {t: i for i, t in enumerate(universe)}
    gens = []
    for i in (0, 1):
        for pair in combinations(parts[i], 2):
            for triple in combinations(parts[1 - i], 3):
                gens.append(tuple(sorted(pair + triple)))
    gens.sort(key=colex_key)
    blocks = []
    for bid, A in enumerate(gens):
        pts = sorted(index[t] for t in combinations(A, 3) if t in index)
        blocks.append(Block(bid, A, tuple(pts)))
    inst = CoverInstance(universe, tuple(blocks), 9)
    assert half >= 5 and all(len(b.points) == 9 for b in blocks)
    return _pair_with_cover(n, 5, 3, lsets, inst)


def g53_construct(n: int) -> DominatingPair:
    """Two equal parts: inner triples plus a greedy (2,3)-split cover of cross triples."""
    return g53_with_cover(n)[0]


def type_of(s: Subset, parts: tuple[Subset, ...]) -> tuple[int, ...]:
    """Cyclic intersection type of s: counts per part, rotated so the
    lexicographically largest rotation is the representative."""
    counts = []
    for part in parts:
        lo, hi = part[0], part[-1]
        counts.append(sum(1 for e in s if lo <= e <= hi))
    rotations = [tuple(counts[i:] + counts[:i]) for i in range(len(counts))]
    return max(rotations)


def g43_with_cover(n: int) -> tuple[DominatingPair, GreedyCover]:
    if n % 3 != 0:
        raise ValueError(f"n must be divisible by 3, got {n}")
    if n < 12:
        raise ValueError(f"need n >= 12, got {n}")
    parts = near_equal_partition(n, 3)

    # Selected triples: all within one part, and pair in part i plus one
    # element of the cyclically next part i+1.
    lmembers: list[Subset] = []
    for i in range(3):
        lmembers.extend(combinations(parts[i], 3))
        nxt = parts[(i + 1) % 3]
        for pair in combinations(parts[i], 2):
            for e in nxt:
                lmembers.append(tuple(sorted(pair + (e,))))
    lsets = Family.build(3, lmembers, n)
    lset_set = lsets.member_set()

    # Unselected triples, the cover universe: one element per part, and
    # single in part i plus pair in part i+1.
    universe_members: list[Subset] = []
    for a in parts[0]:
        for b in parts[1]:
            for c in parts[2]:
                universe_members.append((a, b, c))
    for i in range(3):
        nxt = parts[(i + 1) % 3]
        for e in parts[i]:
            for pair in combinations(nxt, 2):
                universe_members.append(tuple(sorted((e,) + pair)))
    universe = Family.build(3, universe_members, n)
    index = {t: i for i, t in enumerate(universe)}

    gens: list[Subset] = []
    for i in range(3):
        nxt = parts[(i + 1) % 3]
        # single in part i plus triple in part i+1
        for e in parts[i]:
            for triple in combinations(nxt, 3):
                gens.append(tuple(sorted((e,) + triple)))
        # pair in part i, one element in each other part, even label sum
        nxt2 = parts[(i + 2) % 3]
        for pair in combinations(parts[i], 2):
            for b in nxt:
                for c in nxt2:
                    if (pair[0] + pair[1] + b + c) % 2 == 0:
                        gens.append(tuple(sorted(pair + (b, c))))
    gens.sort(key=colex_key)
    blocks = []
    for bid, A in enumerate(gens):
        pts = sorted(index[t] for t in combinations(A, 3) if t in index)
        blocks.append(Block(bid, A, tuple(pts)))
    inst = CoverInstance(universe, tuple(blocks), 3)
    assert all(len(b.points) == 3 for b in blocks)
    return _pair_with_cover(n, 4, 3, lsets, inst)


def g43_construct(n: int) -> DominatingPair:
    """Three parts with cyclic type selection for G_{4,3}."""
    return g43_with_cover(n)[0]


# ---------------------------------------------------------------------------
# Degrees of the gk2 block family, analytic and brute force.  Both require
# (k - 1) | n so the part size q = n / (k - 1) is uniform.

def _req_divisible(n: int, k: int) -> int:
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n % (k - 1) != 0:
        raise ValueError(f"(k - 1) must divide n, got n={n} k={k}")
    return n // (k - 1)


def degree_profile(n: int, k: int) -> DegreeProfile:
    """Closed-form degrees of the block family over F.

    Each formula adds the ways of doubling a part already touched by the
    point (or pair) to the ways of doubling an untouched part; terms with
    a zero multiplier are dropped so small k never sees a negative power.
    """
    q = _req_divisible(n, k)

    def terms(touched: int) -> int:
        # touched parts house the fixed elements; k - 1 - touched remain.
        untouched = (k - 1) - touched
        fill = k - touched  # elements still to add
        total = touched * (q - 1) * q ** (fill - 1) if fill >= 1 else 0
        if untouched >= 1:
            total += untouched * binomial(q, 2) * q ** (fill - 2) if fill >= 2 else 0
        return total

    point = terms(2)
    cases: dict[str, int | None] = {
        "overlap-2parts": q ** (k - 3),
        "overlap-3parts": terms(3) if k >= 4 else None,
        "disjoint-3parts": q ** (k - 4) if k >= 4 else None,
        "disjoint-4parts": terms(4) if k >= 5 else None,
    }
    return DegreeProfile(point, cases)


def degree_bruteforce(n: int, k: int) -> DegreeProfile:
    """Exact degrees by enumerating the block family; checks uniformity.

    Every point degree must be identical, and every pair degree within a
    case must be identical; a mismatch raises, since it would mean the
    family is not as regular as the closed forms assume.
    """
    _req_divisible(n, k)
    inst = block_family(n, k)
    parts = near_equal_partition(n, k - 1)
    part_of = {}
    for i, part in enumerate(parts):
        for e in part:
            part_of[e] = i

    blocks_at: list[set[int]] = [set() for _ in range(len(inst.universe))]
    for b in inst.blocks:
        for p in b.points:
            blocks_at[p].add(b.block_id)

    degrees = {len(s) for s in blocks_at}
    if len(degrees) != 1:
        raise ValueError(f"point degrees not uniform: {sorted(degrees)}")
    point = degrees.pop()

    by_case: dict[str, set[int]] = {label: set() for label in PAIR_CASES}
    members = inst.universe.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            u, v = members[i], members[j]
            d = len(blocks_at[i] & blocks_at[j])
            overlap = bool(set(u) & set(v))
            nparts = len({part_of[e] for e in set(u) | set(v)})
            if overlap and nparts == 2:
                by_case["overlap-2parts"].add(d)
            elif overlap and nparts == 3:
                by_case["overlap-3parts"].add(d)
            elif not overlap and nparts == 3:
                by_case["disjoint-3parts"].add(d)
            elif not overlap and nparts == 4:
                by_case["disjoint-4parts"].add(d)
            elif d != 0:
                # disjoint pairs inside two parts would need two doubled
                # parts in one block, impossible by construction
                raise ValueError(f"unexpected nonzero degree for pair {u}, {v}")

    cases: dict[str, int | None] = {}
    for label in PAIR_CASES:
        vals = by_case[label]
        if not vals:
            cases[label] = None
        elif len(vals) > 1:
            raise ValueError(f"case {label} degrees not uniform: {sorted(vals)}")
        else:
            cases[label] = vals.pop()
    return DegreeProfile(point, cases)
