"""Dominating pairs for the bipartite level graph G_{k,l}.

G_{k,l} has the k-subsets and l-subsets of [1, n] as vertices, with
adjacency given by containment.  A vertex set is dominating exactly
when the chosen pair (lsets, ksets) satisfies two covering conditions:

  (i)  every k-set not in ksets contains some member of lsets,
  (ii) every l-set not in lsets is contained in some member of ksets.

Checking (i) never materializes the graph: instead of scanning all
C(n, k) sets, the checker enumerates only the k-sets that avoid every
member of lsets (the certificates that could violate (i)) in colex
order, which is what keeps n around 100 feasible for structured lsets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .combinatorics import (
    Family,
    Subset,
    binomial,
    colex_key,
    enumerate_ksubsets,
    unrank_colex,
)


@dataclass(frozen=True)
class DominatingPair:
    """A proposed dominating set: an l-uniform and a k-uniform family."""

    n: int
    k: int
    l: int
    lsets: Family
    ksets: Family

    def __post_init__(self) -> None:
        if not self.n > self.k > self.l >= 1:
            raise ValueError(f"need n > k > l >= 1, got ({self.n}, {self.k}, {self.l})")
        if self.lsets.rank != self.l:
            raise ValueError(f"lsets rank {self.lsets.rank} != l = {self.l}")
        if self.ksets.rank != self.k:
            raise ValueError(f"ksets rank {self.ksets.rank} != k = {self.k}")
        for fam in (self.lsets, self.ksets):
            if fam.members and fam.members[-1][-1] > self.n:
                raise ValueError("family member outside [1, n]")

    def size(self) -> int:
        return len(self.lsets) + len(self.ksets)


@dataclass(frozen=True)
class Violation:
    side: str  # "lower": an undominated l-set; "upper": an undominated k-set
    witness: Subset


@dataclass(frozen=True)
class CheckResult:
    dominating: bool
    violations: tuple[Violation, ...]
    truncated: bool


def iter_ksets_avoiding(lsets: Family, n: int, k: int) -> Iterator[Subset]:
    """Yield the k-subsets of [1, n] containing no member of lsets, in colex order.

    Elements are placed largest first; a member L of lsets is detected
    the moment its second-smallest element joins the partial set, which
    lets the search prune whole subtrees instead of filtering C(n, k)
    candidates afterwards.
    """
    l = lsets.rank
    if l < 1:
        raise ValueError("lsets rank must be >= 1")
    if k < 1 or k > n:
        return

    # blocked[e] > 0 means: adding e now would complete some member of lsets.
    blocked = [0] * (n + 2)
    by_second: dict[int, list[tuple[int, int]]] = {}
    for L in lsets:
        if L[-1] > n:
            continue  # member outside the ambient set cannot occur
        if l == 1:
            blocked[L[0]] += 1
        else:
            hi_mask = 0
            for e in L[2:]:
                hi_mask |= 1 << e
            by_second.setdefault(L[1], []).append((hi_mask, L[0]))

    # Static count of never-blocked elements up to v, for room pruning.
    free_upto = [0] * (n + 1)
    cnt = 0
    for v in range(1, n + 1):
        if blocked[v] == 0:
            cnt += 1
        free_upto[v] = cnt

    out: list[int] = []  # chosen elements, descending

    def rec(vmax: int, slots: int, pmask: int) -> Iterator[Subset]:
        if free_upto[vmax] < slots:
            return
        for e in range(slots, vmax + 1):
            if blocked[e]:
                continue
            undo: list[int] = []
            regs = by_second.get(e)
            if regs:
                for hi_mask, lo in regs:
                    if hi_mask & ~pmask == 0:
                        blocked[lo] += 1
                        undo.append(lo)
            out.append(e)
            if slots == 1:
                yield tuple(reversed(out))
            else:
                yield from rec(e - 1, slots - 1, pmask | (1 << e))
            out.pop()
            for lo in undo:
                blocked[lo] -= 1

    yield from rec(n, k, 0)


def check_domination(pair: DominatingPair, cap: int = 100) -> CheckResult:
    """Verify conditions (i) and (ii) exhaustively.

    Returns all violations up to `cap` per side, each side reported in
    colex order (lower side first).  The verdict is exact even when the
    listing is truncated.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    n, k, l = pair.n, pair.k, pair.l
    lmem = pair.lsets.member_set()
    kmem = pair.ksets.member_set()

    covered_l: set[Subset] = set()
    for K in pair.ksets:
        covered_l.update(combinations(K, l))

    low: list[Violation] = []
    truncated = False
    for B in enumerate_ksubsets(n, l):
        if B in lmem or B in covered_l:
            continue
        if len(low) == cap:
            truncated = True
            break
        low.append(Violation("lower", B))

    up: list[Violation] = []
    for K in iter_ksets_avoiding(pair.lsets, n, k):
        if K in kmem:
            continue
        if len(up) == cap:
            truncated = True
            break
        up.append(Violation("upper", K))

    violations = tuple(low + up)
    return CheckResult(not violations and not truncated, violations, truncated)


def condition_counts(pair: DominatingPair) -> tuple[int, int]:
    """Count (k-sets dominated only through (i), l-sets dominated only through (ii)).

    Exhaustive over both levels, so only meant for desk-scale n.
    """
    n, k, l = pair.n, pair.k, pair.l
    lmem = pair.lsets.member_set()
    kmem = pair.ksets.member_set()
    k_via_i = 0
    for K in combinations(range(1, n + 1), k):
        if K in kmem:
            continue
        if any(B in lmem for B in combinations(K, l)):
            k_via_i += 1
    covered_l: set[Subset] = set()
    for K in pair.ksets:
        covered_l.update(combinations(K, l))
    l_via_ii = sum(
        1 for B in combinations(range(1, n + 1), l) if B not in lmem and B in covered_l
    )
    return k_via_i, l_via_ii


def pair_to_json(pair: DominatingPair) -> dict:
    return {
        "n": pair.n,
        "k": pair.k,
        "l": pair.l,
        "lsets": [list(m) for m in pair.lsets],
        "ksets": [list(m) for m in pair.ksets],
    }


def pair_from_json(obj: dict) -> DominatingPair:
    n, k, l = int(obj["n"]), int(obj["k"]), int(obj["l"])
    return DominatingPair(
        n,
        k,
        l,
        Family.build(l, [tuple(m) for m in obj["lsets"]], n),
        Family.build(k, [tuple(m) for m in obj["ksets"]], n),
    )


def random_dominating_pairs(
    n: int,
    k: int,
    count: int,
    seed: int,
    l: int = 2,
    mutations: int = 20,
) -> list[DominatingPair]:
    """Seeded stream of valid dominating pairs for property tests.

    Starts from the trivially dominating pair (all l-sets, no k-sets)
    and applies random add/remove repairs, keeping a mutation only if
    the pair stays dominating.  Identical (n, k, count, seed) arguments
    reproduce the identical list.
    """
    rng = random.Random(seed)
    cnl, cnk = binomial(n, l), binomial(n, k)
    pairs: list[DominatingPair] = []
    for _ in range(count):
        lcur = set(enumerate_ksubsets(n, l))
        kcur: set[Subset] = set()
        for _ in range(mutations):
            op = rng.random()
            if op < 0.40 and lcur:
                cand = rng.choice(sorted(lcur, key=colex_key))
                lcur.discard(cand)
                if not _is_dominating(n, k, l, lcur, kcur):
                    lcur.add(cand)
            elif op < 0.70:
                kcur.add(unrank_colex(k, rng.randrange(cnk)))
            elif op < 0.85 and kcur:
                cand = rng.choice(sorted(kcur, key=colex_key))
                kcur.discard(cand)
                if not _is_dominating(n, k, l, lcur, kcur):
                    kcur.add(cand)
            else:
                lcur.add(unrank_colex(l, rng.randrange(cnl)))
        pairs.append(
            DominatingPair(n, k, l, Family.build(l, lcur, n), Family.build(k, kcur, n))
        )
    return pairs


def _is_dominating(n: int, k: int, l: int, lcur: set, kcur: set) -> bool:
    pair = DominatingPair(n, k, l, Family.build(l, lcur, n), Family.build(k, kcur, n))
    return check_domination(pair, cap=1).dominating
