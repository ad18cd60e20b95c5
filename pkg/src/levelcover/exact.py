"""Exact solvers at desk scale: minimum dominating sets of G_{k,l},
tiny hypergraph Turan maxima, and naive clique counters.

The dominating-set solver is a set-cover branch and bound.  Vertices of
G_{k,l} are indexed l-sets-first (each side in colex order); choosing a
vertex covers its closed neighborhood.  Branching picks the uncovered
vertex with the fewest usable dominators and tries them in index order,
forbidding earlier siblings deeper in the tree so no candidate set is
visited twice.  Two lower bounds prune the search:

* degree bound: ceil(uncovered / best single-vertex coverage),
* counting bound: an added l-set covers at most C(n-l, k-l) uncovered
  k-side vertices and an added k-set at most C(k, l) uncovered l-side
  vertices, so the exact minimum of the two-variable relaxation over
  those budgets bounds any completion from below.

Optimal certificates are canonicalized in a second pass that finds the
colex-least index set of optimal size, so independent runs (and any
schedule of a parallel search) report byte-identical optima.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import inf

from .combinatorics import Family, binomial, enumerate_ksubsets
from .domination import DominatingPair

DEFAULT_BUDGET = 5_000_000
_MAX_VERTICES = 8000  # above this no search is attempted, bounds only


@dataclass
class SolveResult:
    status: str  # "optimal" | "bounds-only" | "node-limit"
    lower: int
    upper: int
    certificate: DominatingPair | None
    nodes: int


@dataclass
class TuranResult:
    status: str  # "exact" | "bounds"
    lower: int
    upper: int
    witness: Family | None
    nodes: int


class _BudgetExceeded(Exception):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# Clique / independent set counting (kept naive on purpose: these are the
# oracles other modules are checked against).

def count_cliques(edges: Family, n: int, k: int) -> int:
    """Number of k-subsets of [1, n] whose pairs all lie in `edges`."""
    eset = edges.member_set()
    return sum(
        1
        for S in combinations(range(1, n + 1), k)
        if all(p in eset for p in combinations(S, 2))
    )


def count_independent(edges: Family, n: int, k: int) -> int:
    """Number of k-subsets of [1, n] spanning no edge of `edges`."""
    eset = edges.member_set()
    return sum(
        1
        for S in combinations(range(1, n + 1), k)
        if not any(p in eset for p in combinations(S, 2))
    )


def _counting_lower(n: int, k: int, l: int, uk: int, ul: int) -> int:
    """Exact ceiling of the two-variable counting relaxation.

    minimize a + b subject to a*p + b >= uk, a + b*q >= ul, a, b >= 0
    with p = C(n-l, k-l), q = C(k, l).  The minimum sits at the inner
    corner or on an axis; ceil(min) = min(ceils) since ceil is monotone.
    """
    p = binomial(n - l, k - l)
    q = binomial(k, l)
    cands = [
        max(uk, _ceil_div(ul, q)),  # a = 0
        max(_ceil_div(uk, p), ul),  # b = 0
    ]
    num_a = q * uk - ul
    num_b = p * ul - uk
    if num_a >= 0 and num_b >= 0:
        cands.append(_ceil_div(num_a + num_b, p * q - 1))
    return min(cands)


# ---------------------------------------------------------------------------
# The vertex universe of G_{k,l}.

class _Universe:
    def __init__(self, n: int, k: int, l: int):
        self.n, self.k, self.l = n, k, l
        self.lsets = list(enumerate_ksubsets(n, l))
        self.ksets = list(enumerate_ksubsets(n, k))
        self.n_l = len(self.lsets)
        self.size = self.n_l + len(self.ksets)
        lidx = {s: i for i, s in enumerate(self.lsets)}
        cover = [1 << v for v in range(self.size)]
        for j, K in enumerate(self.ksets):
            vk = self.n_l + j
            for B in combinations(K, l):
                vb = lidx[B]
                cover[vb] |= 1 << vk
                cover[vk] |= 1 << vb
        self.cover = cover
        self.full = (1 << self.size) - 1
        self.kside_mask = self.full ^ ((1 << self.n_l) - 1)

    def pair_for(self, chosen: list[int]) -> DominatingPair:
        ls = [self.lsets[v] for v in chosen if v < self.n_l]
        ks = [self.ksets[v - self.n_l] for v in chosen if v >= self.n_l]
        return DominatingPair(
            self.n,
            self.k,
            self.l,
            Family.build(self.l, ls, self.n),
            Family.build(self.k, ks, self.n),
        )

    def counting_lb(self, uncovered: int) -> int:
        uk = (uncovered & self.kside_mask).bit_count()
        ul = uncovered.bit_count() - uk
        return _counting_lower(self.n, self.k, self.l, uk, ul)

    def degree_lb(self, uncovered: int, vmax: int | None = None) -> int:
        u = uncovered.bit_count()
        if u == 0:
            return 0
        hi = self.size if vmax is None else vmax
        best = 0
        cover = self.cover
        for v in range(hi):
            c = (cover[v] & uncovered).bit_count()
            if c > best:
                best = c
        if best == 0:
            return self.size + 1  # uncoverable with the allowed vertices
        return _ceil_div(u, best)

    def lower_bound(self, uncovered: int, vmax: int | None = None) -> int:
        lb = self.degree_lb(uncovered, vmax)
        if vmax is None:
            cb = self.counting_lb(uncovered)
            if cb > lb:
                lb = cb
        return lb

    def greedy(self) -> list[int]:
        uncovered = self.full
        chosen = []
        cover = self.cover
        while uncovered:
            best_v, best_c = -1, 0
            for v in range(self.size):
                c = (cover[v] & uncovered).bit_count()
                if c > best_c:
                    best_v, best_c = v, c
            chosen.append(best_v)
            uncovered &= ~cover[best_v]
        return chosen


def _validate_levels(n: int, k: int, l: int) -> None:
    if not n > k > l >= 1:
        raise ValueError(f"need n > k > l >= 1, got ({n}, {k}, {l})")


def exhaustive_gamma(n: int, k: int, l: int) -> SolveResult:
    """Pure brute-force oracle: try candidate sets by size, then colex.

    Capped at C(n, l) + C(n, k) <= 30 vertices; the certificate is the
    colex-least optimum under the l-sets-first vertex numbering.
    """
    _validate_levels(n, k, l)
    if binomial(n, l) + binomial(n, k) > 30:
        raise ValueError("instance above the 30-vertex oracle cap")
    uni = _Universe(n, k, l)
    cover, full = uni.cover, uni.full
    tested = 0
    for t in range(1, uni.size + 1):
        for idx in enumerate_ksubsets(uni.size, t):
            tested += 1
            acc = 0
            for i in idx:
                acc |= cover[i - 1]
            if acc == full:
                chosen = [i - 1 for i in idx]
                return SolveResult("optimal", t, t, uni.pair_for(chosen), tested)
    raise AssertionError("the full vertex set always dominates")


def exact_gamma(n: int, k: int, l: int, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum dominating set of G_{k,l} by branch and bound.

    Returns status "optimal" with the colex-least certificate when the
    search finishes inside `budget` nodes, "node-limit" with valid
    lower/upper bounds when it does not, and "bounds-only" without any
    search when the vertex count is beyond reach (the upper bound is
    then the trivial all-l-sets dominating set).
    """
    _validate_levels(n, k, l)
    if binomial(n, l) + binomial(n, k) > _MAX_VERTICES:
        lower = _counting_lower(n, k, l, binomial(n, k), binomial(n, l))
        return SolveResult("bounds-only", max(lower, 1), binomial(n, l), None, 0)

    uni = _Universe(n, k, l)
    cover, full = uni.cover, uni.full
    nodes = 0

    best_set = uni.greedy()
    best = len(best_set)
    root_lb = uni.lower_bound(full)
    stack: list[int] = []

    def value_dfs(uncovered: int, depth: int, forbidden: int) -> None:
        nonlocal nodes, best, best_set
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        if not uncovered:
            best = depth
            best_set = list(stack)
            return
        if depth + 1 >= best:
            return
        if depth + uni.lower_bound(uncovered) >= best:
            return
        pick_doms, pick_cnt = 0, inf
        u = uncovered
        while u:
            lsb = u & -u
            doms = cover[lsb.bit_length() - 1] & ~forbidden
            c = doms.bit_count()
            if c < pick_cnt:
                pick_doms, pick_cnt = doms, c
                if c <= 1:
                    break
            u ^= lsb
        if pick_cnt == 0:
            return
        f = forbidden
        d = pick_doms
        while d:
            lsb = d & -d
            w = lsb.bit_length() - 1
            stack.append(w)
            value_dfs(uncovered & ~cover[w], depth + 1, f)
            stack.pop()
            f |= lsb
            d ^= lsb

    if root_lb < best:
        try:
            value_dfs(full, 0, 0)
        except _BudgetExceeded:
            if root_lb < best:
                return SolveResult("node-limit", root_lb, best, None, nodes)

    target = best

    # Canonical pass: colex-least dominating index set of size `target`.
    # Indices are chosen largest-first, each position scanned in
    # increasing order, so the first complete solution is the colex
    # minimum.  Optimal sets are irredundant, hence candidates covering
    # nothing new can be skipped.
    found: list[int] | None = None

    def min_start(uncovered: int, below: int) -> int:
        # every uncovered vertex needs a dominator among indices < below;
        # the largest of their smallest dominators floors the next choice
        lo_mask = (1 << below) - 1
        need = 0
        u = uncovered
        while u:
            lsb = u & -u
            doms = cover[lsb.bit_length() - 1] & lo_mask
            if doms == 0:
                return below  # infeasible: kills the caller's scan range
            first = (doms & -doms).bit_length() - 1
            if first > need:
                need = first
            u ^= lsb
        return need

    def canon_dfs(uncovered: int, slots: int, below: int, acc: list[int]) -> None:
        nonlocal nodes, found
        if found is not None:
            return
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        if not uncovered:
            if slots == 0:
                found = sorted(acc)
            return
        if slots == 0:
            return
        if uni.lower_bound(uncovered, below) > slots:
            return
        lo = max(slots - 1, min_start(uncovered, below))
        for v in range(lo, below):
            cv = cover[v]
            if cv & uncovered == 0:
                continue
            acc.append(v)
            canon_dfs(uncovered & ~cv, slots - 1, v, acc)
            acc.pop()
            if found is not None:
                return

    try:
        canon_dfs(full, target, uni.size, [])
    except _BudgetExceeded:
        found = None
    if found is None:
        # value proved but the canonical pass ran out of budget; the
        # incumbent is still an optimum
        found = sorted(best_set)
    return SolveResult("optimal", target, target, uni.pair_for(found), nodes)


# ---------------------------------------------------------------------------
# Exact Turan numbers for complete l-uniform hypergraphs on k vertices,
# phrased as minimum hitting: delete the fewest l-sets so that every k-set
# misses at least one of its C(k, l) l-subsets.

def exact_turan_ex(n: int, k: int, l: int, budget: int = DEFAULT_BUDGET) -> TuranResult:
    """Largest l-uniform family on [1, n] containing no complete k-set.

    Status "exact" when branch and bound finishes within budget, else
    "bounds" with the greedy survivor family as witness for the lower
    side.
    """
    if not k > l >= 1 or n < k:
        raise ValueError(f"need n >= k > l >= 1, got ({n}, {k}, {l})")
    items = list(enumerate_ksubsets(n, l))
    item_idx = {s: i for i, s in enumerate(items)}
    n_items = len(items)
    constraints: list[int] = []  # item mask per k-set
    for K in enumerate_ksubsets(n, k):
        m = 0
        for B in combinations(K, l):
            m |= 1 << item_idx[B]
        constraints.append(m)
    n_cons = len(constraints)
    hits = [0] * n_items  # constraint mask per item
    for ci, cm in enumerate(constraints):
        mm = cm
        while mm:
            lsb = mm & -mm
            hits[lsb.bit_length() - 1] |= 1 << ci
            mm ^= lsb
    full_cons = (1 << n_cons) - 1

    def lb(unhit: int) -> int:
        u = unhit.bit_count()
        if u == 0:
            return 0
        best = 0
        for h in hits:
            c = (h & unhit).bit_count()
            if c > best:
                best = c
        return _ceil_div(u, best)

    def greedy_removals() -> list[int]:
        unhit = full_cons
        removed = []
        while unhit:
            best_i, best_c = -1, 0
            for i in range(n_items):
                c = (hits[i] & unhit).bit_count()
                if c > best_c:
                    best_i, best_c = i, c
            removed.append(best_i)
            unhit &= ~hits[best_i]
        return removed

    best_removed = greedy_removals()
    best = len(best_removed)
    nodes = 0
    stack: list[int] = []

    def dfs(unhit: int, depth: int, forbidden: int) -> None:
        nonlocal nodes, best, best_removed
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        if not unhit:
            best = depth
            best_removed = list(stack)
            return
        if depth + lb(unhit) >= best:
            return
        ci = (unhit & -unhit).bit_length() - 1  # colex-least unhit k-set
        o = constraints[ci] & ~forbidden
        f = forbidden
        while o:
            lsb = o & -o
            i = lsb.bit_length() - 1
            stack.append(i)
            dfs(unhit & ~hits[i], depth + 1, f)
            stack.pop()
            f |= lsb
            o ^= lsb

    status = "exact"
    try:
        dfs(full_cons, 0, 0)
    except _BudgetExceeded:
        status = "bounds"

    removed = set(best_removed)
    witness = Family.build(l, [s for i, s in enumerate(items) if i not in removed], n)
    value = n_items - best
    if status == "exact":
        return TuranResult("exact", value, value, witness, nodes)
    return TuranResult("bounds", value, n_items - lb(full_cons), witness, nodes)
