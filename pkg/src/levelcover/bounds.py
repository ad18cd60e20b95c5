"""Exact-rational evaluators for the lower-bound machinery on G_{k,2}
and its generalizations to higher levels.

Everything here evaluates both sides of an inequality as exact
integers or `fractions.Fraction` values and reports a verdict; nothing
is ever rounded.  The counting bounds are theorems for any pair that
satisfies the covering conditions, so a False verdict on a verified
dominating pair indicates a bug in either the checker or the evaluator,
and the test suite treats it that way.

The refined pair-count bound splits the k-family by the overlap graph
(members adjacent when they share at least two elements):

* k0: members containing a chosen pair,
* k2: members of large overlap components (size >= s),
* k1: the rest.

For connected overlap components the 2-shadow grows by at most
C(k,2) - 1 per member after the first, which is what buys the almost
C(k,2) - 1 coefficient on large components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinatorics import (
    Family,
    binomial,
    shadow2,
    turan_count,
)
from .domination import DominatingPair, check_domination, iter_ksets_avoiding


@dataclass(frozen=True)
class SplitFamilies:
    k0: Family
    k1: Family
    k2: Family
    s: int


@dataclass
class BoundReport:
    """All inequality sides for one dominating pair, exactly evaluated."""

    n: int
    k: int
    l: int
    e_size: int
    k_size: int
    kside_lhs: int
    kside_rhs: int
    kside_ok: bool
    pairside_lhs: int
    pairside_rhs: int
    pairside_ok: bool
    s: int
    k0_size: int
    k1_size: int
    k2_size: int
    shadow_k1: int
    shadow_k2: int
    split_lhs: int
    split_rhs: int
    split_ok: bool
    critical_size: int
    hitting_size: int
    hitting_all_hit: bool
    f_minus_h_size: int
    turan_max: int
    f_minus_h_ok: bool
    enlarged_lhs: int
    enlarged_main: Fraction
    enlarged_residual: Fraction
    enlarged_count_lhs: int
    enlarged_count_rhs: int
    enlarged_count_ok: bool
    coeff: Fraction


def gk2_coeff(k: int) -> Fraction:
    """Leading n^2 coefficient of the optimal G_{k,2} dominating set size."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    return Fraction(k + 3, 2 * (k - 1) * (k + 1))


def kside_counting_bound(e: Family, ksets: Family, n: int, k: int) -> tuple[int, int, bool]:
    """C(n-2, k-2) |E| + |K| >= C(n, k); a theorem under condition (i)."""
    lhs = binomial(n - 2, k - 2) * len(e) + len(ksets)
    rhs = binomial(n, k)
    return lhs, rhs, lhs >= rhs


def pairside_counting_bound(e: Family, ksets: Family, n: int, k: int) -> tuple[int, int, bool]:
    """|E| + C(k, 2) |K| >= C(n, 2); a theorem under condition (ii)."""
    lhs = len(e) + binomial(k, 2) * len(ksets)
    rhs = binomial(n, 2)
    return lhs, rhs, lhs >= rhs


def overlap_graph(fam: Family) -> list[tuple[int, ...]]:
    """Adjacency lists on member indices; edges join members sharing >= 2 elements."""
    members = [set(m) for m in fam]
    adj: list[list[int]] = [[] for _ in members]
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if len(members[i] & members[j]) >= 2:
                adj[i].append(j)
                adj[j].append(i)
    return [tuple(a) for a in adj]


def overlap_components(fam: Family) -> list[Family]:
    """Connected components of the overlap graph, ordered by least member index."""
    adj = overlap_graph(fam)
    seen = [False] * len(adj)
    comps: list[Family] = []
    for start in range(len(adj)):
        if seen[start]:
            continue
        queue = [start]
        seen[start] = True
        comp = []
        while queue:
            v = queue.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(Family.build(fam.rank, [fam.members[i] for i in comp]))
    return comps


def split_families(e: Family, ksets: Family, s: int) -> SplitFamilies:
    """Partition ksets into (k0, k1, k2) by chosen-pair containment and
    overlap-component size threshold s."""
    if s <= 1:
        raise ValueError(f"need s > 1, got {s}")
    eset = e.member_set()
    k0_members = []
    rest = []
    for K in ksets:
        if any(p in eset for p in combinations(K, 2)):
            k0_members.append(K)
        else:
            rest.append(K)
    rest_fam = Family.build(ksets.rank, rest)
    k1_members: list = []
    k2_members: list = []
    for comp in overlap_components(rest_fam):
        (k2_members if len(comp) >= s else k1_members).extend(comp.members)
    return SplitFamilies(
        Family.build(ksets.rank, k0_members),
        Family.build(ksets.rank, k1_members),
        Family.build(ksets.rank, k2_members),
        s,
    )


def connected_shadow_bound(t: Family) -> tuple[int, int, bool]:
    """For a connected overlap graph, |shadow2| <= t (C(k,2) - 1) + 1."""
    if len(t) == 0:
        raise ValueError("need a nonempty family")
    if len(overlap_components(t)) != 1:
        raise ValueError("overlap graph is not connected")
    size = len(shadow2(t))
    bound = len(t) * (binomial(t.rank, 2) - 1) + 1
    return size, bound, size <= bound


def component_shadow_bound(split: SplitFamilies, k: int) -> tuple[int, Fraction, bool]:
    """|shadow2(k2)| <= (C(k,2) - 1 + 1/s) |k2|, components of k2 all >= s."""
    if len(split.k2) == 0:
        return 0, Fraction(0), True
    lhs = len(shadow2(split.k2))
    rhs = (Fraction(binomial(k, 2) - 1) + Fraction(1, split.s)) * len(split.k2)
    return lhs, rhs, lhs <= rhs


@dataclass
class SplitBound:
    e_term: int
    k0_term: int
    shadow_k1: int
    shadow_k2: int
    lhs: int
    rhs: int
    ok: bool


def split_counting_bound(e: Family, ksets: Family, s: int, n: int, k: int) -> SplitBound:
    """|E| + (C(k,2)-1)|k0| + |shadow2(k1)| + |shadow2(k2)| >= C(n, 2).

    A theorem under condition (ii): pairs outside E lie inside some
    member, members with a chosen pair contribute at most C(k,2) - 1
    new pairs, the rest at most their 2-shadows.
    """
    split = split_families(e, ksets, s)
    e_term = len(e)
    k0_term = (binomial(k, 2) - 1) * len(split.k0)
    sh1 = len(shadow2(split.k1)) if len(split.k1) else 0
    sh2 = len(shadow2(split.k2)) if len(split.k2) else 0
    lhs = e_term + k0_term + sh1 + sh2
    rhs = binomial(n, 2)
    return SplitBound(e_term, k0_term, sh1, sh2, lhs, rhs, lhs >= rhs)


def critical_family(e: Family, n: int, k: int) -> Family:
    """All k-sets whose C(k,2) pairs all avoid e (so they are forced
    into any k-family satisfying condition (i) with e)."""
    if e.rank != 2:
        raise ValueError(f"critical_family needs rank 2, got {e.rank}")
    return Family.build(k, iter_ksets_avoiding(e, n, k), n)


def greedy_hitting(crit: Family, f: Family) -> Family:
    """Pairs of f hitting every member of crit, greedily by hit count.

    Ties break toward the colex-smaller pair; members of crit having no
    pair inside f make the instance infeasible and raise.
    """
    if f.rank != 2:
        raise ValueError(f"greedy_hitting needs rank-2 candidates, got {f.rank}")
    unhit: list[set] = [set(combinations(K, 2)) for K in crit]
    chosen = []
    alive = set(range(len(unhit)))
    while alive:
        best_pair, best_hits = None, 0
        for pair in f:  # colex order, strict improvement keeps first
            hits = sum(1 for i in alive if pair in unhit[i])
            if hits > best_hits:
                best_pair, best_hits = pair, hits
        if best_pair is None:
            missing = crit.members[min(alive)]
            raise ValueError(f"critical set {missing} has no candidate pair")
        chosen.append(best_pair)
        alive = {i for i in alive if best_pair not in unhit[i]}
    return Family.build(2, chosen)


def two_sided_lower_coeff(k: int, l: int, alpha: Fraction) -> Fraction:
    """Lower-bound coefficient alpha + (1 - alpha) / (C(k, l) - 1).

    `alpha` is the density of a minimum l-uniform cover of all k-sets;
    callers must supply it explicitly for l >= 3, where no exact value
    is known.
    """
    if not k > l >= 2:
        raise ValueError(f"need k > l >= 2, got k={k} l={l}")
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"need 0 <= alpha <= 1, got {alpha}")
    return alpha + (1 - alpha) / (binomial(k, l) - 1)


def general_upper_coeff(k: int, l: int) -> Fraction:
    """Upper-bound coefficient 1 - (k-l)/(k-l+1) * (1 - 1/l)^(l-1)."""
    if not k > l >= 3:
        raise ValueError(f"need k > l >= 3, got k={k} l={l}")
    return 1 - Fraction(k - l, k - l + 1) * (1 - Fraction(1, l)) ** (l - 1)


def turan_cover_density(k: int, l: int) -> Fraction | None:
    """Known asymptotic density of a minimum l-cover of all k-sets.

    Equals 1/(k-1) for pairs; None for l >= 3, where the hypergraph
    Turan problem is open and callers must treat any value supplied to
    `two_sided_lower_coeff` as conjectural.
    """
    if not k > l >= 2:
        raise ValueError(f"need k > l >= 2, got k={k} l={l}")
    if l == 2:
        return Fraction(1, k - 1)
    return None


def bound_report(pair: DominatingPair, s: int = 10) -> BoundReport:
    """Evaluate every inequality for a verified dominating pair with l = 2.

    Asymptotic main terms are reported with their exact residuals, never
    asserted; the exact verdicts are the counting bounds, the split
    bound and the Turan comparison of the hit-cleaned pair complement.
    """
    if pair.l != 2:
        raise ValueError("bound_report is defined for l = 2 pairs")
    if not check_domination(pair, cap=1).dominating:
        raise ValueError("bound_report needs a dominating pair")
    n, k = pair.n, pair.k
    e, ksets = pair.lsets, pair.ksets

    kl, kr, kok = kside_counting_bound(e, ksets, n, k)
    pl, pr, pok = pairside_counting_bound(e, ksets, n, k)
    sp = split_counting_bound(e, ksets, s, n, k)
    split = split_families(e, ksets, s)

    crit = critical_family(e, n, k)
    eset = e.member_set()
    f_all = Family.build(
        2,
        [p for p in combinations(range(1, n + 1), 2) if p not in eset],
        n,
    )
    hitting = greedy_hitting(crit, f_all) if len(crit) else Family.build(2, [])
    hit_pairs = hitting.member_set()
    all_hit = all(any(p in hit_pairs for p in combinations(K, 2)) for K in crit)

    f_minus_h = len(f_all) - len(hitting)
    tmax = turan_count(n, k - 1)
    enlarged = len(e) + len(hitting)
    main = Fraction(n * n, 2 * (k - 1))
    count_lhs = enlarged + (binomial(k, 2) - 1) * len(ksets)
    count_rhs = binomial(n, 2)

    return BoundReport(
        n=n,
        k=k,
        l=pair.l,
        e_size=len(e),
        k_size=len(ksets),
        kside_lhs=kl,
        kside_rhs=kr,
        kside_ok=kok,
        pairside_lhs=pl,
        pairside_rhs=pr,
        pairside_ok=pok,
        s=s,
        k0_size=len(split.k0),
        k1_size=len(split.k1),
        k2_size=len(split.k2),
        shadow_k1=sp.shadow_k1,
        shadow_k2=sp.shadow_k2,
        split_lhs=sp.lhs,
        split_rhs=sp.rhs,
        split_ok=sp.ok,
        critical_size=len(crit),
        hitting_size=len(hitting),
        hitting_all_hit=all_hit,
        f_minus_h_size=f_minus_h,
        turan_max=tmax,
        f_minus_h_ok=f_minus_h <= tmax,
        enlarged_lhs=enlarged,
        enlarged_main=main,
        enlarged_residual=Fraction(enlarged) - main,
        enlarged_count_lhs=count_lhs,
        enlarged_count_rhs=count_rhs,
        enlarged_count_ok=count_lhs >= count_rhs,
        coeff=gk2_coeff(k),
    )


def report_to_dict(r: BoundReport) -> dict:
    """JSON-ready dict; Fractions as 'p/q' strings plus float companions."""
    out = {}
    for key, val in vars(r).items():
        if isinstance(val, Fraction):
            out[key] = f"{val.numerator}/{val.denominator}"
            out[key + "_float"] = float(val)
        else:
            out[key] = val
    return out


REPORT_CSV_COLUMNS = [
    "n", "k", "l", "e_size", "k_size",
    "kside_lhs", "kside_rhs", "kside_ok",
    "pairside_lhs", "pairside_rhs", "pairside_ok",
    "s", "k0_size", "k1_size", "k2_size",
    "shadow_k1", "shadow_k2", "split_lhs", "split_rhs", "split_ok",
    "critical_size", "hitting_size", "hitting_all_hit",
    "f_minus_h_size", "turan_max", "f_minus_h_ok",
    "enlarged_lhs", "enlarged_main", "enlarged_residual",
    "enlarged_count_lhs", "enlarged_count_rhs", "enlarged_count_ok",
    "coeff", "coeff_float",
]


def report_to_row(r: BoundReport) -> list[str]:
    d = report_to_dict(r)
    row = []
    for col in REPORT_CSV_COLUMNS:
        row.append(str(d[col]))
    return row
