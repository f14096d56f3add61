"""Exact boxicity, p-boxicity, and realizability of a graph as flat boxes.

Every search works over *factors*: interval supergraphs ``F`` of ``G``, each
described by the set of ``G``'s non-edges it still lacks (``missing``) and the
set of vertices whose ``F``-neighbourhood is not a clique (``bad``). A vertex
needs ``d - p`` good axes among ``d``, i.e. at most ``p`` bad ones.

Two routes decide realizability:

* the cover search: pick a set of distinct non-complete factors whose missing
  sets cover all non-edges of ``G`` with every vertex bad at most ``p`` times.
  Complete factors are free padding (no missing pairs, no bad vertices) and a
  valid set never needs more factors than ``G`` has non-edges, so the search is
  finite, and ``Box_p(G) = max(p, k_min)``;
* the layered oracle: enumerate ``d``-tuples of all interval supergraphs,
  complete graph included, directly from the definition, merging tuples that
  reach the same (remaining non-edges, bad counts) state.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

from .budget import Budget
from .graph import Graph, complete_graph, iter_bits, neighborhood_is_clique
from .interval import iter_interval_supergraphs
from .slim import SlimDecomposition, check_slim

ORDER_VERSION = "v1"
GREATER_THAN_D_MAX = "greater than d_max"
INFEASIBLE = "infeasible for all d"


@dataclass(frozen=True)
class Factor:
    graph: Graph
    missing: int
    bad: int


@dataclass
class SearchStats:
    subsets: int = 0
    c4_cuts: int = 0
    non_interval: int = 0
    candidates: int = 0
    dominated: int = 0
    nodes: int = 0
    memo_hits: int = 0
    bound_cuts: int = 0
    badness_cuts: int = 0
    transcript: "hashlib._Hash" = field(default_factory=hashlib.sha256, repr=False)

    def to_json(self) -> dict:
        return {
            "enumeration_order": ORDER_VERSION,
            "supergraph_subsets": self.subsets,
            "c4_cuts": self.c4_cuts,
            "non_interval": self.non_interval,
            "candidates": self.candidates,
            "dominated": self.dominated,
            "nodes": self.nodes,
            "memo_hits": self.memo_hits,
            "bound_cuts": self.bound_cuts,
            "badness_cuts": self.badness_cuts,
            "transcript_sha256": self.transcript.hexdigest(),
        }


def bad_vertices(f: Graph) -> int:
    mask = 0
    for v in f.vertices:
        if not neighborhood_is_clique(f, v):
            mask |= 1 << v
    return mask


def enumerate_factors(
    g: Graph,
    budget: Budget | None = None,
    stats: SearchStats | None = None,
    prefilter: bool = True,
    include_complete: bool = False,
) -> list[Factor]:
    raw: dict = {}
    out = []
    for f, missing in iter_interval_supergraphs(g, budget, raw, prefilter):
        if missing == 0 and not include_complete:
            continue
        out.append(Factor(f, missing, bad_vertices(f)))
    if stats is not None:
        stats.subsets += raw.get("subsets", 0)
        stats.c4_cuts += raw.get("c4_cuts", 0)
        stats.non_interval += raw.get("non_interval", 0)
        stats.candidates += len(out)
    return out


def drop_dominated(factors: list[Factor], constrain_bad: bool, stats: SearchStats | None = None) -> list[Factor]:
    """Remove factors beaten by one that misses more pairs with no more bad vertices.

    Among factors with identical profiles only the earliest survives. Factors
    are visited so that every dominator comes before what it dominates, and
    domination is transitive, so each one is only compared with survivors.
    """

    def key(i: int):
        f = factors[i]
        return (-f.missing.bit_count(), f.bad.bit_count() if constrain_bad else 0, i)

    kept: list[int] = []
    for i in sorted(range(len(factors)), key=key):
        a = factors[i]
        for j in kept:
            b = factors[j]
            if not a.missing & ~b.missing and not (constrain_bad and b.bad & ~a.bad):
                break
        else:
            kept.append(i)
    if stats is not None:
        stats.dominated += len(factors) - len(kept)
    return [factors[i] for i in sorted(kept)]


def cover_search(
    g: Graph,
    factors: list[Factor],
    p: int | None,
    max_k: int,
    budget: Budget | None = None,
    stats: SearchStats | None = None,
) -> list[Factor] | None:
    """A set of at most ``max_k`` factors covering every non-edge, or ``None``.

    ``p=None`` drops the bad-vertex constraint (plain boxicity).
    """
    m = len(g.non_edges())
    full = (1 << m) - 1
    if m == 0:
        return []
    stats = stats if stats is not None else SearchStats()
    by_pair = [[i for i, f in enumerate(factors) if f.missing >> j & 1] for j in range(m)]
    widest = max((f.missing.bit_count() for f in factors), default=0)
    if widest == 0:
        return None
    failed: dict[tuple, int] = {}
    chosen: list[int] = []

    def dfs(covered: int, counts: tuple[int, ...], left: int) -> bool:
        if budget is not None:
            budget.tick()
        stats.nodes += 1
        if covered == full:
            return True
        if left == 0:
            return False
        uncovered = m - covered.bit_count()
        if uncovered > left * widest:
            stats.bound_cuts += 1
            return False
        key = (covered, counts)
        if failed.get(key, -1) >= left:
            stats.memo_hits += 1
            return False
        j = ((full & ~covered) & -(full & ~covered)).bit_length() - 1
        for i in by_pair[j]:
            f = factors[i]
            if p is not None:
                nxt = list(counts)
                over = False
                for v in iter_bits(f.bad):
                    nxt[v] += 1
                    if nxt[v] > p:
                        over = True
                        break
                if over:
                    stats.badness_cuts += 1
                    continue
                new_counts = tuple(nxt)
            else:
                new_counts = counts
            stats.transcript.update(b"%d:%d;" % (left, i))
            chosen.append(i)
            if dfs(covered | f.missing, new_counts, left - 1):
                return True
            chosen.pop()
        failed[key] = max(failed.get(key, -1), left)
        return False

    if dfs(0, (0,) * (g.n + 1), max_k):
        return [factors[i] for i in chosen]
    return None


def decomposition_from_factors(g: Graph, factors: list[Factor], p: int, d: int) -> SlimDecomposition:
    """Pad ``factors`` with complete graphs up to ``d`` and pick each ``J_v``."""
    fs = [f.graph for f in factors] + [complete_graph(g.n)] * (d - len(factors))
    need = max(d - p, 0)
    jv = {}
    for v in g.vertices:
        good = [i for i, f in enumerate(fs, start=1) if neighborhood_is_clique(f, v)]
        jv[v] = frozenset(good[:need])
    dec = SlimDecomposition(p, d, tuple(fs), jv)
    check = check_slim(g, dec)
    if not check:
        raise AssertionError(f"assembled decomposition fails: {check.message}")
    return dec


def _shuffled(factors: list[Factor], seed: int | None) -> list[Factor]:
    if seed is None:
        return factors
    out = list(factors)
    random.Random(seed).shuffle(out)
    return out


# -- boxicity --------------------------------------------------------------------


@dataclass
class BoxicityResult:
    value: int
    factors: list[Graph]
    stats: SearchStats

    def to_json(self) -> dict:
        return {"boxicity": self.value, "factors": [f.to_json() for f in self.factors]}


def boxicity(g: Graph, budget: Budget | None = None) -> BoxicityResult:
    """Least ``k`` with ``g`` an intersection of ``k`` interval graphs; 0 when complete."""
    stats = SearchStats()
    if g.is_complete():
        return BoxicityResult(0, [], stats)
    factors = drop_dominated(enumerate_factors(g, budget, stats), False, stats)
    m = len(g.non_edges())
    for k in range(1, m + 1):
        found = cover_search(g, factors, None, k, budget, stats)
        if found is not None:
            return BoxicityResult(k, [f.graph for f in found], stats)
    raise AssertionError("one factor per non-edge always suffices")


# -- p-boxicity and realizability --------------------------------------------


@dataclass
class PBoxicityResult:
    """``value`` is an int, :data:`GREATER_THAN_D_MAX` or :data:`INFEASIBLE`."""

    value: int | str
    k_min: int | None
    decomposition: SlimDecomposition | None
    stats: SearchStats

    def to_json(self) -> dict:
        out: dict = {"p_boxicity": self.value, "k_min": self.k_min}
        if self.decomposition is not None:
            out["decomposition"] = self.decomposition.to_json()
        return out


def min_factor_count(g: Graph, p: int, budget: Budget | None = None, stats: SearchStats | None = None) -> tuple[int | None, list[Factor] | None]:
    """Fewest non-complete factors with at most ``p`` bad axes per vertex."""
    stats = stats if stats is not None else SearchStats()
    m = len(g.non_edges())
    if m == 0:
        return 0, []
    factors = drop_dominated(enumerate_factors(g, budget, stats), True, stats)
    if cover_search(g, factors, p, m, budget, stats) is None:
        return None, None
    for k in range(1, m + 1):
        found = cover_search(g, factors, p, k, budget, stats)
        if found is not None:
            return k, found
    raise AssertionError("unbounded search succeeded but no bounded one did")


def p_boxicity(
    g: Graph,
    p: int,
    d_max: int,
    budget: Budget | None = None,
    cross_check: bool = False,
) -> PBoxicityResult:
    """Least ``d >= p`` such that ``g`` is realizable by boxes of dimension ``<= p`` in R^d.

    With ``cross_check`` the answer is re-derived by the layered oracle for
    every ``d <= d_max`` and a disagreement raises ``AssertionError``.
    """
    if p < 1:
        raise ValueError(f"p must be at least 1, got {p}")
    stats = SearchStats()
    k_min, found = min_factor_count(g, p, budget, stats)
    if k_min is None:
        value: int | str = INFEASIBLE
        dec = None
    else:
        d = max(p, k_min)
        dec = decomposition_from_factors(g, found, p, d)
        value = d if d <= d_max else GREATER_THAN_D_MAX
    if cross_check:
        direct = direct_p_boxicity(g, p, d_max, budget)
        expected = value if isinstance(value, int) else None
        if direct != expected:
            raise AssertionError(f"k_min route gives {value!r}, layered oracle gives {direct!r}")
    return PBoxicityResult(value, k_min, dec, stats)


@dataclass
class Realizability:
    realizable: bool
    decomposition: SlimDecomposition | None
    stats: SearchStats

    def __bool__(self) -> bool:
        return self.realizable

    def to_json(self) -> dict:
        out: dict = {"realizable": self.realizable, "transcript": self.stats.to_json()}
        if self.decomposition is not None:
            out["d"] = self.decomposition.d
            out["decomposition"] = self.decomposition.to_json()
        return out


def realizable_some_d(
    g: Graph,
    p: int,
    budget: Budget | None = None,
    order_seed: int | None = None,
    prefilter: bool = True,
) -> Realizability:
    """Whether some R^d holds a realization of ``g`` by boxes of dimension ``<= p``.

    Raises :class:`~flatbox.errors.BudgetExceeded` when ``budget`` runs out.
    """
    stats = SearchStats()
    m = len(g.non_edges())
    if m == 0:
        d = max(p, 1)
        return Realizability(True, decomposition_from_factors(g, [], p, d), stats)
    factors = drop_dominated(enumerate_factors(g, budget, stats, prefilter), True, stats)
    factors = _shuffled(factors, order_seed)
    found = cover_search(g, factors, p, m, budget, stats)
    if found is None:
        return Realizability(False, None, stats)
    d = max(p, len(found))
    return Realizability(True, decomposition_from_factors(g, found, p, d), stats)


# -- layered oracle -----------------------------------------------------------------


def direct_layers(g: Graph, p: int, d_max: int, budget: Budget | None = None):
    """Yield ``(d, decomposition or None)`` for ``d = 1..d_max``.

    Layer ``d`` holds every (remaining non-edges, per-vertex bad count) state
    reachable by some ``d``-tuple of interval supergraphs of ``g``; states with
    a vertex bad more than ``p`` times are discarded since ``J_v`` must find
    ``d - p`` good axes among ``d``.
    """
    factors = enumerate_factors(g, budget, prefilter=False, include_complete=True)
    m = len(g.non_edges())
    start = ((1 << m) - 1, (0,) * (g.n + 1))
    layer = {start: None}
    parents: list[dict] = []
    for d in range(1, d_max + 1):
        nxt: dict = {}
        for (remaining, counts) in layer:
            for idx, f in enumerate(factors):
                if budget is not None:
                    budget.tick()
                new_counts = list(counts)
                ok = True
                for v in iter_bits(f.bad):
                    new_counts[v] += 1
                    if new_counts[v] > p:
                        ok = False
                        break
                if not ok:
                    continue
                state = (remaining & ~f.missing, tuple(new_counts))
                if state not in nxt:
                    nxt[state] = ((remaining, counts), idx)
        parents.append(nxt)
        layer = nxt
        hit = next((s for s in layer if s[0] == 0), None)
        if hit is None:
            yield d, None
            continue
        chain = []
        state = hit
        for level in range(d - 1, -1, -1):
            prev, idx = parents[level][state]
            chain.append(factors[idx].graph)
            state = prev
        yield d, _decomposition_from_graphs(g, chain[::-1], p, d)


def _decomposition_from_graphs(g: Graph, fs: list[Graph], p: int, d: int) -> SlimDecomposition:
    need = max(d - p, 0)
    jv = {}
    for v in g.vertices:
        good = [i for i, f in enumerate(fs, start=1) if neighborhood_is_clique(f, v)]
        jv[v] = frozenset(good[:need])
    return SlimDecomposition(p, d, tuple(fs), jv)


def realizable_in_dimension(g: Graph, p: int, d: int, budget: Budget | None = None) -> SlimDecomposition | None:
    """Decomposition in exactly R^d found by the layered oracle, or ``None``."""
    result = None
    for layer_d, dec in direct_layers(g, p, d, budget):
        result = dec if layer_d == d else result
    return result


def direct_p_boxicity(g: Graph, p: int, d_max: int, budget: Budget | None = None) -> int | None:
    """Least ``d`` in ``[p, d_max]`` found realizable by the layered oracle."""
    for d, dec in direct_layers(g, p, d_max, budget):
        if d >= p and dec is not None:
            return d
    return None
