"""Interval graph recognition, realizations, and interval supergraphs.

Recognition follows the Fulkerson-Gross characterization: a graph is an
interval graph iff its maximal cliques admit a linear order in which the
cliques containing any fixed vertex are consecutive. The order is found by
backtracking, after a chordality pre-check. A realization gives vertex ``v``
the integer interval ``[first, last]`` of clique positions containing it.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .budget import Budget
from .errors import InvalidArgument
from .graph import Graph, intersection_of_graphs, iter_bits

__all__ = [
    "Recognition",
    "intersection_of_graphs",
    "interval_graph_of",
    "interval_supergraphs",
    "is_chordal",
    "is_interval",
    "is_interval_graph",
    "maximal_cliques",
]

Interval = tuple[int, int]


@dataclass
class Recognition:
    """Outcome of :func:`is_interval_graph`.

    ``realization`` is set when the graph is an interval graph, otherwise
    ``witness`` describes why not.
    """

    interval: bool
    realization: dict[int, Interval] | None = None
    witness: dict | None = None
    clique_order: list[list[int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.interval

    def to_json(self) -> dict:
        out: dict = {"interval": self.interval}
        if self.realization is not None:
            out["intervals"] = {str(v): list(iv) for v, iv in sorted(self.realization.items())}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


# -- bitmask core ------------------------------------------------------------


def _maximal_cliques(n: int, adj: Sequence[int], ordered: bool = True) -> list[int]:
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: ((p & adj[u]).bit_count(), -u))
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            bk(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    all_v = ((1 << (n + 1)) - 1) ^ 1
    if n:
        bk(0, all_v, 0)
    return sorted(out, key=lambda c: sorted(iter_bits(c))) if ordered else out


def _mcs_order(n: int, adj: Sequence[int]) -> list[int]:
    weight = [0] * (n + 1)
    done = 0
    order = []
    for _ in range(n):
        v = max((u for u in range(1, n + 1) if not done >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        done |= 1 << v
        for w in iter_bits(adj[v] & ~done):
            weight[w] += 1
    return order


def _is_chordal(n: int, adj: Sequence[int]) -> bool:
    seen = 0
    for v in _mcs_order(n, adj):
        earlier = adj[v] & seen
        for u in iter_bits(earlier):
            if (earlier & ~(1 << u)) & ~adj[u]:
                return False
        seen |= 1 << v
    return True


def _clique_order(cliques: list[int], stats: dict | None = None) -> list[int] | None:
    """Order ``cliques`` so every vertex occupies a consecutive run, or ``None``."""
    k = len(cliques)
    full = (1 << k) - 1
    failed: set[tuple[int, int]] = set()
    nodes = 0

    def extend(placed: int, last: int, seen: int, order: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if placed == full:
            return True
        if (placed, last) in failed:
            return False
        closed = seen & ~cliques[last] if last >= 0 else 0
        for i in range(k):
            if placed >> i & 1:
                continue
            c = cliques[i]
            if c & closed:
                continue
            if last >= 0 and (c & seen) & ~cliques[last]:
                continue
            order.append(i)
            if extend(placed | 1 << i, i, seen | c, order):
                return True
            order.pop()
        failed.add((placed, last))
        return False

    order: list[int] = []
    ok = extend(0, -1, 0, order)
    if stats is not None:
        stats["nodes"] = nodes
    return order if ok else None


def _interval_masks(n: int, adj: Sequence[int]) -> bool:
    if not _is_chordal(n, adj):
        return False
    return _clique_order(_maximal_cliques(n, adj, ordered=False)) is not None


# -- public API ---------------------------------------------------------------


def maximal_cliques(g: Graph) -> list[list[int]]:
    return [sorted(iter_bits(c)) for c in _maximal_cliques(g.n, g.adj)]


def is_chordal(g: Graph) -> bool:
    return _is_chordal(g.n, g.adj)


def is_interval(g: Graph) -> bool:
    """Boolean-only recognizer, no certificate."""
    return _interval_masks(g.n, g.adj)


def find_induced_c4(g: Graph) -> list[int] | None:
    """Vertices ``a, b, c, d`` of an induced 4-cycle a-b-c-d-a, or ``None``."""
    adj = g.adj
    for a in g.vertices:
        for b, d in combinations(iter_bits(adj[a]), 2):
            if adj[b] >> d & 1:
                continue
            common = adj[b] & adj[d] & ~adj[a] & ~(1 << a)
            for c in iter_bits(common):
                if c > a:
                    return [a, b, c, d]
    return None


def find_chordless_cycle(g: Graph) -> list[int] | None:
    """A chordless cycle of length at least 4, or ``None`` if ``g`` is chordal."""
    adj = g.adj
    for u in g.vertices:
        for a, b in combinations(iter_bits(adj[u]), 2):
            if adj[a] >> b & 1:
                continue
            blocked = (adj[u] | 1 << u) & ~(1 << a | 1 << b)
            parent = {a: 0}
            frontier = [a]
            while frontier and b not in parent:
                nxt = []
                for x in frontier:
                    for y in iter_bits(adj[x] & ~blocked):
                        if y not in parent:
                            parent[y] = x
                            nxt.append(y)
                frontier = nxt
            if b in parent:
                path = [b]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                return [u] + path[::-1]
    return None


def is_interval_graph(g: Graph) -> Recognition:
    """Decide intervality, returning a realization or a witness against it."""
    c4 = find_induced_c4(g)
    if c4 is not None:
        return Recognition(False, witness={"kind": "induced_c4", "vertices": c4})
    if not is_chordal(g):
        cycle = find_chordless_cycle(g)
        return Recognition(False, witness={"kind": "chordless_cycle", "vertices": cycle})
    cliques = _maximal_cliques(g.n, g.adj)
    stats: dict = {}
    order = _clique_order(cliques, stats)
    if order is None:
        digest = hashlib.sha256(
            repr(([sorted(iter_bits(c)) for c in cliques], stats["nodes"])).encode()
        ).hexdigest()
        return Recognition(
            False,
            witness={
                "kind": "no_consecutive_clique_order",
                "cliques": len(cliques),
                "nodes": stats["nodes"],
                "digest": digest,
            },
        )
    ordered = [cliques[i] for i in order]
    realization = {}
    for v in g.vertices:
        spots = [pos for pos, c in enumerate(ordered, start=1) if c >> v & 1]
        realization[v] = (spots[0], spots[-1])
    rec = Recognition(True, realization=realization, clique_order=[sorted(iter_bits(c)) for c in ordered])
    if interval_graph_of(realization, g.n) != g:
        raise AssertionError("interval realization does not reproduce the graph")
    return rec


def intervals_meet(a: tuple, b: tuple) -> bool:
    return max(a[0], b[0]) <= min(a[1], b[1])


def interval_graph_of(intervals: dict[int, tuple], n: int | None = None) -> Graph:
    """Intersection graph of closed intervals keyed by vertex ``1..n``."""
    n = max(intervals, default=0) if n is None else n
    if set(intervals) != set(range(1, n + 1)):
        raise InvalidArgument("intervals must be keyed exactly by 1..n")
    for v, (lo, hi) in intervals.items():
        if lo > hi:
            raise InvalidArgument(f"interval of vertex {v} has lo > hi")
    edges = [
        (u, w)
        for u, w in combinations(range(1, n + 1), 2)
        if intervals_meet(intervals[u], intervals[w])
    ]
    return Graph(n, frozenset(edges))


def realization_from_json(data: dict) -> dict[int, tuple[Fraction, Fraction]]:
    try:
        return {int(v): (Fraction(lo), Fraction(hi)) for v, (lo, hi) in data["intervals"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidArgument(f"malformed interval realization: {exc}") from None


# -- supergraphs ---------------------------------------------------------------


def _c4_checks(g: Graph, non_edges: Sequence[tuple[int, int]]) -> list[list[tuple[int, tuple[int, ...]]]]:
    """Vertex 4-sets that could become an induced C4, keyed by their last non-edge.

    A 4-set needs two non-edges of ``g`` to end up as an induced C4 in a
    supergraph; it can be tested once its last non-edge is decided.
    """
    index = {e: j for j, e in enumerate(non_edges)}
    checks: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in non_edges]
    for quad in combinations(range(1, g.n + 1), 4):
        inside = [index[e] for e in combinations(quad, 2) if e in index]
        if len(inside) >= 2:
            checks[max(inside)].append((sum(1 << v for v in quad), quad))
    return checks


def _has_c4(adj: Sequence[int], quads) -> bool:
    for mask, (a, b, c, d) in quads:
        if (
            (adj[a] & mask).bit_count() == 2
            and (adj[b] & mask).bit_count() == 2
            and (adj[c] & mask).bit_count() == 2
            and (adj[d] & mask).bit_count() == 2
        ):
            return True
    return False


def iter_interval_supergraphs(
    g: Graph,
    budget: Budget | None = None,
    stats: dict | None = None,
    prefilter: bool = True,
) -> Iterator[tuple[Graph, int]]:
    """Interval supergraphs of ``g`` with the non-edges each one still lacks.

    Yields ``(F, missing)`` where bit ``j`` of ``missing`` marks
    ``g.non_edges()[j]`` as absent from ``F``. Order: fewest added edges
    first, then lexicographic on the added edge list. With ``prefilter`` set,
    the non-edges are decided one at a time and a branch is cut as soon as a
    fully decided 4-set forms an induced C4; survivors go to the recognizer.
    """
    non_edges = g.non_edges()
    m = len(non_edges)
    if stats is not None:
        stats.setdefault("subsets", 0)
        stats.setdefault("c4_cuts", 0)
        stats.setdefault("non_interval", 0)
    checks = _c4_checks(g, non_edges) if prefilter else [[] for _ in non_edges]
    adj = list(g.adj)
    added: list[int] = []
    leaves: list[tuple[int, ...]] = []

    def decide(j: int) -> None:
        if budget is not None:
            budget.tick()
        if j == m:
            leaves.append(tuple(added))
            return
        u, w = non_edges[j]
        for add in (True, False):
            if add:
                adj[u] |= 1 << w
                adj[w] |= 1 << u
                added.append(j)
            if checks[j] and _has_c4(adj, checks[j]):
                if stats is not None:
                    stats["c4_cuts"] += 1
            else:
                decide(j + 1)
            if add:
                adj[u] &= ~(1 << w)
                adj[w] &= ~(1 << u)
                added.pop()

    decide(0)
    leaves.sort(key=lambda t: (len(t), t))
    full = (1 << m) - 1
    base = list(g.adj)
    for chosen in leaves:
        if budget is not None:
            budget.tick()
        if stats is not None:
            stats["subsets"] += 1
        cand = list(base)
        mask = full
        for j in chosen:
            u, w = non_edges[j]
            cand[u] |= 1 << w
            cand[w] |= 1 << u
            mask &= ~(1 << j)
        if not _interval_masks(g.n, cand):
            if stats is not None:
                stats["non_interval"] += 1
            continue
        yield Graph.from_masks(g.n, cand), mask


def interval_supergraphs(g: Graph, budget: int | None = None) -> Iterator[Graph]:
    """Stream interval graphs ``F`` with ``E(g) ⊆ E(F)``, at most ``budget`` of them.

    The full stream starts with ``g`` itself when ``g`` is interval and always
    ends with the complete graph; a capped stream is a prefix of it.
    """
    emitted = 0
    for f, _ in iter_interval_supergraphs(g):
        if budget is not None and emitted >= budget:
            return
        emitted += 1
        yield f
