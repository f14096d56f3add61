"""Finite simple graphs on vertices 1..n and exact primitives over them.

Vertices are 1-based so that cycle arithmetic lines up with the usual
``v_1 .. v_s`` labelling; adjacency is kept as integer bitmasks where bit ``v``
stands for vertex ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidArgument

Edge = tuple[int, int]


def _norm_edge(u: int, w: int) -> Edge:
    return (u, w) if u < w else (w, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertex set ``{1, .., n}``.

    Equality is label-sensitive: two isomorphic graphs with different labels
    compare unequal.
    """

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidArgument(f"vertex count must be a non-negative int, got {self.n!r}")
        normalized = set()
        for e in self.edges:
            try:
                u, w = e
            except (TypeError, ValueError):
                raise InvalidArgument(f"edge {e!r} is not a pair") from None
            u, w = int(u), int(w)
            if u == w:
                raise InvalidArgument(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= w <= self.n):
                raise InvalidArgument(f"edge ({u}, {w}) has an endpoint outside 1..{self.n}")
            normalized.add(_norm_edge(u, w))
        object.__setattr__(self, "edges", frozenset(normalized))

    # -- views -----------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbour bitmask per vertex; index 0 is unused."""
        masks = [0] * (self.n + 1)
        for u, w in self.edges:
            masks[u] |= 1 << w
            masks[w] |= 1 << u
        return tuple(masks)

    @property
    def vertex_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) ^ 1

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.adj[u] >> w & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def non_edges(self) -> list[Edge]:
        """Missing pairs in lexicographic order."""
        return [(u, w) for u, w in combinations(self.vertices, 2) if not self.has_edge(u, w)]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            return cls(int(data["n"]), frozenset(tuple(e) for e in data.get("edges", [])))
        except (KeyError, TypeError) as exc:
            raise InvalidArgument(f"malformed graph JSON: {exc}") from None

    @classmethod
    def from_masks(cls, n: int, adj: Iterable[int]) -> "Graph":
        adj = list(adj)
        edges = [(u, w) for u in range(1, n + 1) for w in iter_bits(adj[u]) if u < w]
        return cls(n, frozenset(edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- constructors -----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def make_cycle(s: int) -> Graph:
    """The cycle ``v_1 v_2 .. v_s v_1``."""
    if s < 3:
        raise InvalidArgument(f"a cycle needs at least 3 vertices, got {s}")
    return Graph(s, frozenset(_norm_edge(i, i % s + 1) for i in range(1, s + 1)))


def make_path(labels: list[int], n: int | None = None) -> Graph:
    """Path through ``labels`` in order.

    The vertex set is ``1..n`` where ``n`` defaults to ``max(labels)``; vertices
    not on the path stay isolated.
    """
    if not labels:
        raise InvalidArgument("a path needs at least one vertex")
    if len(set(labels)) != len(labels):
        raise InvalidArgument(f"duplicate labels in path {labels}")
    n = max(labels) if n is None else n
    return Graph(n, frozenset(_norm_edge(a, b) for a, b in zip(labels, labels[1:])))


def cycle_index(i: int, s: int) -> int:
    """Map any integer index onto ``1..s`` modulo ``s``."""
    return (i - 1) % s + 1


def outer_path(s: int, k: int) -> Graph:
    """Path ``v_{k+2} .. v_{k+s-2}`` of the cycle ``C_s`` (indices mod ``s``).

    It covers the cycle vertices at distance at least two from ``v_k`` and
    has ``s - 4`` edges. The result lives on vertex set ``1..s``.
    """
    if s < 5:
        raise InvalidArgument(f"outer path needs s >= 5, got {s}")
    if not 1 <= k <= s:
        raise InvalidArgument(f"anchor {k} outside 1..{s}")
    return make_path(outer_path_vertices(s, k), n=s)


def outer_path_vertices(s: int, k: int) -> list[int]:
    return [cycle_index(k + j, s) for j in range(2, s - 1)]


# -- transformations --------------------------------------------------------


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(g.non_edges()))


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``subset``, relabelled ``1..|subset|``.

    Returns the graph together with the label map: position ``i - 1`` holds
    the original label of new vertex ``i``.
    """
    labels = sorted(set(subset))
    for v in labels:
        if not 1 <= v <= g.n:
            raise InvalidArgument(f"vertex {v} outside 1..{g.n}")
    index = {v: i for i, v in enumerate(labels, start=1)}
    edges = [(index[u], index[w]) for u, w in g.edges if u in index and w in index]
    return Graph(len(labels), frozenset(edges)), labels


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in g.vertices if u != v])[0]


def intersection_of_graphs(graphs: list[Graph], n: int | None = None) -> Graph:
    """Edge-wise intersection; the empty list yields the complete graph on ``n``."""
    if not graphs:
        if n is None:
            raise InvalidArgument("empty intersection needs an explicit vertex count")
        return complete_graph(n)
    counts = {g.n for g in graphs}
    if len(counts) != 1 or (n is not None and counts != {n}):
        raise InvalidArgument(f"mismatched vertex counts {sorted(counts)}")
    edges = set(graphs[0].edges)
    for g in graphs[1:]:
        edges &= g.edges
    return Graph(graphs[0].n, frozenset(edges))


def neighborhood_closure(g: Graph, v: int) -> set[Edge]:
    """All pairs of distinct neighbours of ``v``, present in ``g`` or not."""
    if not 1 <= v <= g.n:
        raise InvalidArgument(f"vertex {v} outside 1..{g.n}")
    return set(combinations(g.neighbors(v), 2))


def neighborhood_is_clique(g: Graph, v: int) -> bool:
    nbrs = g.adj[v]
    for u in iter_bits(nbrs):
        if (nbrs & ~(1 << u)) & ~g.adj[u]:
            return False
    return True


# -- structural predicates -------------------------------------------------


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1 << 1
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.vertex_mask


def two_coloring(g: Graph) -> dict[int, int] | None:
    """A proper 2-colouring (colours 1, 2) or ``None`` when ``g`` has an odd cycle."""
    color: dict[int, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 1
        stack = [root]
        while stack:
            v = stack.pop()
            for w in iter_bits(g.adj[v]):
                if w not in color:
                    color[w] = 3 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_odd_cycle(g: Graph) -> bool:
    return (
        g.n >= 3
        and g.n % 2 == 1
        and all(g.degree(v) == 2 for v in g.vertices)
        and is_connected(g)
    )


def is_3_critical(g: Graph) -> bool:
    """χ(g) = 3 and deleting any single vertex leaves χ = 2."""
    from .coloring import chromatic_number

    if g.n == 0 or chromatic_number(g)[0] != 3:
        return False
    return all(chromatic_number(delete_vertex(g, v))[0] == 2 for v in g.vertices)
