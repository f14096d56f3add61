"""Exact chromatic number with a colouring certificate.

Lower bound from a maximum clique, upper bound from greedy DSATUR, and an
exact DSATUR backtracking test for each colour count in between. Vertex and
colour orders are fixed, so the returned colouring is reproducible.
"""

from __future__ import annotations

from .graph import Graph, iter_bits


def max_clique(g: Graph) -> list[int]:
    best: list[int] = []

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(clique) > len(best):
                best = list(clique)
            return
        if len(clique) + cand.bit_count() <= len(best):
            return
        for v in iter_bits(cand):
            if len(clique) + cand.bit_count() <= len(best):
                return
            clique.append(v)
            expand(clique, cand & g.adj[v])
            clique.pop()
            cand &= ~(1 << v)

    expand([], g.vertex_mask)
    return sorted(best)


def _pick_vertex(g: Graph, color: dict[int, int], uncolored: int) -> int:
    best, best_key = 0, None
    for v in iter_bits(uncolored):
        sat = len({color[w] for w in iter_bits(g.adj[v]) if w in color})
        key = (sat, g.degree(v), -v)
        if best_key is None or key > best_key:
            best, best_key = v, key
    return best


def dsatur_greedy(g: Graph) -> dict[int, int]:
    color: dict[int, int] = {}
    uncolored = g.vertex_mask
    while uncolored:
        v = _pick_vertex(g, color, uncolored)
        used = {color[w] for w in iter_bits(g.adj[v]) if w in color}
        c = 1
        while c in used:
            c += 1
        color[v] = c
        uncolored &= ~(1 << v)
    return color


def k_coloring(g: Graph, k: int) -> dict[int, int] | None:
    """A proper colouring with colours ``1..k``, or ``None`` if none exists."""
    if g.n == 0:
        return {}
    if k <= 0:
        return None
    color: dict[int, int] = {}

    def solve(uncolored: int, used_max: int) -> bool:
        if not uncolored:
            return True
        v = _pick_vertex(g, color, uncolored)
        forbidden = {color[w] for w in iter_bits(g.adj[v]) if w in color}
        # a fresh colour is interchangeable with any other unused one
        for c in range(1, min(k, used_max + 1) + 1):
            if c in forbidden:
                continue
            color[v] = c
            if solve(uncolored & ~(1 << v), max(used_max, c)):
                return True
            del color[v]
        return False

    return dict(color) if solve(g.vertex_mask, 0) else None


def chromatic_number(g: Graph) -> tuple[int, dict[int, int]]:
    """Exact χ(g) together with an optimal colouring ``vertex -> colour``."""
    if g.n == 0:
        return 0, {}
    upper = dsatur_greedy(g)
    ub = max(upper.values())
    lb = max(1, len(max_clique(g)))
    for k in range(lb, ub):
        found = k_coloring(g, k)
        if found is not None:
            return k, found
    return ub, upper


def is_proper_coloring(g: Graph, coloring: dict[int, int]) -> bool:
    if set(coloring) != set(g.vertices):
        return False
    return all(coloring[u] != coloring[w] for u, w in g.edges)
