"""Slim decompositions: interval factors plus per-vertex flat axes.

A graph ``G`` on ``1..n`` has the p-slim box property in R^d when it is the
intersection of interval graphs ``F_1..F_d`` and every vertex ``v`` has a set
``J_v`` of ``d - p`` axes on which its neighbourhood in ``F_i`` is a clique.
Such a decomposition is interchangeable with a family of boxes of dimension
at most ``p`` realizing ``G``; both conversions live here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .boxes import AxisBox, BoxFamily, intersection_graph, project_axis
from .errors import InvalidArgument
from .graph import Graph, iter_bits, neighborhood_is_clique
from .interval import is_interval, is_interval_graph


@dataclass
class SlimDecomposition:
    p: int
    d: int
    Fs: tuple[Graph, ...]
    Jv: dict[int, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.Fs = tuple(self.Fs)
        self.Jv = {int(v): frozenset(int(i) for i in js) for v, js in self.Jv.items()}

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "Fs": [f.to_json() for f in self.Fs],
            "Jv": {str(v): sorted(js) for v, js in sorted(self.Jv.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "SlimDecomposition":
        try:
            return cls(
                int(data["p"]),
                int(data["d"]),
                tuple(Graph.from_json(f) for f in data["Fs"]),
                {int(v): frozenset(js) for v, js in data["Jv"].items()},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgument(f"malformed slim decomposition JSON: {exc}") from None


@dataclass
class SlimCheck:
    """Result of :func:`check_slim`; ``condition`` names the first failure."""

    ok: bool
    condition: str | None = None
    vertex: int | None = None
    index: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        out: dict = {"slim": self.ok}
        if not self.ok:
            out.update(condition=self.condition, vertex=self.vertex, index=self.index, message=self.message)
        return out


def _fail(condition: str, message: str, vertex=None, index=None) -> SlimCheck:
    return SlimCheck(False, condition, vertex, index, message)


def check_slim(g: Graph, dec: SlimDecomposition) -> SlimCheck:
    """Check every slim-decomposition condition against ``g``.

    Conditions, in reporting order: ``shape`` (factor count and vertex sets),
    ``interval`` (each factor is an interval graph), ``intersection`` (the
    factors intersect to ``g``), ``jv`` (each ``J_v`` holds ``d - p`` valid
    axes) and ``completeness`` (the neighbourhood of ``v`` is a clique in
    ``F_i`` for ``i`` in ``J_v``).
    """
    if dec.p < 0 or dec.d < 1:
        return _fail("shape", f"need p >= 0 and d >= 1, got p={dec.p}, d={dec.d}")
    if len(dec.Fs) != dec.d:
        return _fail("shape", f"{len(dec.Fs)} factors for d={dec.d}")
    for i, f in enumerate(dec.Fs, start=1):
        if f.n != g.n:
            return _fail("shape", f"factor {i} has {f.n} vertices, graph has {g.n}", index=i)
    for i, f in enumerate(dec.Fs, start=1):
        if not is_interval(f):
            return _fail("interval", f"factor {i} is not an interval graph", index=i)
    for u, w in g.sorted_edges():
        for i, f in enumerate(dec.Fs, start=1):
            if not f.has_edge(u, w):
                return _fail("intersection", f"edge ({u}, {w}) of G missing from factor {i}", vertex=u, index=i)
    for u, w in g.non_edges():
        if all(f.has_edge(u, w) for f in dec.Fs):
            return _fail("intersection", f"non-edge ({u}, {w}) of G present in every factor", vertex=u)
    need = max(dec.d - dec.p, 0)
    if set(dec.Jv) != set(g.vertices):
        return _fail("jv", "J_v must be given for exactly the vertices 1..n")
    for v in g.vertices:
        js = dec.Jv[v]
        if len(js) != need:
            return _fail("jv", f"|J_{v}| = {len(js)}, expected {need}", vertex=v)
        bad = [i for i in js if not 1 <= i <= dec.d]
        if bad:
            return _fail("jv", f"J_{v} has axis {bad[0]} outside 1..{dec.d}", vertex=v, index=bad[0])
    for v in g.vertices:
        for i in sorted(dec.Jv[v]):
            if not neighborhood_is_clique(dec.Fs[i - 1], v):
                return _fail(
                    "completeness",
                    f"neighbourhood of {v} in factor {i} is not a clique",
                    vertex=v,
                    index=i,
                )
    return SlimCheck(True)


def realization_to_decomposition(family: BoxFamily, p: int) -> SlimDecomposition:
    """Project a family of boxes of dimension ``<= p`` onto the axes.

    ``J_v`` takes the lowest-indexed ``d - p`` axes on which box ``v`` is a point.
    """
    if p < 0:
        raise InvalidArgument(f"p must be non-negative, got {p}")
    for v, box in enumerate(family.boxes, start=1):
        if box.dim > p:
            raise InvalidArgument(f"box {v} has dimension {box.dim} > {p}")
    fs = tuple(project_axis(family, axis)[1] for axis in range(1, family.d + 1))
    need = max(family.d - p, 0)
    jv = {v: frozenset(box.degenerate_axes()[:need]) for v, box in enumerate(family.boxes, start=1)}
    return SlimDecomposition(p, family.d, fs, jv)


def decomposition_to_realization(g: Graph, dec: SlimDecomposition) -> BoxFamily:
    """Build boxes of dimension ``<= p`` whose intersection graph is ``g``.

    Each factor is realized by integer intervals; then, axis by axis, every
    vertex ``v`` with that axis in ``J_v`` is shrunk to a point common to its
    own interval and its neighbours'. Pairwise intersecting intervals share a
    point, so the factor's intersection graph is unchanged by each shrink.
    """
    check = check_slim(g, dec)
    if not check:
        raise InvalidArgument(f"not a slim decomposition of the graph: {check.message}")
    per_axis: list[dict[int, tuple[Fraction, Fraction]]] = []
    for i, f in enumerate(dec.Fs, start=1):
        rec = is_interval_graph(f)
        ivs = {v: (Fraction(lo), Fraction(hi)) for v, (lo, hi) in rec.realization.items()}
        for v in g.vertices:
            if i not in dec.Jv[v]:
                continue
            group = [v] + list(iter_bits(f.adj[v]))
            point = max(ivs[u][0] for u in group)
            if point > min(ivs[u][1] for u in group):
                raise AssertionError("neighbourhood intervals have no common point")
            ivs[v] = (point, point)
        per_axis.append(ivs)
    boxes = tuple(AxisBox(tuple(per_axis[i][v] for i in range(dec.d))) for v in g.vertices)
    family = BoxFamily(dec.d, boxes)
    if intersection_graph(family) != g:
        raise AssertionError("constructed boxes do not realize the graph")
    if family.max_dim() > dec.p:
        raise AssertionError("constructed boxes exceed dimension p")
    return family
