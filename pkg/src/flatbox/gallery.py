"""Named constructions as self-validating fixtures.

Each construction carries a list of expected properties that are checked
when it is loaded; a failing property raises ``AssertionError``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .boxes import AxisBox, BoxFamily, intersection_graph, pierceable, piercing_number
from .boxicity import boxicity, realizable_some_d
from .errors import InvalidArgument
from .graph import Graph, complement, complete_graph, make_cycle
from .interval import is_interval
from .slim import SlimDecomposition, check_slim, decomposition_to_realization


def _minus(n: int, pairs: list[tuple[int, int]]) -> Graph:
    drop = {(min(u, w), max(u, w)) for u, w in pairs}
    return Graph(n, complete_graph(n).edges - drop)


def c5c_decomposition() -> tuple[Graph, SlimDecomposition]:
    """Complement of C_5 as two interval factors, 1-slim in R^2."""
    g = complement(make_cycle(5))
    f1 = _minus(5, [(3, 4), (4, 5), (5, 1)])
    f2 = _minus(5, [(1, 2), (2, 3)])
    # v4, v5 are flat on axis 1; v1, v2, v3 on axis 2
    jv = {1: {2}, 2: {2}, 3: {2}, 4: {1}, 5: {1}}
    return g, SlimDecomposition(1, 2, (f1, f2), jv)


def c7c_decomposition() -> tuple[Graph, SlimDecomposition]:
    """Complement of C_7 as three interval factors, 2-slim in R^3."""
    g = complement(make_cycle(7))
    f1 = _minus(7, [(1, 2), (2, 3)])
    f2 = _minus(7, [(3, 4), (4, 5), (5, 6)])
    f3 = _minus(7, [(6, 7), (7, 1)])
    jv = {1: {1}, 2: {1}, 3: {1}, 4: {2}, 5: {2}, 6: {3}, 7: {3}}
    return g, SlimDecomposition(2, 3, (f1, f2, f3), jv)


def c5c_family() -> BoxFamily:
    g, dec = c5c_decomposition()
    return decomposition_to_realization(g, dec)


def c7c_family() -> BoxFamily:
    g, dec = c7c_decomposition()
    return decomposition_to_realization(g, dec)


def cube_edges_graph() -> tuple[Graph, BoxFamily]:
    """The 12 edges of the unit cube in R^3 as segments, adjacent when they share a corner."""
    boxes = []
    for axis in range(3):
        others = [a for a in range(3) if a != axis]
        for u, w in [(0, 0), (0, 1), (1, 0), (1, 1)]:
            ivs = [None, None, None]
            ivs[axis] = (0, 1)
            ivs[others[0]] = (u, u)
            ivs[others[1]] = (w, w)
            boxes.append(AxisBox(tuple(ivs)))
    family = BoxFamily(3, tuple(boxes))
    corners = [
        {tuple(iv[0] for iv in b.intervals), tuple(iv[1] for iv in b.intervals)} for b in boxes
    ]
    edges = [(i + 1, j + 1) for i, j in combinations(range(12), 2) if corners[i] & corners[j]]
    return Graph(12, frozenset(edges)), family


def wheel_w4() -> Graph:
    """C4 with a hub joined to every rim vertex (hub = 5)."""
    return Graph(5, make_cycle(4).edges | {(v, 5) for v in range(1, 5)})


def disjoint_intervals(k: int) -> BoxFamily:
    """``k`` pairwise-disjoint unit intervals ``[2i, 2i + 1]`` on the line."""
    if k < 1:
        raise InvalidArgument(f"need at least one interval, got {k}")
    return BoxFamily(1, tuple(AxisBox(((2 * i, 2 * i + 1),)) for i in range(k)))


def fig7_scenario() -> dict:
    """The illustrative s = 11, d = 5 layout with J = {3, 4, 5} around v_1.

    Factors 1 and 2 are complete; 3, 4 and 5 miss the listed outer-path
    pieces. This is a bookkeeping scenario, not a valid decomposition.
    """
    missing = {
        3: [(7, 8), (8, 9), (9, 10)],
        4: [(6, 7), (7, 8)],
        5: [(3, 4), (4, 5), (5, 6)],
    }
    fs = [_minus(11, missing.get(i, [])) for i in range(1, 6)]
    return {"s": 11, "anchor": 1, "d": 5, "J": [3, 4, 5], "Fs": fs, "missing": missing}


# -- registry -----------------------------------------------------------------------


@dataclass
class NamedConstruction:
    name: str
    description: str
    build: Callable[[], dict]
    expected: list[tuple[str, Callable[[dict], bool]]] = field(default_factory=list)

    def load(self) -> dict:
        payload = self.build()
        for label, check in self.expected:
            if not check(payload):
                raise AssertionError(f"{self.name}: expected property failed: {label}")
        return payload

    def to_json(self) -> dict:
        payload = self.load()
        out: dict = {"name": self.name, "description": self.description}
        for key, value in payload.items():
            out[key] = value.to_json() if hasattr(value, "to_json") else _plain(value)
        out["properties"] = [label for label, _ in self.expected]
        return out


def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, Fraction):
        return str(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    return value


def _all_subfamilies_2_pierceable(family: BoxFamily, size: int) -> bool:
    return all(pierceable(family.subfamily(idx), 2) for idx in combinations(range(len(family)), size))


def _slim_build(fn):
    def build() -> dict:
        g, dec = fn()
        return {"graph": g, "decomposition": dec, "family": decomposition_to_realization(g, dec)}

    return build


def _cube_build() -> dict:
    g, family = cube_edges_graph()
    return {"graph": g, "family": family}


def _wheel_build() -> dict:
    g = wheel_w4()
    return {"graph": g, "boxicity": boxicity(g).value, "segments_realizable": realizable_some_d(g, 1).realizable}


def _fig7_build() -> dict:
    sc = fig7_scenario()
    return {"s": sc["s"], "anchor": sc["anchor"], "d": sc["d"], "J": sc["J"], "Fs": sc["Fs"]}


CONSTRUCTIONS: dict[str, NamedConstruction] = {
    c.name: c
    for c in [
        NamedConstruction(
            "c5c",
            "complement of C5 as segments in R^2 (1-slim, d = 2)",
            _slim_build(c5c_decomposition),
            [
                ("both factors are interval graphs", lambda x: all(is_interval(f) for f in x["decomposition"].Fs)),
                ("decomposition is 1-slim in R^2", lambda x: bool(check_slim(x["graph"], x["decomposition"]))),
                ("family realizes the graph", lambda x: intersection_graph(x["family"]) == x["graph"]),
                ("every box has dimension <= 1", lambda x: x["family"].max_dim() <= 1),
                ("every 4 boxes are 2-pierceable", lambda x: _all_subfamilies_2_pierceable(x["family"], 4)),
                ("piercing number is 3", lambda x: piercing_number(x["family"]) == 3),
            ],
        ),
        NamedConstruction(
            "c7c",
            "complement of C7 as rectangles in R^3 (2-slim, d = 3)",
            _slim_build(c7c_decomposition),
            [
                ("all factors are interval graphs", lambda x: all(is_interval(f) for f in x["decomposition"].Fs)),
                ("decomposition is 2-slim in R^3", lambda x: bool(check_slim(x["graph"], x["decomposition"]))),
                ("family realizes the graph", lambda x: intersection_graph(x["family"]) == x["graph"]),
                ("every box has dimension <= 2", lambda x: x["family"].max_dim() <= 2),
                ("every 6 boxes are 2-pierceable", lambda x: _all_subfamilies_2_pierceable(x["family"], 6)),
                ("piercing number is 3", lambda x: piercing_number(x["family"]) == 3),
            ],
        ),
        NamedConstruction(
            "cube-edges",
            "the 12 edges of the unit cube as segments in R^3",
            _cube_build,
            [
                ("family realizes the graph", lambda x: intersection_graph(x["family"]) == x["graph"]),
                ("12 boxes, each of dimension 1", lambda x: len(x["family"]) == 12 and all(b.dim == 1 for b in x["family"].boxes)),
                ("4-regular", lambda x: all(x["graph"].degree(v) == 4 for v in x["graph"].vertices)),
            ],
        ),
        NamedConstruction(
            "wheel-w4",
            "C4 plus a hub: boxicity 2, yet no realization by segments in any dimension",
            _wheel_build,
            [
                ("boxicity is 2", lambda x: x["boxicity"] == 2),
                ("not realizable by 1-boxes for any d", lambda x: not x["segments_realizable"]),
            ],
        ),
        NamedConstruction(
            "disjoint-intervals-3",
            "three pairwise-disjoint intervals on the line",
            lambda: {"family": disjoint_intervals(3)},
            [
                ("piercing number is 3", lambda x: piercing_number(x["family"]) == 3),
                ("every 2 intervals are 2-pierceable", lambda x: _all_subfamilies_2_pierceable(x["family"], 2)),
            ],
        ),
        NamedConstruction(
            "fig7-scenario",
            "outer-path bookkeeping layout, s = 11, d = 5, J = {3, 4, 5}",
            _fig7_build,
            [("factors live on 11 vertices", lambda x: all(f.n == 11 for f in x["Fs"]))],
        ),
    ]
}


def get(name: str) -> dict:
    try:
        return CONSTRUCTIONS[name].load()
    except KeyError:
        raise InvalidArgument(f"unknown construction {name!r}; known: {sorted(CONSTRUCTIONS)}") from None
