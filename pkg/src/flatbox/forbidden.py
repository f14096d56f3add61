"""Forbidden-cycle certificates and missing-path partition diagnostics.

``C_s`` is p-forbidden when the complement of ``C_s`` has no realization by
boxes of dimension at most ``p``. :func:`verify_forbidden` settles this by
exhaustive search and records a transcript digest; the verdict
``budget-exceeded`` is never folded into ``forbidden``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import __version__
from .boxicity import SearchStats, realizable_in_dimension, realizable_some_d
from .budget import Budget
from .errors import BudgetExceeded, InvalidArgument
from .graph import Graph, complement, complete_graph, make_cycle, outer_path_vertices
from .slim import SlimDecomposition, check_slim, decomposition_to_realization

FORBIDDEN = "forbidden"
REALIZABLE = "realizable"
BUDGET_EXCEEDED = "budget-exceeded"


def claimed_forbidden(s: int, p: int) -> bool:
    """Whether ``C_s`` is expected to be p-forbidden in every dimension d > p."""
    if p == 1:
        return s >= 7
    if p == 2:
        return s >= 9
    return s >= (3 * p + 1 if p % 2 == 0 else 3 * p + 2)


@dataclass
class ForbiddenCertificate:
    s: int
    p: int
    scope: int | str
    verdict: str
    claimed: bool
    transcript: dict
    decomposition: SlimDecomposition | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "s": self.s,
            "p": self.p,
            "d": self.scope,
            "verdict": self.verdict,
            "claimed_forbidden": self.claimed,
            "transcript": self.transcript,
            "tool_version": __version__,
            "notes": self.notes,
        }
        if self.decomposition is not None:
            out["decomposition"] = self.decomposition.to_json()
        return out


def verify_forbidden(
    s: int,
    p: int,
    scope: int | str = "all",
    budget: Budget | None = None,
    order_seed: int | None = None,
) -> ForbiddenCertificate:
    """Exhaustively decide whether the complement of ``C_s`` is realizable by p-boxes.

    ``scope="all"`` runs the factor-cover search, which covers every ambient
    dimension at once. An integer scope ``d`` runs the layered per-dimension
    oracle in R^d only. ``order_seed`` permutes the candidate order; the
    verdict must not depend on it.
    """
    if s < 5:
        raise InvalidArgument(f"s must be at least 5, got {s}")
    if p < 1:
        raise InvalidArgument(f"p must be at least 1, got {p}")
    if scope != "all" and not (isinstance(scope, int) and scope >= 1):
        raise InvalidArgument(f"scope must be 'all' or a positive dimension, got {scope!r}")
    budget = budget if budget is not None else Budget()
    g = complement(make_cycle(s))
    claimed = claimed_forbidden(s, p) and (scope == "all" or scope > p)
    notes = []
    if p == 1 and s >= 7:
        notes.append("d = 1 is included; the 1-dimensional case follows from the induced-C4 obstruction")
    if scope == "all":
        stats = SearchStats()
        try:
            res = realizable_some_d(g, p, budget, order_seed)
        except BudgetExceeded as exc:
            stats.nodes = exc.nodes
            return ForbiddenCertificate(s, p, scope, BUDGET_EXCEEDED, claimed, stats.to_json(), notes=notes + [str(exc)])
        verdict = REALIZABLE if res else FORBIDDEN
        dec = res.decomposition
        transcript = res.stats.to_json()
    else:
        try:
            dec = realizable_in_dimension(g, p, scope, budget)
        except BudgetExceeded as exc:
            return ForbiddenCertificate(s, p, scope, BUDGET_EXCEEDED, claimed, {"nodes": exc.nodes}, notes=notes + [str(exc)])
        verdict = REALIZABLE if dec is not None else FORBIDDEN
        transcript = {"enumeration_order": "layered-v1", "method": "layered", "nodes": budget.nodes}
    if dec is not None:
        # a realization must survive the full geometric round trip
        decomposition_to_realization(g, dec)
    return ForbiddenCertificate(s, p, scope, verdict, claimed, transcript, dec, notes)


# -- missing-path partitions ------------------------------------------------------


def system_solutions(s: int, p: int) -> list[tuple[int, int, int]]:
    """``(|J1|, |J2|, |J3|)`` with ``|J1| + 2|J2| + 3|J3| = s - 4`` and sum at most ``p``."""
    target = s - 4
    out = []
    for c in range(target // 3 + 1):
        for b in range((target - 3 * c) // 2 + 1):
            a = target - 3 * c - 2 * b
            if a + b + c <= p:
                out.append((a, b, c))
    return sorted(out)


@dataclass
class Partition:
    pieces: list[tuple[list[int], int]]

    def by_length(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {1: [], 2: [], 3: []}
        for path, j in self.pieces:
            out[len(path) - 1].append(j)
        return {k: sorted(v) for k, v in out.items()}

    def counts(self) -> tuple[int, int, int]:
        groups = self.by_length()
        return len(groups[1]), len(groups[2]), len(groups[3])

    def to_json(self) -> dict:
        groups = self.by_length()
        return {
            "pieces": [{"path": path, "represented_by": j} for path, j in self.pieces],
            "J1": groups[1],
            "J2": groups[2],
            "J3": groups[3],
        }


@dataclass
class PartitionReport:
    s: int
    anchor: int
    J: list[int]
    path: list[int]
    missing_in: list[list[int]]
    partitions: list[Partition]
    solutions: list[tuple[int, int, int]]
    system: list[tuple[int, int, int]]
    missing_property: dict[int, bool]

    @property
    def all_missing_property(self) -> bool:
        return all(self.missing_property.values())

    @property
    def equation_holds(self) -> bool:
        """Every partition uses all of ``J`` as representatives."""
        return all(sum(part.counts()) == len(self.J) for part in self.partitions)

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "anchor": self.anchor,
            "J": self.J,
            "outer_path": self.path,
            "missing_in": self.missing_in,
            "partitions": [part.to_json() for part in self.partitions],
            "solutions": [list(x) for x in self.solutions],
            "system_solutions": [list(x) for x in self.system],
            "missing_property": {str(j): v for j, v in self.missing_property.items()},
            "all_missing_property": self.all_missing_property,
            "equation_holds": self.equation_holds,
        }


def missing_partitions(s: int, anchor: int, fs: list[Graph], J: list[int]) -> PartitionReport:
    """Split the outer path of ``v_anchor`` into missing subpaths of length 1 to 3.

    Each piece must be missing, edge for edge, from a distinct factor
    ``F_j`` with ``j`` in ``J``. ``fs`` may be any graphs on ``1..s``; no
    validity of the surrounding decomposition is assumed.
    """
    path = outer_path_vertices(s, anchor)
    edges = list(zip(path, path[1:]))
    missing_in = [[j for j in J if not fs[j - 1].has_edge(u, w)] for u, w in edges]
    found: list[Partition] = []

    def extend(t: int, used: frozenset, pieces: list) -> None:
        if t == len(edges):
            found.append(Partition(list(pieces)))
            return
        for length in (1, 2, 3):
            if t + length > len(edges):
                break
            for j in J:
                if j in used or any(j not in missing_in[t + q] for q in range(length)):
                    continue
                pieces.append((path[t : t + length + 1], j))
                extend(t + length, used | {j}, pieces)
                pieces.pop()

    extend(0, frozenset(), [])
    solutions = sorted({part.counts() for part in found})
    prop = {j: any(row == [j] for row in missing_in) for j in J}
    return PartitionReport(s, anchor, list(J), path, missing_in, found, solutions, system_solutions(s, len(J)), prop)


def analyze_missing_partition(g: Graph, dec: SlimDecomposition, anchor: int) -> PartitionReport:
    """Partition report for a valid decomposition of the complement of ``C_s``."""
    s = g.n
    if s < 5 or g != complement(make_cycle(s)):
        raise InvalidArgument("graph must be the complement of a cycle C_s with s >= 5")
    check = check_slim(g, dec)
    if not check:
        raise InvalidArgument(f"invalid decomposition: {check.message}")
    if not 1 <= anchor <= s:
        raise InvalidArgument(f"anchor {anchor} outside 1..{s}")
    J = [i for i in range(1, dec.d + 1) if i not in dec.Jv[anchor]]
    report = missing_partitions(s, anchor, list(dec.Fs), J)
    path = report.path
    for i in dec.Jv[anchor]:
        f = dec.Fs[i - 1]
        if not all(f.has_edge(u, w) for u, w in zip(path, path[1:])):
            raise AssertionError("outer path not contained in a flat-axis factor")
    return report


def fig_scenario_factors(s: int, missing: dict[int, list[tuple[int, int]]], d: int) -> list[Graph]:
    """Factors on ``1..s`` that are complete except for the listed missing cycle pairs."""
    out = []
    for i in range(1, d + 1):
        drop = {(min(u, w), max(u, w)) for u, w in missing.get(i, [])}
        k = complete_graph(s)
        out.append(Graph(s, k.edges - drop))
    return out

