from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from catalog import all_graphs, to_nx
from conftest import graphs
from flatbox.budget import Budget
from flatbox.errors import BudgetExceeded, InvalidArgument
from flatbox.graph import Graph, complement, complete_graph, empty_graph, make_cycle, make_path
from flatbox.interval import (
    find_chordless_cycle,
    find_induced_c4,
    interval_graph_of,
    interval_supergraphs,
    is_chordal,
    is_interval,
    is_interval_graph,
    iter_interval_supergraphs,
    maximal_cliques,
    realization_from_json,
)


def oracle_is_interval(g: Graph) -> bool:
    """Try every ordering of the maximal cliques for the consecutive-ones property."""
    h = to_nx(g)
    if not nx.is_chordal(h):
        return False
    cliques = [frozenset(c) for c in nx.find_cliques(h)]
    for order in permutations(cliques):
        if all(
            (spots := [i for i, c in enumerate(order) if v in c]) and spots[-1] - spots[0] + 1 == len(spots)
            for v in g.vertices
        ):
            return True
    return False


C5C_F1 = Graph(5, complete_graph(5).edges - {(3, 4), (4, 5), (1, 5)})


class TestRecognition:
    def test_c4(self):
        rec = is_interval_graph(make_cycle(4))
        assert not rec
        assert rec.witness == {"kind": "induced_c4", "vertices": [1, 2, 3, 4]}

    def test_p5(self):
        rec = is_interval_graph(make_path([1, 2, 3, 4, 5]))
        assert rec.interval
        assert interval_graph_of(rec.realization, 5) == make_path([1, 2, 3, 4, 5])

    def test_p5_complement(self):
        rec = is_interval_graph(complement(make_path([1, 2, 3, 4, 5])))
        assert not rec
        assert rec.witness["kind"] == "induced_c4"
        sub = set(rec.witness["vertices"])
        assert len(sub) == 4

    def test_c5c_factor_is_interval(self):
        assert is_chordal(C5C_F1)
        assert is_interval_graph(C5C_F1)

    def test_long_hole_witness(self):
        rec = is_interval_graph(make_cycle(6))
        assert rec.witness["kind"] == "chordless_cycle"
        assert sorted(rec.witness["vertices"]) == [1, 2, 3, 4, 5, 6]

    def test_asteroidal_triple_witness(self):
        # chordal but not interval: subdivided claw
        g = Graph(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
        rec = is_interval_graph(g)
        assert is_chordal(g) and not rec
        assert rec.witness["kind"] == "no_consecutive_clique_order"
        assert rec.witness["cliques"] == 6

    def test_json_shape(self):
        data = is_interval_graph(make_path([1, 2, 3])).to_json()
        assert data["interval"] is True
        assert set(data["intervals"]) == {"1", "2", "3"}
        real = realization_from_json(data)
        assert interval_graph_of(real, 3) == make_path([1, 2, 3])

    def test_empty_and_edgeless(self):
        assert is_interval(Graph(0, []))
        assert is_interval_graph(empty_graph(4))

    def test_maximal_cliques_match_networkx(self):
        g = complement(make_cycle(7))
        mine = {frozenset(c) for c in maximal_cliques(g)}
        theirs = {frozenset(c) for c in nx.find_cliques(to_nx(g))}
        assert mine == theirs

    def test_agrees_with_oracle_up_to_seven(self):
        for g in all_graphs(7):
            rec = is_interval_graph(g)
            assert rec.interval == oracle_is_interval(g), g
            if rec:
                assert interval_graph_of(rec.realization, g.n) == g

    @settings(max_examples=200)
    @given(graphs(max_n=9))
    def test_witnesses_are_genuine(self, g):
        rec = is_interval_graph(g)
        if rec:
            assert interval_graph_of(rec.realization, g.n) == g
            return
        w = rec.witness
        if w["kind"] == "induced_c4":
            a, b, c, d = w["vertices"]
            assert all(g.has_edge(x, y) for x, y in [(a, b), (b, c), (c, d), (d, a)])
            assert not g.has_edge(a, c) and not g.has_edge(b, d)
        elif w["kind"] == "chordless_cycle":
            cyc = w["vertices"]
            k = len(cyc)
            assert k >= 4
            for i, j in combinations(range(k), 2):
                assert g.has_edge(cyc[i], cyc[j]) == ((j - i) in (1, k - 1))
        else:
            assert is_chordal(g)
        assert find_induced_c4(g) is not None or find_chordless_cycle(g) is not None or is_chordal(g)

    @given(graphs(max_n=8))
    def test_chordality_matches_networkx(self, g):
        assert is_chordal(g) == nx.is_chordal(to_nx(g))

    def test_interval_graph_of_validates(self):
        with pytest.raises(InvalidArgument):
            interval_graph_of({1: (0, 1), 3: (0, 1)}, 2)
        with pytest.raises(InvalidArgument):
            interval_graph_of({1: (2, 1)}, 1)


class TestSupergraphs:
    def test_k3_first(self):
        assert next(interval_supergraphs(complete_graph(3))) == complete_graph(3)

    def test_c4_has_both_diamonds(self):
        stream = list(interval_supergraphs(make_cycle(4)))
        diamonds = {Graph(4, make_cycle(4).edges | {d}) for d in [(1, 3), (2, 4)]}
        assert diamonds <= set(stream)
        assert stream[-1] == complete_graph(4)

    def test_budget_gives_prefix(self):
        full = list(interval_supergraphs(make_cycle(5)))
        assert list(interval_supergraphs(make_cycle(5), budget=3)) == full[:3]

    @settings(max_examples=60)
    @given(graphs(max_n=5))
    def test_contract(self, g):
        out = list(interval_supergraphs(g))
        assert out[-1] == complete_graph(g.n)
        assert len(set(out)) == len(out)
        for f in out:
            assert g.edges <= f.edges and is_interval(f)

    @settings(max_examples=60)
    @given(graphs(max_n=5))
    def test_prefilter_loses_nothing(self, g):
        fast = [f for f, _ in iter_interval_supergraphs(g)]
        slow = [f for f, _ in iter_interval_supergraphs(g, prefilter=False)]
        assert fast == slow

    def test_exhaustive_against_brute_force(self):
        g = complement(make_cycle(6))
        non_edges = g.non_edges()
        expected = []
        for r in range(len(non_edges) + 1):
            for added in combinations(non_edges, r):
                f = Graph(g.n, g.edges | set(added))
                if oracle_is_interval(f):
                    expected.append(f)
        assert list(interval_supergraphs(g)) == expected

    def test_missing_mask(self):
        g = make_cycle(4)
        for f, missing in iter_interval_supergraphs(g):
            lacks = {e for j, e in enumerate(g.non_edges()) if missing >> j & 1}
            assert lacks == set(complement(f).edges)

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            list(iter_interval_supergraphs(empty_graph(6), Budget(max_nodes=10)))
