import pytest
from hypothesis import given, settings, strategies as st

from catalog import all_graphs
from conftest import graphs
from flatbox.boxes import intersection_graph
from flatbox.boxicity import (
    GREATER_THAN_D_MAX,
    INFEASIBLE,
    bad_vertices,
    boxicity,
    direct_p_boxicity,
    drop_dominated,
    enumerate_factors,
    min_factor_count,
    p_boxicity,
    realizable_in_dimension,
    realizable_some_d,
)
from flatbox.budget import Budget
from flatbox.errors import BudgetExceeded
from flatbox.graph import Graph, complement, complete_graph, empty_graph, intersection_of_graphs, make_cycle, make_path
from flatbox.interval import is_interval
from flatbox.slim import check_slim, decomposition_to_realization


class TestBoxicity:
    def test_interval_graph(self):
        assert boxicity(make_path([1, 2, 3, 4])).value == 1

    def test_complete(self):
        assert boxicity(complete_graph(4)).value == 0

    def test_c4(self):
        res = boxicity(make_cycle(4))
        assert res.value == 2
        assert intersection_of_graphs(res.factors) == make_cycle(4)
        assert all(is_interval(f) for f in res.factors)

    def test_c5c(self):
        assert boxicity(complement(make_cycle(5))).value == 2

    def test_k222_needs_three(self):
        # complement of 3K2 is the octahedron, boxicity n/2
        g = complement(Graph(6, [(1, 2), (3, 4), (5, 6)]))
        assert boxicity(g).value == 3

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            boxicity(empty_graph(6), Budget(max_nodes=20))

    def test_factors_are_valid(self):
        for g in all_graphs(5):
            res = boxicity(g)
            if res.value:
                assert len(res.factors) == res.value
                assert intersection_of_graphs(res.factors, g.n) == g

    def test_roberts_consistency(self):
        """The cover search agrees with the least d admitting a full-dimensional realization."""
        for g in all_graphs(6):
            box = boxicity(g).value
            if g.is_complete():
                assert box == 0
                continue
            least = next(d for d in range(1, 4) if realizable_in_dimension(g, d, d) is not None)
            assert box == least, g
            dec = realizable_in_dimension(g, box, box)
            assert intersection_graph(decomposition_to_realization(g, dec)) == g
            assert direct_p_boxicity(g, box, 3) == box


class TestFactors:
    def test_bad_vertices(self):
        assert bad_vertices(make_path([1, 2, 3])) == 1 << 2
        assert bad_vertices(complete_graph(3)) == 0

    def test_domination_keeps_cover_power(self):
        g = complement(make_cycle(6))
        everything = enumerate_factors(g)
        kept = drop_dominated(everything, True)
        assert len(kept) < len(everything)
        for f in everything:
            assert any(f.missing & ~k.missing == 0 and k.bad & ~f.bad == 0 for k in kept)


class TestPBoxicity:
    @pytest.mark.parametrize("s", range(4, 9))
    def test_cycles(self, s):
        assert p_boxicity(make_cycle(s), 1, 6).value == 2

    def test_c7c_infeasible(self):
        res = p_boxicity(complement(make_cycle(7)), 1, 6)
        assert res.value == INFEASIBLE and res.k_min is None

    def test_greater_than_d_max(self):
        res = p_boxicity(complement(make_cycle(7)), 2, 2)
        assert res.value == GREATER_THAN_D_MAX and res.k_min == 3

    def test_decomposition_valid(self):
        g = make_cycle(6)
        res = p_boxicity(g, 1, 6, cross_check=True)
        assert check_slim(g, res.decomposition)
        fam = decomposition_to_realization(g, res.decomposition)
        assert fam.max_dim() <= 1 and fam.d == res.value

    def test_invalid_p(self):
        with pytest.raises(ValueError):
            p_boxicity(make_cycle(4), 0, 3)

    def test_sandwich_up_to_six(self):
        for g in all_graphs(6):
            box = boxicity(g).value
            for p in (1, 2, 3):
                value = p_boxicity(g, p, 8).value
                if p >= box:
                    assert value == p, (g, p)
                if isinstance(value, int):
                    assert box <= value

    @settings(max_examples=40)
    @given(graphs(max_n=5), st.sampled_from([1, 2]))
    def test_cross_check(self, g, p):
        p_boxicity(g, p, 6, cross_check=True)


class TestRealizability:
    def test_c9c_p2(self):
        assert not realizable_some_d(complement(make_cycle(9)), 2)

    def test_interval_graph_d1(self):
        res = realizable_some_d(make_path([1, 2, 3]), 1)
        assert res and res.decomposition.d == 1

    def test_c7c_p2(self):
        res = realizable_some_d(complement(make_cycle(7)), 2)
        assert res and res.decomposition.d == 3

    def test_prefilter_is_sound(self):
        for g in all_graphs(5):
            for p in (1, 2):
                assert bool(realizable_some_d(g, p)) == bool(realizable_some_d(g, p, prefilter=False))

    @settings(max_examples=25)
    @given(st.integers(0, 10**6))
    def test_order_seed_keeps_verdict(self, seed):
        g = complement(make_cycle(8))
        base = realizable_some_d(g, 2)
        assert bool(realizable_some_d(g, 2, order_seed=seed)) == bool(base)

    def test_transcript_deterministic(self):
        g = complement(make_cycle(8))
        a, b = realizable_some_d(g, 2).to_json(), realizable_some_d(g, 2).to_json()
        assert a == b

    def test_layers(self):
        g = complement(make_cycle(7))
        assert realizable_in_dimension(g, 2, 2) is None
        assert check_slim(g, realizable_in_dimension(g, 2, 3))
        assert direct_p_boxicity(g, 2, 5) == 3
        assert min_factor_count(g, 2)[0] == 3
