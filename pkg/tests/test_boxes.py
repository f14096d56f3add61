from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings

from conftest import box_families
from flatbox.boxes import (
    AxisBox,
    BoxFamily,
    boxes_intersect,
    geometric_piercing_number,
    intersection_graph,
    pierceable,
    piercing_number,
    project_axis,
    to_fraction,
    validate_piercing,
)
from flatbox.coloring import chromatic_number
from flatbox.errors import InvalidArgument
from flatbox.gallery import c5c_decomposition, c5c_family, c7c_family, disjoint_intervals
from flatbox.graph import Graph, complement, empty_graph, intersection_of_graphs, make_cycle


def common_point(boxes) -> bool:
    d = boxes[0].d
    return all(max(b.intervals[a][0] for b in boxes) <= min(b.intervals[a][1] for b in boxes) for a in range(d))


def oracle_pierceable(family: BoxFamily, n: int) -> bool:
    """Some split of the boxes into ``n`` groups has a common point in every group."""
    boxes = family.boxes
    for labels in product(range(n), repeat=len(boxes)):
        if all(common_point([b for b, g in zip(boxes, labels) if g == k] or [boxes[0]]) for k in range(n)):
            return True
    return False


class TestAxisBox:
    def test_shared_face(self):
        assert boxes_intersect(AxisBox.of((0, 1), (0, 1)), AxisBox.of((1, 2), (0, 1)))

    def test_disjoint_segments(self):
        assert not boxes_intersect(AxisBox.of((0, 1)), AxisBox.of((2, 3)))

    def test_point_in_square(self):
        assert boxes_intersect(AxisBox.of((1, 1), (1, 1)), AxisBox.of((0, 2), (0, 2)))

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidArgument):
            boxes_intersect(AxisBox.of((0, 1)), AxisBox.of((0, 1), (0, 1)))

    def test_rationals(self):
        b = AxisBox.of(("1/2", "3/4"), (2, 2))
        assert b.intervals[0] == (Fraction(1, 2), Fraction(3, 4))
        assert b.dim == 1 and b.degenerate_axes() == [2]
        assert b.is_p_box(1) and b.has_exact_dim(1) and not b.has_exact_dim(2)
        assert b.to_json() == [["1/2", "3/4"], [2, 2]]

    def test_floats_rejected(self):
        with pytest.raises(InvalidArgument):
            to_fraction(0.5)

    def test_inverted_interval(self):
        with pytest.raises(InvalidArgument):
            AxisBox.of((2, 1))


class TestFamily:
    def test_json_round_trip(self):
        fam = c7c_family()
        assert BoxFamily.from_json(fam.to_json()) == fam

    def test_padding_keeps_graph(self):
        fam = c5c_family()
        assert intersection_graph(fam.padded(4)) == intersection_graph(fam)
        assert fam.padded(4).max_dim() == fam.max_dim()

    def test_disjoint_segments_graph(self):
        assert intersection_graph(disjoint_intervals(3)) == empty_graph(3)

    def test_gallery_graphs(self):
        assert intersection_graph(c5c_family()) == complement(make_cycle(5))
        assert intersection_graph(c7c_family()) == complement(make_cycle(7))

    def test_single_box_projection(self):
        fam = BoxFamily(2, (AxisBox.of((0, 1), (3, 4)),))
        for axis in (1, 2):
            assert project_axis(fam, axis)[1] == Graph(1, [])

    def test_c5c_projections_are_the_factors(self):
        _, dec = c5c_decomposition()
        fam = c5c_family()
        assert [project_axis(fam, a)[1] for a in (1, 2)] == list(dec.Fs)

    @given(box_families())
    def test_projection_consistency(self, fam):
        graphs = [project_axis(fam, a)[1] for a in range(1, fam.d + 1)]
        assert intersection_of_graphs(graphs) == intersection_graph(fam)


class TestPiercing:
    def test_single_box(self):
        assert pierceable(BoxFamily(2, (AxisBox.of((0, 3), (1, 2)),)), 1)
        assert piercing_number(BoxFamily(1, (AxisBox.of((0, 3)),))) == 1

    def test_c5c(self):
        fam = c5c_family()
        assert not pierceable(fam, 2)
        witness = pierceable(fam, 3)
        assert witness and validate_piercing(fam, witness.points)
        for idx in combinations(range(5), 4):
            assert pierceable(fam.subfamily(idx), 2)

    def test_disjoint_and_c7c(self):
        assert piercing_number(disjoint_intervals(3)) == 3
        assert piercing_number(c7c_family()) == 3
        assert geometric_piercing_number(c7c_family()) == 3

    def test_empty_family(self):
        assert piercing_number(BoxFamily(2, ())) == 0
        assert pierceable(BoxFamily(2, ()), 1)

    def test_bad_n(self):
        with pytest.raises(InvalidArgument):
            pierceable(c5c_family(), 0)

    def test_rational_coordinates(self):
        fam = BoxFamily(1, (AxisBox.of(("1/3", "1/2")), AxisBox.of(("1/2", 1))))
        assert pierceable(fam, 1).points == [(Fraction(1, 2),)]

    def test_json(self):
        data = pierceable(disjoint_intervals(2), 2).to_json()
        assert data == {"pierceable": True, "points": [[0], [2]]}
        assert pierceable(disjoint_intervals(2), 1).to_json() == {"pierceable": False}

    @settings(max_examples=120)
    @given(box_families(max_boxes=6))
    def test_matches_partition_oracle(self, fam):
        for n in (1, 2, 3):
            assert bool(pierceable(fam, n)) == oracle_pierceable(fam, n)

    @given(box_families())
    def test_helly_number_two(self, fam):
        pairwise = all(boxes_intersect(a, b) for a, b in combinations(fam.boxes, 2))
        assert bool(pierceable(fam, 1)) == pairwise

    @given(box_families())
    def test_chromatic_route(self, fam):
        chi = chromatic_number(complement(intersection_graph(fam)))[0]
        assert piercing_number(fam) == chi == geometric_piercing_number(fam)
