from fractions import Fraction

import networkx as nx
import pytest

from tilings.fixtures import figure_counterexample, figure_g1
from tilings.planar import (GraphError, PlanarGraph, build_from_polyomino,
                            build_ladder, build_planar_graph, classify_edges,
                            parse_polyomino, reduce_graph, weak_dual)

SQUARE = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
SQUARE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0)]


def abstract(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertex_ids)
    h.add_edges_from(g.edges)
    return h


class TestConstruction:
    def test_unit_square_extracts_one_region(self):
        g = PlanarGraph(SQUARE, SQUARE_EDGES)
        assert len(g.regions) == 1
        assert set(g.regions[0].cycle) == {0, 1, 2, 3}
        assert g.regions[0].parity == "even"

    def test_figure_g1_has_three_regions(self):
        g = figure_g1()
        assert len(g.regions) == 3

    def test_diagonal_declared_as_region_rejected(self):
        with pytest.raises(GraphError, match="not a cycle of edges"):
            PlanarGraph(SQUARE, SQUARE_EDGES, regions=[[0, 1, 3]])

    def test_region_not_a_face_rejected(self):
        verts = {**SQUARE, 4: (2, 0), 5: (2, 1)}
        edges = SQUARE_EDGES + [(1, 4), (4, 5), (5, 2)]
        with pytest.raises(GraphError, match="not a bounded face"):
            PlanarGraph(verts, edges, regions=[[0, 1, 4, 5, 2, 3]])

    def test_explicit_region_subset_accepted(self):
        g = build_ladder(2)
        sub = PlanarGraph(g.coords, g.edges,
                          regions=[g.regions[0].cycle])
        assert len(sub.regions) == 1

    def test_crossing_edges_rejected(self):
        with pytest.raises(GraphError, match="cross"):
            PlanarGraph(SQUARE, [(0, 2), (1, 3)])

    def test_vertex_touching_edge_interior_rejected(self):
        verts = {0: (0, 0), 1: (2, 0), 2: (1, 0), 3: (1, 1)}
        with pytest.raises(GraphError, match="cross|overlap|lies on edge"):
            PlanarGraph(verts, [(0, 1), (2, 3)])

    def test_isolated_vertex_on_edge_rejected(self):
        with pytest.raises(GraphError, match="lies on edge"):
            PlanarGraph({0: (0, 0), 1: (2, 0), 2: (1, 0)}, [(0, 1)])

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            PlanarGraph(SQUARE, [(0, 0)])

    def test_coincident_vertices_rejected(self):
        with pytest.raises(GraphError, match="coincide"):
            PlanarGraph({0: (0, 0), 1: (0, 0)}, [(0, 1)])

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(GraphError, match="unknown vertex"):
            PlanarGraph(SQUARE, [(0, 9)])

    def test_json_round_trip(self):
        g = figure_g1()
        g2 = build_planar_graph(g.to_json_obj())
        assert g2.edges == g.edges
        assert [r.cycle for r in g2.regions] == [r.cycle for r in g.regions]

    def test_multi_component_input(self):
        verts = dict(SQUARE)
        verts.update({i + 4: (Fraction(x) + 5, Fraction(y))
                      for i, (x, y) in SQUARE.items()})
        edges = SQUARE_EDGES + [(u + 4, v + 4) for u, v in SQUARE_EDGES]
        g = PlanarGraph(verts, edges)
        assert len(g.regions) == 2
        assert len(set(g.component_labels().values())) == 2

    def test_nested_component_face_is_dropped(self):
        # An enclosing square is not an elementary region when another
        # component sits inside it.
        verts = {0: (0, 0), 1: (4, 0), 2: (4, 4), 3: (0, 4),
                 4: (1, 1), 5: (3, 1), 6: (3, 3), 7: (1, 3)}
        edges = [(0, 1), (1, 2), (2, 3), (3, 0),
                 (4, 5), (5, 6), (6, 7), (7, 4)]
        g = PlanarGraph(verts, edges)
        assert len(g.regions) == 1
        assert set(g.regions[0].cycle) == {4, 5, 6, 7}


class TestPolyomino:
    def test_2x2_block_is_c4(self):
        g = build_from_polyomino("##\n##")
        assert len(g.coords) == 4 and len(g.edges) == 4
        assert len(g.regions) == 1

    def test_2x4_block_is_ladder_3(self):
        g = build_from_polyomino("####\n####")
        assert len(g.coords) == 8 and len(g.edges) == 10
        assert len(g.regions) == 3
        assert nx.is_isomorphic(abstract(g), abstract(build_ladder(3)))

    def test_l_tromino_is_path(self):
        g = build_from_polyomino("#.\n##")
        assert len(g.coords) == 3 and len(g.edges) == 2
        assert g.regions == ()

    def test_disconnected_cells_rejected(self):
        with pytest.raises(GraphError, match="not edge-connected"):
            build_from_polyomino("#.#")

    def test_bad_character_rejected(self):
        with pytest.raises(GraphError, match="unexpected character"):
            parse_polyomino("#x")

    def test_empty_grid_rejected(self):
        with pytest.raises(GraphError, match="no cells"):
            parse_polyomino("...")

    @pytest.mark.parametrize("n", range(1, 9))
    def test_blocks_match_ladders(self, n):
        text = "#" * (n + 1) + "\n" + "#" * (n + 1)
        g = build_from_polyomino(text)
        assert nx.is_isomorphic(abstract(g), abstract(build_ladder(n)))


class TestLadder:
    def test_counts(self):
        for n in range(1, 9):
            g = build_ladder(n)
            assert len(g.coords) == 2 * n + 2
            assert len(g.edges) == 3 * n + 1
            assert len(g.regions) == n

    def test_ladder_1_is_c4(self):
        g = build_ladder(1)
        assert len(g.coords) == 4 and len(g.edges) == 4
        assert len(g.regions) == 1

    def test_bump_counts(self):
        # One extra square below position i: +2 vertices, +3 edges, +1 region.
        g = build_ladder(2, bump=1)
        assert len(g.coords) == 2 * 2 + 2 + 2
        assert len(g.edges) == 3 * 2 + 1 + 3
        assert len(g.regions) == 2 + 1

    def test_bump_out_of_range(self):
        with pytest.raises(GraphError, match="out of range"):
            build_ladder(2, bump=3)
        with pytest.raises(GraphError):
            build_ladder(0)


class TestWeakDual:
    def test_figure_g1_dual_is_path(self):
        d = weak_dual(figure_g1())
        assert sorted(d.nodes) == [0, 1, 2]
        degrees = sorted(len(d.neighbors(r)) for r in d.nodes)
        assert degrees == [1, 1, 2]

    def test_single_region_dual(self):
        d = weak_dual(PlanarGraph(SQUARE, SQUARE_EDGES))
        assert d.nodes == (0,) and not d.adjacency

    def test_ladder_dual_is_path(self):
        d = weak_dual(build_ladder(4))
        degrees = sorted(len(d.neighbors(r)) for r in d.nodes)
        assert degrees == [1, 1, 2, 2]


class TestEdgeClassification:
    def test_single_edge_forced(self):
        cls = classify_edges(PlanarGraph({0: (0, 0), 1: (1, 0)}, [(0, 1)]))
        assert cls.status == {(0, 1): "forced"}
        assert cls.has_perfect_matching

    def test_c4_all_free(self):
        cls = classify_edges(PlanarGraph(SQUARE, SQUARE_EDGES))
        assert set(cls.status.values()) == {"free"}

    def test_figure2_connectors_forbidden(self):
        g = figure_counterexample()
        cls = classify_edges(g)
        assert cls.status[(0, 4)] == "forbidden"
        assert cls.status[(2, 6)] == "forbidden"
        others = {e: s for e, s in cls.status.items()
                  if e not in [(0, 4), (2, 6)]}
        assert set(others.values()) == {"free"}

    def test_no_perfect_matching_all_forbidden(self):
        tri = PlanarGraph({0: (0, 0), 1: (2, 0), 2: (1, 2)},
                          [(0, 1), (1, 2), (2, 0)])
        cls = classify_edges(tri)
        assert not cls.has_perfect_matching
        assert set(cls.status.values()) == {"forbidden"}


class TestReduce:
    def test_c4_unchanged(self):
        g = PlanarGraph(SQUARE, SQUARE_EDGES)
        r = reduce_graph(g)
        assert r.edges == g.edges and len(r.regions) == 1

    def test_figure2_reduces_to_two_squares(self):
        r = reduce_graph(figure_counterexample())
        assert len(r.coords) == 8
        assert len(r.edges) == 8
        assert len(set(r.component_labels().values())) == 2
        # The enclosing square's face is lost to the nesting.
        assert len(r.regions) == 1

    def test_path_p4_reduces_to_empty(self):
        g = PlanarGraph({0: (0, 0), 1: (1, 0), 2: (2, 0), 3: (3, 0)},
                        [(0, 1), (1, 2), (2, 3)])
        r = reduce_graph(g)
        assert not r.coords and not r.edges

    def test_no_matching_raises(self):
        tri = PlanarGraph({0: (0, 0), 1: (2, 0), 2: (1, 2)},
                          [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(GraphError, match="no perfect matching"):
            reduce_graph(tri)


def test_euler_formula_validated():
    # Constructed graphs always satisfy Euler; spot-check the counts used.
    for g in [figure_g1(), build_ladder(5), build_ladder(4, bump=2)]:
        for labels in [g.component_labels()]:
            assert len(set(labels.values())) == 1
