import pytest

from tilings.complexes import (build_complex, face_leq,
                               verify_edge_decomposition)
from tilings.fixtures import (figure_counterexample, figure_g1, figure_g2,
                              figure_g3, triangular_prism)
from tilings.planar import GraphError, PlanarGraph, build_ladder

SQUARE = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
SQUARE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0)]


def c4():
    return PlanarGraph(SQUARE, SQUARE_EDGES)


class TestBuildComplex:
    def test_c4(self):
        k = build_complex(c4())
        assert k.f_vector() == [2, 1]
        assert k.euler_characteristic() == 1

    def test_triangular_prism(self):
        k = build_complex(triangular_prism())
        assert k.f_vector() == [4, 3]
        assert len(k.connected_components()) == 1

    def test_figure_complexes(self):
        assert build_complex(figure_g1()).f_vector() == [4, 3]
        assert build_complex(figure_g2()).f_vector() == [5, 5, 1]
        assert build_complex(figure_g3()).f_vector() == [4, 4, 1]

    def test_no_matching_gives_empty_complex(self):
        tri = PlanarGraph({0: (0, 0), 1: (2, 0), 2: (1, 2)},
                          [(0, 1), (1, 2), (2, 0)])
        k = build_complex(tri)
        assert k.f_vector() == []
        assert k.euler_characteristic() == 0

    def test_vertices_are_perfect_matchings(self):
        g = build_ladder(4)
        k = build_complex(g)
        for v in k.vertices():
            assert v.matching.covered == frozenset(g.vertex_ids)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_ladder_dimension(self, n):
        assert build_complex(build_ladder(n)).dim == -(-n // 2)


class TestFaceOrder:
    def test_reflexive(self):
        k = build_complex(c4())
        for f in k.faces:
            assert face_leq(f, f)

    def test_flip_below_face(self):
        g = build_ladder(2)
        k = build_complex(g)
        for f in k.faces:
            for sub in k.facets_of(f):
                assert face_leq(sub, f, g)
                assert not face_leq(f, sub)

    def test_distinct_vertices_incomparable(self):
        k = build_complex(c4())
        v1, v2 = k.vertices()
        assert not face_leq(v1, v2) and not face_leq(v2, v1)

    def test_geometric_order_excludes_cross_pairings(self):
        # In the 2x4 ladder the top face over squares {0, 2} has matching
        # edges only inside those squares; the middle-horizontal matching
        # extends the empty matching but is not a flip combination.
        g = build_ladder(3)
        k = build_complex(g)
        top = [f for f in k.faces if f.dim == 2][0]
        below = [v for v in k.vertices() if face_leq(v, top, g)]
        loose = [v for v in k.vertices() if face_leq(v, top)]
        assert len(below) == 4
        assert len(loose) == 5

    def test_interval_counts(self):
        g = build_ladder(5)
        k = build_complex(g)
        for f in k.faces:
            below_v = [v for v in k.vertices() if face_leq(v, f, g)]
            assert len(below_v) == 2 ** f.dim
            assert len(k.facets_of(f)) == 2 * f.dim

    def test_closure_under_flips(self):
        for g in [build_ladder(4), figure_g2()]:
            k = build_complex(g)
            for f in k.faces:
                for sub in k.facets_of(f):
                    assert sub in k


class TestComponents:
    def test_figure2_two_segments(self):
        k = build_complex(figure_counterexample())
        assert k.f_vector() == [4, 2]
        assert k.euler_characteristic() == 2
        comps = k.connected_components()
        assert len(comps) == 2
        assert all(c.f_vector() == [2, 1] for c in comps)

    def test_connected_fixtures(self):
        for g in [c4(), triangular_prism(), build_ladder(5)]:
            assert len(build_complex(g).connected_components()) == 1


class TestEdgeDecomposition:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_ladder_rightmost_rung(self, n):
        g = build_ladder(n + 2)
        rung = (2 * (n + 2), 2 * (n + 2) + 1)
        report = verify_edge_decomposition(g, rung)
        assert report["ok"]
        assert report["region_parity"] == "even"

    def test_c4_even_branch(self):
        report = verify_edge_decomposition(c4(), (0, 1))
        assert report["ok"]
        assert report["f_vector"] == [2, 1]
        assert report["terms"]["without_endpoints"] == [1]
        assert report["terms"]["without_edge"] == [1]
        assert report["terms"]["without_region_shifted"] == [1]

    def test_prism_outer_edge_even_branch(self):
        report = verify_edge_decomposition(triangular_prism(), (3, 4))
        assert report["ok"]
        assert report["region_parity"] == "even"

    def test_prism_odd_branch(self):
        # Prism redrawn with a quadrilateral outer face: each triangle then
        # has one edge on the outer walk, exercising the odd-region branch.
        g = PlanarGraph({0: (0, 0), 1: (4, 0), 2: (2, 1),
                         3: (0, 3), 4: (4, 3), 5: (2, 2)},
                        [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                         (0, 3), (1, 4), (2, 5)])
        report = verify_edge_decomposition(g, (0, 1))
        assert report["ok"]
        assert report["region_parity"] == "odd"
        assert "without_region_shifted" not in report["terms"]

    def test_interior_edge_rejected(self):
        g = build_ladder(2)
        with pytest.raises(GraphError, match="outer region"):
            verify_edge_decomposition(g, (2, 3))  # middle rung, two regions

    def test_nonedge_rejected(self):
        with pytest.raises(GraphError, match="not an edge"):
            verify_edge_decomposition(c4(), (0, 2))


def test_serialize_shape():
    k = build_complex(c4())
    data = k.serialize()
    assert len(data) == len(k.faces)
    assert data[0] == {"matching": [[0, 1], [2, 3]], "cycles": []}
    assert data[-1]["cycles"] == [0]
