import pytest

from tilings.complexes import build_complex
from tilings.fixtures import (canonical_form, core_fixture_names,
                              free_polyominoes, is_simply_connected,
                              iter_fixture_graphs, named_fixture,
                              polyomino_zoo, random_quad_glued)
from tilings.planar import graph_from_cells


def test_figure_fixture_shapes():
    expected = {
        "g1": (10, 12, 3),
        "g2": (10, 12, 3),
        "g3": (8, 10, 3),
        "figure2": (8, 10, 3),
        "prism": (6, 9, 4),
    }
    for name, (nv, ne, nr) in expected.items():
        g = named_fixture(name)
        assert (len(g.coords), len(g.edges), len(g.regions)) == (nv, ne, nr)


def test_named_ladder_fixtures():
    g = named_fixture("ladder-5")
    assert len(g.regions) == 5
    g = named_fixture("ladder-5-2")
    assert len(g.regions) == 6
    with pytest.raises(KeyError):
        named_fixture("nonsense")


def test_core_names_cover_all_bumps():
    names = core_fixture_names(max_ladder=3)
    assert "ladder-3-3" in names and "ladder-1-1" in names
    assert len(names) == 5 + 3 + 6


def test_free_polyomino_counts():
    # Classical counts of free polyominoes by cell count.
    assert [len(free_polyominoes(n)) for n in range(1, 8)] == \
        [1, 1, 2, 5, 12, 35, 108]


def test_canonical_form_identifies_rotations():
    ell = frozenset({(0, 0), (1, 0), (1, 1)})
    rotated = frozenset({(0, 0), (0, 1), (1, 0)})
    assert canonical_form(ell) == canonical_form(rotated)


def test_simply_connected_detects_hole():
    ring = frozenset((r, c) for r in range(3) for c in range(3)
                     if (r, c) != (1, 1))
    assert not is_simply_connected(ring)
    assert is_simply_connected(frozenset({(0, 0), (0, 1)}))


def test_zoo_members_are_tileable_and_even():
    zoo = polyomino_zoo(6)
    assert zoo
    for name, cells in zoo:
        assert len(cells) % 2 == 0
        assert is_simply_connected(cells)
        g = graph_from_cells(set(cells))
        assert build_complex(g).f_vector()[0] >= 1


def test_zoo_grows_with_bound():
    assert len(polyomino_zoo(4)) < len(polyomino_zoo(6))


def test_random_fixtures_deterministic():
    a = random_quad_glued(seed=7, count=5)
    b = random_quad_glued(seed=7, count=5)
    assert [cells for _, cells in a] == [cells for _, cells in b]
    c = random_quad_glued(seed=8, count=5)
    assert [cells for _, cells in a] != [cells for _, cells in c]


def test_corpus_iteration_names_unique():
    names = [name for name, _ in
             iter_fixture_graphs(max_ladder=2, max_cells=4, random_count=3)]
    assert len(names) == len(set(names))
    assert "prism" in names and "ladder-2-1" in names
