"""Pinned fixture corpus: the illustration graphs, ladder families, the
polyomino zoo, and seeded random quadrilateral-glued graphs."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .matchings import enumerate_perfect_matchings
from .planar import PlanarGraph, build_ladder, cells_connected, graph_from_cells

Cell = tuple[int, int]


def figure_g1() -> PlanarGraph:
    """Two squares joined through two apex vertices; regions A, B, C."""
    f = Fraction
    vertices = {
        0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1),
        4: (2, 0), 5: (3, 0), 6: (3, 1), 7: (2, 1),
        8: (f(3, 2), f(17, 10)),   # top apex
        9: (f(3, 2), f(-7, 10)),   # bottom apex
    }
    edges = [(0, 1), (1, 2), (2, 3), (3, 0),
             (4, 5), (5, 6), (6, 7), (7, 4),
             (2, 8), (8, 7), (1, 9), (9, 4)]
    return PlanarGraph(vertices, edges)


def figure_g2() -> PlanarGraph:
    """Two squares joined by a top edge and a two-vertex bottom path."""
    f = Fraction
    vertices = {
        0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1),
        4: (2, 0), 5: (3, 0), 6: (3, 1), 7: (2, 1),
        8: (f(4, 3), f(-7, 10)), 9: (f(5, 3), f(-7, 10)),
    }
    edges = [(0, 1), (1, 2), (2, 3), (3, 0),
             (4, 5), (5, 6), (6, 7), (7, 4),
             (2, 7), (1, 8), (8, 9), (9, 4)]
    return PlanarGraph(vertices, edges)


def figure_g3() -> PlanarGraph:
    """Two diamonds joined by a top and a bottom edge."""
    f = Fraction
    vertices = {
        0: (0, f(1, 2)), 1: (f(7, 10), f(6, 5)), 2: (f(7, 5), f(1, 2)),
        3: (f(7, 10), f(-1, 5)),
        4: (2, f(1, 2)), 5: (f(27, 10), f(6, 5)), 6: (f(17, 5), f(1, 2)),
        7: (f(27, 10), f(-1, 5)),
    }
    edges = [(0, 1), (1, 2), (2, 3), (3, 0),
             (4, 5), (5, 6), (6, 7), (7, 4),
             (1, 5), (3, 7)]
    return PlanarGraph(vertices, edges)


def figure_counterexample() -> PlanarGraph:
    """Nested squares with two corner connector edges; its complex is two
    disjoint segments and is not collapsible."""
    vertices = {
        0: (0, 0), 1: (4, 0), 2: (4, 4), 3: (0, 4),
        4: (1, 1), 5: (3, 1), 6: (3, 3), 7: (1, 3),
    }
    edges = [(0, 1), (1, 2), (2, 3), (3, 0),
             (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (2, 6)]
    return PlanarGraph(vertices, edges)


def triangular_prism() -> PlanarGraph:
    """Prism graph embedded with a triangular outer region: one odd inner
    triangle and three quadrilaterals."""
    vertices = {
        0: (0, 3), 1: (2, 0), 2: (-2, 0),          # inner triangle
        3: (0, 6), 4: (4, -1), 5: (-4, -1),        # outer triangle
    }
    edges = [(0, 1), (1, 2), (2, 0),
             (3, 4), (4, 5), (5, 3),
             (0, 3), (1, 4), (2, 5)]
    return PlanarGraph(vertices, edges)


# -- polyomino zoo -----------------------------------------------------------------


def _normalize(cells: frozenset[Cell]) -> frozenset[Cell]:
    r0 = min(r for r, _ in cells)
    c0 = min(c for _, c in cells)
    return frozenset((r - r0, c - c0) for r, c in cells)


def canonical_form(cells: frozenset[Cell]) -> frozenset[Cell]:
    """Representative of the polyomino modulo the 8 square symmetries."""
    variants = []
    current = cells
    for _ in range(4):
        current = frozenset((c, -r) for r, c in current)
        variants.append(_normalize(current))
        variants.append(_normalize(frozenset((r, -c) for r, c in current)))
    return min(variants, key=sorted)


def is_simply_connected(cells: frozenset[Cell]) -> bool:
    """No holes: the complement inside an enlarged bounding box is connected
    to the outside."""
    rs = [r for r, _ in cells]
    cs = [c for _, c in cells]
    lo_r, hi_r = min(rs) - 1, max(rs) + 1
    lo_c, hi_c = min(cs) - 1, max(cs) + 1
    start = (lo_r, lo_c)
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            nr, nc = nb
            if not (lo_r <= nr <= hi_r and lo_c <= nc <= hi_c):
                continue
            if nb in cells or nb in seen:
                continue
            seen.add(nb)
            stack.append(nb)
    box = (hi_r - lo_r + 1) * (hi_c - lo_c + 1)
    return len(seen) == box - len(cells)


@lru_cache(maxsize=None)
def free_polyominoes(n: int) -> tuple[frozenset[Cell], ...]:
    """All free polyominoes with exactly n cells, canonically normalized."""
    if n == 1:
        return (frozenset({(0, 0)}),)
    out = set()
    for smaller in free_polyominoes(n - 1):
        for r, c in smaller:
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in smaller:
                    continue
                out.add(canonical_form(smaller | {nb}))
    return tuple(sorted(out, key=sorted))


def _has_perfect_matching(cells: frozenset[Cell]) -> bool:
    if len(cells) % 2:
        return False
    import networkx as nx
    g = nx.Graph()
    g.add_nodes_from(cells)
    for r, c in cells:
        for nb in ((r, c + 1), (r + 1, c)):
            if nb in cells:
                g.add_edge((r, c), nb)
    m = nx.bipartite.maximum_matching(
        g, top_nodes=[x for x in cells if sum(x) % 2 == 0])
    return len(m) == len(cells)


@lru_cache(maxsize=None)
def polyomino_zoo(max_cells: int = 10) -> tuple[tuple[str, frozenset[Cell]], ...]:
    """Every simply-connected free polyomino with <= max_cells cells whose
    cell-adjacency graph has a perfect matching (i.e. the shape admits a
    domino tiling)."""
    zoo = []
    for n in range(2, max_cells + 1, 2):
        for i, cells in enumerate(free_polyominoes(n)):
            if not is_simply_connected(cells):
                continue
            if not _has_perfect_matching(cells):
                continue
            zoo.append((f"poly-{n}-{i}", cells))
    return tuple(zoo)


def random_quad_glued(seed: int, count: int = 20,
                      min_cells: int = 11, max_cells: int = 14
                      ) -> list[tuple[str, frozenset[Cell]]]:
    """Seeded random growth of cell clusters (quadrilateral-glued graphs),
    kept when simply connected and tileable; deterministic per seed."""
    rng = random.Random(seed)
    out = []
    seen = set()
    attempts = 0
    while len(out) < count and attempts < 10000:
        attempts += 1
        size = rng.randrange(min_cells, max_cells + 1)
        if size % 2:
            size += 1
        cells = {(0, 0)}
        while len(cells) < size:
            boundary = sorted({nb for r, c in cells
                               for nb in ((r + 1, c), (r - 1, c),
                                          (r, c + 1), (r, c - 1))
                               if nb not in cells})
            cells.add(rng.choice(boundary))
        cells = frozenset(cells)
        canon = canonical_form(cells)
        if canon in seen:
            continue
        if not is_simply_connected(cells) or not _has_perfect_matching(cells):
            continue
        seen.add(canon)
        out.append((f"random-{seed}-{len(out)}", cells))
    return out


# -- corpus iteration --------------------------------------------------------------


def named_fixture(name: str) -> PlanarGraph:
    builders = {
        "g1": figure_g1, "g2": figure_g2, "g3": figure_g3,
        "figure2": figure_counterexample, "prism": triangular_prism,
    }
    if name in builders:
        return builders[name]()
    if name.startswith("ladder-"):
        parts = name.split("-")
        n = int(parts[1])
        bump = int(parts[2]) if len(parts) > 2 else None
        return build_ladder(n, bump=bump)
    raise KeyError(f"unknown fixture {name!r}")


def core_fixture_names(max_ladder: int = 8) -> list[str]:
    names = ["g1", "g2", "g3", "figure2", "prism"]
    for n in range(1, max_ladder + 1):
        names.append(f"ladder-{n}")
        for i in range(1, n + 1):
            names.append(f"ladder-{n}-{i}")
    return names


def iter_fixture_graphs(max_ladder: int = 8,
                        max_cells: int = 10,
                        seed: int = 0,
                        random_count: int = 20,
                        include_zoo: bool = True
                        ) -> Iterator[tuple[str, PlanarGraph]]:
    """The full fixture corpus as (name, graph) pairs."""
    for name in core_fixture_names(max_ladder):
        yield name, named_fixture(name)
    if include_zoo:
        for name, cells in polyomino_zoo(max_cells):
            yield name, graph_from_cells(set(cells))
    for name, cells in random_quad_glued(seed, count=random_count):
        yield name, graph_from_cells(set(cells))
