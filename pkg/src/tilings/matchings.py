"""Perfect matching enumeration and the cube-coordinate embedding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .geometry import point_in_polygon
from .planar import Edge, GraphError, PlanarGraph, edge_key


@dataclass(frozen=True, order=True)
class Matching:
    edges: frozenset[Edge]

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __iter__(self):
        return iter(self.sorted_edges())


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[tuple[int, ...], ...]


def enumerate_perfect_matchings(g: PlanarGraph) -> list[Matching]:
    """All perfect matchings, sorted lexicographically by sorted edge list.

    Backtracking on the lowest-id uncovered vertex, taking forced moves
    (uncovered vertices with a single available neighbor) eagerly.
    """
    return matchings_of_adjacency(g.vertex_ids, g.adj)


def matchings_of_adjacency(vertices: Sequence[int],
                           adj: dict[int, list[int]]) -> list[Matching]:
    """Perfect matchings of a bare adjacency structure (no embedding needed)."""
    if len(vertices) % 2 == 1:
        return []
    uncovered = set(vertices)
    chosen: list[Edge] = []
    out: list[list[Edge]] = []

    def propagate() -> Optional[list[Edge]]:
        """Take all degree-1 forced moves; None signals a dead end."""
        taken = []
        changed = True
        while changed:
            changed = False
            for v in sorted(uncovered):
                free = [u for u in adj[v] if u in uncovered]
                if not free:
                    for u, w in reversed(taken):
                        uncovered.add(u)
                        uncovered.add(w)
                        chosen.pop()
                    return None
                if len(free) == 1:
                    u = free[0]
                    uncovered.discard(v)
                    uncovered.discard(u)
                    chosen.append(edge_key(v, u))
                    taken.append((v, u))
                    changed = True
                    break
        return taken

    def undo(taken: list[Edge]) -> None:
        for u, w in reversed(taken):
            uncovered.add(u)
            uncovered.add(w)
            chosen.pop()

    def search() -> None:
        taken = propagate()
        if taken is None:
            return
        if not uncovered:
            out.append(sorted(chosen))
            undo(taken)
            return
        v = min(uncovered)
        for u in adj[v]:
            if u not in uncovered:
                continue
            uncovered.discard(v)
            uncovered.discard(u)
            chosen.append(edge_key(v, u))
            search()
            chosen.pop()
            uncovered.add(v)
            uncovered.add(u)
        undo(taken)

    search()
    out.sort()
    return [Matching(frozenset(edges)) for edges in out]


def symmetric_difference_cycles(m1: Matching, m2: Matching) -> CycleDecomposition:
    """Decompose the symmetric difference of two perfect matchings of the
    same graph into its vertex-disjoint alternating cycles."""
    if m1.covered != m2.covered:
        raise GraphError("matchings cover different vertex sets")
    diff = m1.edges ^ m2.edges
    nbr: dict[int, list[int]] = {}
    for u, v in diff:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    cycles = []
    seen: set[int] = set()
    for start in sorted(nbr):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            a, b = nbr[cur]
            nxt = b if a == prev else a
            if nxt == start:
                break
            cycle.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt
        # Canonical orientation: start at the minimum, second element minimal.
        if len(cycle) > 2 and cycle[-1] < cycle[1]:
            cycle = [cycle[0]] + cycle[:0:-1]
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(sorted(cycles)))


def cube_coordinates(g: PlanarGraph,
                     base: Matching,
                     region_order: Optional[Sequence[int]] = None
                     ) -> dict[Matching, tuple[int, ...]]:
    """Embed the vertices of the cubical matching complex into {0,1}^d.

    Coordinate i of a matching M is the parity of the number of cycles of
    the symmetric difference with the base matching that strictly contain an
    interior point of region ``region_order[i]``.
    """
    if base.covered != frozenset(g.vertex_ids):
        raise GraphError("base is not a perfect matching of the graph")
    d = len(g.regions)
    if region_order is None:
        region_order = list(range(d))
    if sorted(region_order) != list(range(d)):
        raise GraphError("region_order must list every region exactly once")
    pts = [g.region_interior_point(r) for r in region_order]

    from .matchings import enumerate_perfect_matchings as _enum
    coords = {}
    for m in _enum(g):
        dec = symmetric_difference_cycles(m, base)
        x = [0] * d
        for cycle in dec.cycles:
            poly = [g.coords[v] for v in cycle]
            for i, p in enumerate(pts):
                if point_in_polygon(p, poly) == 1:
                    x[i] ^= 1
        coords[m] = tuple(x)
    return coords
