"""Embedded planar graphs with exact coordinates.

A graph is given by a straight-line drawing: vertices carry rational
coordinates, edges are segments, and the bounded faces of the drawing are
the graph's elementary regions.  Regions may also be supplied explicitly;
they are then validated against the drawing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Mapping, Optional, Sequence

from .geometry import (Point, angle_less, as_point, interior_point,
                       on_segment, point_in_polygon, segments_cross_improperly,
                       segments_intersect, signed_area2)

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid drawing or region data; carries the offending elements."""


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Region:
    """A bounded elementary region, stored as its boundary cycle."""

    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    @property
    def parity(self) -> str:
        return "even" if len(self.cycle) % 2 == 0 else "odd"

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.cycle)

    @property
    def edge_set(self) -> frozenset[Edge]:
        n = len(self.cycle)
        return frozenset(edge_key(self.cycle[i], self.cycle[(i + 1) % n])
                         for i in range(n))


@dataclass(frozen=True)
class DualGraph:
    """Weak dual: one node per bounded region, adjacency = shared edge."""

    nodes: tuple[int, ...]
    adjacency: frozenset[tuple[int, int]]

    def neighbors(self, r: int) -> set[int]:
        out = set()
        for a, b in self.adjacency:
            if a == r:
                out.add(b)
            elif b == r:
                out.add(a)
        return out


@dataclass
class EdgeClassification:
    """forced / forbidden / free status per edge, by full enumeration."""

    status: dict[Edge, str]
    has_perfect_matching: bool


class PlanarGraph:
    """Immutable embedded planar graph.

    ``regions`` holds the tiling-eligible elementary regions.  By default
    these are all bounded faces of the drawing that are simple cycles and do
    not enclose vertices of other components; an explicit subset can be
    supplied instead (used by :func:`reduce_graph` and the decomposition
    checks).
    """

    def __init__(self,
                 vertices: Mapping[int, tuple],
                 edges: Iterable[Sequence[int]],
                 regions: Optional[Iterable[Sequence[int]]] = None,
                 check_crossings: bool = True):
        self.coords: dict[int, Point] = {
            int(v): as_point(x, y) for v, (x, y) in vertices.items()
        }
        if len(self.coords) != len(set(self.coords)):
            raise GraphError("duplicate vertex ids")
        seen_pts = {}
        for v, p in self.coords.items():
            if p in seen_pts:
                raise GraphError(f"vertices {seen_pts[p]} and {v} coincide at {p}")
            seen_pts[p] = v

        edge_set: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in self.coords or v not in self.coords:
                raise GraphError(f"edge ({u},{v}) references unknown vertex")
            edge_set.add(edge_key(u, v))
        self.edges: frozenset[Edge] = frozenset(edge_set)

        self.adj: dict[int, list[int]] = {v: [] for v in self.coords}
        for u, v in sorted(self.edges):
            self.adj[u].append(v)
            self.adj[v].append(u)
        for v in self.adj:
            self.adj[v].sort()

        if check_crossings:
            self._check_noncrossing()
        faces = self._trace_faces()
        self._check_euler(faces)
        candidates = self._bounded_simple_faces(faces)

        if regions is None:
            chosen = candidates
        else:
            chosen = []
            by_edges = {r.edge_set: r for r in candidates}
            for cyc in regions:
                cyc = tuple(int(v) for v in cyc)
                reg = Region(cyc)
                if len(cyc) < 3 or len(set(cyc)) != len(cyc):
                    raise GraphError(f"region {cyc} is not a simple cycle")
                for e in reg.edge_set:
                    if e not in self.edges:
                        raise GraphError(
                            f"region {cyc} is not a cycle of edges: {e} missing")
                if reg.edge_set not in by_edges:
                    raise GraphError(
                        f"region {cyc} is not a bounded face of the drawing")
                chosen.append(by_edges[reg.edge_set])
        self.regions: tuple[Region, ...] = tuple(
            sorted(chosen, key=lambda r: sorted(r.cycle)))

    # -- construction helpers -------------------------------------------------

    def _check_noncrossing(self) -> None:
        es = sorted(self.edges)
        for i in range(len(es)):
            a, b = es[i]
            pa, pb = self.coords[a], self.coords[b]
            for j in range(i + 1, len(es)):
                c, d = es[j]
                shared = {a, b} & {c, d}
                pc, pd = self.coords[c], self.coords[d]
                if not shared:
                    if segments_intersect(pa, pb, pc, pd):
                        raise GraphError(
                            f"edges {es[i]} and {es[j]} cross in the drawing")
                elif len(shared) == 1:
                    s = self.coords[shared.pop()]
                    if segments_cross_improperly(pa, pb, pc, pd, s):
                        raise GraphError(
                            f"edges {es[i]} and {es[j]} overlap in the drawing")
        # A vertex sitting in the interior of an unrelated edge also breaks
        # the drawing.
        for u, v in es:
            pu, pv = self.coords[u], self.coords[v]
            for w, pw in self.coords.items():
                if w not in (u, v) and on_segment(pw, pu, pv):
                    raise GraphError(f"vertex {w} lies on edge ({u},{v})")

    def _rotation(self, v: int) -> list[int]:
        pv = self.coords[v]

        def cmp(a: int, b: int) -> int:
            pa, pb = self.coords[a], self.coords[b]
            da = (pa[0] - pv[0], pa[1] - pv[1])
            db = (pb[0] - pv[0], pb[1] - pv[1])
            if da == db:
                return 0
            return -1 if angle_less(da, db) else 1

        return sorted(self.adj[v], key=cmp_to_key(cmp))

    def _trace_faces(self) -> list[tuple[int, ...]]:
        """All face walks of the embedding, one per orbit of directed edges."""
        rotation = {v: self._rotation(v) for v in self.coords}
        index = {v: {u: i for i, u in enumerate(rot)}
                 for v, rot in rotation.items()}
        unused = {(u, v) for u, v in self.edges} | {(v, u) for u, v in self.edges}
        faces = []
        while unused:
            start = min(unused)
            walk = []
            u, v = start
            while True:
                walk.append(u)
                unused.discard((u, v))
                rot = rotation[v]
                u, v = v, rot[(index[v][u] - 1) % len(rot)]
                if (u, v) == start:
                    break
            faces.append(tuple(walk))
        return faces

    def _check_euler(self, faces: list[tuple[int, ...]]) -> None:
        comp = self.component_labels()
        n_comp_edges: dict[int, int] = {}
        n_comp_verts: dict[int, int] = {}
        n_comp_faces: dict[int, int] = {}
        for u, v in self.edges:
            n_comp_edges[comp[u]] = n_comp_edges.get(comp[u], 0) + 1
        for v in self.coords:
            n_comp_verts[comp[v]] = n_comp_verts.get(comp[v], 0) + 1
        for walk in faces:
            c = comp[walk[0]]
            n_comp_faces[c] = n_comp_faces.get(c, 0) + 1
        for c, ne in n_comp_edges.items():
            nv = n_comp_verts[c]
            nf = n_comp_faces.get(c, 0)
            if nv - ne + nf != 2:
                raise GraphError(
                    f"Euler formula fails on component {c}: "
                    f"V={nv} E={ne} F={nf}")

    def _bounded_simple_faces(self, faces: list[tuple[int, ...]]) -> list[Region]:
        comp = self.component_labels()
        regions = []
        for walk in faces:
            if len(set(walk)) != len(walk):
                continue
            poly = [self.coords[v] for v in walk]
            if signed_area2(poly) <= 0:
                continue
            # Drop a face that geometrically encloses another component:
            # it is not a single region of the full embedding.
            c = comp[walk[0]]
            enclosed = any(
                point_in_polygon(p, poly) == 1
                for w, p in self.coords.items() if comp[w] != c)
            if enclosed:
                continue
            regions.append(Region(walk))
        return regions

    # -- queries ---------------------------------------------------------------

    @property
    def vertex_ids(self) -> list[int]:
        return sorted(self.coords)

    def component_labels(self) -> dict[int, int]:
        label: dict[int, int] = {}
        for v in sorted(self.coords):
            if v in label:
                continue
            stack = [v]
            label[v] = v
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w not in label:
                        label[w] = v
                        stack.append(w)
        return label

    def region_polygon(self, r: int) -> list[Point]:
        return [self.coords[v] for v in self.regions[r].cycle]

    def region_interior_point(self, r: int) -> Point:
        return interior_point(self.region_polygon(r))

    def subgraph(self,
                 remove_vertices: Iterable[int] = (),
                 remove_edges: Iterable[Sequence[int]] = ()) -> "PlanarGraph":
        """Delete vertices/edges; surviving regions are those of this graph
        that are still bounded faces of the new drawing."""
        rv = set(remove_vertices)
        re = {edge_key(*e) for e in remove_edges}
        verts = {v: self.coords[v] for v in self.coords if v not in rv}
        edges = [e for e in self.edges
                 if e not in re and e[0] not in rv and e[1] not in rv]
        # The parent drawing was already validated: deletions cannot
        # introduce crossings, so skip the quadratic re-check.
        auto = PlanarGraph(verts, edges, check_crossings=False)
        old = {r.edge_set for r in self.regions}
        keep = [r for r in auto.regions if r.edge_set in old]
        return auto._with_regions(keep)

    def _with_regions(self, keep: list[Region]) -> "PlanarGraph":
        """Copy of this graph restricted to a subset of its own regions,
        without re-running any validation."""
        clone = object.__new__(PlanarGraph)
        clone.coords = self.coords
        clone.edges = self.edges
        clone.adj = self.adj
        clone.regions = tuple(sorted(keep, key=lambda r: sorted(r.cycle)))
        return clone

    def to_json_obj(self) -> dict:
        return {
            "vertices": [
                {"id": v,
                 "x": f"{p[0].numerator}/{p[0].denominator}",
                 "y": f"{p[1].numerator}/{p[1].denominator}"}
                for v, p in sorted(self.coords.items())],
            "edges": [list(e) for e in sorted(self.edges)],
            "regions": [list(r.cycle) for r in self.regions],
        }

    def __repr__(self) -> str:
        return (f"PlanarGraph(V={len(self.coords)}, E={len(self.edges)}, "
                f"regions={len(self.regions)})")


# -- builders -------------------------------------------------------------------


def build_planar_graph(spec: Mapping) -> PlanarGraph:
    """Build a graph from the JSON object format.

    ``{"vertices": [{"id", "x", "y"}...], "edges": [[u,v]...],
    "regions": [[v1,...]...]?}`` with coordinates as "p/q" strings or numbers.
    """
    try:
        vertices = {int(v["id"]): (Fraction(str(v["x"])), Fraction(str(v["y"])))
                    for v in spec["vertices"]}
        edges = [tuple(e) for e in spec["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph description: {exc}") from exc
    regions = spec.get("regions")
    return PlanarGraph(vertices, edges, regions=regions)


def load_graph_json(path) -> PlanarGraph:
    with open(path) as fh:
        return build_planar_graph(json.load(fh))


def parse_polyomino(grid_text: str) -> set[tuple[int, int]]:
    """Cells of a polyomino from text: '#' marks a cell, '.'/' ' is empty."""
    cells = set()
    for r, line in enumerate(grid_text.splitlines()):
        for c, ch in enumerate(line):
            if ch == "#":
                cells.add((r, c))
            elif ch not in ". ":
                raise GraphError(f"unexpected character {ch!r} in grid")
    if not cells:
        raise GraphError("polyomino has no cells")
    return cells


def cells_connected(cells: set[tuple[int, int]]) -> bool:
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def graph_from_cells(cells: set[tuple[int, int]]) -> PlanarGraph:
    """Cell-adjacency graph: one vertex per cell at its integer center."""
    if not cells_connected(cells):
        raise GraphError("polyomino cells are not edge-connected")
    order = sorted(cells)
    ids = {cell: i for i, cell in enumerate(order)}
    vertices = {i: (Fraction(c), Fraction(-r)) for (r, c), i in ids.items()}
    edges = []
    for (r, c), i in ids.items():
        for nb in ((r, c + 1), (r + 1, c)):
            if nb in ids:
                edges.append((i, ids[nb]))
    return PlanarGraph(vertices, edges)


def build_from_polyomino(grid_text: str) -> PlanarGraph:
    return graph_from_cells(parse_polyomino(grid_text))


def build_ladder(n: int, bump: Optional[int] = None) -> PlanarGraph:
    """The 2x(n+1) grid graph (a row of n unit squares), optionally with one
    extra square glued below square ``bump``."""
    if n < 1:
        raise GraphError("ladder size must be >= 1")
    vertices = {}
    edges = []
    for col in range(n + 1):
        bot, top = 2 * col, 2 * col + 1
        vertices[bot] = (Fraction(col), Fraction(0))
        vertices[top] = (Fraction(col), Fraction(1))
        edges.append((bot, top))
        if col > 0:
            edges.append((bot - 2, bot))
            edges.append((top - 2, top))
    if bump is not None:
        if not 1 <= bump <= n:
            raise GraphError(f"bump position {bump} out of range 1..{n}")
        b0, b1 = 2 * (n + 1), 2 * (n + 1) + 1
        vertices[b0] = (Fraction(bump - 1), Fraction(-1))
        vertices[b1] = (Fraction(bump), Fraction(-1))
        edges += [(b0, b1), (2 * (bump - 1), b0), (2 * bump, b1)]
    return PlanarGraph(vertices, edges)


# -- dual, edge classification, reduction ----------------------------------------


def weak_dual(g: PlanarGraph) -> DualGraph:
    pairs = set()
    n = len(g.regions)
    for i in range(n):
        ei = g.regions[i].edge_set
        for j in range(i + 1, n):
            if ei & g.regions[j].edge_set:
                pairs.add((i, j))
    return DualGraph(tuple(range(n)), frozenset(pairs))


def classify_edges(g: PlanarGraph) -> EdgeClassification:
    from .matchings import enumerate_perfect_matchings

    matchings = enumerate_perfect_matchings(g)
    if not matchings:
        return EdgeClassification({e: "forbidden" for e in g.edges}, False)
    count: dict[Edge, int] = {e: 0 for e in g.edges}
    for m in matchings:
        for e in m.edges:
            count[e] += 1
    total = len(matchings)
    status = {}
    for e, c in count.items():
        status[e] = "forced" if c == total else "forbidden" if c == 0 else "free"
    return EdgeClassification(status, True)


def reduce_graph(g: PlanarGraph) -> PlanarGraph:
    """Delete forbidden edges, and forced edges with their endpoints, until
    every remaining edge is free.  Regions of the result are exactly the
    surviving regions of the input: faces created by the deletions cannot be
    used in any tiling and are excluded."""
    cls = classify_edges(g)
    if not cls.has_perfect_matching:
        raise GraphError("graph has no perfect matching")
    original = {r.edge_set for r in g.regions}
    current = g
    while True:
        cls = classify_edges(current)
        forbidden = [e for e, s in cls.status.items() if s == "forbidden"]
        forced = [e for e, s in cls.status.items() if s == "forced"]
        if not forbidden and not forced:
            return current
        drop_vertices = {v for e in forced for v in e}
        verts = {v: current.coords[v] for v in current.coords
                 if v not in drop_vertices}
        edges = [e for e in current.edges
                 if e not in forbidden
                 and e[0] not in drop_vertices and e[1] not in drop_vertices]
        auto = PlanarGraph(verts, edges, check_crossings=False)
        keep = [r for r in auto.regions if r.edge_set in original]
        current = auto._with_regions(keep)
