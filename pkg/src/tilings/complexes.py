"""The cubical matching complex of an embedded planar graph.

A face is a tiling: a partial matching together with a set of pairwise
vertex-disjoint even elementary regions covering the remaining vertices.
Faces are stored explicitly; instances stay small enough that brute-force
enumeration doubles as the correctness oracle for everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .matchings import (Matching, enumerate_perfect_matchings,
                        matchings_of_adjacency)
from .planar import Edge, GraphError, PlanarGraph, edge_key


@dataclass(frozen=True)
class TilingFace:
    matching: Matching
    cycles: frozenset[int]

    @property
    def dim(self) -> int:
        return len(self.cycles)

    def sort_key(self):
        return (self.dim, sorted(self.cycles), self.matching.sorted_edges())


def face_leq(f1: TilingFace, f2: TilingFace,
             g: Optional[PlanarGraph] = None) -> bool:
    """Face order: f1 <= f2 iff cycles(f1) <= cycles(f2) and the matching of
    f1 extends the matching of f2.

    The two containments alone admit spurious pairs: a matching can extend
    M_F while pairing vertices across two regions of C_F, which is not a
    flip combination.  Pass the graph to additionally require that the extra
    edges of f1 are boundary alternations of the released regions, which is
    the geometric face relation of the cubical complex.
    """
    if not (f1.cycles <= f2.cycles and f1.matching.edges >= f2.matching.edges):
        return False
    if g is None:
        return True
    extra = f1.matching.edges - f2.matching.edges
    for r in f2.cycles - f1.cycles:
        alts = region_alternations(g, r)
        here = extra & (alts[0] | alts[1])
        if here not in alts:
            return False
        extra -= here
    return not extra


class CubicalMatchingComplex:
    def __init__(self, graph: PlanarGraph, faces: Iterable[TilingFace]):
        self.graph = graph
        self.faces: tuple[TilingFace, ...] = tuple(
            sorted(faces, key=TilingFace.sort_key))
        self._index = {f: i for i, f in enumerate(self.faces)}

    def __len__(self) -> int:
        return len(self.faces)

    def __contains__(self, f: TilingFace) -> bool:
        return f in self._index

    @property
    def dim(self) -> int:
        return max((f.dim for f in self.faces), default=-1)

    def vertices(self) -> list[TilingFace]:
        return [f for f in self.faces if f.dim == 0]

    def facets_of(self, f: TilingFace) -> list[TilingFace]:
        """The 2*dim faces covered by f: both alternating flips of each
        region of f back into the matching."""
        out = []
        for r in sorted(f.cycles):
            for alt in region_alternations(self.graph, r):
                out.append(TilingFace(Matching(f.matching.edges | alt),
                                      f.cycles - {r}))
        return out

    def f_vector(self) -> list[int]:
        if not self.faces:
            return []
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[f.dim] += 1
        while counts and counts[-1] == 0:
            counts.pop()
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector()))

    def connected_components(self) -> list["CubicalMatchingComplex"]:
        parent = list(range(len(self.faces)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i: int, j: int) -> None:
            parent[find(i)] = find(j)

        for i, f in enumerate(self.faces):
            if f.dim == 0:
                continue
            for sub in self.facets_of(f):
                union(i, self._index[sub])
        groups: dict[int, list[TilingFace]] = {}
        for i, f in enumerate(self.faces):
            groups.setdefault(find(i), []).append(f)
        comps = [CubicalMatchingComplex(self.graph, fs)
                 for fs in groups.values()]
        comps.sort(key=lambda c: c.faces[0].sort_key())
        return comps

    def serialize(self) -> list[dict]:
        return [{"matching": [list(e) for e in f.matching.sorted_edges()],
                 "cycles": sorted(f.cycles)} for f in self.faces]


def region_alternations(g: PlanarGraph, r: int) -> list[frozenset[Edge]]:
    """The two perfect matchings of an even region's boundary cycle."""
    cyc = g.regions[r].cycle
    n = len(cyc)
    if n % 2 == 1:
        raise GraphError(f"region {r} is odd")
    a = frozenset(edge_key(cyc[i], cyc[(i + 1) % n]) for i in range(0, n, 2))
    b = frozenset(edge_key(cyc[i], cyc[(i + 1) % n]) for i in range(1, n, 2))
    return [a, b]


def _independent_even_region_sets(g: PlanarGraph) -> list[frozenset[int]]:
    even = [i for i, r in enumerate(g.regions) if r.parity == "even"]
    vsets = {i: g.regions[i].vertex_set for i in even}
    out: list[frozenset[int]] = []

    def extend(prefix: list[int], used: frozenset[int], rest: list[int]) -> None:
        out.append(frozenset(prefix))
        for k, r in enumerate(rest):
            if vsets[r] & used:
                continue
            extend(prefix + [r], used | vsets[r], rest[k + 1:])

    extend([], frozenset(), even)
    return out


def build_complex(g: PlanarGraph) -> CubicalMatchingComplex:
    """Enumerate every tiling of g: for each vertex-disjoint set S of even
    regions, each perfect matching of g minus the vertices of S gives the
    face (M, S)."""
    faces = []
    for S in _independent_even_region_sets(g):
        if S:
            covered = set()
            for r in S:
                covered |= g.regions[r].vertex_set
            verts = [v for v in g.vertex_ids if v not in covered]
            adj = {v: [u for u in g.adj[v] if u not in covered]
                   for v in verts}
            matchings = matchings_of_adjacency(verts, adj)
        else:
            matchings = enumerate_perfect_matchings(g)
        for m in matchings:
            faces.append(TilingFace(m, S))
    return CubicalMatchingComplex(g, faces)


def verify_edge_decomposition(g: PlanarGraph, e: Sequence[int]) -> dict:
    """Check the deletion decomposition of the complex at an outer edge e.

    With R the unique bounded region containing e = {x, y}:
      odd R:  f_i(C(G)) = f_i(C(G - {x,y})) + f_i(C(G - e))
      even R: f_i(C(G)) = f_i(C(G - {x,y})) + f_i(C(G - e)) + f_{i-1}(C(G - R))
    """
    e = edge_key(int(e[0]), int(e[1]))
    if e not in g.edges:
        raise GraphError(f"{e} is not an edge of the graph")
    containing = [i for i, r in enumerate(g.regions) if e in r.edge_set]
    if len(containing) == 0:
        raise GraphError(f"edge {e} borders the outer region on both sides")
    if len(containing) > 1:
        raise GraphError(f"edge {e} does not lie on the outer region")
    r = containing[0]
    parity = g.regions[r].parity

    f_g = build_complex(g).f_vector()
    f_xy = build_complex(g.subgraph(remove_vertices=e)).f_vector()
    f_e = build_complex(g.subgraph(remove_edges=[e])).f_vector()
    terms = {"without_endpoints": f_xy, "without_edge": f_e}
    if parity == "even":
        f_r = build_complex(
            g.subgraph(remove_vertices=g.regions[r].vertex_set)).f_vector()
        terms["without_region_shifted"] = f_r

    def at(vec: list[int], i: int) -> int:
        return vec[i] if 0 <= i < len(vec) else 0

    top = max([len(f_g), len(f_xy), len(f_e)]
              + ([len(terms.get("without_region_shifted", [])) + 1]
                 if parity == "even" else []))
    rows = []
    ok = True
    for i in range(top):
        rhs = at(f_xy, i) + at(f_e, i)
        if parity == "even":
            rhs += at(terms["without_region_shifted"], i - 1)
        lhs = at(f_g, i)
        rows.append({"i": i, "lhs": lhs, "rhs": rhs})
        ok = ok and lhs == rhs
    return {
        "edge": list(e),
        "region": r,
        "region_parity": parity,
        "f_vector": f_g,
        "terms": terms,
        "rows": rows,
        "ok": ok,
    }
