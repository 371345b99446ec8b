"""Exact rational predicates for straight-line plane drawings.

All coordinates are ``fractions.Fraction``; every predicate reduces to the
sign of a rational expression, so there is no epsilon anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Point = tuple[Fraction, Fraction]


def as_point(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of triangle abc: +1 ccw, -1 cw, 0 collinear."""
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (det > 0) - (det < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True if p lies on the closed segment ab."""
    if orientation(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True if the closed segments ab and cd share at least one point."""
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return (on_segment(c, a, b) or on_segment(d, a, b)
            or on_segment(a, c, d) or on_segment(b, c, d))


def segments_cross_improperly(a: Point, b: Point, c: Point, d: Point,
                              shared: Point) -> bool:
    """For segments sharing exactly the endpoint ``shared``: True if they
    overlap beyond that point (collinear overlap)."""
    # Reorder so both segments start at the shared endpoint.
    p = b if a == shared else a
    q = d if c == shared else c
    if orientation(shared, p, q) != 0:
        return False
    # Collinear: overlap iff p and q are on the same side of shared.
    dx1, dy1 = p[0] - shared[0], p[1] - shared[1]
    dx2, dy2 = q[0] - shared[0], q[1] - shared[1]
    return dx1 * dx2 + dy1 * dy2 > 0


def signed_area2(poly: Sequence[Point]) -> Fraction:
    """Twice the signed area of a closed polygon (ccw positive)."""
    total = Fraction(0)
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return total


def point_in_polygon(p: Point, poly: Sequence[Point]) -> int:
    """Locate p relative to a simple polygon: 1 inside, 0 on boundary, -1 outside.

    Crossing-number walk over the edges; all comparisons are exact.
    """
    n = len(poly)
    for i in range(n):
        if on_segment(p, poly[i], poly[(i + 1) % n]):
            return 0
    inside = False
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        # Does the horizontal ray from p to +infinity cross edge ab?
        if (a[1] > p[1]) == (b[1] > p[1]):
            continue
        # Edge straddles the ray's line; side test gives the crossing.
        o = orientation(a, b, p)
        if (b[1] > a[1] and o < 0) or (b[1] < a[1] and o > 0):
            inside = not inside
    return 1 if inside else -1


def vertex_centroid(poly: Sequence[Point]) -> Point:
    """Average of the polygon's vertices (exact)."""
    n = len(poly)
    sx = sum((q[0] for q in poly), Fraction(0))
    sy = sum((q[1] for q in poly), Fraction(0))
    return (sx / n, sy / n)


def interior_point(poly: Sequence[Point]) -> Point:
    """An exact point strictly inside a simple polygon.

    The vertex centroid works for every convex region; for non-convex
    polygons fall back to the centroid of an empty ear triangle.
    """
    c = vertex_centroid(poly)
    if point_in_polygon(c, poly) == 1:
        return c
    n = len(poly)
    ccw = signed_area2(poly) > 0
    for i in range(n):
        a, b, cv = poly[i - 1], poly[i], poly[(i + 1) % n]
        o = orientation(a, b, cv)
        if o == 0 or (o > 0) != ccw:
            continue
        # Shrink towards b until the candidate is inside.
        t = Fraction(1, 2)
        for _ in range(64):
            cand = (b[0] + t * ((a[0] + cv[0]) / 2 - b[0]),
                    b[1] + t * ((a[1] + cv[1]) / 2 - b[1]))
            if point_in_polygon(cand, poly) == 1:
                return cand
            t /= 2
    raise ValueError("degenerate polygon: no interior point found")


def angle_less(d1: Point, d2: Point) -> bool:
    """Exact ccw angular order of two nonzero direction vectors in [0, 2pi)."""
    h1 = 0 if (d1[1] > 0 or (d1[1] == 0 and d1[0] > 0)) else 1
    h2 = 0 if (d2[1] > 0 or (d2[1] == 0 and d2[0] > 0)) else 1
    if h1 != h2:
        return h1 < h2
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    return cross > 0
