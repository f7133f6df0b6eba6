"""Compact convex integer polygons.

Polygons are stored in canonical form: strictly convex, counter-clockwise,
starting from the lexicographically smallest vertex. The empty polygon and
single points are allowed; a segment is stored as its two endpoints.
All predicates use integer cross products, so every operation is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Point = tuple[int, int]


def cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Sequence[int]]) -> tuple[Point, ...]:
    """Andrew's monotone chain; collinear points are dropped."""
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if len(pts) <= 2:
        return tuple(pts)

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    # all points collinear: the chains collapse to the two extremes
    if len(hull) == 2 and hull[0] == hull[1]:
        return (hull[0],)
    return tuple(hull)


def _is_canonical(vertices: tuple[Point, ...]) -> bool:
    n = len(vertices)
    if n <= 1:
        return True
    if n == 2:
        return vertices[0] < vertices[1]
    if vertices[0] != min(vertices):
        return False
    return all(
        cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]) > 0
        for i in range(n)
    )


def _rotate_to_min(vertices: tuple[Point, ...]) -> tuple[Point, ...]:
    if len(vertices) <= 1:
        return vertices
    k = vertices.index(min(vertices))
    return vertices[k:] + vertices[:k]


@dataclass(frozen=True)
class IntegerPolygon:
    vertices: tuple[Point, ...] = ()

    def __post_init__(self):
        for v in self.vertices:
            if len(v) != 2 or any(isinstance(c, bool) or c != int(c) for c in v):
                raise ValueError(f"polygon vertex {v!r} is not an integer pair")
        verts = _rotate_to_min(tuple((int(x), int(y)) for x, y in self.vertices))
        if len(verts) == 2 and verts[0] > verts[1]:
            verts = (verts[1], verts[0])
        if not _is_canonical(verts):
            raise ValueError(f"vertices {list(verts)} are not a strictly convex CCW polygon")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def hull(cls, points: Iterable[Sequence[int]]) -> IntegerPolygon:
        return cls(convex_hull(points))

    @classmethod
    def point(cls, x: int, y: int) -> IntegerPolygon:
        return cls(((x, y),))

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        if not self.vertices:
            return "IntegerPolygon(∅)"
        return f"IntegerPolygon({list(self.vertices)})"

    def union_hull(self, other: IntegerPolygon) -> IntegerPolygon:
        return IntegerPolygon.hull(self.vertices + other.vertices)

    def minkowski(self, other: IntegerPolygon) -> IntegerPolygon:
        return minkowski_sum(self, other)

    def scaled_down(self, n: int) -> IntegerPolygon | None:
        """Return P/n when every vertex is divisible by n, else None."""
        if any(x % n or y % n for x, y in self.vertices):
            return None
        return IntegerPolygon(tuple((x // n, y // n) for x, y in self.vertices))


def _half(v: Point) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _edges_from_bottom(vertices: tuple[Point, ...]) -> tuple[Point, list[Point]]:
    start = min(range(len(vertices)), key=lambda i: (vertices[i][1], vertices[i][0]))
    ring = vertices[start:] + vertices[:start]
    n = len(ring)
    if n == 1:
        return ring[0], []
    edges = [
        (ring[(i + 1) % n][0] - ring[i][0], ring[(i + 1) % n][1] - ring[i][1])
        for i in range(n)
    ]
    return ring[0], edges


def _angle_cmp(u: Point, v: Point) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def minkowski_sum(p: IntegerPolygon, q: IntegerPolygon) -> IntegerPolygon:
    """Minkowski sum by merging edge sequences in polar-angle order."""
    if p.is_empty or q.is_empty:
        return IntegerPolygon()
    p0, ep = _edges_from_bottom(p.vertices)
    q0, eq = _edges_from_bottom(q.vertices)
    cur = (p0[0] + q0[0], p0[1] + q0[1])
    out = [cur]
    i = j = 0
    while i < len(ep) or j < len(eq):
        if j == len(eq):
            step, i = ep[i], i + 1
        elif i == len(ep):
            step, j = eq[j], j + 1
        else:
            c = _angle_cmp(ep[i], eq[j])
            if c < 0:
                step, i = ep[i], i + 1
            elif c > 0:
                step, j = eq[j], j + 1
            else:
                step = (ep[i][0] + eq[j][0], ep[i][1] + eq[j][1])
                i, j = i + 1, j + 1
        cur = (cur[0] + step[0], cur[1] + step[1])
        out.append(cur)
    return IntegerPolygon.hull(out)
