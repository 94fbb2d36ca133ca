"""Planar points, lines in normal form, reflections, and fold lines.

Lines are stored as a*x + b*y = c with the raw coefficients retained;
a canonical unit-normal form is used only for equality tests and
reporting, never for arithmetic, to avoid drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoincidentLines, CoincidentPoints, NotParallel

# Normals count as linearly dependent when the 2x2 determinant is below
# this factor times the product of their magnitudes (scale invariant).
PARALLEL_TOL = 1e-12


@dataclass(frozen=True)
class Point:
    x: float
    y: float


@dataclass(frozen=True)
class Line:
    """Oriented line a*x + b*y = c with normal (a, b)."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if self.a == 0.0 and self.b == 0.0:
            raise ValueError("line normal must be nonzero")

    @property
    def norm(self) -> float:
        return math.hypot(self.a, self.b)


def line_through(p1: Point, p2: Point) -> Line:
    """Line through two distinct points."""
    dx, dy = p2.x - p1.x, p2.y - p1.y
    if dx == 0.0 and dy == 0.0:
        raise ValueError("need two distinct points")
    a, b = dy, -dx
    return Line(a, b, a * p1.x + b * p1.y)


def canonical(line: Line) -> tuple[float, float, float]:
    """Unit-normal triple with a > 0, or a = 0 and b > 0 (equality use only)."""
    s = 1.0 / line.norm
    a, b, c = line.a * s, line.b * s, line.c * s
    if a < 0.0 or (a == 0.0 and b < 0.0):
        return (-a, -b, -c)
    return (a, b, c)


def canonical_gap(l1: Line, l2: Line) -> float:
    """Max-abs gap between canonical forms, insensitive to the sign tie at a ~ 0."""
    u = canonical(l1)
    v = canonical(l2)
    direct = max(abs(x - y) for x, y in zip(u, v))
    flipped = max(abs(x + y) for x, y in zip(u, v))
    return min(direct, flipped)


def lines_equal(l1: Line, l2: Line, tol: float = 1e-9) -> bool:
    return canonical_gap(l1, l2) <= tol


def fold_xi(t: float, h: float) -> Line:
    """Fold line placing Q(0, h) onto y = -h at Q'(2t, -h): t*x - h*y = t**2.

    Passes through (t, 0); t = 0 yields the x axis.
    """
    if h <= 0.0:
        raise ValueError("h must be positive")
    return Line(t, -h, t * t)


def fold_chi(p: float, q: float, k: float, s: float) -> Line:
    """Fold line placing P(p, q) onto x = k at P'(k, s).

    Normal is P'P = (k - p, s - q); the line passes through the midpoint
    of segment PP'.
    """
    if k == p and s == q:
        raise CoincidentPoints("P equals P'; fold line undefined")
    return Line(k - p, s - q, (s * s - q * q) / 2.0 + (k * k - p * p) / 2.0)


def reflect_point(pt: Point, mirror: Line) -> Point:
    d = (mirror.a * pt.x + mirror.b * pt.y - mirror.c) / (
        mirror.a * mirror.a + mirror.b * mirror.b
    )
    return Point(pt.x - 2.0 * d * mirror.a, pt.y - 2.0 * d * mirror.b)


def reflect_line(target: Line, mirror: Line) -> Line:
    """Image of a whole line under reflection across the mirror.

    Reflects the two points one unit along the target's direction from
    its foot point; this covers intersecting and parallel mirrors alike
    (a parallel mirror yields the equidistant line on the far side).
    """
    n2 = target.a * target.a + target.b * target.b
    foot = Point(target.c * target.a / n2, target.c * target.b / n2)
    inv = 1.0 / math.sqrt(n2)
    dx, dy = -target.b * inv, target.a * inv
    p1 = reflect_point(Point(foot.x + dx, foot.y + dy), mirror)
    p2 = reflect_point(Point(foot.x - dx, foot.y - dy), mirror)
    return line_through(p1, p2)


def is_parallel(l1: Line, l2: Line) -> bool:
    det = l1.a * l2.b - l2.a * l1.b
    return abs(det) <= PARALLEL_TOL * l1.norm * l2.norm


def intersect(l1: Line, l2: Line) -> Point | None:
    """Unique intersection point, or None when the normals are dependent.

    Raises CoincidentLines when the lines are canonically equal (a
    coincident pair has every point in common, not none).
    """
    if is_parallel(l1, l2):
        scale = 1.0 + abs(canonical(l1)[2]) + abs(canonical(l2)[2])
        if canonical_gap(l1, l2) <= PARALLEL_TOL * scale:
            raise CoincidentLines("lines are canonically equal")
        return None
    det = l1.a * l2.b - l2.a * l1.b
    return Point(
        (l1.c * l2.b - l2.c * l1.b) / det,
        (l1.a * l2.c - l2.a * l1.c) / det,
    )


def parallel_distance(l1: Line, l2: Line) -> float:
    """Euclidean distance between parallel lines.

    l2 is rescaled so its normal matches l1's before the |c1 - c2| / |n|
    formula is applied.
    """
    if not is_parallel(l1, l2):
        raise NotParallel("lines are not parallel")
    s = (l1.a * l2.a + l1.b * l2.b) / (l2.a * l2.a + l2.b * l2.b)
    return abs(l1.c - s * l2.c) / l1.norm


def point_line_distance(pt: Point, line: Line) -> float:
    return abs(line.a * pt.x + line.b * pt.y - line.c) / line.norm


def bisect_defect(xi: Line, n: Line, chi: Line) -> float:
    """|cos(theta/2) mismatch| between the xi-n and xi-chi angle cosines."""
    cos_chi = abs(xi.a * chi.a + xi.b * chi.b) / (xi.norm * chi.norm)
    cos_n = abs(xi.a * n.a + xi.b * n.b) / (xi.norm * n.norm)
    return abs(cos_chi - cos_n)


def bisects(xi: Line, n: Line, chi: Line, tol: float = 1e-9) -> bool:
    """True when xi bisects the angle between n and chi (within tol)."""
    return bisect_defect(xi, n, chi) <= tol
