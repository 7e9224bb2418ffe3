"""Tropical plane curves as balanced rational graphs dual to subdivisions.

A curve is one vertex per 2-cell of the dual subdivision (the point where
the cell's linear forms all tie and are minimal), one bounded edge per
interior edge, one ray per boundary edge; multiplicities are lattice lengths
of the dual edges.  Every built curve is checked against the vertex
equilibrium condition sum(m_i * v_i) = 0 before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from .polynomial import TropicalPolynomial
from .scalars import EpsRational
from .subdivision import RegularSubdivision, regular_subdivision

# Tally of balance checks over the process lifetime; the acceptance suite
# asserts no curve was ever built unbalanced.
BUILD_STATS = {"curves_built": 0, "balance_failures": 0}


@dataclass(frozen=True)
class BoundedEdge:
    v1: int
    v2: int
    multiplicity: int


@dataclass(frozen=True)
class Ray:
    vertex: int
    direction: tuple  # primitive integer (dx, dy) in the z = 0 chart
    multiplicity: int


@dataclass(frozen=True)
class PlaneCurveGraph:
    vertices: tuple  # (x, y) pairs, exact scalars, z = 0 chart
    bounded_edges: tuple
    rays: tuple
    dual: Optional[RegularSubdivision] = None

    def translated(self, dx, dy) -> "PlaneCurveGraph":
        moved = tuple((x + dx, y + dy) for x, y in self.vertices)
        return PlaneCurveGraph(moved, self.bounded_edges, self.rays, self.dual)


def build_curve(F: TropicalPolynomial) -> PlaneCurveGraph:
    """Curve of F via its dual regular subdivision (exact throughout)."""
    pts = [((i, j), c) for (i, j, _k), c in F.terms]
    sub = regular_subdivision(pts)
    if sub.hull_dim == 0:
        graph = PlaneCurveGraph((), (), (), sub)
    elif sub.hull_dim == 1:
        graph = _curve_from_segment_support(pts)
    else:
        graph = _curve_from_subdivision(sub)
    report = check_balancing(graph)
    BUILD_STATS["curves_built"] += 1
    if not report.balanced:
        BUILD_STATS["balance_failures"] += 1
        raise AssertionError(f"built curve violates the equilibrium condition: {report}")
    return graph


def _curve_from_subdivision(sub: RegularSubdivision) -> PlaneCurveGraph:
    vertices = []
    for cell in sub.cells:
        alpha, beta, _ = cell.plane
        vertices.append((-alpha, -beta))
    assert len({cell.corners for cell in sub.cells}) == len(sub.cells)
    edges = []
    rays = []
    for e in sub.edges:
        dx, dy = e.b[0] - e.a[0], e.b[1] - e.a[1]
        g = gcd(abs(dx), abs(dy))
        if e.is_boundary:
            (ci,) = e.cells
            n = (-dy // g, dx // g)
            if _points_into(n, e.a, sub.cells[ci]) < 0:
                n = (-n[0], -n[1])
            rays.append(Ray(ci, n, g))
        else:
            c1, c2 = e.cells
            edges.append(BoundedEdge(c1, c2, g))
    return PlaneCurveGraph(tuple(vertices), tuple(edges), tuple(rays), sub)


def _points_into(n, base, cell) -> int:
    """Sign of n . (m - base) for some cell member m off the edge line."""
    for m in cell.members:
        s = n[0] * (m[0] - base[0]) + n[1] * (m[1] - base[1])
        if s != 0:
            return 1 if s > 0 else -1
    raise AssertionError("cell members cannot all lie on one edge line")


def _curve_from_segment_support(pts) -> PlaneCurveGraph:
    """Collinear support: the curve is a union of parallel full lines.

    Each line is stored as a base vertex with two opposite rays so the
    equilibrium condition stays checkable.
    """
    coords = [p for p, _ in pts]
    heights = [h for _, h in pts]
    base = min(coords)
    far = max(coords)
    wx, wy = far[0] - base[0], far[1] - base[1]
    g = gcd(abs(wx), abs(wy))
    wx, wy = wx // g, wy // g
    ts = []
    for (x, y), h in zip(coords, heights):
        t = (x - base[0]) // wx if wx else (y - base[1]) // wy
        ts.append((t, h))
    ts.sort()
    hull = []
    for t, h in ts:  # lower hull in the (t, h) plane
        while len(hull) >= 2:
            (t1, h1), (t2, h2) = hull[-2], hull[-1]
            if (h2 - h1) * (t - t1) - (h - h1) * (t2 - t1) >= 0:
                hull.pop()
            else:
                break
        hull.append((t, h))
    vertices = []
    rays = []
    direction = (-wy, wx)
    for (t1, h1), (t2, h2) in zip(hull, hull[1:]):
        xi = -(h2 - h1) * Fraction(1, t2 - t1)
        if wx:
            point = (xi * Fraction(1, wx), Fraction(0))
        else:
            point = (Fraction(0), xi * Fraction(1, wy))
        vi = len(vertices)
        vertices.append(point)
        mult = t2 - t1
        rays.append(Ray(vi, direction, mult))
        rays.append(Ray(vi, (-direction[0], -direction[1]), mult))
    return PlaneCurveGraph(tuple(vertices), (), tuple(rays), None)


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    violations: tuple  # (vertex index, residual vector)

    def __bool__(self):
        return self.balanced


def check_balancing(graph: PlaneCurveGraph) -> BalanceReport:
    """Verify sum(m_i * v_i) = 0 over primitive outgoing directions, exactly."""
    sums = {v: [Fraction(0), Fraction(0)] for v in range(len(graph.vertices))}
    for e in graph.bounded_edges:
        d = _primitive_between(graph.vertices[e.v1], graph.vertices[e.v2])
        sums[e.v1][0] += e.multiplicity * d[0]
        sums[e.v1][1] += e.multiplicity * d[1]
        sums[e.v2][0] -= e.multiplicity * d[0]
        sums[e.v2][1] -= e.multiplicity * d[1]
    for r in graph.rays:
        sums[r.vertex][0] += r.multiplicity * r.direction[0]
        sums[r.vertex][1] += r.multiplicity * r.direction[1]
    violations = tuple(
        (v, (res[0], res[1])) for v, res in sums.items() if res[0] != 0 or res[1] != 0
    )
    return BalanceReport(not violations, violations)


def _primitive_between(p, q) -> tuple:
    dx = _exact_fraction(q[0] - p[0])
    dy = _exact_fraction(q[1] - p[1])
    scale = lcm(dx.denominator, dy.denominator)
    ix, iy = int(dx * scale), int(dy * scale)
    g = gcd(abs(ix), abs(iy))
    assert g > 0, "bounded edge endpoints must differ"
    return (ix // g, iy // g)


def _exact_fraction(v) -> Fraction:
    if isinstance(v, EpsRational):
        assert v.eps == 0, "edge directions must be standard rationals"
        return v.std
    return Fraction(v)


def graph_contains_point(graph: PlaneCurveGraph, p) -> bool:
    """Exact membership of a 2D point in the graph's point set."""
    x, y = p
    for vx, vy in graph.vertices:
        if vx == x and vy == y:
            return True
    for e in graph.bounded_edges:
        ax, ay = graph.vertices[e.v1]
        bx, by = graph.vertices[e.v2]
        if _on_segment((x, y), (ax, ay), (bx, by)):
            return True
    for r in graph.rays:
        ax, ay = graph.vertices[r.vertex]
        dx, dy = r.direction
        cross = (x - ax) * dy - (y - ay) * dx
        if cross != 0:
            continue
        t = (x - ax) * dx + (y - ay) * dy  # parameter sign along the ray
        if t >= 0:
            return True
    return False


def _on_segment(p, a, b) -> bool:
    cross = (p[0] - a[0]) * (b[1] - a[1]) - (p[1] - a[1]) * (b[0] - a[0])
    if cross != 0:
        return False
    dot = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
    if dot < 0:
        return False
    length2 = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
    return dot <= length2
