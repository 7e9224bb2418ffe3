"""Regular subdivisions of plane supports induced by coefficient lifts.

The support projects to (i, j); lifting each point by its coefficient and
taking lower faces of the convex hull yields the subdivision.  Cell search
enumerates supporting planes through affinely independent triples; the
combinatorics run on denominator-cleared integer heights (uniform positive
scaling preserves lower faces) and each cell's plane is then re-fit exactly
with the original coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


@dataclass(frozen=True)
class Cell:
    """One 2-cell of the subdivision.

    corners: hull vertices in counterclockwise order; members: every support
    point on the cell's plane (corners plus edge-interior points); plane
    (alpha, beta, gamma) with height = alpha*i + beta*j + gamma on the cell.
    """

    corners: tuple
    members: tuple
    plane: tuple


@dataclass(frozen=True)
class SubdivisionEdge:
    a: tuple
    b: tuple
    cells: tuple  # indices of incident cells

    @property
    def is_boundary(self) -> bool:
        return len(self.cells) == 1

    @property
    def lattice_length(self) -> int:
        return gcd(abs(self.a[0] - self.b[0]), abs(self.a[1] - self.b[1]))


@dataclass(frozen=True)
class RegularSubdivision:
    support: tuple  # projected (i, j) points
    hull_dim: int
    cells: tuple
    edges: tuple

    def interior_edges(self):
        return [e for e in self.edges if not e.is_boundary]

    def boundary_edges(self):
        return [e for e in self.edges if e.is_boundary]


def regular_subdivision(points) -> RegularSubdivision:
    """Subdivision of [(point2, height), ...] by lower faces of the lift.

    Heights may be Fractions or any exactly ordered ring elements supporting
    +,-,* with ints (EpsRational included); only 2-dimensional supports get
    cells, lower-dimensional ones report hull_dim < 2 and no cells.
    """
    pts = [tuple(p) for p, _ in points]
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate support points")
    heights = [h for _, h in points]
    dim = _affine_dim(pts)
    if dim < 2:
        return RegularSubdivision(tuple(pts), dim, (), ())
    comb_heights = _integerize(heights)
    member_sets = _lower_cells(pts, comb_heights)
    cells = []
    for members in member_sets:
        plane = _fit_plane(pts, heights, members)
        corners = _hull_ccw([pts[s] for s in members])
        cells.append(Cell(tuple(corners), tuple(pts[s] for s in sorted(members)), plane))
    cells.sort(key=lambda c: c.corners)
    edge_cells: dict = {}
    for ci, cell in enumerate(cells):
        n = len(cell.corners)
        for t in range(n):
            a, b = cell.corners[t], cell.corners[(t + 1) % n]
            key = (a, b) if a <= b else (b, a)
            edge_cells.setdefault(key, []).append(ci)
    edges = []
    for (a, b), incident in sorted(edge_cells.items()):
        assert len(incident) <= 2, "an edge can bound at most two cells"
        edges.append(SubdivisionEdge(a, b, tuple(incident)))
    return RegularSubdivision(tuple(pts), 2, tuple(cells), tuple(edges))


def _affine_dim(pts) -> int:
    if len(pts) <= 1:
        return 0
    base = pts[0]
    d0 = None
    for p in pts[1:]:
        v = (p[0] - base[0], p[1] - base[1])
        if v == (0, 0):
            continue
        if d0 is None:
            d0 = v
        elif d0[0] * v[1] - d0[1] * v[0] != 0:
            return 2
    return 1 if d0 is not None else 0


def _integerize(heights):
    if all(isinstance(h, (Fraction, int)) for h in heights):
        hs = [Fraction(h) for h in heights]
        scale = lcm(*(h.denominator for h in hs)) if hs else 1
        return [int(h * scale) for h in hs]
    return heights


def _lower_cells(pts, heights):
    """Member-index sets of the lower-hull facets (maximal coplanar sets)."""
    m = len(pts)
    found: list = []
    for a, b, c in itertools.combinations(range(m), 3):
        if any(a in f and b in f and c in f for f in found):
            continue
        (xa, ya), (xb, yb), (xc, yc) = pts[a], pts[b], pts[c]
        ux, uy, uh = xb - xa, yb - ya, heights[b] - heights[a]
        vx, vy, vh = xc - xa, yc - ya, heights[c] - heights[a]
        nz = ux * vy - uy * vx
        if nz == 0:
            continue  # collinear projections
        nx = uy * vh - uh * vy
        ny = uh * vx - ux * vh
        if nz < 0:
            nx, ny, nz = -nx, -ny, -nz
        members = set()
        lower = True
        for s in range(m):
            d = (
                nx * (pts[s][0] - xa)
                + ny * (pts[s][1] - ya)
                + nz * (heights[s] - heights[a])
            )
            if d < 0:
                lower = False
                break
            if d == 0:
                members.add(s)
        if lower:
            found.append(frozenset(members))
    return found


def _fit_plane(pts, heights, members):
    """Exact (alpha, beta, gamma) through the members' original lifts."""
    idx = sorted(members)
    a = idx[0]
    b = c = None
    for s in idx[1:]:
        if pts[s] != pts[a]:
            b = s
            break
    for s in idx[1:]:
        if s == b:
            continue
        ux, uy = pts[b][0] - pts[a][0], pts[b][1] - pts[a][1]
        vx, vy = pts[s][0] - pts[a][0], pts[s][1] - pts[a][1]
        if ux * vy - uy * vx != 0:
            c = s
            break
    assert b is not None and c is not None, "cell must span two dimensions"
    x1, y1 = pts[a]
    ux, uy = pts[b][0] - x1, pts[b][1] - y1
    vx, vy = pts[c][0] - x1, pts[c][1] - y1
    dh_u = heights[b] - heights[a]
    dh_v = heights[c] - heights[a]
    det = ux * vy - uy * vx
    alpha = (dh_u * vy - dh_v * uy) * Fraction(1, det)
    beta = (dh_v * ux - dh_u * vx) * Fraction(1, det)
    gamma = heights[a] - alpha * x1 - beta * y1
    for s in members:
        assert heights[s] == alpha * pts[s][0] + beta * pts[s][1] + gamma
    return (alpha, beta, gamma)


def _hull_ccw(points):
    """Convex hull corners in counterclockwise order (monotone chain, exact)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]
