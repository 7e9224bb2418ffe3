"""Transversal and stable intersections of tropical plane curves.

Transversal crossings get the determinant multiplicity |det(u, v, 1)| m1 m2.
Stable intersection translates the second curve by eps * v for a generic
primitive direction v, intersects exactly over the ordered extension
Q + Q*eps, takes standard parts and merges coincident points; the result is
recomputed with a second direction and both multisets must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .curves import PlaneCurveGraph, build_curve
from .linalg import PreconditionError
from .polynomial import TropicalPolynomial
from .scalars import EpsRational

# (1, q) for increasing primes q; only finitely many directions are parallel
# to an edge of any given instance, so the scan below always terminates.
_GENERIC_DIRECTIONS = tuple(
    (1, q) for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)
)


@dataclass(frozen=True)
class IntersectionPoint:
    location: tuple  # (x, y, 0), exact rationals
    multiplicity: int


@dataclass(frozen=True)
class StableIntersection:
    points: tuple
    total: int


@dataclass(frozen=True)
class NotTransversal:
    """Signal (not a failure): some crossing is not interior-interior."""

    reasons: tuple


@dataclass(frozen=True)
class _Piece:
    """One 1-cell: base + t * direction for t in [0, length] (None = ray)."""

    base: tuple
    direction: tuple  # primitive integer (dx, dy)
    length: Optional[object]
    multiplicity: int


def _graph_pieces(g: PlaneCurveGraph) -> list:
    pieces = []
    for e in g.bounded_edges:
        a = g.vertices[e.v1]
        b = g.vertices[e.v2]
        d = _primitive(b[0] - a[0], b[1] - a[1])
        length = (b[0] - a[0]) / d[0] if d[0] else (b[1] - a[1]) / d[1]
        pieces.append(_Piece(a, d, length, e.multiplicity))
    for r in g.rays:
        pieces.append(_Piece(g.vertices[r.vertex], r.direction, None, r.multiplicity))
    return pieces


def _primitive(dx, dy) -> tuple:
    from math import gcd, lcm

    fx, fy = _std(dx), _std(dy)
    scale = lcm(fx.denominator, fy.denominator)
    ix, iy = int(fx * scale), int(fy * scale)
    g = gcd(abs(ix), abs(iy))
    return (ix // g, iy // g)


def _std(v) -> Fraction:
    if isinstance(v, EpsRational):
        assert v.eps == 0, "directions must be standard"
        return v.std
    return Fraction(v)


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _pair_events(p: _Piece, q: _Piece) -> list:
    """Intersections of two pieces: point and overlap events.

    Point events: ("point", location, t, s) with the crossing parameters.
    Overlap events: ("overlap", base, direction, length_or_None) for
    collinear intersections of positive length, ("touch", location) for
    collinear single-point contact.
    """
    dp, dq = p.direction, q.direction
    cross = _cross(dp[0], dp[1], dq[0], dq[1])
    rx = q.base[0] - p.base[0]
    ry = q.base[1] - p.base[1]
    if cross != 0:
        t = _cross(rx, ry, dq[0], dq[1]) / cross
        s = _cross(rx, ry, dp[0], dp[1]) / cross
        if t < 0 or (p.length is not None and t > p.length):
            return []
        if s < 0 or (q.length is not None and s > q.length):
            return []
        loc = (p.base[0] + t * dp[0], p.base[1] + t * dp[1])
        return [("point", loc, t, s)]
    if _cross(rx, ry, dp[0], dp[1]) != 0:
        return []  # parallel, distinct lines
    # Collinear: express q's parameter range in p's units.
    t0 = rx / dp[0] if dp[0] else ry / dp[1]
    if dq == dp:
        q_lo, q_hi = t0, (None if q.length is None else t0 + q.length)
    else:
        q_lo, q_hi = (None if q.length is None else t0 - q.length), t0
    zero = 0 * rx  # typed zero (Fraction or EpsRational)
    lo = q_lo if (q_lo is not None and q_lo > zero) else zero
    hi = p.length
    if q_hi is not None and (hi is None or q_hi < hi):
        hi = q_hi
    if hi is not None and lo > hi:
        return []
    if hi is not None and lo == hi:
        loc = (p.base[0] + lo * dp[0], p.base[1] + lo * dp[1])
        return [("touch", loc)]
    base = (p.base[0] + lo * dp[0], p.base[1] + lo * dp[1])
    length = None if hi is None else hi - lo
    return [("overlap", base, dp, length)]


def transversal_intersect(
    C: PlaneCurveGraph, D: PlaneCurveGraph
) -> Union[StableIntersection, NotTransversal]:
    """All crossings when every one is interior to an edge of each curve.

    Any vertex contact or overlap segment yields NotTransversal; callers
    fall through to stable_intersect.
    """
    crossings = {}
    reasons = []
    pieces_c = _graph_pieces(C)
    pieces_d = _graph_pieces(D)
    for p in pieces_c:
        for q in pieces_d:
            for ev in _pair_events(p, q):
                if ev[0] == "overlap":
                    reasons.append("curves overlap in a segment or ray")
                elif ev[0] == "touch":
                    reasons.append("collinear edges touch at a vertex")
                else:
                    _, loc, t, s = ev
                    interior_p = t > 0 and (p.length is None or t < p.length)
                    interior_q = s > 0 and (q.length is None or s < q.length)
                    if not (interior_p and interior_q):
                        reasons.append("a vertex of one curve lies on the other")
                        continue
                    mult = abs(
                        _cross(p.direction[0], p.direction[1], q.direction[0], q.direction[1])
                    ) * p.multiplicity * q.multiplicity
                    key = loc
                    if key in crossings:
                        reasons.append("two edge pairs meet at one point")
                    crossings[key] = mult
    if reasons:
        return NotTransversal(tuple(sorted(set(reasons))))
    points = tuple(
        IntersectionPoint((x, y, _zero_like(x)), m)
        for (x, y), m in sorted(crossings.items())
    )
    return StableIntersection(points, sum(m for _, m in crossings.items()))


def _zero_like(x):
    return x - x


def intersection_cells(C: PlaneCurveGraph, D: PlaneCurveGraph) -> dict:
    """Raw geometric intersection: points plus overlap pieces, no multiplicities.

    Diagnostic view of the set-theoretic (prevariety) intersection; overlap
    segments and rays carry no multiplicity claim.
    """
    points = set()
    overlaps = []
    for p in _graph_pieces(C):
        for q in _graph_pieces(D):
            for ev in _pair_events(p, q):
                if ev[0] == "point" or ev[0] == "touch":
                    points.add(ev[1])
                else:
                    overlaps.append({"base": ev[1], "direction": ev[2], "length": ev[3]})
    return {"points": sorted(points), "overlaps": overlaps}


def _eps_translate(g: PlaneCurveGraph, v: tuple) -> PlaneCurveGraph:
    return g.translated(EpsRational(0, v[0]), EpsRational(0, v[1]))


def _collapse_standard(si: StableIntersection) -> StableIntersection:
    merged = {}
    for pt in si.points:
        x, y, _ = pt.location
        key = (_standard(x), _standard(y))
        merged[key] = merged.get(key, 0) + pt.multiplicity
    points = tuple(
        IntersectionPoint((x, y, Fraction(0)), m) for (x, y), m in sorted(merged.items())
    )
    return StableIntersection(points, sum(merged.values()))


def _standard(v) -> Fraction:
    return v.std if isinstance(v, EpsRational) else Fraction(v)


def stable_intersect(
    F: TropicalPolynomial,
    G: TropicalPolynomial,
    directions=None,
    cross_check: bool = True,
) -> StableIntersection:
    """Stable intersection of T(F) and T(G) by symbolic perturbation.

    Translates T(G) by eps * v, intersects transversally over Q + Q*eps,
    and takes standard parts.  With cross_check the computation is repeated
    for a second generic direction and the multisets must coincide.
    """
    C = build_curve(F)
    D = build_curve(G)
    results = []
    for v in directions or _GENERIC_DIRECTIONS:
        out = transversal_intersect(C, _eps_translate(D, v))
        if isinstance(out, NotTransversal):
            continue
        results.append(_collapse_standard(out))
        if not cross_check or len(results) == 2:
            break
    if not results:
        raise RuntimeError("no generic perturbation direction found (invalid input?)")
    if cross_check and len(results) < 2:
        raise RuntimeError("could not validate perturbation independence")
    if cross_check and results[0] != results[1]:
        raise AssertionError("stable intersection depended on the perturbation direction")
    return results[0]


def bezout_check(F: TropicalPolynomial, G: TropicalPolynomial) -> bool:
    """Stable-intersection total equals the product of the degrees."""
    if not F.has_full_support() or not G.has_full_support():
        raise PreconditionError("Bezout needs full supports of the stated degrees")
    return stable_intersect(F, G).total == F.degree * G.degree
