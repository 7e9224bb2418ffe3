"""Deterministic SVG rendering of evaluated scenes and curve graphs.

Coordinates use the z = 0 chart with the y axis flipped for the screen;
rays are clipped at the viewport; edges of multiplicity m are drawn as m
parallel strokes.  Output is byte-identical for identical input.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import PlaneCurveGraph
from .scene import EvaluatedScene

_CANVAS = 640.0
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
            "#17becf", "#e377c2", "#7f7f7f", "#bcbd22")


def _fmt(x: float) -> str:
    return f"{x:.3f}"


class _Canvas:
    def __init__(self, viewport):
        x0, y0, x1, y1 = (float(v) for v in viewport)
        assert x1 > x0 and y1 > y0, "viewport must be non-degenerate"
        self.x0, self.y0, self.x1, self.y1 = x0, y0, x1, y1
        self.scale = _CANVAS / max(x1 - x0, y1 - y0)
        self.body = []

    def pix(self, p):
        x, y = float(p[0]), float(p[1])
        return ((x - self.x0) * self.scale, (self.y1 - y) * self.scale)

    def line(self, a, b, color, width=1.6, dash=None):
        (xa, ya), (xb, yb) = self.pix(a), self.pix(b)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.body.append(
            f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}" '
            f'stroke="{color}" stroke-width="{_fmt(width)}"{extra} />'
        )

    def dot(self, p, color, r=4.0):
        x, y = self.pix(p)
        self.body.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}" fill="{color}" />'
        )

    def text(self, p, label, color="#111111", offset=(6.0, -6.0)):
        x, y = self.pix(p)
        self.body.append(
            f'<text x="{_fmt(x + offset[0])}" y="{_fmt(y + offset[1])}" '
            f'font-size="13" font-family="sans-serif" fill="{color}">{label}</text>'
        )

    def render(self) -> str:
        w = _fmt((self.x1 - self.x0) * self.scale)
        h = _fmt((self.y1 - self.y0) * self.scale)
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">'
        )
        bg = f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff" />'
        return "\n".join([head, bg] + self.body + ["</svg>"])


def _graph_segments(g: PlaneCurveGraph, viewport):
    """Bounded edges plus rays clipped to the viewport, with multiplicities."""
    x0, y0, x1, y1 = (Fraction(v) for v in viewport)
    span = 2 * max(x1 - x0, y1 - y0)
    segments = []
    for e in g.bounded_edges:
        segments.append((g.vertices[e.v1], g.vertices[e.v2], e.multiplicity))
    for r in g.rays:
        base = g.vertices[r.vertex]
        dx, dy = r.direction
        scale = span / max(abs(dx), abs(dy))
        tip = (base[0] + dx * scale, base[1] + dy * scale)
        segments.append((base, tip, r.multiplicity))
    return segments


def _draw_graph(canvas: _Canvas, g: PlaneCurveGraph, viewport, color):
    for a, b, mult in _graph_segments(g, viewport):
        if mult <= 1:
            canvas.line(a, b, color)
            continue
        # Parallel offset strokes, one per multiplicity unit.
        ax, ay = canvas.pix(a)
        bx, by = canvas.pix(b)
        nx, ny = -(by - ay), bx - ax
        norm = (nx * nx + ny * ny) ** 0.5 or 1.0
        nx, ny = nx / norm, ny / norm
        for t in range(mult):
            off = (t - (mult - 1) / 2.0) * 2.4
            canvas.body.append(
                f'<line x1="{_fmt(ax + nx * off)}" y1="{_fmt(ay + ny * off)}" '
                f'x2="{_fmt(bx + nx * off)}" y2="{_fmt(by + ny * off)}" '
                f'stroke="{color}" stroke-width="1.6" />'
            )
    for v in g.vertices:
        canvas.dot(v, color, r=2.2)


def default_viewport(evaluated: EvaluatedScene):
    """Bounding box of all finite geometry with a 20% margin."""
    xs, ys = [], []
    for el in evaluated.elements.values():
        if el["kind"] == "point":
            x, y, z = el["coords"]
            xs.append(x - z)
            ys.append(y - z)
        elif el["kind"] in ("line", "conic", "curve"):
            for vx, vy in el["graph"].vertices:
                xs.append(vx)
                ys.append(vy)
        elif el["kind"] == "intersection":
            for pt in el["result"].points:
                xs.append(pt.location[0])
                ys.append(pt.location[1])
    if not xs:
        return (Fraction(-5), Fraction(-5), Fraction(5), Fraction(5))
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    side = max(x1 - x0, y1 - y0, Fraction(1))
    margin = side / 5
    return (x0 - margin, y0 - margin, x0 + side + margin, y0 + side + margin)


def export_svg(evaluated: EvaluatedScene, viewport=None) -> str:
    """Render an evaluated scene: curves, clipped rays, labeled points."""
    if viewport is None:
        viewport = default_viewport(evaluated)
    canvas = _Canvas(viewport)
    color_idx = 0
    for name, el in evaluated.elements.items():
        kind = el["kind"]
        if kind in ("line", "conic", "curve"):
            color = _PALETTE[color_idx % len(_PALETTE)]
            color_idx += 1
            _draw_graph(canvas, el["graph"], viewport, color)
            anchor = el["graph"].vertices[0] if el["graph"].vertices else None
            if anchor is not None:
                canvas.text(anchor, name, color)
        elif kind == "intersection":
            for pt in el["result"].points:
                p2 = (pt.location[0], pt.location[1])
                canvas.dot(p2, "#000000", r=5.0)
                label = name if pt.multiplicity == 1 else f"{name} (x{pt.multiplicity})"
                canvas.text(p2, label)
    for name, el in evaluated.elements.items():
        if el["kind"] == "point":
            x, y, z = el["coords"]
            p2 = (x - z, y - z)
            fill = "#111111" if el.get("free") else "#555555"
            canvas.dot(p2, fill)
            canvas.text(p2, name)
    return canvas.render()


def curve_svg(graph: PlaneCurveGraph, viewport=None, extra_points=()) -> str:
    """Standalone rendering of one curve graph (used by the CLI)."""
    if viewport is None:
        xs = [v[0] for v in graph.vertices] + [p[0] for p in extra_points]
        ys = [v[1] for v in graph.vertices] + [p[1] for p in extra_points]
        if not xs:
            viewport = (Fraction(-5), Fraction(-5), Fraction(5), Fraction(5))
        else:
            x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
            side = max(x1 - x0, y1 - y0, Fraction(1))
            m = side / 5
            viewport = (x0 - m, y0 - m, x0 + side + m, y0 + side + m)
    canvas = _Canvas(viewport)
    _draw_graph(canvas, graph, viewport, _PALETTE[0])
    for i, p in enumerate(extra_points):
        canvas.dot((p[0], p[1]), "#111111")
        canvas.text((p[0], p[1]), f"P{i + 1}")
    return canvas.render()


def overlay_svg(graphs, points, viewport=None) -> str:
    """Two or more curves plus labeled intersection points (CLI intersect)."""
    if viewport is None:
        xs, ys = [], []
        for g in graphs:
            xs += [v[0] for v in g.vertices]
            ys += [v[1] for v in g.vertices]
        xs += [p[0] for p, _ in points]
        ys += [p[1] for p, _ in points]
        if not xs:
            viewport = (Fraction(-5), Fraction(-5), Fraction(5), Fraction(5))
        else:
            x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
            side = max(x1 - x0, y1 - y0, Fraction(1))
            m = side / 5
            viewport = (x0 - m, y0 - m, x0 + side + m, y0 + side + m)
    canvas = _Canvas(viewport)
    for i, g in enumerate(graphs):
        _draw_graph(canvas, g, viewport, _PALETTE[i % len(_PALETTE)])
    for i, (p, mult) in enumerate(points):
        canvas.dot((p[0], p[1]), "#000000", r=5.0)
        label = chr(ord("A") + i) if i < 26 else f"P{i}"
        if mult > 1:
            label += f" (x{mult})"
        canvas.text((p[0], p[1]), label)
    return canvas.render()


def pencil_tree_svg(pencil) -> str:
    """Abstract diagram of a pencil's six-leaf tree."""
    tree = pencil.tree
    shape = pencil.shape
    width, height = 520.0, 320.0
    body = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect x="0" y="0" width="{width:.0f}" height="{height:.0f}" fill="#ffffff" />',
    ]

    def seg(a, b):
        body.append(
            f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" y2="{_fmt(b[1])}" '
            'stroke="#333333" stroke-width="1.8" />'
        )

    def leaf(p, label):
        body.append(
            f'<circle cx="{_fmt(p[0])}" cy="{_fmt(p[1])}" r="3.4" fill="#1f77b4" />'
        )
        body.append(
            f'<text x="{_fmt(p[0] + 6)}" y="{_fmt(p[1] - 6)}" font-size="13" '
            f'font-family="sans-serif" fill="#111111">{label}</text>'
        )

    if shape == "caterpillar":
        groups = _caterpillar_groups(tree)
        spine_y = height / 2
        xs = [90.0 + i * (width - 180.0) / 3 for i in range(4)]
        for a, b in zip(xs, xs[1:]):
            seg((a, spine_y), (b, spine_y))
        for x, group in zip(xs, groups):
            for gi, label in enumerate(sorted(group)):
                tip = (x - 40 + 80 * gi, spine_y - 70) if len(group) > 1 else (x, spine_y - 70)
                seg((x, spine_y), tip)
                leaf(tip, label)
    elif shape == "snowflake":
        cx, cy = width / 2, height / 2
        dirs = ((0.0, -1.0), (0.87, 0.5), (-0.87, 0.5))
        cherries = sorted(
            tuple(sorted(s if len(s) == 2 else set(tree.leaves) - s)) for s in tree.splits
        )
        for (dx, dy), cherry in zip(dirs, cherries):
            mid = (cx + dx * 70, cy + dy * 70)
            seg((cx, cy), mid)
            for gi, label in enumerate(cherry):
                angle = (-0.5 + gi) * 1.1
                import math

                ex = dx * math.cos(angle) - dy * math.sin(angle)
                ey = dx * math.sin(angle) + dy * math.cos(angle)
                tip = (mid[0] + ex * 60, mid[1] + ey * 60)
                seg(mid, tip)
                leaf(tip, label)
    else:
        body.append(
            '<text x="20" y="40" font-size="14" font-family="sans-serif">non-trivalent pencil tree</text>'
        )
    body.append(
        f'<text x="16" y="{_fmt(height - 14)}" font-size="13" font-family="sans-serif" '
        f'fill="#444444">{shape} tree, splits: '
        + "; ".join("{" + ",".join(s) + "}" for s in tree.sorted_splits())
        + "</text>"
    )
    body.append("</svg>")
    return "\n".join(body)


def _caterpillar_groups(tree):
    """Leaf groups along the spine: cherry, middle, middle, cherry."""
    labels = tree.leaves
    min2 = [s for s in tree.splits if min(len(s), 6 - len(s)) == 2]
    cherries = sorted(
        (s if len(s) == 2 else frozenset(set(labels) - s) for s in min2),
        key=lambda s: sorted(s),
    )
    middle = [s for s in tree.splits if min(len(s), 6 - len(s)) == 3][0]
    ch_a, ch_b = cherries
    side = set(middle if ch_a <= middle else set(labels) - middle)
    x = (side - ch_a).pop()
    y = (set(labels) - side - ch_b).pop()
    return [sorted(ch_a), [x], [y], sorted(ch_b)]
