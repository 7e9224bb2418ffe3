"""Plane curves from coefficient lifts, and the conic taxonomy.

Lifting each support point (i,j,k) by its coefficient and projecting the
lower hull gives the dual subdivision; the curve has one vertex per cell,
one bounded edge per interior edge, one ray per boundary edge, and is
balanced at every vertex.  Six coefficients of a conic decide its shape.

    python3 demos/02_curves_and_conics.py      # also writes demos/out/*.svg
"""

from fractions import Fraction
from pathlib import Path

from tropgeo import classify_conic, is_proper_conic
from tropgeo.curves import build_curve, check_balancing
from tropgeo.polynomial import conic_polynomial
from tropgeo.svgout import curve_svg

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

examples = {
    "double_line": (0, 0, 0, 0, 0, 0),
    "smooth_case_d": (0, -2, 0, -2, 0, -2),
    "case_e": (0, -1, 0, -4, 0, -1),
    "union_of_two_lines": (5, 0, 0, -5, -5, -5),
    "case_b_two_double_rays": (0, 0, 0, 0, 0, -1),
}

for name, coeffs in examples.items():
    coeffs = tuple(Fraction(c) for c in coeffs)
    cls = classify_conic(coeffs)
    graph = build_curve(conic_polynomial(coeffs))
    print(f"{name:24s} a = {tuple(int(c) for c in coeffs)}")
    print(f"   class = {cls.tag:20s} proper cone member: {is_proper_conic(coeffs)}")
    print(
        f"   vertices {len(graph.vertices)}, bounded edges {len(graph.bounded_edges)},"
        f" rays {len(graph.rays)}, balanced: {bool(check_balancing(graph))}"
    )
    path = OUT / f"conic_{name}.svg"
    path.write_text(curve_svg(graph))
    print(f"   wrote {path}")
    print()
