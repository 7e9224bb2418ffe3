"""Stable intersections and the degree-product count.

Two curves of degrees c and d always intersect stably in c*d points counted
with multiplicity, even in degenerate positions: the second curve is nudged
by an infinitesimal translation, intersected exactly, and the limit taken.
A curve intersected with itself lands on its own vertices.

    python3 demos/03_stable_intersections.py   # writes demos/out/overlay.svg
"""

from fractions import Fraction
from pathlib import Path

from tropgeo.curves import build_curve
from tropgeo.intersect import stable_intersect, transversal_intersect, NotTransversal
from tropgeo.polynomial import conic_polynomial, line_polynomial
from tropgeo.svgout import overlay_svg

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

conic = conic_polynomial(tuple(Fraction(c) for c in (0, -1, 0, -4, 0, -1)))

print("one conic, three line poses; stable totals stay 1*2 = 2:")
for name, vertex in (("generic", (-6, 3)), ("vertex on an edge", (0, 3)),
                     ("ray along an edge", (2, 5))):
    line = line_polynomial((-Fraction(vertex[0]), -Fraction(vertex[1]), Fraction(0)))
    direct = transversal_intersect(build_curve(line), build_curve(conic))
    si = stable_intersect(line, conic)
    mode = "transversal" if not isinstance(direct, NotTransversal) else "perturbed"
    pts = [(str(p.location[0]), str(p.location[1]), p.multiplicity) for p in si.points]
    print(f"  line at {vertex}: {mode:12s} total {si.total}, points {pts}")

print()
si = stable_intersect(conic, conic)
print("conic with itself: total", si.total, "=", "its vertex set:")
for p in si.points:
    print("   vertex", (str(p.location[0]), str(p.location[1])), "multiplicity", p.multiplicity)

line = line_polynomial((Fraction(6), Fraction(-3), Fraction(0)))
si = stable_intersect(line, conic)
svg = overlay_svg(
    [build_curve(line), build_curve(conic)],
    [((p.location[0], p.location[1]), p.multiplicity) for p in si.points],
)
(OUT / "overlay.svg").write_text(svg)
print("\nwrote", OUT / "overlay.svg")
