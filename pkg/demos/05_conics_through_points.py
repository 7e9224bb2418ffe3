"""Interpolation: the stable conic through five points, pencils through four.

Five arbitrary points always lie on a stable conic (coefficients are the
six maximal minors of the interpolation matrix), and that conic is always
proper.  Four generic points leave a one-parameter pencil whose
combinatorics is a six-leaf tree; only 14 of the 105 trees can occur.

    python3 demos/05_conics_through_points.py  # writes demos/out/pencil/*.svg
"""

from fractions import Fraction
from pathlib import Path

from tropgeo import conic_through_five, is_proper_conic, pencil_through_four
from tropgeo.curves import build_curve
from tropgeo.polynomial import CONIC_LABELS, conic_polynomial, point_on_curve
from tropgeo.svgout import curve_svg, pencil_tree_svg

OUT = Path(__file__).parent / "out" / "pencil"
OUT.mkdir(parents=True, exist_ok=True)


def pt(x, y):
    return (Fraction(x), Fraction(y), Fraction(0))


five = [pt(0, 6), pt(5, 3), pt(10, 0), pt(8, 8), pt(2, -3)]
coeffs = conic_through_five(five)
print("conic through", [(int(p[0]), int(p[1])) for p in five])
print("  coefficients:", dict(zip(CONIC_LABELS, map(str, coeffs))))
print("  proper:", is_proper_conic(coeffs))
poly = conic_polynomial(coeffs)
print("  interpolates all five:", all(point_on_curve(poly, p) for p in five))
print()

four = five[:4]
res = pencil_through_four(four)
print("pencil through the first four points:")
print("  tree splits:", res.tree.sorted_splits())
print("  shape:", res.shape, " realizable:", res.realizable)
print("  pairs of lines:", [e["pairing"] for e in res.pairs_of_lines])
print("  limit conics: one per dropped term:",
      [e["missing_term"] for e in res.limit_conics])
print("  vertex-conic events:", [(ev.point_index, ev.arc) for ev in res.vertex_conics])

(OUT / "tree.svg").write_text(pencil_tree_svg(res))
pts2 = [(p[0], p[1]) for p in four]
for n, entry in enumerate(res.pairs_of_lines):
    graph = build_curve(conic_polynomial(entry["coefficients"]))
    (OUT / f"pair_of_lines_{n}.svg").write_text(curve_svg(graph, extra_points=pts2))
for entry in res.limit_conics:
    graph = build_curve(conic_polynomial(entry["coefficients"]))
    (OUT / f"limit_{entry['missing_term']}.svg").write_text(
        curve_svg(graph, extra_points=pts2)
    )
print("\nwrote tree + distinguished-conic SVGs under", OUT)
