"""Min-plus arithmetic and tropical lines in the plane.

A tropical line u1 x (+) u2 y (+) u3 z is the set where the minimum of the
three linear terms is attained twice: three half rays leaving the vertex
(-u1, -u2, -u3) in the coordinate directions.  Any two generic lines meet in
exactly one point, and any two points lie on one line. Run:

    python3 demos/01_semiring_and_lines.py
"""

from fractions import Fraction

from tropgeo import INF, trop_add, trop_mul, trop_cross
from tropgeo.curves import build_curve
from tropgeo.polynomial import line_polynomial, point_on_curve

print("tropical sum 3 (+) 5      =", trop_add(Fraction(3), Fraction(5)))
print("tropical product 3 (.) 5  =", trop_mul(Fraction(3), Fraction(5)))
print("identity:  x (+) inf      =", trop_add(Fraction(7), INF))
print("absorbing: x (.) inf      =", trop_mul(Fraction(7), INF))
print()

line = line_polynomial((Fraction(2), Fraction(-1), Fraction(0)))
graph = build_curve(line)
print("line 2x (+) -1y (+) 0z")
print("  vertex:", graph.vertices[0], " (that is (-2, 1) = (-u1+u3, -u2+u3))")
print("  rays:  ", [(r.direction, r.multiplicity) for r in graph.rays])
print()

p = (Fraction(4), Fraction(-2), Fraction(0))
q = (Fraction(0), Fraction(5), Fraction(0))
join = trop_cross(p, q)
print("stable join of", p, "and", q, "->", join)
print("  contains p:", point_on_curve(line_polynomial(join), p))
print("  contains q:", point_on_curve(line_polynomial(join), q))

meet = trop_cross(join, (Fraction(0), Fraction(0), Fraction(0)))
print("stable meet with the line (0,0,0) ->", meet)
