"""Solving (n-1) tropical linear equations in n unknowns.

The stable solution's j-th coordinate is the tropical determinant of the
coefficient matrix with column j deleted (computed as an assignment
problem, never by enumerating permutations).  When every maximal minor is
tropically non-singular, the same point falls out of a transportation
problem whose optimal support is the linkage tree.

    python3 demos/04_cramer_and_linkage.py
"""

from fractions import Fraction

from tropgeo import cramer_solve, linkage_tree, tp3_line, trop_det

rows = [[0, 0, 0], [0, 1, 3]]
sol = cramer_solve(rows)
print("system rows:", rows)
print("stable solution point:", tuple(str(c) for c in sol.coords))
print("maximal minors:", [(str(c.value), c.multiple_optima) for c in sol.minors])

tree, p = linkage_tree(rows)
print("linkage tree edges (row label, columns):", tree.edges)
print("tree point:", tuple(str(c) for c in p), "(projectively the same)")
print()

m = [[2, 6, 0], [6, 4, 0], [0, 0, 0]]
cert = trop_det(m)
print("det of", m, "=", str(cert.value))
print("  optimal permutations tie:", cert.multiple_optima, " witnesses:", cert.witnesses)
print()

line = tp3_line(Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0), Fraction(1))
print("line in TP^3 for orders (a12..a34) = (1,0,0,0,0,1):")
print("  case", line.case_tag)
print("  endpoints", line.endpoint_1, "and", line.endpoint_2)
