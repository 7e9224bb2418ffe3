"""Pappus in the tropical plane: incidence version false, constructive holds.

The committed nine-line configuration satisfies all eight hypothesis
concurrencies yet its conclusion triple has no common point.  Running the
twelve-step join/meet construction from five free points instead, the
conclusion matrix comes out tropically singular on every random instance
tried (checked here on a small sweep; the acceptance suite runs 10^4).

    python3 demos/06_pappus.py
"""

import random
from fractions import Fraction

from tropgeo import lines_concurrent, pappus_construct
from tropgeo.constructions import (
    PAPPUS_CONCLUSION_TRIPLE,
    PAPPUS_COUNTEREXAMPLE_LINES,
    PAPPUS_HYPOTHESIS_TRIPLES,
)

L = PAPPUS_COUNTEREXAMPLE_LINES
print("incidence counterexample, nine fixed lines:")
for triple in PAPPUS_HYPOTHESIS_TRIPLES:
    ok, witness = lines_concurrent(*(L[n] for n in triple))
    w = tuple(str(c) for c in witness)
    print(f"  {str(triple):24s} concurrent: {ok}   witness {w}")
ok, _ = lines_concurrent(*(L[n] for n in PAPPUS_CONCLUSION_TRIPLE))
print(f"  {str(PAPPUS_CONCLUSION_TRIPLE):24s} concurrent: {ok}   <- the conclusion fails")
print()

rng = random.Random(1)
print("constructive version on random five-point inputs:")
for k in range(5):
    pts = [(Fraction(rng.randint(-50, 50)), Fraction(rng.randint(-50, 50)), Fraction(0))
           for _ in range(5)]
    trace = pappus_construct(pts)
    print(f"  instance {k}: conclusion matrix singular = {trace.singular},"
          f" geometrically concurrent = {trace.concurrent}")
