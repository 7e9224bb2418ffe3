"""Acceptance suite: one test per criterion, exact checks, stated budgets.

Run with `pytest tests/test_acceptance.py -s` to see one PASS/FAIL line per
criterion.  Every expected value is exact; there are no tolerances anywhere.
"""

import itertools
import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from tropgeo.constructions import (
    GenericityError,
    PAPPUS_CONCLUSION_TRIPLE,
    PAPPUS_COUNTEREXAMPLE_LINES,
    PAPPUS_HYPOTHESIS_TRIPLES,
    conic_through_five,
    lines_concurrent,
    pappus_construct,
    pencil_through_four,
)
from tropgeo.conics import is_proper_conic
from tropgeo.curves import BUILD_STATS, build_curve, check_balancing
from tropgeo.intersect import stable_intersect
from tropgeo.linalg import (
    SingularMinorError,
    cramer_solve,
    linkage_tree,
    tp3_line,
    tp3_circuit_memberships,
    trop_det,
)
from tropgeo.polynomial import (
    CONIC_LABELS,
    CONIC_SUPPORT,
    TropicalPolynomial,
    conic_polynomial,
    full_support,
    line_polynomial,
)
from tropgeo.scalars import INF
from tropgeo.trees import enumerate_trees, is_compatible, is_planar_realizable

from oracles import brute_det

GOLDEN = Path(__file__).parent / "golden"


@contextmanager
def _criterion(name, budget_seconds):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"[acceptance] {name}: FAIL")
        raise
    elapsed = time.monotonic() - start
    assert elapsed < budget_seconds, f"{name} exceeded budget: {elapsed:.1f}s"
    print(f"[acceptance] {name}: PASS ({elapsed:.2f}s < {budget_seconds}s)")


def test_pappus_incidence_counterexample():
    with _criterion("pappus incidence counterexample", 1.0):
        L = PAPPUS_COUNTEREXAMPLE_LINES
        for triple in PAPPUS_HYPOTHESIS_TRIPLES:
            ok, _ = lines_concurrent(*(L[n] for n in triple))
            assert ok, triple
        ok, _ = lines_concurrent(*(L[n] for n in PAPPUS_CONCLUSION_TRIPLE))
        assert not ok


def _random_full_poly(rng, degree):
    return TropicalPolynomial.make(
        degree,
        {
            s: Fraction(rng.randint(-60, 60), rng.randint(1, 4))
            for s in full_support(degree)
        },
    )


def test_bezout_suite():
    with _criterion("Bezout: 200 random pairs, total = c*d", 120.0):
        rng = random.Random(20260101)
        degree_pairs = list(itertools.product((1, 2, 3, 4), repeat=2))
        for trial in range(200):
            c, d = degree_pairs[trial % len(degree_pairs)]
            F = _random_full_poly(rng, c)
            G = _random_full_poly(rng, d)
            si = stable_intersect(F, G)
            assert si.total == c * d, (trial, c, d, si.total)
            assert all(p.multiplicity >= 1 for p in si.points)


def test_perturbation_independence():
    with _criterion("perturbation independence: 100 pairs x 2 directions", 120.0):
        rng = random.Random(20260202)
        for trial in range(100):
            c, d = rng.choice((1, 2, 3)), rng.choice((1, 2, 3))
            F = _random_full_poly(rng, c)
            G = _random_full_poly(rng, d)
            first = stable_intersect(F, G, directions=[(1, 2), (1, 3), (1, 5)],
                                     cross_check=False)
            second = stable_intersect(F, G, directions=[(1, 13), (1, 17), (1, 19)],
                                      cross_check=False)
            assert first == second, trial


def test_determinant_oracle():
    with _criterion("determinant oracle: 1000 matrices vs brute force", 60.0):
        rng = random.Random(20260303)
        for _ in range(1000):
            k = rng.randint(1, 6)
            rows = []
            for _ in range(k):
                row = []
                for _ in range(k):
                    if rng.random() < 0.1:
                        row.append(INF)
                    else:
                        row.append(Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
                rows.append(row)
            value, count, _ = brute_det(rows)
            cert = trop_det(rows)
            assert cert.value == value
            assert cert.multiple_optima == (count >= 2)


def test_cramer_consistency():
    with _criterion("Cramer vs rows and linkage: 200 systems", 60.0):
        rng = random.Random(20260404)
        done = 0
        while done < 200:
            n = rng.randint(3, 6)
            rows = [
                [Fraction(rng.randint(-30, 30), rng.randint(1, 3)) for _ in range(n)]
                for _ in range(n - 1)
            ]
            try:
                tree, p = linkage_tree(rows)
            except SingularMinorError:
                continue
            done += 1
            sol = cramer_solve(rows)
            # (i) every row minimum attained at least twice
            for row in rows:
                values = [c + x for c, x in zip(row, sol.coords)]
                lo = min(values)
                assert values.count(lo) >= 2
            # (ii) linkage point agrees projectively
            d = p[0] - sol.coords[0]
            assert all(pi - qi == d for pi, qi in zip(p, sol.coords))


def test_properness_of_interpolated_conics():
    with _criterion("properness: 1000 random five-point conics", 60.0):
        rng = random.Random(20260505)
        for trial in range(1000):
            pts = [
                (
                    Fraction(rng.randint(-40, 40), rng.randint(1, 4)),
                    Fraction(rng.randint(-40, 40), rng.randint(1, 4)),
                    Fraction(0),
                )
                for _ in range(5)
            ]
            if trial % 5 == 1:
                pts[rng.randrange(5)] = pts[rng.randrange(5)]  # repeated points
            if trial % 17 == 0:
                pts = [pts[0]] * 5  # total degeneracy
            coeffs = conic_through_five(pts)
            a1, a2, a3, a4, a5, a6 = coeffs
            assert 2 * a2 <= a1 + a3
            assert 2 * a4 <= a3 + a5
            assert 2 * a6 <= a1 + a5
            assert is_proper_conic(coeffs)


def test_balancing_of_every_built_curve():
    with _criterion("balancing holds for every curve built this run", 60.0):
        rng = random.Random(20260606)
        # A dedicated diverse sweep on top of everything the session built.
        polys = [
            line_polynomial((0, 0, 0)),
            conic_polynomial((0, 0, 0, 0, 0, 0)),
            conic_polynomial((0, -2, 0, -2, 0, -2)),
            conic_polynomial((0, -1, 0, -4, 0, -1)),
            conic_polynomial((5, 0, 0, -5, -5, -5)),
            TropicalPolynomial.make(2, {(2, 0, 0): 0, (1, 1, 0): -1, (0, 2, 0): 0}),
        ]
        for d in (1, 2, 3, 4):
            for _ in range(10):
                polys.append(_random_full_poly(rng, d))
        for poly in polys:
            assert check_balancing(build_curve(poly)).balanced
        assert BUILD_STATS["curves_built"] > len(polys)
        assert BUILD_STATS["balance_failures"] == 0


def test_tree_counts_realizability_compatibility():
    with _criterion("tree counts 3/15/105, 90+15, 14 = 12+2, Catalan 14", 10.0):
        for n, count in ((4, 3), (5, 15), (6, 105)):
            labels = tuple(f"l{i}" for i in range(n))
            assert len(enumerate_trees(labels)) == count
        trees = enumerate_trees(CONIC_LABELS)
        shapes = [t.shape6() for t in trees]
        assert shapes.count("caterpillar") == 90
        assert shapes.count("snowflake") == 15
        realizable = [t for t in trees if is_planar_realizable(t, CONIC_LABELS)]
        assert len(realizable) == 14
        real_shapes = [t.shape6() for t in realizable]
        assert real_shapes.count("caterpillar") == 12
        assert real_shapes.count("snowflake") == 2
        positions = {lab: (s[0], s[1]) for lab, s in zip(CONIC_LABELS, CONIC_SUPPORT)}
        compatible = [t for t in trees if is_compatible(t, positions)]
        assert {t.splits for t in compatible} == {t.splits for t in realizable}
        assert len(compatible) == 14


def test_pencil_fixture_golden():
    with _criterion("pencil fixture (0,6),(5,3),(10,0),(8,8): frozen splits", 10.0):
        golden = json.loads((GOLDEN / "pencil_fixture.json").read_text())
        pts = [tuple(Fraction(c) for c in p) for p in golden["points"]]
        res = pencil_through_four(pts)
        assert res.tree.is_trivalent
        assert res.shape == "caterpillar"
        assert res.realizable is True
        assert [list(s) for s in res.tree.sorted_splits()] == golden["splits"]
        assert {
            "|".join(sorted(k)): str(v) for k, v in res.pluecker.items()
        } == golden["pluecker"]


def test_realizability_sweep():
    with _criterion("realizability sweep: 10^4 quadruples, all 14 trees", 300.0):
        rng = random.Random(20260809)
        seen = {}
        for _ in range(10000):
            pts = [
                (
                    Fraction(rng.randint(-1200, 1200), rng.randint(1, 8)),
                    Fraction(rng.randint(-1200, 1200), rng.randint(1, 8)),
                    Fraction(0),
                )
                for _ in range(4)
            ]
            try:
                res = pencil_through_four(pts, sweep=False)
            except GenericityError:
                continue
            if not res.tree.is_trivalent:
                continue
            assert res.realizable is True, pts  # never a non-realizable tree
            seen[tuple(res.tree.sorted_splits())] = res.shape
        assert len(seen) == 14
        shapes = list(seen.values())
        assert shapes.count("caterpillar") == 12
        assert shapes.count("snowflake") == 2


def test_constructive_pappus_sweep():
    with _criterion("constructive Pappus: 10^4 random instances singular", 300.0):
        rng = random.Random(20260707)
        for trial in range(10000):
            pts = [
                (
                    Fraction(rng.randint(-90, 90), rng.randint(1, 3)),
                    Fraction(rng.randint(-90, 90), rng.randint(1, 3)),
                    Fraction(0),
                )
                for _ in range(5)
            ]
            trace = pappus_construct(pts)
            if not trace.singular:
                dump = {
                    "trial": trial,
                    "points": [[str(c) for c in p] for p in pts],
                    "lines": {k: [str(c) for c in v] for k, v in trace.lines.items()},
                }
                raise AssertionError(
                    "constructive Pappus counterexample found (a genuine finding): "
                    + json.dumps(dump)
                )


def test_tp3_line_cases():
    with _criterion("TP^3 line cases: fixtures + circuit membership", 10.0):
        fixtures = {
            "[12,34]": ((1, 0, 0, 0, 0, 1),
                        (1, 1, 0, 0), (0, 0, 1, 1)),
            "[13,24]": ((0, 1, 0, 0, 1, 0),
                        (0, 1, 0, 1), (1, 0, 1, 0)),
            "[14,23]": ((0, 0, 1, 1, 0, 0),
                        (0, 1, 1, 0), (1, 0, 0, 1)),
        }
        for tag, (pl, e1, e2) in fixtures.items():
            line = tp3_line(*pl)
            assert line.case_tag == tag
            assert line.endpoint_1 == e1
            assert line.endpoint_2 == e2
            for endpoint in (line.endpoint_1, line.endpoint_2):
                memberships = tp3_circuit_memberships(pl, endpoint)
                assert all(memberships), (tag, endpoint, memberships)
