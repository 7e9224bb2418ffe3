"""Classification of plane tropical conics from their six coefficients.

Coefficient order is a1..a6 = x^2, xy, y^2, yz, z^2, xz.  The decision
follows the published inequality systems verbatim: identical rows of the
symmetric coefficient matrix give the double line; the counts of weak
inequalities 2a2 >= a1+a3, 2a4 >= a3+a5, 2a6 >= a1+a5 separate shapes a/b/c
(each holding inequality doubles the half ray opposite its variable pair);
in the all-strict regime the second system a2+a4 <> a3+a6, a2+a6 <> a1+a4,
a4+a6 <> a2+a5 separates d (all <) from e, with any equality giving a union
of two tropical lines.  Case c's two combinatorial sub-types are told apart
by the sign of a discriminating expression, with the unspecified zero case
reported as a boundary tag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .scalars import PlusInfinity


@dataclass(frozen=True)
class ConicClass:
    tag: str  # double_line | union_of_two_lines | case_a .. case_e
    double_rays: tuple = ()  # axes carrying a doubled half ray (cases a/b/c)
    subtype: Optional[str] = None  # case c: negative | positive | boundary

    @property
    def is_proper(self) -> bool:
        return self.tag in ("case_d", "case_e")


def _require_finite(a):
    values = tuple(a)
    if len(values) != 6 or any(isinstance(v, PlusInfinity) for v in values):
        raise ValueError("classification needs six finite coefficients")
    return tuple(Fraction(v) for v in values)


def is_proper_conic(a) -> bool:
    """Membership in the closed cone 2a2 <= a1+a3, 2a4 <= a3+a5, 2a6 <= a1+a5."""
    a1, a2, a3, a4, a5, a6 = _require_finite(a)
    return 2 * a2 <= a1 + a3 and 2 * a4 <= a3 + a5 and 2 * a6 <= a1 + a5


def classify_conic(a) -> ConicClass:
    a1, a2, a3, a4, a5, a6 = _require_finite(a)
    rows = ((a1, a2, a6), (a2, a3, a4), (a6, a4, a5))
    if _projectively_identical(rows):
        return ConicClass("double_line")
    holds_xy = 2 * a2 >= a1 + a3  # doubled ray in z-direction when it holds
    holds_yz = 2 * a4 >= a3 + a5  # doubled ray in x-direction
    holds_xz = 2 * a6 >= a1 + a5  # doubled ray in y-direction
    doubled = tuple(
        axis
        for flag, axis in ((holds_yz, "x"), (holds_xz, "y"), (holds_xy, "z"))
        if flag
    )
    count = len(doubled)
    if count == 3:
        return ConicClass("case_a", doubled)
    if count == 2:
        return ConicClass("case_b", doubled)
    if count == 1:
        if holds_xz:
            discr = 2 * a2 + a5 - a1 - 2 * a4
        elif holds_xy:
            discr = 2 * a6 + a3 - a1 - 2 * a4
        else:
            discr = 2 * a2 + a5 - a3 - 2 * a6
        subtype = "negative" if discr < 0 else ("positive" if discr > 0 else "boundary")
        return ConicClass("case_c", doubled, subtype)
    # Strictly inside the cone of proper conics: shapes d and e.
    lhs = (a2 + a4, a2 + a6, a4 + a6)
    rhs = (a3 + a6, a1 + a4, a2 + a5)
    if all(l < r for l, r in zip(lhs, rhs)):
        return ConicClass("case_d")
    if any(l == r for l, r in zip(lhs, rhs)):
        return ConicClass("union_of_two_lines")
    return ConicClass("case_e")


def _projectively_identical(rows) -> bool:
    r0 = rows[0]
    for r in rows[1:]:
        d = r[0] - r0[0]
        if r[1] - r0[1] != d or r[2] - r0[2] != d:
            return False
    return True
