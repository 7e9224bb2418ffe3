"""Homogeneous tropical polynomials on the plane and their evaluation.

A polynomial is a support set inside {(i,j,k) : i+j+k = d} with finite
rational coefficients; a term with coefficient +inf is a deleted term and is
dropped on construction (0 is the neutral element for the tropical product,
not for the sum, so a zero coefficient is an honest term).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import INF, PlusInfinity, format_scalar, parse_scalar


@dataclass(frozen=True)
class TropicalPolynomial:
    """degree d plus a map (i,j,k) -> finite coefficient."""

    degree: int
    terms: tuple  # sorted tuple of ((i, j, k), Fraction)

    @staticmethod
    def make(degree: int, coeffs) -> "TropicalPolynomial":
        items = []
        for point, c in dict(coeffs).items():
            i, j, k = point
            if i < 0 or j < 0 or k < 0 or i + j + k != degree:
                raise ValueError(f"support point {point} is not homogeneous of degree {degree}")
            if isinstance(c, PlusInfinity):
                continue  # deleted term
            items.append(((i, j, k), Fraction(c)))
        if not items:
            raise ValueError("a tropical polynomial needs at least one finite coefficient")
        return TropicalPolynomial(degree, tuple(sorted(items)))

    @property
    def support(self) -> tuple:
        return tuple(p for p, _ in self.terms)

    def coefficient(self, point):
        for p, c in self.terms:
            if p == point:
                return c
        return INF

    def has_full_support(self) -> bool:
        """Degree-d polynomial in the strict sense: support equals the whole simplex."""
        d = self.degree
        want = {(i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)}
        return set(self.support) == want

    def term_values(self, p):
        """The linear-form values a + i*x + j*y + k*z at p, in term order."""
        x, y, z = p
        return [c + i * x + j * y + k * z for (i, j, k), c in self.terms]

    def evaluate(self, p):
        return min(self.term_values(p))

    def translated(self, dx, dy) -> "TropicalPolynomial":
        """Coefficients of F(x - dx, y - dy, z): the curve translated by (dx, dy)."""
        return TropicalPolynomial(
            self.degree,
            tuple(sorted(((ijk, c - ijk[0] * dx - ijk[1] * dy) for ijk, c in self.terms))),
        )

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"i": i, "j": j, "k": k, "coeff": format_scalar(c)}
                for (i, j, k), c in self.terms
            ],
        }

    @staticmethod
    def from_json(data) -> "TropicalPolynomial":
        coeffs = {}
        for t in data["terms"]:
            coeffs[(t["i"], t["j"], t["k"])] = parse_scalar(t["coeff"])
        return TropicalPolynomial.make(data["degree"], coeffs)


def full_support(degree: int) -> tuple:
    return tuple(
        (i, j, degree - i - j) for i in range(degree + 1) for j in range(degree + 1 - i)
    )


def line_polynomial(u) -> TropicalPolynomial:
    """Degree-1 polynomial u1 x + u2 y + u3 z (tropically)."""
    u1, u2, u3 = u
    return TropicalPolynomial.make(1, {(1, 0, 0): u1, (0, 1, 0): u2, (0, 0, 1): u3})


# Conic support in the fixed coefficient order a1..a6 = x^2, xy, y^2, yz, z^2, xz.
CONIC_SUPPORT = ((2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1), (0, 0, 2), (1, 0, 1))
CONIC_LABELS = ("x2", "xy", "y2", "yz", "z2", "xz")


def conic_polynomial(a) -> TropicalPolynomial:
    """Conic from its six coefficients (a1..a6); +inf entries are deleted terms."""
    if len(a) != 6:
        raise ValueError("a conic needs six coefficients")
    return TropicalPolynomial.make(2, dict(zip(CONIC_SUPPORT, a)))


def conic_row(p) -> tuple:
    """Interpolation row (2x, x+y, 2y, y+z, 2z, x+z) of a point."""
    x, y, z = p
    return (2 * x, x + y, 2 * y, y + z, 2 * z, x + z)


def point_on_curve(F: TropicalPolynomial, p) -> bool:
    """True iff the defining minimum is attained by two or more terms at p."""
    values = F.term_values(p)
    if len(values) < 2:
        return False
    lo = min(values)
    return values.count(lo) >= 2
