"""Exact min-plus scalar arithmetic over the rationals extended with +inf.

The semiring is (Q u {+inf}, min, +): tropical addition is min, tropical
multiplication is ordinary addition, +inf is the additive identity and the
multiplicative absorber.  All values are exact; no floats appear anywhere.

Scalars are plain ``fractions.Fraction`` values, with ``INF`` as a distinct
tagged singleton (never a large number).  ``EpsRational`` is the one-
infinitesimal ordered extension q + r*eps used by the stable-intersection
engine; its order is lexicographic and products truncate at first order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class PlusInfinity:
    """The +inf element: neutral for min, absorbing for +. A singleton."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __eq__(self, other):
        return isinstance(other, PlusInfinity)

    def __hash__(self):
        return hash("tropgeo.inf")

    # Order: strictly above every rational.
    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, PlusInfinity)

    def __gt__(self, other):
        return not isinstance(other, PlusInfinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        raise ArithmeticError("cannot subtract from +inf")

    def __rsub__(self, other):
        raise ArithmeticError("cannot subtract +inf")


INF = PlusInfinity()

TropicalScalar = Union[Fraction, PlusInfinity]

Q0 = Fraction(0)


def is_finite(a: TropicalScalar) -> bool:
    return not isinstance(a, PlusInfinity)


def trop_add(a: TropicalScalar, b: TropicalScalar) -> TropicalScalar:
    """Tropical sum: min(a, b)."""
    return a if a <= b else b


def trop_mul(a: TropicalScalar, b: TropicalScalar) -> TropicalScalar:
    """Tropical product: a + b, with +inf absorbing."""
    if isinstance(a, PlusInfinity) or isinstance(b, PlusInfinity):
        return INF
    return a + b


def trop_sum(values) -> TropicalScalar:
    """Tropical sum (min) of an iterable; empty sum is +inf."""
    out: TropicalScalar = INF
    for v in values:
        if v < out:
            out = v
    return out


def parse_scalar(text: str) -> TropicalScalar:
    """Parse the repo-wide wire format: "p/q", "p", or "inf"."""
    s = text.strip()
    if s == "inf":
        return INF
    return Fraction(s)


def format_scalar(a: TropicalScalar) -> str:
    """Inverse of parse_scalar: "p/q" (or "p" when q = 1), "inf" for +inf."""
    if isinstance(a, PlusInfinity):
        return "inf"
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


class EpsRational:
    """q + r*eps with eps > 0 infinitesimal; ordered lexicographically.

    Addition and subtraction are componentwise; products truncate at first
    order in eps (the stable-intersection engine never produces an eps^2
    term because perturbations are rigid translations).  Setting r = 0
    embeds the rationals.
    """

    __slots__ = ("std", "eps")

    def __init__(self, std, eps=0):
        self.std = std if isinstance(std, Fraction) else Fraction(std)
        self.eps = eps if isinstance(eps, Fraction) else Fraction(eps)

    @staticmethod
    def lift(value) -> "EpsRational":
        if isinstance(value, EpsRational):
            return value
        return EpsRational(value)

    def standard_part(self) -> Fraction:
        return self.std

    def __repr__(self):
        if self.eps == 0:
            return f"~{self.std}"
        return f"~({self.std} + {self.eps}e)"

    def __hash__(self):
        return hash((self.std, self.eps))

    def __eq__(self, other):
        other = _coerce(other)
        return other is not None and self.std == other.std and self.eps == other.eps

    def __lt__(self, other):
        other = _coerce(other)
        return (self.std, self.eps) < (other.std, other.eps)

    def __le__(self, other):
        other = _coerce(other)
        return (self.std, self.eps) <= (other.std, other.eps)

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def __add__(self, other):
        other = _coerce(other)
        return EpsRational(self.std + other.std, self.eps + other.eps)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return EpsRational(self.std - other.std, self.eps - other.eps)

    def __rsub__(self, other):
        other = _coerce(other)
        return EpsRational(other.std - self.std, other.eps - self.eps)

    def __neg__(self):
        return EpsRational(-self.std, -self.eps)

    def __mul__(self, other):
        if isinstance(other, EpsRational):
            # eps^2 truncated
            return EpsRational(
                self.std * other.std, self.std * other.eps + self.eps * other.std
            )
        return EpsRational(self.std * other, self.eps * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, EpsRational):
            if other.eps != 0:
                raise ArithmeticError("division by a non-standard EpsRational")
            other = other.std
        return EpsRational(self.std / other, self.eps / other)


def _coerce(value):
    if isinstance(value, EpsRational):
        return value
    if isinstance(value, (int, Fraction)):
        return EpsRational(value)
    return None


# --- points of the tropical projective plane ---------------------------------
#
# A point of TP^2 is a coordinate triple modulo adding multiples of (1,1,1).
# Points are plain tuples of Fractions; equality is tested after the z = 0
# normalization below.

Point3 = tuple


def point3(x, y, z=0) -> Point3:
    return (Fraction(x), Fraction(y), Fraction(z))


def normalize_tp2(p: Point3) -> Point3:
    """Canonical representative (x - z, y - z, 0); idempotent."""
    x, y, z = p
    return (x - z, y - z, Fraction(0))


def tp2_equal(p: Point3, q: Point3) -> bool:
    return normalize_tp2(p) == normalize_tp2(q)


def tp_normalize(p) -> tuple:
    """Subtract the last coordinate: canonical representative in any TP^n."""
    last = p[-1]
    return tuple(c - last for c in p)


def parse_point(coords) -> Point3:
    values = [parse_scalar(c) for c in coords]
    if any(isinstance(v, PlusInfinity) for v in values):
        raise ValueError("projective points need finite coordinates")
    return tuple(values)


def format_point(p) -> list:
    return [format_scalar(c) for c in p]
