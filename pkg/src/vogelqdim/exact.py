"""Exact rationals and linear forms in the Vogel parameters.

``Rational`` is :class:`fractions.Fraction`; it already keeps the
denominator positive and the pair reduced.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]
Point3 = Tuple[Fraction, Fraction, Fraction]


def Q(x: RationalLike) -> Fraction:
    """Coerce an int, ``"p/q"`` string or Fraction into a Fraction.

    Floats are rejected: nothing in the core pipeline may be inexact.
    """
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use an int, Fraction or 'p/q' string")
    return Fraction(x)


def qstr(x: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class LinForm3:
    """Homogeneous linear form ``a*alpha + b*beta + c*gamma``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Q(getattr(self, name)))

    @property
    def coeffs(self) -> Point3:
        return (self.a, self.b, self.c)

    def __call__(self, p: Iterable[RationalLike]) -> Fraction:
        al, be, ga = (Q(v) for v in p)
        return self.a * al + self.b * be + self.c * ga

    def __add__(self, other: "LinForm3") -> "LinForm3":
        return LinForm3(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "LinForm3") -> "LinForm3":
        return LinForm3(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "LinForm3":
        return LinForm3(-self.a, -self.b, -self.c)

    def __mul__(self, s: RationalLike) -> "LinForm3":
        s = Q(s)
        return LinForm3(self.a * s, self.b * s, self.c * s)

    __rmul__ = __mul__

    def __truediv__(self, s: RationalLike) -> "LinForm3":
        return self * (1 / Q(s))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def ratio_to(self, other: "LinForm3") -> Fraction | None:
        """Return ``r`` with ``self == r*other``, or None if not proportional."""
        if other.is_zero():
            return None
        r = None
        for x, y in zip(self.coeffs, other.coeffs):
            if y == 0:
                if x != 0:
                    return None
                continue
            if r is None:
                r = x / y
            elif x != r * y:
                return None
        return r

    def along(self, base: Iterable[RationalLike], direction: Iterable[RationalLike]) -> "AffineForm":
        """Compose with the path ``s -> base + s*direction``."""
        return AffineForm(self(base), self(direction))

    def __str__(self) -> str:
        parts = []
        for coef, sym in zip(self.coeffs, ("alpha", "beta", "gamma")):
            if coef:
                parts.append(f"{qstr(coef)}*{sym}")
        return " + ".join(parts) if parts else "0"


ALPHA = LinForm3(1, 0, 0)
BETA = LinForm3(0, 1, 0)
GAMMA = LinForm3(0, 0, 1)


def eval_linform(f: LinForm3, p: Iterable[RationalLike]) -> Fraction:
    return f(p)


@dataclass(frozen=True)
class AffineForm:
    """``constant + slope*s`` for a line parameter ``s``."""

    constant: Fraction
    slope: Fraction

    def __call__(self, s: RationalLike) -> Fraction:
        return self.constant + self.slope * Q(s)

    def vanishes_at(self, s: RationalLike = 0) -> bool:
        return self(s) == 0

    def identically_zero(self) -> bool:
        return self.constant == 0 and self.slope == 0
