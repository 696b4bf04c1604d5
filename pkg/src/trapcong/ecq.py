"""Exact arithmetic on short Weierstrass curves y^2 = x^3 + Ax + B over Q."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import as_rat, rat_str


class NotOnCurveError(ValueError):
    pass


class SingularCurveError(ValueError):
    pass


@dataclass(frozen=True)
class Curve:
    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", as_rat(self.A))
        object.__setattr__(self, "B", as_rat(self.B))
        if 4 * self.A**3 + 27 * self.B**2 == 0:
            raise SingularCurveError(f"{self} is singular")

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({self.A})x + ({self.B})"

    def rhs(self, x: Fraction) -> Fraction:
        return x**3 + self.A * x + self.B

    def contains(self, x, y) -> bool:
        x, y = as_rat(x), as_rat(y)
        return y * y == self.rhs(x)

    def point(self, x, y) -> "Point":
        return Point(self, as_rat(x), as_rat(y))

    @property
    def infinity(self) -> "Point":
        return Point(self)

    def to_json(self) -> dict:
        return {"A": rat_str(self.A), "B": rat_str(self.B)}


@dataclass(frozen=True)
class Point:
    """Affine point on ``curve``, or the point at infinity when x is None."""

    curve: Curve
    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("give both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", as_rat(self.x))
            object.__setattr__(self, "y", as_rat(self.y))
            if not self.curve.contains(self.x, self.y):
                raise NotOnCurveError(f"({self.x}, {self.y}) is not on {self.curve}")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def xy(self) -> tuple[Fraction, Fraction]:
        if self.is_infinity:
            raise ValueError("point at infinity has no coordinates")
        return self.x, self.y

    def __neg__(self) -> "Point":
        return neg(self)

    def __add__(self, other: "Point") -> "Point":
        return add(self.curve, self, other)

    def __sub__(self, other: "Point") -> "Point":
        return add(self.curve, self, neg(other))

    def __rmul__(self, m: int) -> "Point":
        return mul(self.curve, m, self)

    def __repr__(self) -> str:
        if self.is_infinity:
            return "Point(O)"
        return f"Point({self.x}, {self.y})"

    def to_json(self) -> dict | str:
        if self.is_infinity:
            return "infinity"
        return {"x": rat_str(self.x), "y": rat_str(self.y)}


def discriminant(E: Curve) -> Fraction:
    return -16 * (4 * E.A**3 + 27 * E.B**2)


def j_invariant(E: Curve) -> Fraction:
    c = 4 * E.A**3
    return 1728 * c / (c + 27 * E.B**2)


def on_curve(E: Curve, P) -> bool:
    """P may be a Point, an (x, y) pair, or None for infinity."""
    if P is None:
        return True
    if isinstance(P, Point):
        return P.curve == E and (P.is_infinity or E.contains(P.x, P.y))
    x, y = P
    return E.contains(x, y)


def _check(E: Curve, *pts: Point):
    for P in pts:
        if P.curve != E:
            raise NotOnCurveError(f"{P!r} belongs to {P.curve}, not {E}")


def neg(P: Point) -> Point:
    if P.is_infinity:
        return P
    return Point(P.curve, P.x, -P.y)


def add(E: Curve, P: Point, Q: Point) -> Point:
    _check(E, P, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return E.infinity
        lam = (3 * P.x * P.x + E.A) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return Point(E, x3, y3)


def dbl(E: Curve, P: Point) -> Point:
    return add(E, P, P)


def mul(E: Curve, m: int, P: Point) -> Point:
    _check(E, P)
    if m < 0:
        return neg(mul(E, -m, P))
    R, addend = E.infinity, P
    while m:
        if m & 1:
            R = add(E, R, addend)
        addend = add(E, addend, addend)
        m >>= 1
    return R


def chord_third(E: Curve, P: Point, Q: Point) -> Point:
    """Third intersection of the line PQ with E."""
    _check(E, P, Q)
    if P.is_infinity or Q.is_infinity or P == Q:
        raise ValueError("chord needs two distinct affine points")
    if P.x == Q.x:
        raise ValueError("vertical chord: the third point is at infinity")
    return neg(add(E, P, Q))


def is_integral(P: Point) -> bool:
    return not P.is_infinity and P.x.denominator == 1 and P.y.denominator == 1


def torsion_order(E: Curve, P: Point) -> int | None:
    """Order of P if finite (Mazur: at most 12), else None."""
    _check(E, P)
    R = P
    for m in range(1, 13):
        if R.is_infinity:
            return m
        if m < 12:
            R = add(E, R, P)
    return None


def has_infinite_order(E: Curve, P: Point) -> bool:
    return torsion_order(E, P) is None
