"""Rational right triangles and the congruent-number curve y^2 = x^3 - n^2 x."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .arith import as_rat, gcd, is_square, is_squarefree, isqrt, rat_str
from .ecq import Curve, Point


@dataclass(frozen=True)
class RightTriangle:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for f in "abc":
            object.__setattr__(self, f, as_rat(getattr(self, f)))
        if min(self.a, self.b, self.c) <= 0:
            raise ValueError("sides must be positive")
        if self.a**2 + self.b**2 != self.c**2:
            raise ValueError(f"({self.a}, {self.b}, {self.c}) is not a right triangle")

    @property
    def area(self) -> Fraction:
        return self.a * self.b / 2

    def legs(self) -> frozenset:
        return frozenset((self.a, self.b))

    def to_json(self) -> dict:
        return {f: rat_str(getattr(self, f)) for f in "abc"}


def congruent_curve(n) -> Curve:
    return Curve(-as_rat(n) ** 2, 0)


def triangle_to_point(n, T: RightTriangle) -> Point:
    n = as_rat(n)
    if T.area != n:
        raise ValueError(f"triangle area {T.area} != {n}")
    s = T.a + T.c
    return congruent_curve(n).point(n * s / T.b, 2 * n * n * s / T.b**2)


def point_to_triangle(n, P: Point) -> RightTriangle:
    n = as_rat(n)
    if P.curve != congruent_curve(n):
        raise ValueError(f"point is not on y^2 = x^3 - {n}^2 x")
    if P.is_infinity or P.y == 0:
        raise ValueError("2-torsion point gives no triangle")
    x, y = P.x, P.y
    return RightTriangle(abs(2 * n * x / y), abs((x * x - n * n) / y), abs((x * x + n * n) / y))


def quartic_triangle(alpha: int, beta: int) -> tuple[int, RightTriangle]:
    """Triangle of area alpha^4 - beta^4, from (2a^2b^2)^2 + (a^4-b^4)^2 = (a^4+b^4)^2."""
    if not alpha > beta >= 1:
        raise ValueError("need alpha > beta >= 1")
    m = alpha**4 - beta**4
    ab = alpha * beta
    return m, RightTriangle(2 * ab, Fraction(m, ab), Fraction(alpha**4 + beta**4, ab))


def find_triangle(m: int, bound: int = 200) -> RightTriangle | None:
    """Search a rational right triangle of area m among scaled primitive triples.

    A primitive triple from (s, t) has area st(s^2-t^2); scaling by r gives
    area m iff m / (st(s^2-t^2)) is a rational square.
    """
    for s in range(2, bound + 1):
        for t in range(1, s):
            if (s - t) % 2 == 0 or gcd(s, t) != 1:
                continue
            area = s * t * (s * s - t * t)
            # m/area is a square iff m*area is
            if is_square(m * area):
                r = Fraction(isqrt(m * area), area)
                return RightTriangle(r * (s * s - t * t), r * 2 * s * t, r * (s * s + t * t))
    return None


# -- ternary forms -------------------------------------------------------------


class TernaryForm(Enum):
    F1 = (2, 1, 8)
    F2 = (2, 1, 32)
    F3 = (8, 2, 16)
    F4 = (8, 2, 64)

    def __call__(self, x: int, y: int, z: int) -> int:
        cx, cy, cz = self.value
        return cx * x * x + cy * y * y + cz * z * z


def count_ternary(F: TernaryForm, m: int) -> int:
    """Number of (x, y, z) in Z^3 with F(x, y, z) = m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    cx, cy, cz = F.value
    total = 0
    for x in range(-isqrt(m // cx), isqrt(m // cx) + 1):
        rx = m - cx * x * x
        zmax = isqrt(rx // cz)
        for z in range(-zmax, zmax + 1):
            r = rx - cz * z * z
            if r % cy:
                continue
            r //= cy
            if is_square(r):
                total += 1 if r == 0 else 2
    return total


def count_ternary_brute(F: TernaryForm, m: int) -> int:
    """Full box enumeration; slow reference for count_ternary."""
    cx, cy, cz = F.value
    bx, by, bz = (isqrt(m // c) for c in (cx, cy, cz))
    return sum(
        1
        for x in range(-bx, bx + 1)
        for y in range(-by, by + 1)
        for z in range(-bz, bz + 1)
        if F(x, y, z) == m
    )


class TunnellCounts(NamedTuple):
    m: int
    consistent: bool
    counts: dict[str, int]
    squarefree: bool


def tunnell_counts(m: int) -> TunnellCounts:
    if m % 2:
        pair = (TernaryForm.F1, TernaryForm.F2)
    else:
        pair = (TernaryForm.F3, TernaryForm.F4)
    c1, c2 = (count_ternary(F, m) for F in pair)
    return TunnellCounts(m, c1 == 2 * c2, {pair[0].name: c1, pair[1].name: c2}, is_squarefree(m))


def tunnell_check(n: int, k: int) -> TunnellCounts:
    """Counting criterion applied to m = (k^2-1) n."""
    if k < 2 or n < 1:
        raise ValueError("need k >= 2 and n >= 1")
    return tunnell_counts((k * k - 1) * n)
