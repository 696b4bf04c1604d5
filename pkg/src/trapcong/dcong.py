"""d-congruent numbers: trapezoids with area (a+2d)b/2 and a^2 + b^2 = c^2.

Witnesses come from rational points on

    E_{n,d}:  y^2 = x^3 - (3n^2+d^4)/3 x + (9n^2+2d^4) d^2/27

or on the integral model E'_{n,d} obtained by (x, y) -> (9x, 27y).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .ecq import Curve, Point, dbl, neg
from .model import InvalidTrapezoid, TrapezoidD


class SideMapError(ValueError):
    pass


def curve_d(n: int, d: int) -> Curve:
    return Curve(Fraction(-(3 * n * n + d**4), 3), Fraction((9 * n * n + 2 * d**4) * d * d, 27))


def curve_d_integral(n: int, d: int) -> Curve:
    return Curve(-(81 * n * n + 27 * d**4), 27 * d * d * (9 * n * n + 2 * d**4))


@dataclass(frozen=True)
class DCurvePair:
    n: int
    d: int

    @property
    def E(self) -> Curve:
        return curve_d(self.n, self.d)

    @property
    def E_int(self) -> Curve:
        return curve_d_integral(self.n, self.d)


def scale_up(P: Point, n: int, d: int) -> Point:
    """E_{n,d} -> E'_{n,d}."""
    if P.curve != curve_d(n, d):
        raise ValueError("point is not on E_{n,d}")
    if P.is_infinity:
        return curve_d_integral(n, d).infinity
    return curve_d_integral(n, d).point(9 * P.x, 27 * P.y)


def scale_down(P: Point, n: int, d: int) -> Point:
    """E'_{n,d} -> E_{n,d}."""
    if P.curve != curve_d_integral(n, d):
        raise ValueError("point is not on E'_{n,d}")
    if P.is_infinity:
        return curve_d(n, d).infinity
    return curve_d(n, d).point(P.x / 9, P.y / 27)


def named_points(n: int, d: int) -> dict[str, Point]:
    """Closed-form points: P on E_{n,3n} (only when d = 3n); Q, R, S, twoQ on E'_{n,d}.

    S is omitted when n = d^2 (it is then 2-torsion).  twoQ is checked
    against the group law.
    """
    if n < 1 or d < 1:
        raise ValueError("need n, d >= 1")
    Ei = curve_d_integral(n, d)
    out = {}
    if d == 3 * n:
        out["P"] = curve_d(n, d).point(-6 * n * n, 3 * n * n)
    out["Q"] = Ei.point(-6 * d * d, 27 * d * n)
    out["R"] = Ei.point(3 * d * d - 9 * n, 27 * d * n)
    if n != d * d:
        s = n + d * d
        out["S"] = Ei.point(
            Fraction(3 * (d**6 - n * d**4 + 7 * d * d * n * n - 3 * n**3), s * s),
            Fraction(-27 * d * n * (d * d - n) * (d**4 + 3 * n * n), s**3),
        )
    two_q = Ei.point(
        Fraction(3 * (n * n + 3 * d**4) * (3 * n * n + d**4), 4 * d * d * n * n),
        Fraction(-27 * (n * n + d**4) * (d**8 + 4 * d**4 * n * n - n**4), 8 * d**3 * n**3),
    )
    if two_q != dbl(Ei, out["Q"]):
        raise AssertionError(f"[2]Q closed form disagrees with the group law at n={n}, d={d}")
    out["twoQ"] = two_q
    return out


def two_p(n: int) -> Point:
    """[2]P on E_{n,3n} from its closed form."""
    E = curve_d(n, 3 * n)
    return E.point(
        Fraction((27 * n * n + 1) * (243 * n * n + 1), 36),
        Fraction(-(81 * n * n + 1) * (6561 * n**4 + 324 * n * n - 1), 216),
    )


def _raw_sides(n: int, d: int, x: Fraction, y: Fraction):
    u = 3 * x - d * d
    den = 3 * (-3 * y + 3 * d * x - d**3)
    if den == 0:
        return None
    return (u * u - 9 * n * n) / den, 6 * n * u / den, (u * u + 9 * n * n) / den


def point_to_sides_d(n: int, d: int, P: Point) -> TrapezoidD:
    """Side map from E_{n,d}; tries P, then -P, and keeps the first with a, b > 0.

    The hypotenuse is taken as |c|: its sign follows the denominator, not
    the geometry.
    """
    if P.curve != curve_d(n, d):
        raise ValueError("point is not on E_{n,d}")
    if P.is_infinity:
        raise SideMapError("point at infinity")
    tried = []
    for cand in (P, neg(P)):
        sides = _raw_sides(n, d, cand.x, cand.y)
        tried.append(sides)
        if sides is None:
            continue
        a, b, c = sides
        if a > 0 and b > 0:
            t = TrapezoidD(a, b, abs(c), d)
            if t.area != n:
                raise AssertionError(f"area {t.area} != {n}")
            return t
    raise SideMapError(f"no positive sides from {P!r} or its negative: {tried}")


def thm16_sides(n: int) -> TrapezoidD:
    """Closed-form witness with d = 3n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    n2 = n * n
    q = 729 * n**3 + 81 * n2 + 27 * n - 1
    a = Fraction((729 * n**3 - 81 * n2 + 27 * n + 1) * (9 * n - 1), 6 * (1 + 81 * n2))
    b = Fraction(12 * n * (1 + 81 * n2), (1 + 9 * n) * q)
    c = Fraction(
        43046721 * n**8 + 2125764 * n**6 + 39366 * n**4 + 1620 * n2 + 1,
        6 * (1 + 81 * n2) * (1 + 9 * n) * q,
    )
    t = TrapezoidD(a, b, c, 3 * n)
    if t.area != n:
        raise AssertionError(f"area {t.area} != {n}")
    return t


def prop41_sides(n: int, d: int) -> tuple[TrapezoidD, str]:
    """Closed-form witness for n != d^2; returns (trapezoid, branch)."""
    if n == d * d:
        raise ValueError("n = d^2 is excluded")
    if n < 1 or d < 1:
        raise ValueError("need n, d >= 1")
    d4 = d**4
    big = n**4 + 6 * d4 * n * n + d**8
    if n > d * d:
        diff = (n - d * d) * (n + d * d)
        t = TrapezoidD(
            Fraction(2 * (d4 + n * n) * d, diff),
            Fraction(diff, 2 * n * d),
            Fraction(big, 2 * diff * d * n),
            d,
        )
        branch = "prop41-S"
    else:
        diff = (d * d - n) * (n + d * d)
        t = TrapezoidD(
            Fraction(4 * d * n * n, diff),
            Fraction(n * diff, (d4 + n * n) * d),
            # printed denominator carries a spurious factor 2; this is the Pythagorean value
            Fraction(n * big, diff * (d4 + n * n) * d),
            d,
        )
        branch = "prop41-negS"
    if t.area != n:
        raise AssertionError(f"area {t.area} != {n}")
    return t, branch


def s_point_pipeline(n: int, d: int) -> TrapezoidD:
    """Side map applied to S (n > d^2) or -S (n < d^2), pulled back to E_{n,d}."""
    S = named_points(n, d)["S"]
    pt = S if n > d * d else neg(S)
    return point_to_sides_d(n, d, scale_down(pt, n, d))


class DSearchResult(NamedTuple):
    d: int
    trapezoid: TrapezoidD | None  # None marks the skipped d^2 = n case


def search_with_fixed_n(n: int, d_max: int) -> list[DSearchResult]:
    out = []
    for d in range(1, d_max + 1):
        if d * d == n:
            out.append(DSearchResult(d, None))
        else:
            out.append(DSearchResult(d, prop41_sides(n, d)[0]))
    return out


def search_points(n: int, d: int, x_bound: int = 2000, multiples: int = 4) -> TrapezoidD | None:
    """Look for a witness from small integral points of E'_{n,d} and their multiples."""
    from .arith import is_square, isqrt

    Ei = curve_d_integral(n, d)
    for x in range(-x_bound, x_bound + 1):
        r = Ei.rhs(Fraction(x))
        if r <= 0 or not is_square(int(r)):
            continue
        P = Ei.point(x, isqrt(int(r)))
        R = P
        for _ in range(multiples):
            if R.is_infinity:
                break
            try:
                return point_to_sides_d(n, d, scale_down(R, n, d))
            except (SideMapError, InvalidTrapezoid):
                pass
            R = R + P
    return None
