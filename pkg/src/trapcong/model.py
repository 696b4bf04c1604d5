"""Right trapezoids for the three congruent-number notions.

Labeling is fixed throughout the package: ``a`` is the long parallel side,
``d`` the short parallel side, ``b`` the height (the leg perpendicular to
both parallels) and ``c`` the slant side.

* ``TrapezoidI`` -- integer sides, ``(a-d)^2 + b^2 = c^2``, ``gcd(b, c) = 1``,
  area ``(a+d)b/2``.
* ``TrapezoidK`` -- positive rational sides with ``a = k*d``, area ``(a+d)b/2``.
* ``TrapezoidD`` -- positive rational ``a, b, c`` and offset ``d >= 0`` with
  ``a^2 + b^2 = c^2``, area ``(a+2d)b/2``.

Instances validate themselves on construction and raise
:class:`InvalidTrapezoid` carrying every violated constraint.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import as_rat, gcd, rat_str


class InvalidTrapezoid(ValueError):
    def __init__(self, kind: str, violations: list[str]):
        self.kind = kind
        self.violations = violations
        super().__init__(f"invalid {kind} trapezoid: " + "; ".join(violations))


def check_i(a: int, b: int, c: int, d: int) -> list[str]:
    """Return the list of violated i-trapezoid constraints (empty when valid)."""
    out = []
    for name, v in (("a", a), ("b", b), ("c", c), ("d", d)):
        if not isinstance(v, int) or isinstance(v, bool):
            out.append(f"{name} must be an integer")
    if out:
        return out
    if not a > d:
        out.append("a > d fails")
    if d < 0:
        out.append("d >= 0 fails")
    if b < 1:
        out.append("b >= 1 fails")
    if c < 1:
        out.append("c >= 1 fails")
    if (a - d) ** 2 + b * b != c * c:
        out.append("Pythagoras (a-d)^2 + b^2 = c^2 fails")
    if gcd(b, c) != 1:
        out.append("gcd(b, c) = 1 fails")
    return out


def check_k(a, b, c, d, k: int) -> list[str]:
    a, b, c, d = map(as_rat, (a, b, c, d))
    out = []
    if not isinstance(k, int) or k < 1:
        out.append("k must be an integer >= 1")
    for name, v in (("a", a), ("b", b), ("c", c), ("d", d)):
        if v <= 0:
            out.append(f"{name} > 0 fails")
    if isinstance(k, int) and a != k * d:
        out.append("a = k*d fails")
    if (a - d) ** 2 + b * b != c * c:
        out.append("Pythagoras (a-d)^2 + b^2 = c^2 fails")
    return out


def check_d(a, b, c, d) -> list[str]:
    a, b, c, d = map(as_rat, (a, b, c, d))
    out = []
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v <= 0:
            out.append(f"{name} > 0 fails")
    if d < 0:
        out.append("d >= 0 fails")
    if a * a + b * b != c * c:
        out.append("Pythagoras a^2 + b^2 = c^2 fails")
    return out


@dataclass(frozen=True, order=True)
class TrapezoidI:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        bad = check_i(self.a, self.b, self.c, self.d)
        if bad:
            raise InvalidTrapezoid("i", bad)

    @property
    def area(self) -> Fraction:
        return Fraction((self.a + self.d) * self.b, 2)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


@dataclass(frozen=True)
class TrapezoidK:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    k: int

    def __post_init__(self):
        for f in "abcd":
            object.__setattr__(self, f, as_rat(getattr(self, f)))
        bad = check_k(self.a, self.b, self.c, self.d, self.k)
        if bad:
            raise InvalidTrapezoid("k", bad)

    @property
    def area(self) -> Fraction:
        return (self.a + self.d) * self.b / 2

    def sides(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        out = {f: rat_str(getattr(self, f)) for f in "abcd"}
        out["k"] = self.k
        return out


@dataclass(frozen=True)
class TrapezoidD:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for f in "abcd":
            object.__setattr__(self, f, as_rat(getattr(self, f)))
        bad = check_d(self.a, self.b, self.c, self.d)
        if bad:
            raise InvalidTrapezoid("d", bad)

    @property
    def area(self) -> Fraction:
        return (self.a + 2 * self.d) * self.b / 2

    def sides(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        return {f: rat_str(getattr(self, f)) for f in "abcd"}


def area_i(t: TrapezoidI) -> Fraction:
    return t.area


def area_k(t: TrapezoidK) -> Fraction:
    return t.area


def area_d(t: TrapezoidD) -> Fraction:
    return t.area


def validate_i(a, b, c, d) -> TrapezoidI:
    return TrapezoidI(a, b, c, d)


def validate_k(a, b, c, d, k) -> TrapezoidK:
    return TrapezoidK(a, b, c, d, k)


def validate_d(a, b, c, d) -> TrapezoidD:
    return TrapezoidD(a, b, c, d)


def from_json(obj: dict):
    """Inverse of ``to_json`` for all three trapezoid kinds."""
    if "k" in obj:
        return TrapezoidK(*(Fraction(obj[f]) for f in "abcd"), k=int(obj["k"]))
    if all(isinstance(obj[f], int) for f in "abcd"):
        return TrapezoidI(obj["a"], obj["b"], obj["c"], obj["d"])
    return TrapezoidD(*(Fraction(obj[f]) for f in "abcd"))
