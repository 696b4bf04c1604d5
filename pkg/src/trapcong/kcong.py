"""k-congruent numbers: rational right trapezoids with a = k*d.

A point on y^2 = x^3 - ((k^2-1)n)^2 x (the congruent-number curve of
m = (k^2-1)n) gives a trapezoid of area n by shrinking the triangle of area
m by 1/(k+1) and gluing a rectangle of width d onto it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .arith import factorize, iroot, is_square, isqrt
from .classic import RightTriangle, congruent_curve, find_triangle, quartic_triangle, triangle_to_point
from .ecq import Curve, Point
from .model import TrapezoidK


class DegeneratePointError(ValueError):
    pass


def curve_k(n: int, k: int) -> Curve:
    if k <= 1:
        raise ValueError("k must be >= 2 (k = 1 gives a rectangle)")
    if n < 1:
        raise ValueError("n must be >= 1")
    return congruent_curve((k * k - 1) * n)


def point_to_trapezoid_k(n: int, k: int, P: Point) -> TrapezoidK:
    E = curve_k(n, k)
    if P.curve != E:
        raise ValueError(f"point is not on {E}")
    if P.is_infinity or P.y == 0 or P.x == 0:
        raise DegeneratePointError("torsion point gives a degenerate trapezoid")
    M = (k * k - 1) * n
    x, y = P.x, P.y
    d = abs(2 * n * x / y)
    t = TrapezoidK(
        a=k * d,
        b=abs((x * x - M * M) / ((k + 1) * y)),
        c=(x * x + M * M) / ((k + 1) * abs(y)),
        d=d,
        k=k,
    )
    if t.area != n:
        raise AssertionError(f"area {t.area} != {n}")  # cannot happen for on-curve P
    return t


def triangle_to_trapezoid_k(n: int, k: int, T: RightTriangle) -> TrapezoidK:
    """Route a triangle of area (k^2-1)n through the curve to a trapezoid."""
    return point_to_trapezoid_k(n, k, triangle_to_point((k * k - 1) * n, T))


# -- closed-form families ------------------------------------------------------


def cubic_identity_solutions(n: int) -> list[tuple[int, int]]:
    """The pairs (k, m) with n(k^2-1) = m^3 - m given in closed form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = [(n, n), (8 * n - 3, 4 * n - 1), (8 * n + 3, 4 * n + 1)]
    for k, m in pairs:
        if n * (k * k - 1) != m**3 - m:
            raise AssertionError(f"identity fails at n={n}, (k, m)=({k}, {m})")
    return pairs


def cubic_triangle(m: int) -> RightTriangle:
    """(m^2-1, 2m, m^2+1), area m^3 - m."""
    return RightTriangle(m * m - 1, 2 * m, m * m + 1)


def nnn_witness(n: int) -> TrapezoidK:
    """n is n-congruent: route the triangle of area n^3-n through E_{n,n}."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return triangle_to_trapezoid_k(n, n, cubic_triangle(n))


# -- Pell reduction ---------------------------------------------------------------


@dataclass(frozen=True)
class PellProblem:
    """(n-l^2) alpha^2 - (n+l^2) beta^2 = 2 n l, rewritten as X^2 - D beta^2 = N
    with X = (n-l^2) alpha."""

    n: int
    lam: int

    def __post_init__(self):
        if self.lam < 1 or self.n < 1:
            raise ValueError("n and lambda must be positive")
        if self.lam**2 == self.n:
            raise ValueError("n = lambda^2 is degenerate")

    @property
    def scale(self) -> int:
        return self.n - self.lam**2

    @property
    def D(self) -> int:
        return self.n**2 - self.lam**4

    @property
    def N(self) -> int:
        return 2 * self.n * self.lam * self.scale

    @property
    def is_finite(self) -> bool:
        """D a perfect square: only finitely many solutions."""
        return is_square(self.D)

    def holds(self, alpha: int, beta: int) -> bool:
        n, l2 = self.n, self.lam**2
        return (n - l2) * alpha**2 - (n + l2) * beta**2 == 2 * n * self.lam


def pell_reduce(n: int, lam: int) -> PellProblem:
    return PellProblem(n, lam)


def fundamental_unit(D: int) -> tuple[int, int]:
    """Smallest (u, v), v > 0, with u^2 - D v^2 = 1, via the continued fraction of sqrt(D)."""
    if D <= 0 or is_square(D):
        raise ValueError("D must be a positive non-square")
    a0 = isqrt(D)
    m, d, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while p * p - D * q * q != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


def _norm_solutions_square(D: int, N: int) -> list[tuple[int, int]]:
    s = isqrt(D)
    out = set()
    e = 1
    while e * e <= N:
        if N % e == 0:
            f = N // e
            if (e + f) % 2 == 0 and (f - e) % (2 * s) == 0:
                out.add(((e + f) // 2, (f - e) // (2 * s)))
        e += 1
    return sorted(out)


def _norm_seeds(D: int, N: int, u: int, v: int) -> list[tuple[int, int]]:
    # every class of X^2 - D y^2 = N (N > 0) has a member with 0 <= y <= ybound
    ybound = max(isqrt(v * v * N // (2 * (u + 1))) + 1, isqrt(N) + 1)
    seeds = []
    for y in range(ybound + 1):
        r = N + D * y * y
        if is_square(r):
            X = isqrt(r)
            seeds.append((X, y))
            if y:
                seeds.append((X, -y))
    return seeds


def pell_solve(P: PellProblem, want: int = 5, max_rounds: int = 40) -> list[tuple[int, int]]:
    """First ``want`` non-negative solutions (alpha, beta) in increasing alpha."""
    if P.D <= 0:
        raise ValueError(f"D = {P.D} <= 0: no solutions")
    D, N, scale = P.D, P.N, P.scale
    if P.is_finite:
        sols = [(X // scale, b) for X, b in _norm_solutions_square(D, N) if X % scale == 0]
        return sorted(sols)[:want]
    # solve with the square-free part of D, keeping Y divisible by the square root of the rest
    sq = 1
    for p, e in factorize(D).items():
        sq *= p ** (e // 2)
    Dr = D // (sq * sq)
    u, v = fundamental_unit(Dr)
    seeds = _norm_seeds(Dr, N, u, v)
    if not seeds:
        return []
    limit = max(X for X, _ in seeds) * scale
    for _ in range(max_rounds):
        found = set()
        for X, y in seeds:
            while X <= limit:
                if y >= 0 and y % sq == 0 and X % scale == 0:
                    found.add((X // scale, y // sq))
                X, y = X * u + Dr * y * v, X * v + y * u
        if len(found) >= want:
            break
        limit *= u
    out = sorted(found)[:want]
    assert all(P.holds(a, b) for a, b in out)
    return out


def pell_to_k(n: int, lam: int, alpha: int, beta: int) -> int | None:
    """k from lambda(k+1) = alpha^2 - beta^2 when integral and consistent."""
    diff = alpha * alpha - beta * beta
    if diff % lam:
        return None
    k = diff // lam - 1
    if k < 2 or n * (k - 1) != lam * (alpha * alpha + beta * beta):
        return None
    if (k * k - 1) * n != alpha**4 - beta**4:
        raise AssertionError("quartic identity fails")
    return k


# -- quartic search ---------------------------------------------------------------


class QuarticRow(NamedTuple):
    n: int
    k: int
    alpha: int
    beta: int

    def check(self) -> bool:
        return self.k >= 2 and self.alpha > self.beta >= 0 and (self.k**2 - 1) * self.n == self.alpha**4 - self.beta**4


def quartic_search(n: int, k_max: int, k_min: int = 2) -> list[QuarticRow]:
    """All (k, alpha, beta) with k_min <= k <= k_max, alpha > beta >= 1, (k^2-1)n = alpha^4 - beta^4."""
    if n < 1 or k_max < 2:
        raise ValueError("need n >= 1 and k_max >= 2")
    top = (k_max * k_max - 1) * n
    rows = []
    alpha = 2
    # alpha^4 - beta^4 >= alpha^4 - (alpha-1)^4, so alpha stops well past top^(1/4)
    while alpha**4 - (alpha - 1) ** 4 <= top:
        a4 = alpha**4
        beta = max(1, iroot(max(a4 - top, 0), 4))
        for b in range(beta, alpha):
            v = a4 - b**4
            if v > top or v % n:
                continue
            q = v // n + 1
            k = isqrt(q)
            if k * k == q and k_min <= k <= k_max:
                rows.append(QuarticRow(n, k, alpha, b))
        alpha += 1
    rows.sort()
    return rows


def quartic_to_trapezoid(row: QuarticRow) -> TrapezoidK:
    if not row.check():
        raise ValueError(f"{row} does not satisfy (k^2-1)n = alpha^4 - beta^4")
    if row.beta == 0:
        raise DegeneratePointError("beta = 0 gives no triangle")
    m, T = quartic_triangle(row.alpha, row.beta)
    return triangle_to_trapezoid_k(row.n, row.k, T)


def prop31_witness(k: int) -> tuple[int, TrapezoidK]:
    """n = k^2 + 1 is k-congruent via (alpha, beta) = (k, 1)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    n = k * k + 1
    return n, quartic_to_trapezoid(QuarticRow(n, k, k, 1))


def find_k_witness(n: int, k: int, bound: int = 200) -> tuple[TrapezoidK, str] | None:
    """Try the closed-form families, then a bounded triangle search."""
    M = (k * k - 1) * n
    if k == n:
        return nnn_witness(n), "n^3-n"
    m = iroot(M, 3) + 1
    while m > 1 and m**3 - m > M:
        m -= 1
    if m > 1 and m**3 - m == M:
        return triangle_to_trapezoid_k(n, k, cubic_triangle(m)), "m^3-m"
    for row in quartic_search(n, k, k_min=k):
        return quartic_to_trapezoid(row), "quartic"
    T = find_triangle(M, bound)
    if T is not None:
        return triangle_to_trapezoid_k(n, k, T), "search"
    return None
