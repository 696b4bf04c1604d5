"""i-congruent numbers: integer right trapezoids of a given area.

The ground truth is :func:`witness_oracle`, an exhaustive search over
Pythagorean generator pairs.  Everything else (the closed-form classifier,
the family of non-congruent forms, the counters) is checked against it.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .arith import factorize, gcd, iroot, is_prime, primes_up_to, v2
from .model import TrapezoidI


@dataclass(frozen=True, order=True)
class PythParam:
    """Generator pair of a primitive triple (x^2-y^2, 2xy, x^2+y^2)."""

    x: int
    y: int

    def __post_init__(self):
        if not (self.x > self.y >= 1):
            raise ValueError(f"need x > y >= 1, got {self.x}, {self.y}")
        if gcd(self.x, self.y) != 1 or (self.x - self.y) % 2 == 0:
            raise ValueError(f"({self.x}, {self.y}) must be coprime with opposite parity")

    @property
    def odd_leg(self) -> int:
        return self.x * self.x - self.y * self.y

    @property
    def even_leg(self) -> int:
        return 2 * self.x * self.y

    @property
    def hypotenuse(self) -> int:
        return self.x * self.x + self.y * self.y


def pyth_params(limit: int) -> Iterator[PythParam]:
    """Generator pairs with xy(x^2-y^2) <= limit, the range any witness of area <= limit needs."""
    x = 2
    while x * (x * x - 1) <= limit:
        for y in range(x - 1, 0, -2):
            if gcd(x, y) == 1:
                if x * y * (x * x - y * y) <= limit:
                    yield PythParam(x, y)
        x += 1


class OracleWitness(NamedTuple):
    trapezoid: TrapezoidI
    param: PythParam
    case: int  # 1: b = x^2-y^2 (odd height); 2: b = 2xy (even height)


def oracle_witnesses(n: int) -> list[OracleWitness]:
    """Every integer right trapezoid of area n, tagged with its generator pair."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for g in pyth_params(n):
        odd, xy = g.odd_leg, g.x * g.y
        # Case 1: a-d = 2xy, b = x^2-y^2, a+d = 2n/b.
        if n % odd == 0:
            k = n // odd
            if k >= xy:
                t = TrapezoidI(a=k + xy, b=odd, c=g.hypotenuse, d=k - xy)
                out.append(OracleWitness(t, g, 1))
        # Case 2: a-d = x^2-y^2, b = 2xy, a+d = n/(xy) must be odd.
        if n % xy == 0:
            k = n // xy
            if k % 2 == 1 and k >= odd:
                t = TrapezoidI(a=(k + odd) // 2, b=2 * xy, c=g.hypotenuse, d=(k - odd) // 2)
                out.append(OracleWitness(t, g, 2))
    out.sort()
    return out


def witness_oracle(n: int) -> list[TrapezoidI]:
    return [w.trapezoid for w in oracle_witnesses(n)]


class Decomposition(NamedTuple):
    """n = base * cofactor with the size condition of the matching branch."""

    branch: str  # "odd_prime" (base = p) or "two_power" (base = 2^i)
    base: int
    cofactor: int


def decompositions(n: int) -> list[Decomposition]:
    """All decompositions n = p*k (k >= (p^2-1)/4) and n = 2^i*k (k odd, k >= 4^i - 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for p in factorize(n):
        if p % 2 == 1 and 4 * (n // p) >= p * p - 1:
            out.append(Decomposition("odd_prime", p, n // p))
    if n % 2 == 0:
        i = v2(n)
        k = n >> i
        if k >= 4**i - 1:
            out.append(Decomposition("two_power", 1 << i, k))
    return out


def classify_prop11(n: int) -> Decomposition | None:
    """First certificate that n is i-congruent, or None."""
    certs = decompositions(n)
    return certs[0] if certs else None


def _smallest_odd_prime_factor(n: int) -> int | None:
    n >>= v2(n)
    if n == 1:
        return None
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def is_i_congruent(n: int) -> bool:
    """Fast classifier; the odd-prime branch only needs the smallest odd prime factor."""
    p = _smallest_odd_prime_factor(n)
    if p is not None and 4 * (n // p) >= p * p - 1:
        return True
    if n % 2 == 0:
        i = v2(n)
        return (n >> i) >= 4**i - 1
    return False


# -- the family of non-congruent forms -------------------------------------


class IForm(NamedTuple):
    tag: str  # P, P_SQUARED, PQ, POW2, POW2_P
    p: int | None = None
    q: int | None = None
    i: int | None = None

    def __str__(self) -> str:
        if self.tag == "P":
            return f"p={self.p}"
        if self.tag == "P_SQUARED":
            return f"p^2, p={self.p}"
        if self.tag == "PQ":
            return f"pq, p={self.p}, q={self.q}"
        if self.tag == "POW2":
            return f"2^{self.i}"
        return f"2^{self.i}*p, p={self.p}"


def enumerate_star_forms(x: int) -> dict[int, list[IForm]]:
    """Every n <= x of one of the five non-congruent shapes, with all matching forms."""
    if x < 1:
        raise ValueError("x must be >= 1")
    out: dict[int, list[IForm]] = {}

    def put(n: int, form: IForm):
        out.setdefault(n, []).append(form)

    primes = primes_up_to(x)
    for p in primes:
        if p > 2:
            put(p, IForm("P", p=p))
        if p * p > x:
            continue
        if p != 3:
            put(p * p, IForm("P_SQUARED", p=p))
    # pq with 5 < p < q < (p^2-1)/4
    for p in primes:
        if p <= 5:
            continue
        if p * p > x:
            break
        q_hi = min(x // p, (p * p - 2) // 4)  # q < (p^2-1)/4 and pq <= x
        lo = bisect.bisect_right(primes, p)
        hi = bisect.bisect_right(primes, q_hi)
        for q in primes[lo:hi]:
            put(p * q, IForm("PQ", p=p, q=q))
    i = 0
    while (1 << i) <= x:
        put(1 << i, IForm("POW2", i=i))
        i += 1
    # 2^i p with i >= 2 and 2^(1+i/2) < p < 2^(2i)-1
    i = 2
    while (1 << i) * 5 <= x:
        hi_p = min(x >> i, 4**i - 2)
        lo = bisect.bisect_right(primes, iroot(1 << (i + 2), 2))
        hi = bisect.bisect_right(primes, hi_p)
        for p in primes[lo:hi]:
            if p * p > 1 << (i + 2):
                put(p << i, IForm("POW2_P", p=p, i=i))
        i += 1
    return dict(sorted(out.items()))


def count_f(x: int, mode: str = "star_forms") -> int:
    """Number of non-i-congruent n <= x.

    ``mode`` picks the ground truth: ``oracle`` (exhaustive witness search),
    ``classifier`` (closed-form test) or ``star_forms`` (the five shapes).
    """
    if mode == "oracle":
        return sum(1 for n in range(1, x + 1) if not oracle_witnesses(n))
    if mode == "classifier":
        return sum(1 for n in range(1, x + 1) if not is_i_congruent(n))
    if mode == "star_forms":
        return len(enumerate_star_forms(x))
    raise ValueError(f"unknown mode {mode!r}")


C_LIMIT = 1 + math.log(2)


def f_ratio(x: int, mode: str = "star_forms") -> float:
    """f(x) log(x) / x, which tends to 1 + ln 2."""
    return count_f(x, mode) * math.log(x) / x


# -- d = 0: integer right triangles ----------------------------------------


class D0Entry(NamedTuple):
    n: int
    s: int
    t: int
    triangle: tuple[int, int, int]  # (longer leg, shorter leg, hypotenuse)


def list_d0(x: int) -> list[D0Entry]:
    """All n = st(s^2-t^2) <= x, one entry per admissible (s, t), sorted by n."""
    out = []
    t = 1
    # smallest value for a given t is at s = t+1
    while (t + 1) * t * (2 * t + 1) <= x:
        s = t + 1
        while (n := s * t * (s * s - t * t)) <= x:
            g = gcd(s, t)
            if (s // g - t // g) % 2 == 1:
                legs = sorted((2 * s * t, s * s - t * t), reverse=True)
                out.append(D0Entry(n, s, t, (legs[0], legs[1], s * s + t * t)))
            s += 1
        t += 1
    out.sort()
    return out


def count_g(x: int) -> int:
    return len(list_d0(x))


def g_bounds(x: int) -> tuple[float, float]:
    """(lower, upper) with explicit constants 1 and 2 on the error terms."""
    lower = math.sqrt(x) / 2
    upper = x ** (2 / 3) / (2 * 4 ** (1 / 3)) + 2 * x ** (5 / 9)
    return lower, upper


# -- coincidences and many witnesses ---------------------------------------


def intersection_set(x: int) -> list[int]:
    """n <= x admitting both an odd-prime and a power-of-two decomposition."""
    out = []
    for n in range(1, x + 1):
        branches = {c.branch for c in decompositions(n)}
        if branches == {"odd_prime", "two_power"}:
            out.append(n)
    return out


def first_primes(m: int) -> list[int]:
    out, c = [], 2
    while len(out) < m:
        if is_prime(c):
            out.append(c)
        c += 1
    return out


def multi_witness(m: int, bound: int = 1000) -> tuple[int, list[TrapezoidI]]:
    """n = p_1...p_m * n' with n' >= (p_m-1)^2/4 and at least m witnesses.

    n' starts at the smallest admissible value and is raised (at most
    ``bound`` times) until the oracle finds m witnesses; for m = 1 the
    formula value gives n = 2, which has none.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    ps = first_primes(m)
    base = math.prod(ps)
    n_prime = max(1, -(-((ps[-1] - 1) ** 2) // 4))
    for _ in range(bound):
        n = base * n_prime
        wits = witness_oracle(n)
        if len(wits) >= m:
            return n, wits
        n_prime += 1
    raise RuntimeError(f"no n' within {bound} steps gives {m} witnesses")
