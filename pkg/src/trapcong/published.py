"""Published values that the verification harness compares against.

These are claims to be checked, never ground truth: every one of them is
recomputed independently before it is reported.
"""
from fractions import Fraction as F

NONCONGRUENT_COUNT_LT_100 = 46
NONCONGRUENT_NONPRIMES_LT_100 = [1, 4, 8, 16, 20, 25, 28, 32, 49, 52, 56, 58, 62, 64, 74, 77, 82, 86, 88, 91, 94]
INTERSECTION_LT_100 = [6, 18, 30, 42, 50, 54, 60, 70, 78, 84, 90, 98, 100]

F_CONSTANT_LABEL = "1 + ln 2"

D0_LIST_LT_1000 = [6, 30, 60, 60, 84, 96, 180, 210, 330, 480, 486, 504, 546, 630, 840, 924, 960]
D0_DISTINCT_LT_1000 = 16
D0_SHARED_AREA = 210
D0_SHARED_TRIANGLES = [(21, 20, 29), (35, 12, 37)]

# (a, b, c, d) with k = n
K_EXAMPLES = {
    2: [
        (F(8, 3), F(1), F(5, 3), F(4, 3)),
        (F(80, 7), F(7, 30), F(1201, 210), F(40, 7)),
        (F(6808, 4653), F(1551, 851), F(7776485, 3959703), F(3404, 4653)),
    ],
    3: [
        (F(9, 4), F(2), F(5, 2), F(3, 4)),
        (F(21, 40), F(60, 7), F(1201, 140), F(7, 40)),
        (F(851, 517), F(4653, 1702), F(7776485, 2639802), F(851, 1551)),
    ],
}

# n -> (a, b, c, d) with d = 3n
D_EXAMPLES = {
    1: (F(1352, 123), F(123, 1045), F(1412921, 128535), F(3)),
    2: (F(94571, 1950), F(7800, 117971), F(11156645809, 230043450), F(6)),
    3: (F(123734, 1095), F(3285, 71722), F(8874450677, 78535590), F(9)),
}

# n -> [(k, alpha, beta)] with (k^2-1) n = alpha^4 - beta^4
QUARTIC_TABLE = {
    2: [(11, 4, 2), (131, 14, 8), (181, 16, 2), (513, 34, 30), (573, 29, 15)],
    3: [(9, 4, 2), (57, 10, 4), (521, 32, 22), (729, 37, 23)],
    4: [(31, 8, 4), (59, 13, 11), (129, 18, 14), (161, 18, 6), (365, 31, 25), (511, 32, 8), (545, 44, 40)],
    5: [(2, 2, 1), (6, 4, 3), (7, 4, 2), (86, 16, 13), (390, 58, 57), (482, 38, 31), (487, 33, 3), (985, 47, 13)],
    6: [(69, 13, 1), (219, 34, 32), (319, 28, 8), (441, 37, 29)],
    7: [(103, 22, 20), (519, 51, 47)],
    8: [(33, 10, 6), (239, 26, 2), (481, 38, 22), (611, 73, 71), (781, 47, 1)],
    9: [(649, 57, 51)],
    10: [(3, 3, 1), (5, 4, 2), (35, 11, 7), (83, 17, 11), (365, 34, 8), (581, 76, 74), (773, 52, 34), (897, 54, 26)],
}

# lambda -> n with infinitely many Pell solutions claimed
PELL_FAMILIES = {
    1: [2, 5],
    2: [10, 13, 52],
    3: [13, 17, 27, 30, 45],
    4: [17, 18, 26, 32, 50, 68, 80],
}


def discriminant_unscaled(n: int) -> int:
    """Printed discriminant of the d = 3n curve, (4 + 81 n^2) n^6."""
    return (4 + 81 * n * n) * n**6


def curve_3n_coefficients(n: int) -> tuple[int, int]:
    """Printed (A, B) of the d = 3n curve."""
    return -(1 + 27 * n * n) * n * n, 3 * n**4 * (1 + 18 * n * n)


def d1_family(n: int) -> tuple[F, F, F]:
    """Printed d = 1 witness for n >= 2."""
    return (
        F(2 * (n * n + 1), (n - 1) * (n + 1)),
        F((n - 1) * (n + 1), 2 * n),
        F(n**4 + 6 * n * n + 1, 2 * (n - 1) * (n + 1) * n),
    )


def negS_c_printed(n: int, d: int) -> F:
    return F(n * (n**4 + 6 * d**4 * n * n + d**8), 2 * (d * d - n) * (n + d * d) * (d**4 + n * n) * d)


def side_c_printed(n: int, d: int, x: F, y: F) -> F:
    """Printed hypotenuse numerator (9 - 6d^2) x^2 + 9n^2 + d^4 over 3(-3y + 3dx - d^3)."""
    return ((9 - 6 * d * d) * x * x + 9 * n * n + d**4) / (3 * (-3 * y + 3 * d * x - d**3))
