from fractions import Fraction as F

import pytest

from trapcong.classic import (
    RightTriangle, TernaryForm, congruent_curve, count_ternary, count_ternary_brute, find_triangle,
    point_to_triangle, quartic_triangle, triangle_to_point, tunnell_check, tunnell_counts,
)


def test_triangle_point_roundtrip():
    T = RightTriangle(3, 4, 5)
    P = triangle_to_point(6, T)
    assert P.xy() == (12, 36)
    back = point_to_triangle(6, P)
    assert back.legs() == T.legs() and back.c == 5
    T = RightTriangle(F(3, 2), F(20, 3), F(41, 6))
    assert point_to_triangle(5, triangle_to_point(5, T)).area == 5


def test_triangle_errors():
    with pytest.raises(ValueError):
        RightTriangle(1, 1, 2)
    with pytest.raises(ValueError):
        triangle_to_point(7, RightTriangle(3, 4, 5))
    with pytest.raises(ValueError):
        point_to_triangle(6, congruent_curve(6).point(6, 0))


def test_quartic_triangle_identity():
    for alpha in range(2, 31):
        for beta in range(1, alpha):
            m, T = quartic_triangle(alpha, beta)
            assert m == alpha**4 - beta**4 and T.area == m


def test_find_triangle():
    assert find_triangle(5).area == 5
    assert find_triangle(7).area == 7
    assert find_triangle(1) is None


@pytest.mark.parametrize("m", [1, 2, 3, 5, 6, 7, 10, 14, 34, 41, 120])
def test_count_ternary_fast_matches_brute(m):
    for f in TernaryForm:
        assert count_ternary(f, m) == count_ternary_brute(f, m)


def test_tunnell_criterion():
    assert all(tunnell_counts(m).consistent for m in (5, 6, 7))
    assert not any(tunnell_counts(m).consistent for m in (1, 2, 3, 10))
    assert tunnell_counts(6).counts == {"F3": 0, "F4": 0}
    assert tunnell_check(2, 2).m == 6


def test_tunnell_range_fast():
    import time
    t = time.perf_counter()
    for m in range(1, 501):
        tunnell_counts(m)
    assert time.perf_counter() - t < 30
