from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from trapcong.classic import congruent_curve
from trapcong.ecq import (
    Curve, NotOnCurveError, SingularCurveError, add, chord_third, dbl, discriminant, has_infinite_order,
    is_integral, j_invariant, mul, neg, on_curve, torsion_order,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def curve_with_points(draw):
    """A curve forced through two chosen rational points."""
    x1, y1, x2, y2 = (draw(small) for _ in range(4))
    assume(x1 != x2)
    A = ((y1 * y1 - x1**3) - (y2 * y2 - x2**3)) / (x1 - x2)
    B = y1 * y1 - x1**3 - A * x1
    assume(4 * A**3 + 27 * B**2 != 0)
    E = Curve(A, B)
    return E, E.point(x1, y1), E.point(x2, y2)


@given(curve_with_points())
@settings(max_examples=1000, deadline=None)
def test_group_law(data):
    E, P, Q = data
    O = E.infinity
    R = add(E, dbl(E, P), Q)
    for S in (add(E, P, Q), R, dbl(E, P)):
        assert on_curve(E, S)
    assert add(E, P, Q) == add(E, Q, P)
    assert add(E, add(E, P, Q), R) == add(E, P, add(E, Q, R))
    assert add(E, P, O) == P and add(E, P, neg(P)) == O
    assert mul(E, 3, P) == add(E, P, dbl(E, P))
    assert mul(E, 5, Q) == add(E, mul(E, 2, Q), mul(E, 3, Q))
    assert mul(E, -2, P) == neg(dbl(E, P))
    assert 4 * P == mul(E, 4, P)


def test_known_curve_values():
    E = congruent_curve(6)
    assert discriminant(E) == -16 * 4 * (-36) ** 3
    assert j_invariant(E) == 1728
    P = E.point(12, 36)
    assert dbl(E, P).xy() == (Fraction(25, 4), Fraction(-35, 8))
    assert has_infinite_order(E, P)


def test_torsion():
    E = congruent_curve(5)
    assert torsion_order(E, E.point(0, 0)) == 2
    assert torsion_order(E, E.infinity) == 1
    # y^2 = x^3 + 1 has (2, 3) of order 6
    E = Curve(0, 1)
    assert torsion_order(E, E.point(2, 3)) == 6
    assert torsion_order(E, E.point(0, 1)) == 3


def test_chord_and_errors():
    E = congruent_curve(6)
    P, Q = E.point(-3, 9), E.point(12, 36)
    T = chord_third(E, P, Q)
    slope = (Q.y - P.y) / (Q.x - P.x)
    assert T.y - P.y == slope * (T.x - P.x)
    with pytest.raises(ValueError):
        chord_third(E, P, neg(P))
    with pytest.raises(NotOnCurveError):
        E.point(1, 1)
    with pytest.raises(SingularCurveError):
        Curve(0, 0)
    with pytest.raises(NotOnCurveError):
        add(E, P, congruent_curve(5).point(0, 0))
    assert is_integral(P) and not is_integral(dbl(E, Q))
    assert on_curve(E, None) and on_curve(E, (0, 0))
