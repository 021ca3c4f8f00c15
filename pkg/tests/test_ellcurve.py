from fractions import Fraction

from hypothesis import given, strategies as st

from powerful_aps.ellcurve import (
    CURVE,
    INFINITY,
    P1,
    P2,
    T1,
    T2,
    Point,
    add,
    neg,
    on_curve,
    scalar_mul,
)


def test_curve_is_nonsingular():
    assert CURVE.discriminant != 0


def test_named_points_on_curve():
    for P in (P1, P2, T1, T2):
        assert on_curve(P)
    assert not on_curve(Point.of(1, 1))


def test_infinity():
    assert INFINITY.is_infinity
    assert add(INFINITY, P1) == P1
    assert scalar_mul(0, P1) == INFINITY


def test_two_torsion():
    for T in (T1, T2):
        assert CURVE.is_two_torsion(T)
        assert scalar_mul(2, T) == INFINITY
    assert not CURVE.is_two_torsion(P1)


def test_doubling_P1():
    D = scalar_mul(2, P1)
    assert D.x == Fraction(342763576, 511225)
    assert on_curve(D)


def test_neg_and_sub():
    assert add(P1, neg(P1)) == INFINITY
    assert on_curve(neg(P2))


def test_generators_independent_smallish():
    # P1 + P2 and P1 - P2 are both affine, so no small relation collides here
    assert not add(P1, P2).is_infinity
    assert not add(P1, neg(P2)).is_infinity


@given(st.integers(min_value=-6, max_value=6), st.integers(min_value=-6, max_value=6))
def test_scalar_mul_is_homomorphic(n, m):
    lhs = scalar_mul(n + m, P1)
    rhs = add(scalar_mul(n, P1), scalar_mul(m, P1))
    assert lhs == rhs
    assert on_curve(lhs)


@given(st.integers(min_value=-5, max_value=5))
def test_scalar_mul_matches_repeated_add(n):
    acc = INFINITY
    step = P1 if n >= 0 else neg(P1)
    for _ in range(abs(n)):
        acc = add(acc, step)
    assert acc == scalar_mul(n, P1)
