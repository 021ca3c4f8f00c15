"""Exact arithmetic on a long-Weierstrass curve over the rationals.

Everything runs in Fraction, so group-law results are exact and can be
compared against independently computed division values.  The module
constant CURVE is the rank-2 curve whose multiples generate the 4-term
squarefull progressions; P1, P2 generate (with torsion T1, T2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Point:
    """Affine point or the point at infinity (x = y = None)."""

    x: Fraction | None
    y: Fraction | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Fraction(x), Fraction(y))


INFINITY = Point(None, None)


@dataclass(frozen=True)
class Curve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    @property
    def b2(self) -> int:
        return self.a1**2 + 4 * self.a2

    @property
    def b4(self) -> int:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> int:
        return self.a3**2 + 4 * self.a6

    @property
    def b8(self) -> int:
        return (
            self.a1**2 * self.a6
            + 4 * self.a2 * self.a6
            - self.a1 * self.a3 * self.a4
            + self.a2 * self.a3**2
            - self.a4**2
        )

    @property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        return y * y + self.a1 * x * y + self.a3 * y == x**3 + self.a2 * x * x + self.a4 * x + self.a6

    def neg(self, P: Point) -> Point:
        if P.is_infinity:
            return P
        return Point(P.x, -P.y - self.a1 * P.x - self.a3)

    def is_two_torsion(self, P: Point) -> bool:
        """Nontrivial 2-torsion: P = -P, i.e. 2y + a1 x + a3 = 0."""
        return not P.is_infinity and 2 * P.y + self.a1 * P.x + self.a3 == 0

    def add(self, P: Point, Q: Point) -> Point:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2 and y2 == -y1 - self.a1 * x1 - self.a3:
            return INFINITY
        if x1 == x2:
            c = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4 - self.a1 * y1) / (
                2 * y1 + self.a1 * x1 + self.a3
            )
        else:
            c = (y2 - y1) / (x2 - x1)
        x3 = c * c + self.a1 * c - self.a2 - x1 - x2
        y3 = -(c + self.a1) * x3 - (y1 - c * x1) - self.a3
        return Point(x3, y3)

    def double(self, P: Point) -> Point:
        return self.add(P, P)

    def mul(self, n: int, P: Point) -> Point:
        if n < 0:
            return self.mul(-n, self.neg(P))
        R = INFINITY
        Q = P
        while n:
            if n & 1:
                R = self.add(R, Q)
            n >>= 1
            if n:
                Q = self.add(Q, Q)
        return R


CURVE = Curve(-128, -2612, -3360, 149568, 0)

P1 = Point.of(-976, -49344)
P2 = Point.of(-408, -30192)
T1 = Point.of(-1176, -73584)
T2 = Point.of(-300, -17520)


def on_curve(P: Point, curve: Curve = CURVE) -> bool:
    """Whether a point satisfies the curve equation."""
    return curve.contains(P)


def add(P: Point, Q: Point, curve: Curve = CURVE) -> Point:
    """Group-law sum on the given curve."""
    return curve.add(P, Q)


def neg(P: Point, curve: Curve = CURVE) -> Point:
    """Group-law inverse on the given curve."""
    return curve.neg(P)


def scalar_mul(n: int, P: Point, curve: Curve = CURVE) -> Point:
    """n-fold sum of a point on the given curve."""
    return curve.mul(n, P)
