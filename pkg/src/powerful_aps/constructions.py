"""Parametric constructions of k-full progressions.

Three families: 3-term squarefull progressions from sums of two squares
(X^2 + Y^2 = 2 Z^2), 3-term cubefull progressions from an iteration on
the surface X^3 + Y^3 = 2 * 3^4 * Z^3, and m-term squarefull
progressions for every m >= 4 from Pell-equation solutions, these last
with a perfect-square difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp

from .ntcore import FactoredNatural, certificate_parts, factorize
from .witness import ProgressionWitness, Term, WitnessError, term_from_parts

_FACTOR_BOUND = 10**12


def _square_term(root: int) -> Term:
    """Term root^2 with parts and, when cheap, a full factorization."""
    root = abs(int(root))
    fn = factorize(root).pow(2) if root <= _FACTOR_BOUND else None
    return Term(root * root, factored=fn, parts=(root, 1))


def ap3_squarefull(a: int, b: int) -> ProgressionWitness:
    """3-term squarefull progression from X = a^2-b^2+2ab, Y = a^2-b^2-2ab,
    Z = a^2+b^2, which satisfy X^2 + Y^2 = 2 Z^2; (2, 1) gives 1, 25, 49."""
    a, b = int(a), int(b)
    if a == 0 or b == 0:
        raise ValueError("a and b must be nonzero")
    if math.gcd(a, b) != 1:
        raise ValueError("a and b must be coprime")
    if (a + b) % 2 == 0:
        raise ValueError("a and b must have opposite parity")
    X = a * a - b * b + 2 * a * b
    Y = a * a - b * b - 2 * a * b
    Z = a * a + b * b
    if X == 0 or Y == 0 or abs(X) == abs(Y):
        raise ValueError("degenerate parameters: zero term or zero difference")
    assert X * X + Y * Y == 2 * Z * Z
    squares = sorted((X * X, Z * Z, Y * Y))
    terms = tuple(_square_term(r) for r in (math.isqrt(squares[0]), Z, math.isqrt(squares[2])))
    w = ProgressionWitness(2, 3, squares[0], squares[1] - squares[0], terms, "constructed-sum-of-squares")
    w.verify()
    return w


@dataclass(frozen=True)
class CubicTriple:
    """Integer point on the surface X^3 + Y^3 = 2 * 3^4 * Z^3."""

    X: int
    Y: int
    Z: int
    generation: int = 0

    def check(self) -> None:
        X, Y = self.X, self.Y
        if X**3 + Y**3 != 162 * self.Z**3:
            raise ValueError("not on the surface X^3 + Y^3 = 2*3^4*Z^3")
        if math.gcd(X, Y) != 1:
            raise ValueError("X and Y must be coprime")
        if X % 2 == 0 or Y % 2 == 0:
            raise ValueError("X and Y must both be odd")
        if (X + Y) % 3 != 0:
            raise ValueError("need X = -Y mod 3")


def ap3_cubefull_seed() -> CubicTriple:
    """The smallest known seed (37, 17, 7): 37^3 + 17^3 = 2 * 3^4 * 7^3."""
    t = CubicTriple(37, 17, 7, 0)
    t.check()
    return t


def ap3_cubefull_iterate(t: CubicTriple) -> CubicTriple:
    """One step of the unbounded iteration on the cubic surface; |Z| grows."""
    t.check()
    X, Y, Z = t.X, t.Y, t.Z
    nxt = CubicTriple(
        X * (X**3 + 2 * Y**3),
        -Y * (2 * X**3 + Y**3),
        Z * (X - Y) * (X * X + X * Y + Y * Y),
        t.generation + 1,
    )
    nxt.check()
    if abs(nxt.Z) <= abs(Z):
        raise ArithmeticError("|Z| must increase strictly")
    return nxt


def _cube_term(root: int) -> Term:
    root = abs(int(root))
    fn = factorize(root).pow(3) if root <= _FACTOR_BOUND else None
    return Term(root**3, factored=fn, parts=(root, 1, 1))


def _positive_variant(t: CubicTriple) -> tuple[int, int, int] | None:
    """Sign/swap variant with X, Y > 0, if any; both keep the identity."""
    X, Y = t.X, t.Y
    for XX, YY in ((X, Y), (-X, -Y), (Y, X), (-Y, -X)):
        if XX > 0 and YY > 0:
            return XX, YY, abs(t.Z)
    return None


def sweep_budget(t: CubicTriple) -> int:
    """Iterations allowed before a positive variant must have appeared."""
    return 2 + math.ceil(math.log(abs(t.X)) / math.log(6))


def ap3_cubefull_witness(t: CubicTriple, max_sweeps: int | None = None) -> ProgressionWitness:
    """3-term cubefull progression min^3, 3^4 Z^3, max^3 from the first
    positive variant reachable from t; exhausting the budget is a fault."""
    t.check()
    if max_sweeps is None:
        max_sweeps = sweep_budget(t)
    cur = t
    for _ in range(max_sweeps + 1):
        var = _positive_variant(cur)
        if var is None:
            cur = ap3_cubefull_iterate(cur)
            continue
        XX, YY, ZZ = var
        lo, hi = sorted((XX, YY))
        mid_val = 3**4 * ZZ**3
        mid_fn = None
        if ZZ <= _FACTOR_BOUND:
            mid_fn = factorize(ZZ).pow(3).times(factorize(81))
        mid = Term(mid_val, factored=mid_fn, parts=(ZZ, 3, 1))
        terms = (_cube_term(lo), mid, _cube_term(hi))
        w = ProgressionWitness(3, 3, lo**3, mid_val - lo**3, terms, "constructed-cubic-iteration")
        w.verify()
        return w
    raise WitnessError("no positive variant within the sweep budget")


@dataclass(frozen=True)
class PellPair:
    """Solution of x^2 - 2 y^2 = (-1)^k, the k-th power of 1 + sqrt(2)."""

    index: int
    x: int
    y: int

    def check(self) -> None:
        if self.x * self.x - 2 * self.y * self.y != (-1) ** self.index:
            raise ValueError("x^2 - 2 y^2 != (-1)^k")


def pell_pair(k: int) -> PellPair:
    """k-th pair from (1, 0) under x' = x + 2y, y' = x + y."""
    if k < 0:
        raise ValueError("k >= 0")
    x, y = 1, 0
    for _ in range(k):
        x, y = x + 2 * y, x + y
    pair = PellPair(k, x, y)
    pair.check()
    return pair


def pelly(k: int) -> int:
    """y_k alone; y_{3*5^j +- 1}^2 + 1 and y_{3*5^j} vanish mod 5^(j+1)."""
    return pell_pair(k).y


def check_pelly(j: int) -> bool:
    """Both 5-adic congruences at level j: y^2 + 1 = 0 mod 5^(j+1) at the
    indices 3*5^j +- 1, and 5^(j+1) | y at the index 3*5^j itself."""
    if j < 0:
        raise ValueError("j >= 0")
    mod = 5 ** (j + 1)
    base = 3 * 5**j
    lo, mid, hi = (pell_pair(base + off).y for off in (-1, 0, 1))
    return (lo * lo + 1) % mod == 0 and (hi * hi + 1) % mod == 0 and mid % mod == 0


@dataclass(frozen=True)
class FamilyParams:
    """Everything behind one member of the m-term Pell family."""

    m: int
    j: int
    index: int
    x: int
    companion: int
    q: int
    tees: tuple[int, ...]
    s: int
    first: int
    diff: int

    def ratio_report(self, dps: int = 30) -> str:
        """d / N^((2m-4)/(2m-3)), the quantity the family keeps bounded."""
        with mp.workdps(dps):
            e = mp.mpf(2 * self.m - 4) / (2 * self.m - 3)
            val = mp.mpf(self.diff) / mp.mpf(self.first) ** e
            return mp.nstr(val, 12)


def family_params(m: int = 4, j: int = 1) -> FamilyParams:
    """Parameters of the m-term squarefull family built from the Pell index 3*5^j - 1.

    j >= 1 is essential: at j = 0 the third term has 5-adic valuation 1 and
    the construction collapses.
    """
    if m < 4:
        raise ValueError("m >= 4")
    if j < 1:
        raise ValueError("j >= 1: at j = 0 the term N + 2d is divisible by 5 exactly once")
    idx = 3 * 5**j - 1
    pair = pell_pair(idx)
    companion, x = pair.x, pair.y
    assert companion * companion - 2 * x * x == 1  # idx is even
    assert x % 2 == 0
    q, rem = divmod(x * x + 1, 5 ** (j + 1))
    if rem:
        raise ArithmeticError("5^(j+1) does not divide x^2 + 1; the Pell divisibility failed")
    tees = []
    for i in range(3, m):
        num = 2 * x * x + i
        if i % 2 == 0:
            num //= 2
        tees.append(num)
    T = math.prod(tees)
    s = 2 * T * q
    d = s * s
    N = 2 * x * x * d
    return FamilyParams(m, j, idx, x, companion, q, tuple(tees), s, N, d)


def family_4term(m: int = 4, j: int = 1) -> ProgressionWitness:
    """m-term squarefull progression (m >= 4) with square difference d = s^2."""
    p = family_params(m, j)
    x, q, s, d, N = p.x, p.q, p.s, p.diff, p.first
    T = math.prod(p.tees)
    terms = [term_from_parts(N, certificate_parts([(2, 3), (x, 2), (T, 2), (q, 2)]))]
    terms.append(term_from_parts(N + d, certificate_parts([(s, 2), (p.companion, 2)])))
    terms.append(
        term_from_parts(N + 2 * d, certificate_parts([(2, 3), (5, p.j + 1), (q, 3), (T, 2)]))
    )
    for iz, t in enumerate(p.tees):
        i = 3 + iz
        other = T // t
        comps = [(t, 3), (other, 2), (q, 2), (2, 2 + (1 if i % 2 == 0 else 0))]
        terms.append(term_from_parts(N + i * d, certificate_parts(comps)))
    w = ProgressionWitness(2, m, N, d, tuple(terms), "family-pell")
    w.verify()
    return w
