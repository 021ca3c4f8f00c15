"""Exact continued fractions of quartic roots and the 3-term triples they feed.

The quartic 23 x^4 + 80 x^3 - 276 x^2 - 160 x + 92 has four real roots;
convergents p/q to the third one turn into squarefull progressions
16 N0^2, 108 t^2, 8 s^2 whose difference is 4 F(p, q), so a large partial
quotient (at least 60) forces d^2 < N.  Quotients come from exact
integer polynomial transforms certified by Sturm chains, never floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ntcore import factorize
from .witness import ProgressionWitness, Term, term_from_parts

QUARTIC = (92, -160, -276, 80, 23)  # ascending degree

_FACTOR_BOUND = 10**12


def quartic_at(u: int, v: int) -> int:
    """The homogenized quartic 23 u^4 + 80 u^3 v - 276 u^2 v^2 - 160 u v^3 + 92 v^4."""
    return 23 * u**4 + 80 * u**3 * v - 276 * u**2 * v**2 - 160 * u * v**3 + 92 * v**4


def quartic_discriminant() -> int:
    """Discriminant of the quartic; 2^20 * 3^18 here, so all roots are real and distinct."""
    from sympy import Poly, Symbol

    x = Symbol("x")
    return int(Poly(sum(c * x**i for i, c in enumerate(QUARTIC)), x).discriminant())


def _eval(poly, t):
    out = 0
    for c in reversed(poly):
        out = out * t + c
    return out


def _derive(poly):
    return tuple(i * c for i, c in enumerate(poly) if i > 0)


def _frac_divmod(num, den):
    """Polynomial division over Fraction, coefficients ascending."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    r = num[:]
    while len(r) >= len(den) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(den):
            break
        coef = r[-1] / den[-1]
        deg = len(r) - len(den)
        q[deg] = coef
        for i, dc in enumerate(den):
            r[i + deg] -= coef * dc
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return tuple(q), tuple(r)


def sturm_chain(poly):
    chain = [tuple(Fraction(c) for c in poly), tuple(Fraction(c) for c in _derive(poly))]
    while chain[-1]:
        _, r = _frac_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append(tuple(-c for c in r))
    return [c for c in chain if c]


def _sign_changes(chain, t) -> int:
    signs = []
    for poly in chain:
        v = _eval(poly, t)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)


def count_roots(chain, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi]."""
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def _cauchy_bound(poly) -> Fraction:
    lead = abs(poly[-1])
    return 1 + max(abs(Fraction(c, lead)) for c in poly[:-1])


def isolate_real_roots(poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals, one per real root, ascending; wants no rational roots."""
    chain = sturm_chain(poly)
    B = _cauchy_bound(poly) + 1
    work = [(-B, B)]
    done = []
    while work:
        lo, hi = work.pop()
        n = count_roots(chain, lo, hi)
        if n == 0:
            continue
        if n == 1:
            done.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if _eval(poly, mid) == 0:
            raise ValueError(f"rational root at {mid}")
        work.append((lo, mid))
        work.append((mid, hi))
    return sorted(done)


def _bisect_step(poly, lo, hi):
    mid = (lo + hi) / 2
    if _eval(poly, mid) == 0:
        raise ValueError(f"rational root at {mid}")
    if (_eval(poly, lo) > 0) != (_eval(poly, mid) > 0):
        return lo, mid
    return mid, hi


@dataclass(frozen=True)
class QuarticRoot:
    """One real root of the quartic, boxed by an exact isolating interval."""

    index: int
    lo: Fraction
    hi: Fraction

    def refined(self, width=Fraction(1, 10**4)) -> "QuarticRoot":
        """Same root, interval narrowed to at most the requested width."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width > 0")
        lo, hi = self.lo, self.hi
        while hi - lo > width:
            lo, hi = _bisect_step(QUARTIC, lo, hi)
        return QuarticRoot(self.index, lo, hi)

    def contains(self, t) -> bool:
        return self.lo < Fraction(t) < self.hi


def isolate_roots() -> tuple[QuarticRoot, ...]:
    """The four real roots in ascending order, refinable to any width."""
    intervals = isolate_real_roots(QUARTIC)
    if len(intervals) != 4:
        raise ArithmeticError("expected four real roots")
    return tuple(QuarticRoot(i + 1, lo, hi) for i, (lo, hi) in enumerate(intervals))


def _sign_at(poly, t) -> int:
    v = _eval(poly, t)
    if v == 0:
        raise ArithmeticError(f"unexpected rational root at {t}")
    return 1 if v > 0 else -1


def _floor_of_root(poly, lo, hi):
    """floor(root) for the single root of poly inside (lo, hi).

    Integer bisection: with the root isolated, the sign at any point of
    the interval says which side of the root it sits on.
    """
    s_left = _sign_at(poly, lo)

    def below(t):
        if t <= lo:
            return True
        if t >= hi:
            return False
        return _sign_at(poly, t) == s_left

    t_lo, t_hi = math.floor(lo), math.floor(hi)
    while t_lo < t_hi:
        mid = (t_lo + t_hi + 1) // 2
        if below(mid):
            t_lo = mid
        else:
            t_hi = mid - 1
    return t_lo


def _pivot_above(poly, a, lo, hi):
    """A small rational strictly between a = floor(root) and the root.

    Dyadic points a + 2^-e keep every interval endpoint tiny, step after
    step; without this the inverted endpoints snowball.
    """
    if lo > a:
        return lo
    s_left = _sign_at(poly, lo)
    e = 1
    while True:
        t = a + Fraction(1, 2**e)
        if t < hi and _sign_at(poly, t) == s_left:
            return t
        e += 1


def _shift(poly, a):
    """P(x + a) by synthetic Taylor shift, integer coefficients throughout."""
    c = list(poly)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += a * c[j + 1]
    return tuple(c)


def _next_poly(poly, a):
    """x^deg * P(a + 1/x), content-stripped, leading coefficient positive."""
    shifted = _shift(poly, a)
    rev = tuple(reversed(shifted))
    g = math.gcd(*[abs(c) for c in rev])
    rev = tuple(c // g for c in rev)
    if rev[-1] < 0:
        rev = tuple(-c for c in rev)
    return rev


@dataclass(frozen=True)
class Convergent:
    k: int
    quotient: int
    p: int
    q: int


@dataclass(frozen=True)
class CFExpansion:
    """Exact partial quotients a_0, a_1, ... and convergents of one quartic root."""

    root_index: int
    quotients: tuple[int, ...]
    convergents: tuple[Convergent, ...]
    hit_budget: bool = False

    def large_quotients(self, min_quotient: int = 60) -> list[Convergent]:
        """Convergents whose NEXT quotient is at least min_quotient."""
        out = []
        for c in self.convergents[:-1]:
            if self.quotients[c.k + 1] >= min_quotient:
                out.append(c)
        return out


_CF_CACHE: dict[tuple[int, int], CFExpansion] = {}


def cf_expand(count: int = 320, root_index: int = 3, digit_budget: int = 350) -> CFExpansion:
    """First `count` partial quotients of the root_index-th smallest real root.

    Every step is exact: the polynomial is transformed by x -> a + 1/x
    with integer coefficients, and a Sturm count recertifies that exactly
    one root lives in the mapped interval.  Stops early once a
    denominator outgrows digit_budget digits.
    """
    if root_index not in (1, 2, 3, 4):
        raise ValueError("root_index in 1..4")
    cached = _CF_CACHE.get((root_index, digit_budget))
    if cached is not None and (len(cached.quotients) >= count or cached.hit_budget):
        return CFExpansion(root_index, cached.quotients[:count], cached.convergents[:count],
                           cached.hit_budget and len(cached.quotients) <= count)
    for den in (1, 2, 4, 23, 46, 92):
        for num_abs in (1, 2, 4, 23, 46, 92):
            for num in (num_abs, -num_abs):
                if _eval(QUARTIC, Fraction(num, den)) == 0:
                    raise ArithmeticError("the quartic has a rational root; expansion undefined")
    intervals = isolate_real_roots(QUARTIC)
    if len(intervals) != 4:
        raise ArithmeticError("expected four real roots")
    poly = QUARTIC
    lo, hi = intervals[root_index - 1]
    quotients: list[int] = []
    convs: list[Convergent] = []
    p2, p1 = 0, 1  # p_{-2}, p_{-1}
    q2, q1 = 1, 0
    hit_budget = False
    for k in range(count):
        a = _floor_of_root(poly, lo, hi)
        p = a * p1 + p2
        q = a * q1 + q2
        quotients.append(a)
        convs.append(Convergent(k, a, p, q))
        if k >= 1 and p * convs[k - 1].q - convs[k - 1].p * q != (-1) ** (k - 1):
            raise ArithmeticError(f"convergent determinant broke at k = {k}")
        if len(str(q)) > digit_budget:
            hit_budget = True
            break
        p2, p1 = p1, p
        q2, q1 = q1, q
        pivot = _pivot_above(poly, a, lo, hi)
        lo, hi = Fraction(1) / (min(hi, a + 1) - a), Fraction(1) / (pivot - a)
        poly = _next_poly(poly, a)
        if count_roots(sturm_chain(poly), lo, hi) != 1:
            raise ArithmeticError(f"lost root isolation at step {k}")
    exp = CFExpansion(root_index, tuple(quotients), tuple(convs), hit_budget)
    prior = _CF_CACHE.get((root_index, digit_budget))
    if prior is None or len(exp.quotients) > len(prior.quotients):
        _CF_CACHE[(root_index, digit_budget)] = exp
    return exp


def cf_digits(root: QuarticRoot | int, count: int, digit_budget: int = 350) -> list[Convergent]:
    """First count partial quotients of a root, as exact convergent records."""
    if count < 1:
        raise ValueError("count >= 1")
    idx = root if isinstance(root, int) else root.index
    return list(cf_expand(count, idx, digit_budget).convergents)


@dataclass(frozen=True)
class UvData:
    """The exact quantities behind triple_from_uv."""

    u: int
    v: int
    n0: int
    s: int
    t: int
    d0: int


def uv_data(u: int, v: int) -> UvData:
    """N0 = u^2-10uv-2v^2, s = -5u^2-4uv+10v^2, t = u^2+2v^2; then
    s^2 - 2 N0^2 equals the quartic at (u, v) and 2 N0^2 + s^2 = 27 t^2."""
    u, v = int(u), int(v)
    if math.gcd(u, v) != 1:
        raise ValueError("u, v must be coprime")
    n0 = u * u - 10 * u * v - 2 * v * v
    s = -5 * u * u - 4 * u * v + 10 * v * v
    t = u * u + 2 * v * v
    d0 = s * s - 2 * n0 * n0
    if d0 != quartic_at(u, v):
        raise ArithmeticError("quartic identity failed, which should be impossible")
    if 2 * n0 * n0 + s * s != 27 * t * t:
        raise ArithmeticError("27 t^2 identity failed, which should be impossible")
    return UvData(u, v, n0, s, t, d0)


def _uv_terms(data: UvData) -> tuple[Term, Term, Term]:
    n0, s, t = abs(data.n0), abs(data.s), abs(data.t)
    first = Term(
        16 * n0 * n0,
        factored=factorize(4 * n0).pow(2) if n0 <= _FACTOR_BOUND else None,
        parts=(4 * n0, 1),
    )
    mid = Term(
        108 * t * t,
        factored=factorize(2 * t).pow(2).times(factorize(27)) if t <= _FACTOR_BOUND else None,
        parts=(2 * t, 3),
    )
    last = Term(
        8 * s * s,
        factored=factorize(s).pow(2).times(factorize(8)) if s <= _FACTOR_BOUND else None,
        parts=(s, 2),
    )
    return first, mid, last


def triple_from_uv(u: int, v: int) -> ProgressionWitness:
    """3-term squarefull progression 16 N0^2, 108 t^2, 8 s^2 with d = 4 (s^2 - 2 N0^2)."""
    data = uv_data(u, v)
    if data.n0 == 0 or data.s == 0:
        raise ValueError("degenerate parameters: a term vanishes")
    if data.d0 == 0:
        raise ValueError("degenerate parameters: zero difference")
    terms = _uv_terms(data)
    w = ProgressionWitness(2, 3, 16 * data.n0**2, 4 * data.d0, terms, "cfrac-quartic").normalized()
    w.verify()
    return w


@dataclass(frozen=True)
class SmallDRecord:
    """A large partial quotient and the progression its convergent produces."""

    quotient_index: int  # 0-based position of the large quotient a_i
    preceding_k: int  # the convergent p_k/q_k it certifies, k = i - 1
    quotient: int
    witness: ProgressionWitness

    @property
    def diff(self) -> int:
        return self.witness.diff

    @property
    def first(self) -> int:
        return self.witness.first


def find_small_d(max_index: int = 320, root_index: int = 3, min_quotient: int = 60,
                 digit_budget: int = 350) -> list[SmallDRecord]:
    """Progressions with d^2 < N from every convergent p_k/q_k, k <= max_index,
    whose next partial quotient is at least min_quotient."""
    if max_index < 0:
        raise ValueError("max_index >= 0")
    exp = cf_expand(max_index + 2, root_index, digit_budget)
    out = []
    for conv in exp.large_quotients(min_quotient):
        w = triple_from_uv(conv.p, conv.q)
        if w.diff**2 >= w.first:
            raise ArithmeticError(
                f"quotient {exp.quotients[conv.k + 1]} after k = {conv.k} failed to force d^2 < N"
            )
        out.append(SmallDRecord(conv.k + 1, conv.k, exp.quotients[conv.k + 1], w))
    return out
