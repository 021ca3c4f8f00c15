"""Exponent tables, radical inequalities, and abc-style triples from witnesses.

Nothing here decides truth of any conjecture: the checks compare exact
integers on both sides of an inequality or identity and report what they
see.  Qualities are decimal strings, never pass/fail verdicts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .identities import build_F, extract_G
from .ntcore import FactoredNatural, factorize, kfull_decompose
from .witness import ProgressionWitness

EXCEPTIONAL_PAIRS = ((3, 2), (3, 3), (4, 2))


@dataclass(frozen=True)
class ExponentTable:
    """Conjectural exponents for an m-term progression of k-full numbers."""

    m: int
    k: int
    e_gcd: Fraction
    e_dN: Fraction
    e_Nd: Fraction
    exceptional: bool
    strengthened_gcd: Fraction | None
    strengthened_dN: Fraction | None
    strengthened_Nd: Fraction | None


def theorem1_exponents(m: int, k: int) -> ExponentTable:
    """The three exponent ratios, plus the strengthened variants when m >= 2k - 1.

    The strengthened denominators replace 1/k^2 by 1/(2k - 1); the pairs
    (3,2), (3,3), (4,2) are exceptional because m(1 - 1/k) - 2 <= 0 there.
    At (3, 2) the strengthened gcd denominator vanishes, so that one entry
    is None rather than a rational.
    """
    if m < 3 or k < 2:
        raise ValueError("m >= 3 and k >= 2")
    base = Fraction(m) * (1 - Fraction(1, k))
    weak = Fraction(m) * (1 - Fraction(1, k * k))
    e_gcd = (base - 2) / (weak - 2)
    e_dN = (base - 1) / (weak - 1)
    e_Nd = (base + Fraction(1, k) - 2) / (weak + Fraction(1, k) - 2)
    s_gcd = s_dN = s_Nd = None
    if m >= 2 * k - 1:
        strong = Fraction(m) * (1 - Fraction(1, 2 * k - 1))
        s_gcd = (base - 2) / (strong - 2) if strong != 2 else None
        s_dN = (base - 1) / (strong - 1)
        s_Nd = (base + Fraction(1, k) - 2) / (strong + Fraction(1, k) - 2)
    return ExponentTable(m, k, e_gcd, e_dN, e_Nd, (m, k) in EXCEPTIONAL_PAIRS, s_gcd, s_dN, s_Nd)


@dataclass(frozen=True)
class AbcQuality:
    a: int
    b: int
    c: int
    rad: int
    quality: str  # log c / log rad, 50 significant digits


def abc_quality(a: int, b: int, c: int) -> AbcQuality:
    """Quality of an abc triple: gcd checks, exact radical, 50-digit log ratio."""
    if not (0 < a <= b < c):
        raise ValueError("need 0 < a <= b < c")
    if a + b != c:
        raise ValueError("a + b must equal c")
    if math.gcd(a, b) != 1:
        raise ValueError("a, b must be coprime")
    rad = factorize(a).radical() * factorize(b).radical() * factorize(c).radical()
    with mp.workdps(60):
        q = mp.log(c) / mp.log(rad)
        qs = mp.nstr(q, 50)
    return AbcQuality(a, b, c, rad, qs)


@dataclass(frozen=True)
class KabcTriple:
    """The reduced abc-style triple carried by an m-term progression."""

    ell: int
    t: int
    n0: int
    d0: int
    raw_even: int
    raw_odd: int
    raw_diff: int
    common: int
    a: int
    b: int
    c: int
    common_bound: int
    common_ok: bool
    quality: str | None


def kabc_triple(w: ProgressionWitness, with_quality: bool = False) -> KabcTriple:
    """Split prod(N0 + j d0)^C(l, j) by parity of j into A and C; B = C - A
    equals d0^l * G(N0, d0) exactly, and gcd(A, C) stays below (m-1)^((m-1)^2)."""
    w = w.normalized()
    if w.m < 3:
        raise ValueError("m >= 3")
    ell = w.m - 1
    t = math.gcd(w.first, w.diff)
    n0, d0 = w.first // t, w.diff // t
    A = 1
    C = 1
    for j in range(0, ell + 1):
        val = (n0 + j * d0) ** math.comb(ell, j)
        if j % 2 == 0:
            A *= val
        else:
            C *= val
    B = C - A
    G = extract_G(build_F(ell), ell)
    if B != d0**ell * G.evaluate(n0, d0):
        raise ArithmeticError("the d0^l G identity failed, which should be impossible")
    D = math.gcd(A, C)
    bound = (w.m - 1) ** ((w.m - 1) ** 2)
    if B > 0:
        a, b, c = A // D, B // D, C // D
    elif B < 0:
        a, b, c = C // D, -B // D, A // D
    else:
        raise ArithmeticError("zero middle entry; the difference d must have been zero")
    quality = None
    if with_quality:
        rad = _triple_radical(n0, d0, ell, D)
        with mp.workdps(60):
            quality = mp.nstr(mp.log(c) / mp.log(rad), 50)
    return KabcTriple(ell, t, n0, d0, A, C, B, D, a, b, c, bound, D <= bound, quality)


def _triple_radical(n0: int, d0: int, ell: int, D: int) -> int:
    """rad(abc) for the reduced triple, assembled from factored building blocks."""
    G = extract_G(build_F(ell), ell)
    primes: set[int] = set()
    exps: dict[int, int] = {}
    for j in range(0, ell + 1):
        for p, e in factorize(n0 + j * d0).factors:
            exps[p] = exps.get(p, 0) + e * math.comb(ell, j)
    for p, e in factorize(abs(d0)).factors:
        exps[p] = exps.get(p, 0) + e * ell
    for p, e in factorize(abs(G.evaluate(n0, d0))).factors:
        exps[p] = exps.get(p, 0) + e
    for p, e in factorize(D).factors:
        exps[p] = exps.get(p, 0) - 3 * e
    for p, e in exps.items():
        if e > 0:
            primes.add(p)
    return math.prod(sorted(primes))


@dataclass(frozen=True)
class RadicalCheck:
    """Both sides of an exact radical inequality."""

    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs <= self.rhs


def lemma5ap_check(n: int | FactoredNatural, t: int | FactoredNatural, k: int = 2) -> RadicalCheck:
    """rad(n/t)^(k^2) * t <= n^k for k-full n and any k-full divisor t of n."""
    fn = n if isinstance(n, FactoredNatural) else factorize(n)
    ft = t if isinstance(t, FactoredNatural) else factorize(t)
    if not fn.is_kfull(k) or not ft.is_kfull(k):
        raise ValueError("n and t must be k-full")
    if fn.value % ft.value != 0:
        raise ValueError("t must divide n")
    rad = 1
    for p, e in fn.factors:
        if e - ft.nu(p) > 0:
            rad *= p
    return RadicalCheck(rad ** (k * k) * ft.value, fn.value**k)


def small_primes_product(m: int) -> int:
    """prod of primes <= m."""
    from sympy import primerange

    out = 1
    for p in primerange(2, m + 1):
        out *= p
    return out


def roadie_check(w: ProgressionWitness) -> RadicalCheck:
    """rad(prod terms / t^m)^(2k-1) * t^m <= (C_m * prod of all decomposition parts)^(2k-1).

    Wants m >= 2k - 1 and fully factored terms; t = gcd(N, d) and C_m is
    the product of primes up to m.
    """
    w = w.normalized()
    k, m = w.k, w.m
    if m < 2 * k - 1:
        raise ValueError("m >= 2k - 1")
    if any(t.factored is None for t in w.terms):
        raise ValueError("needs fully factored terms")
    t = math.gcd(w.first, w.diff)
    ft = factorize(t)
    exps: dict[int, int] = {}
    parts_product = 1
    for term in w.terms:
        for p, e in term.factored.factors:
            exps[p] = exps.get(p, 0) + e
        parts_product *= math.prod(kfull_decompose(term.factored, k).parts)
    for p, e in ft.factors:
        exps[p] = exps.get(p, 0) - m * e
        if exps[p] < 0:
            raise ArithmeticError("t^m does not divide the product of terms")
    rad = 1
    for p, e in sorted(exps.items()):
        if e > 0:
            rad *= p
    cm = small_primes_product(m)
    return RadicalCheck(rad ** (2 * k - 1) * t**m, (cm * parts_product) ** (2 * k - 1))


@dataclass(frozen=True)
class WitnessDiagnostics:
    """Observed size ratios of one witness next to the conjectural exponents."""

    m: int
    k: int
    t: int
    ratio_d_N: str | None
    ratio_t_last: str | None
    exponents: ExponentTable


def witness_diagnostics(w: ProgressionWitness) -> WitnessDiagnostics:
    from .apsearch import ratio_truncated

    w = w.normalized()
    t = math.gcd(w.first, w.diff)
    last = w.first + (w.m - 1) * w.diff
    return WitnessDiagnostics(
        w.m,
        w.k,
        t,
        ratio_truncated(w.diff, w.first),
        ratio_truncated(t, last) if t > 1 else None,
        theorem1_exponents(max(w.m, 3), w.k),
    )
