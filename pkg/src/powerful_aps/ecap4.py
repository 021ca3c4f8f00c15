"""Division values along the multiples of P1 and the 4-term progressions they carry.

The sequences psi_n, phi_n, omega_n are the division-polynomial values at
P1 = (-976, -49344): n P1 = (phi_n / psi_n^2, omega_n / psi_n^3).  They
satisfy the usual even/odd double-add ladder, so single values at n in
the hundreds cost only a logarithmic number of big multiplications.
Everything downstream of the ladder (2-adic valuations, periods mod 73,
the (a, b) reduction and its quartic value) is exact.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

try:
    from gmpy2 import mpz

    def _gcd(a, b):
        import gmpy2

        return int(gmpy2.gcd(a, b))

    def _isqrt(n):
        import gmpy2

        return int(gmpy2.isqrt(n))

except ImportError:  # pure-int fallback, same results, slower on huge n
    mpz = int
    _gcd = math.gcd
    _isqrt = math.isqrt

from .ellcurve import CURVE, INFINITY, P1, P2, T1, Point
from .ntcore import nu2 as _nu2_int
from .witness import ProgressionWitness, Term, WitnessError

_X = -976
_Y = -49344
_B2, _B4, _B6, _B8 = CURVE.b2, CURVE.b4, CURVE.b6, CURVE.b8

_PSI2 = 2 * _Y + CURVE.a1 * _X + CURVE.a3
_PSI3 = 3 * _X**4 + _B2 * _X**3 + 3 * _B4 * _X**2 + 3 * _B6 * _X + _B8
_PSI4 = _PSI2 * (
    2 * _X**6
    + _B2 * _X**5
    + 5 * _B4 * _X**4
    + 10 * _B6 * _X**3
    + 10 * _B8 * _X**2
    + (_B2 * _B8 - _B4 * _B6) * _X
    + (_B4 * _B8 - _B6**2)
)


class DivisionValues:
    """Memoized psi/phi/omega ladder at P1, exact or modulo a fixed modulus."""

    def __init__(self, modulus: int | None = None):
        self.modulus = modulus
        if modulus is None:
            self._psi = {0: mpz(0), 1: mpz(1), 2: mpz(_PSI2), 3: mpz(_PSI3), 4: mpz(_PSI4)}
            self._inv_psi2 = None
            self._inv_2psi2 = None
        else:
            if modulus < 2:
                raise ValueError("modulus >= 2")
            if math.gcd(2 * _PSI2, modulus) != 1:
                raise ValueError("modulus shares a factor with 2*psi_2; use exact values")
            self._psi = {n: v % modulus for n, v in ((0, 0), (1, 1), (2, _PSI2), (3, _PSI3), (4, _PSI4))}
            self._inv_psi2 = pow(_PSI2 % modulus, -1, modulus)
            self._inv_2psi2 = pow(2 * _PSI2 % modulus, -1, modulus)

    def psi(self, n: int):
        if n < 0:
            raise ValueError("n >= 0")
        memo = self._psi
        if n in memo:
            return memo[n]
        i, odd = divmod(n, 2)
        if odd:
            v = self.psi(i + 2) * self.psi(i) ** 3 - self.psi(i - 1) * self.psi(i + 1) ** 3
        else:
            num = self.psi(i) * (self.psi(i + 2) * self.psi(i - 1) ** 2 - self.psi(i - 2) * self.psi(i + 1) ** 2)
            if self.modulus is None:
                v, rem = divmod(num, memo[2])
                if rem:
                    raise ArithmeticError(f"psi_2 does not divide the even-rule numerator at n = {n}")
            else:
                v = num * self._inv_psi2
        if self.modulus is not None:
            v %= self.modulus
        memo[n] = v
        return v

    def phi(self, n: int):
        if n < 1:
            raise ValueError("n >= 1")
        v = _X * self.psi(n) ** 2 - self.psi(n - 1) * self.psi(n + 1)
        return v % self.modulus if self.modulus is not None else v

    def omega(self, n: int):
        """omega_n; the only division in sight is by 2 psi_2, which is exact."""
        if n < 1:
            raise ValueError("n >= 1")
        if n == 1:
            return _Y % self.modulus if self.modulus is not None else mpz(_Y)
        t = self.psi(n + 2) * self.psi(n - 1) ** 2 - self.psi(n - 2) * self.psi(n + 1) ** 2
        # 64 = -a1/2 and 1680 = -a3/2 fold the sign change into the ladder
        tail = self.psi(n) * (64 * self.phi(n) + 1680 * self.psi(n) ** 2)
        if self.modulus is None:
            head, rem = divmod(t, 2 * _PSI2)
            if rem:
                raise ArithmeticError(f"2 psi_2 does not divide the omega numerator at n = {n}")
            return head + tail
        return (t * self._inv_2psi2 + tail) % self.modulus

    def omega_alt(self, n: int):
        """Same omega_n through psi_{2n}; exact mode only, used as a cross-check."""
        if self.modulus is not None:
            raise ValueError("exact mode only")
        if n < 1:
            raise ValueError("n >= 1")
        num = self.psi(2 * n) + self.psi(n) ** 2 * (128 * self.phi(n) + 3360 * self.psi(n) ** 2)
        head, rem = divmod(num, 2 * self.psi(n))
        if rem:
            raise ArithmeticError(f"2 psi_n does not divide the alternate omega numerator at n = {n}")
        return head

    def point(self, n: int) -> Point:
        """n P1 as an affine rational point (exact mode)."""
        if self.modulus is not None:
            raise ValueError("exact mode only")
        ps = self.psi(n)
        if ps == 0:
            return INFINITY
        return Point(Fraction(int(self.phi(n)), int(ps) ** 2), Fraction(int(self.omega(n)), int(ps) ** 3))


_EXACT = DivisionValues()


def psi(n: int, modulus: int | None = None) -> int:
    values = _EXACT if modulus is None else DivisionValues(modulus)
    return int(values.psi(n))


def phi(n: int, modulus: int | None = None) -> int:
    values = _EXACT if modulus is None else DivisionValues(modulus)
    return int(values.phi(n))


def omega(n: int, modulus: int | None = None) -> int:
    values = _EXACT if modulus is None else DivisionValues(modulus)
    return int(values.omega(n))


def phi_omega(n: int, modulus: int | None = None) -> tuple[int, int]:
    """(phi_n, omega_n) together; exact mode cross-checks the two omega forms."""
    values = _EXACT if modulus is None else DivisionValues(modulus)
    ph, om = int(values.phi(n)), int(values.omega(n))
    if modulus is None and n >= 2:
        assert om == int(values.omega_alt(n))
    return ph, om


def nu2_psi(n: int) -> int:
    """nu_2(psi_n), computed from the exact value."""
    return _nu2_int(psi(n))


def nu2_closed_form(n: int) -> tuple[str, int]:
    """Predicted nu_2(psi_n): ("==", v) or (">=", v) depending on n mod 16."""
    if n < 1:
        raise ValueError("n >= 1")
    r = n % 4
    if r == 1:
        k = n // 4
        return "==", 13 * k * (2 * k + 1)
    if r == 3:
        k = (n + 1) // 4
        return "==", 13 * k * (2 * k - 1)
    if r == 2:
        k = (n - 2) // 4
        return "==", 26 * k * (k + 1) + 5
    k = n // 4
    if k % 2 == 1:
        return "==", 26 * k * k + 4
    if k % 4 == 2:
        return "==", 26 * k * k + 5
    return ">=", 26 * k * k + 6


def nu2_psi_check(max_n: int = 100) -> list[tuple[int, int, str, int, bool]]:
    """(n, actual, relation, predicted, ok) for 1 <= n <= max_n."""
    out = []
    for n in range(1, max_n + 1):
        rel, pred = nu2_closed_form(n)
        actual = nu2_psi(n)
        ok = actual == pred if rel == "==" else actual >= pred
        out.append((n, actual, rel, pred, ok))
    return out


@dataclass(frozen=True)
class PeriodReport:
    """Least periods of the three sequences modulo `modulus`, plus the
    residues n mod `modulus` where psi_n phi_n = 2 omega_n with omega_n != 0."""

    modulus: int
    window: int
    psi_period: int | None
    phi_period: int | None
    omega_period: int | None
    residue_classes: frozenset[int]
    exact_fallback: bool


def _least_period(arr: np.ndarray) -> int | None:
    n = arr.size
    for T in range(1, n // 2 + 1):
        if np.array_equal(arr[:-T], arr[T:]):
            return T
    return None


def scan_periods(modulus: int = 73, window: int | None = None) -> PeriodReport:
    """Scan the ladder modulo `modulus` for least periods and the special residues.

    The window defaults to three times the modulus-73 period; moduli that
    collide with 2 psi_2 fall back to reducing exact values, capped at 512.
    """
    exact_fallback = math.gcd(2 * _PSI2, modulus) != 1
    if window is None:
        window = 3 * 36 * modulus if not exact_fallback else 512
    if exact_fallback:
        window = min(window, 512)
        dv = _EXACT
        psi_seq = [int(dv.psi(n)) % modulus for n in range(1, window + 1)]
        phi_seq = [int(dv.phi(n)) % modulus for n in range(1, window + 1)]
        om_seq = [int(dv.omega(n)) % modulus for n in range(1, window + 1)]
    else:
        dv = DivisionValues(modulus)
        psi_seq = [int(dv.psi(n)) for n in range(1, window + 1)]
        phi_seq = [int(dv.phi(n)) for n in range(1, window + 1)]
        om_seq = [int(dv.omega(n)) for n in range(1, window + 1)]
    psi_a = np.array(psi_seq, dtype=np.int64)
    phi_a = np.array(phi_seq, dtype=np.int64)
    om_a = np.array(om_seq, dtype=np.int64)
    residues = frozenset(
        (n % modulus)
        for n in range(1, window + 1)
        if (psi_seq[n - 1] * phi_seq[n - 1] - 2 * om_seq[n - 1]) % modulus == 0
        and om_seq[n - 1] % modulus != 0
    )
    return PeriodReport(
        modulus,
        window,
        _least_period(psi_a),
        _least_period(phi_a),
        _least_period(om_a),
        residues,
        exact_fallback,
    )


@dataclass(frozen=True)
class AbReduction:
    """The coprime pair (a, b) attached to n P1 through y/x = 146 b / (a + 2b)."""

    n: int
    a: int
    b: int
    congruence_ok: bool  # n = 39 mod 73
    parity_index_ok: bool  # n = 4 mod 16
    a_even_b_odd: bool
    residue_ok: bool  # a * b^-1 = 290 mod 73^2


def ab_from_n(n: int) -> AbReduction:
    """Reduce (146 psi phi - 2 omega) / omega to lowest terms with b > 0."""
    if n < 2:
        raise ValueError("n >= 2")
    om = _EXACT.omega(n)
    if om == 0:
        raise ZeroDivisionError(f"omega_{n} = 0")
    num = 146 * _EXACT.psi(n) * _EXACT.phi(n) - 2 * om
    g = _gcd(num, om)
    a = int(num // g)
    b = int(om // g)
    if b < 0:
        a, b = -a, -b
    residue_ok = False
    if b % 5329 != 0 and math.gcd(b, 5329) == 1:
        residue_ok = (a * pow(b, -1, 5329)) % 5329 == 290
    return AbReduction(
        n,
        a,
        b,
        n % 73 == 39,
        n % 16 == 4,
        a % 2 == 0 and b % 2 == 1,
        residue_ok,
    )


def quartic_value(a: int, b: int) -> int:
    """a^4 - 8 a^3 b + 2 a^2 b^2 + 8 a b^3 + b^4, invariant under (a, b) -> (b, -a)."""
    a, b = mpz(a), mpz(b)
    return int(a**4 - 8 * a**3 * b + 2 * a**2 * b**2 + 8 * a * b**3 + b**4)


@dataclass(frozen=True)
class EllipticAp4:
    """4-term squarefull progression data attached to an index n = 404 mod 1168."""

    n: int
    a: int
    b: int
    first: int
    diff: int
    w: int
    diff_positive: bool
    witness: ProgressionWitness


def proposition_witness(n: int) -> EllipticAp4:
    """The progression x0^2, (a^2+b^2)^2, (a^2-b^2-2ab)^2, 73^3 w^2 from n P1.

    Requires n = 404 mod 1168 (that is 39 mod 73 and 4 mod 16); every
    structural claim is re-verified on exact integers before the witness
    is assembled.
    """
    if n % 1168 != 404:
        raise ValueError("n must be 404 mod 1168")
    red = ab_from_n(n)
    if not (red.a_even_b_odd and red.residue_ok):
        raise WitnessError("the reduction lost the parity or residue structure")
    a, b = mpz(red.a), mpz(red.b)
    F = a**4 - 8 * a**3 * b + 2 * a**2 * b**2 + 8 * a * b**3 + b**4
    w2, rem = divmod(F, 73**3)
    if rem:
        raise WitnessError("73^3 does not divide the quartic value")
    w = _isqrt(w2)
    if mpz(w) * w != w2:
        raise WitnessError("the quartic value over 73^3 is not a perfect square")
    x0 = a * a - b * b + 2 * a * b
    y0 = a * a + b * b
    z0 = a * a - b * b - 2 * a * b
    N = int(x0 * x0)
    d = int(y0 * y0 - x0 * x0)
    if int(z0 * z0) != N + 2 * d:
        raise WitnessError("third square breaks the progression")
    if int(F) != N + 3 * d:
        raise WitnessError("quartic value breaks the progression")
    for u, v in ((x0, y0), (x0, z0), (y0, z0), (x0, 73 * w), (y0, 73 * w), (z0, 73 * w)):
        if _gcd(u, v) != 1:
            raise WitnessError("progression terms are not pairwise coprime")
    terms = (
        Term(N, parts=(int(abs(x0)), 1)),
        Term(N + d, parts=(int(y0), 1)),
        Term(N + 2 * d, parts=(int(abs(z0)), 1)),
        Term(N + 3 * d, parts=(int(w), 73)),
    )
    witness = ProgressionWitness(2, 4, N, d, terms, "constructed-elliptic").normalized()
    witness.verify()
    return EllipticAp4(n, int(a), int(b), N, d, int(w), d > 0, witness)


_DATA_ENV = "POWERFUL_APS_DATA"


def data_dir() -> Path:
    env = os.environ.get(_DATA_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "_data"


def _read_int(path: Path) -> int:
    return int(path.read_text().strip())


@dataclass(frozen=True)
class IntroReport:
    """Outcome of re-deriving the bundled 1126-digit example from its (a, b)."""

    checks: tuple[tuple[str, bool], ...]
    n_digits: int
    d_digits: int
    a_digits: int
    b_digits: int

    @property
    def ok(self) -> bool:
        return all(flag for _, flag in self.checks)

    def failures(self) -> list[str]:
        return [name for name, flag in self.checks if not flag]


def verify_intro_example(fixtures: Path | str | None = None) -> IntroReport:
    """Recompute the bundled giant 4-term example from scratch.

    Everything in sight is rechecked: the three squares, the 73^3 * square
    fourth term, positivity, coprimality, and the group-law identity that
    the point 14 P1 - 8 P2 + T1 has y/x = 146 b / (a + 2b) up to sign.
    """
    root = Path(fixtures) if fixtures is not None else data_dir()
    N = _read_int(root / "intro_N.txt")
    d = _read_int(root / "intro_d.txt")
    a = _read_int(root / "intro_a.txt")
    b = _read_int(root / "intro_b.txt")
    am, bm = mpz(a), mpz(b)
    x0 = am * am - bm * bm + 2 * am * bm
    y0 = am * am + bm * bm
    z0 = am * am - bm * bm - 2 * am * bm
    checks = [("a, b coprime", _gcd(a, b) == 1), ("d positive", d > 0)]
    checks.append(("N = (a^2 - b^2 + 2ab)^2", int(x0 * x0) == N))
    checks.append(("N + d = (a^2 + b^2)^2", int(y0 * y0) == N + d))
    checks.append(("N + 2d = (a^2 - b^2 - 2ab)^2", int(z0 * z0) == N + 2 * d))
    F = quartic_value(a, b)
    w2, rem = divmod(F, 73**3)
    w = _isqrt(w2) if rem == 0 else 0
    checks.append(("N + 3d = 73^3 * square", rem == 0 and w * mpz(w) == w2 and F == N + 3 * d))
    coprime = all(
        _gcd(u, v) == 1
        for u, v in ((x0, y0), (x0, z0), (y0, z0), (x0, 73 * w), (y0, 73 * w), (z0, 73 * w))
    )
    checks.append(("terms pairwise coprime", coprime))
    checks.append(("gcd(N, d) = 1", _gcd(N, d) == 1))
    R = CURVE.add(CURVE.add(CURVE.mul(14, P1), CURVE.mul(-8, P2)), T1)
    ok_group = False
    if not R.is_infinity and R.x != 0:
        t = R.y / R.x
        target = Fraction(146 * b, a + 2 * b)
        ok_group = t == target or t == -target
    checks.append(("14 P1 - 8 P2 + T1 has y/x = 146b/(a+2b) up to sign", ok_group))
    return IntroReport(tuple(checks), len(str(N)), len(str(d)), len(str(a)), len(str(b)))


def intro_witness(fixtures: Path | str | None = None) -> ProgressionWitness:
    """The bundled example as a verified ProgressionWitness."""
    root = Path(fixtures) if fixtures is not None else data_dir()
    N = _read_int(root / "intro_N.txt")
    d = _read_int(root / "intro_d.txt")
    a = _read_int(root / "intro_a.txt")
    b = _read_int(root / "intro_b.txt")
    am, bm = mpz(a), mpz(b)
    x0 = int(am * am - bm * bm + 2 * am * bm)
    y0 = int(am * am + bm * bm)
    z0 = int(am * am - bm * bm - 2 * am * bm)
    w = _isqrt(quartic_value(a, b) // 73**3)
    terms = (
        Term(N, parts=(abs(x0), 1)),
        Term(N + d, parts=(y0, 1)),
        Term(N + 2 * d, parts=(abs(z0), 1)),
        Term(N + 3 * d, parts=(w, 73)),
    )
    witness = ProgressionWitness(2, 4, N, d, terms, "constructed-elliptic")
    witness.verify()
    return witness
