"""Exact primitives for k-full numbers.

A natural number n is k-full when nu_p(n) >= k for every prime p | n
(squarefull for k = 2, cubefull for k = 3).  Everything here is exact
integer arithmetic.  Factorizations travel as explicit objects, and a
second, cheaper kind of certificate is supported: any product
prod_{i=k}^{2k-1} a_i^i is k-full whatever the a_i are, so a witness can
prove k-fullness of a huge term without anyone factoring it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from sympy import factorint
from sympy import isprime as _bpsw
from sympy.ntheory.primetest import mr as _miller_rabin

# BPSW has no known pseudoprimes and is proven exact below ~3.3e24; above
# that we stack extra Miller-Rabin rounds on top.
_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_EXTRA_MR_ROUNDS = 64


def is_prime(n: int) -> bool:
    """Primality test, deterministic below 3.3e24 and 64 extra MR rounds above."""
    n = int(n)
    if n < 2:
        return False
    if not _bpsw(n):
        return False
    if n < _DETERMINISTIC_BOUND:
        return True
    rng = random.Random(n ^ 0x5AFE)
    bases = [rng.randrange(2, n - 1) for _ in range(_EXTRA_MR_ROUNDS)]
    return bool(_miller_rabin(n, bases))


def nu(p: int, n: int) -> int:
    """nu_p(n), the exponent of the prime p in n."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("nu is undefined at 0")
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def nu2(n: int) -> int:
    """nu_2(n) via the low set bit, no division loop."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("nu2 is undefined at 0")
    return (n & -n).bit_length() - 1


def factorize(n: int) -> "FactoredNatural":
    """Full factorization of n >= 1 as a FactoredNatural."""
    n = int(n)
    if n < 1:
        raise ValueError("factorize wants n >= 1")
    pairs = tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))
    return FactoredNatural(n, pairs)


def radical(n: int) -> int:
    """rad(n), the product of the distinct primes dividing n."""
    return factorize(n).radical()


def is_kfull(n: int, k: int = 2) -> bool:
    """True when every prime exponent of n is at least k; n = 1 counts."""
    return factorize(n).is_kfull(k)


@dataclass(frozen=True)
class FactoredNatural:
    """A natural number together with its complete prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int) -> "FactoredNatural":
        return factorize(n)

    @classmethod
    def from_dict(cls, value: int, factors: dict[int, int]) -> "FactoredNatural":
        return cls(int(value), tuple(sorted((int(p), int(e)) for p, e in factors.items())))

    def check(self) -> None:
        """Recompose and test every base for primality; raises on any mismatch."""
        if self.value < 1:
            raise ValueError("value must be >= 1")
        prod = 1
        seen = set()
        for p, e in self.factors:
            if e < 1:
                raise ValueError(f"exponent {e} < 1 at prime {p}")
            if p in seen:
                raise ValueError(f"repeated prime {p}")
            seen.add(p)
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors recompose to {prod}, not {self.value}")

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def nu(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def radical(self) -> int:
        r = 1
        for p, _ in self.factors:
            r *= p
        return r

    def is_kfull(self, k: int = 2) -> bool:
        return all(e >= k for _, e in self.factors)

    def times(self, other: "FactoredNatural") -> "FactoredNatural":
        """Product, merging exponents; avoids refactoring composite results."""
        merged = self.as_dict()
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return FactoredNatural.from_dict(self.value * other.value, merged)

    def pow(self, e: int) -> "FactoredNatural":
        if e < 1:
            raise ValueError("pow wants e >= 1")
        return FactoredNatural(self.value**e, tuple((p, a * e) for p, a in self.factors))

    def to_json_obj(self) -> dict:
        return {"value": str(self.value), "factors": [[p, e] for p, e in self.factors]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "FactoredNatural":
        fn = cls(int(obj["value"]), tuple((int(p), int(e)) for p, e in obj["factors"]))
        fn.check()
        return fn

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.factors)


@dataclass(frozen=True)
class KFullDecomposition:
    """n = prod_{i=k}^{2k-1} a_i^i with a_k as large as the greedy rule allows."""

    k: int
    parts: tuple[int, ...]

    @property
    def value(self) -> int:
        k = self.k
        out = 1
        for i, a in enumerate(self.parts, start=k):
            out *= a**i
        return out

    def check(self, expected: int | None = None) -> None:
        if len(self.parts) != self.k:
            raise ValueError("need exactly k parts")
        if any(a < 1 for a in self.parts):
            raise ValueError("parts must be >= 1")
        if expected is not None and self.value != expected:
            raise ValueError("parts do not recompose")


def kfull_decompose(n: int | FactoredNatural, k: int = 2) -> KFullDecomposition:
    """Canonical split of a k-full n into prod a_i^i, i = k..2k-1.

    Per prime with exponent e = q*k + r: all of p^q goes into a_k when
    r = 0, else p^(q-1) into a_k and one extra p into a_{k+r}.
    """
    fn = n if isinstance(n, FactoredNatural) else factorize(n)
    if k < 2:
        raise ValueError("k >= 2")
    if not fn.is_kfull(k):
        raise ValueError(f"{fn.value} is not {k}-full")
    parts = [1] * k
    for p, e in fn.factors:
        q, r = divmod(e, k)
        if r == 0:
            parts[0] *= p**q
        else:
            parts[0] *= p ** (q - 1)
            parts[r] *= p
    out = KFullDecomposition(k, tuple(parts))
    out.check(fn.value)
    return out


def kfull_divisors(n: int | FactoredNatural, k: int = 2, limit: int | None = None):
    """All k-full divisors of n in increasing order (exponents 0 or >= k)."""
    fn = n if isinstance(n, FactoredNatural) else factorize(n)
    divs = [1]
    for p, e in fn.factors:
        if e < k:
            continue
        powers = [1] + [p**j for j in range(k, e + 1)]
        divs = [d * q for d in divs for q in powers]
    divs.sort()
    if limit is not None:
        divs = [d for d in divs if d <= limit]
    return divs


def coprime_basis(components: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Pairwise-coprime bases with exponents so prod c^e = prod b^f (factor refinement).

    No factoring: only gcds.  Sound for certifying k-fullness of numbers
    whose components are far too large to factor.
    """
    work = [[abs(int(c)), int(e)] for c, e in components if abs(int(c)) != 1]
    if any(c == 0 for c, _ in work):
        raise ValueError("components must be nonzero")
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            ci, ei = work[i]
            if ci == 1:
                continue
            for j in range(i + 1, len(work)):
                cj, ej = work[j]
                if cj == 1:
                    continue
                g = math.gcd(ci, cj)
                if g == 1:
                    continue
                work[i][0] = ci // g
                work[j][0] = cj // g
                work.append([g, ei + ej])
                changed = True
                break
            if changed:
                break
    merged: dict[int, int] = {}
    for c, e in work:
        if c != 1 and e != 0:
            merged[c] = merged.get(c, 0) + e
    return sorted(merged.items())


def certificate_parts(components: list[tuple[int, int]], k: int = 2) -> tuple[int, ...]:
    """Parts (a_k..a_{2k-1}) certifying that prod c^e is k-full, via gcd refinement.

    Every refined base must carry exponent >= k; raises otherwise, since a
    smaller exponent cannot be certified without factoring.
    """
    basis = coprime_basis(components)
    parts = [1] * k
    for b, e in basis:
        q, r = divmod(e, k)
        if q == 0:
            raise ValueError(f"component {b} has exponent {e} < k = {k}")
        if r == 0:
            parts[0] *= b**q
        else:
            parts[0] *= b ** (q - 1)
            parts[r] *= b
    return tuple(parts)
