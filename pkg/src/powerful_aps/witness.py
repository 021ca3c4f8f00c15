"""Portable witnesses for arithmetic progressions of k-full numbers.

A witness packages N, d, and the m terms N + j*d, each term carrying at
least one of two proofs of k-fullness: a complete factorization, or
"parts" (a_k..a_{2k-1}) with term = prod a_i^i, which is k-full by
construction.  Witnesses serialize to JSON and verify from scratch.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .ntcore import FactoredNatural, factorize, is_prime

SOURCES = (
    "searched",
    "constructed-sum-of-squares",
    "constructed-cubic-iteration",
    "constructed-elliptic",
    "family-pell",
    "cfrac-quartic",
)

# below this, a verifier is expected to refactor term values from scratch
REFACTOR_BOUND = 10**14


class WitnessError(ValueError):
    """Raised when a witness fails verification; message names the predicate."""


@dataclass(frozen=True)
class Term:
    """One progression term with its k-fullness evidence."""

    value: int
    factored: FactoredNatural | None = None
    parts: tuple[int, ...] | None = None

    def check(self, k: int) -> None:
        if self.value < 1:
            raise WitnessError(f"term {self.value} is not a natural number")
        if self.factored is None and self.parts is None:
            raise WitnessError(f"term {self.value} carries no k-fullness evidence")
        if self.factored is not None:
            if self.factored.value != self.value:
                raise WitnessError(f"factorization is for {self.factored.value}, term is {self.value}")
            self.factored.check()
            if not self.factored.is_kfull(k):
                raise WitnessError(f"term {self.value} is not {k}-full")
        if self.parts is not None:
            if len(self.parts) != k or any(a < 1 for a in self.parts):
                raise WitnessError(f"term {self.value} has malformed parts")
            prod = 1
            for i, a in enumerate(self.parts, start=k):
                prod *= a**i
            if prod != self.value:
                raise WitnessError(f"parts recompose to {prod}, term is {self.value}")

    def to_json_obj(self) -> dict:
        obj: dict = {"value": str(self.value)}
        if self.factored is not None:
            obj["factors"] = [[p, e] for p, e in self.factored.factors]
        if self.parts is not None:
            obj["parts"] = [str(a) for a in self.parts]
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Term":
        value = int(obj["value"])
        factored = None
        if "factors" in obj:
            factored = FactoredNatural(value, tuple((int(p), int(e)) for p, e in obj["factors"]))
        parts = tuple(int(a) for a in obj["parts"]) if "parts" in obj else None
        return cls(value, factored, parts)


def term_from_factored(fn: FactoredNatural) -> Term:
    return Term(fn.value, factored=fn)


def term_from_parts(value: int, parts: tuple[int, ...]) -> Term:
    return Term(value, parts=parts)


@dataclass(frozen=True)
class ProgressionWitness:
    """m-term arithmetic progression N, N+d, ..., N+(m-1)d of k-full numbers."""

    k: int
    m: int
    first: int
    diff: int
    terms: tuple[Term, ...]
    source: str = "searched"

    def __post_init__(self):
        if self.source not in SOURCES:
            raise WitnessError(f"unknown source tag {self.source!r}")

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(t.value for t in self.terms)

    def normalized(self) -> "ProgressionWitness":
        """Flip a negative difference so the progression increases."""
        if self.diff > 0:
            return self
        n2 = self.first + (self.m - 1) * self.diff
        return ProgressionWitness(self.k, self.m, n2, -self.diff, tuple(reversed(self.terms)), self.source)

    def is_primitive(self) -> bool:
        """No t >= 2 with t^2 | gcd(N, d) keeping every term k-full after / t^2.

        Needs full factorizations on every term; raises otherwise.
        """
        if any(t.factored is None for t in self.terms):
            raise WitnessError("primitivity needs factored terms")
        g = math.gcd(self.first, self.diff)
        square_primes = [(p, e) for p, e in factorize(g).factors if e >= 2]
        if not square_primes:
            return True
        choices = [[p**j for j in range(e // 2 + 1)] for p, e in square_primes]
        tees = [1]
        for ch in choices:
            tees = [t * c for t in tees for c in ch]
        for t in sorted(tees):
            if t < 2:
                continue
            t2 = t * t
            ok = True
            for term in self.terms:
                for p, e in factorize(t).factors:
                    if term.factored.nu(p) - 2 * e < self.k and term.factored.nu(p) != 2 * e:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return False
        return True

    def verify(self, refactor_bound: int = REFACTOR_BOUND) -> None:
        """Re-derive everything checkable; raises WitnessError naming the first failure.

        Checks shape (m >= 2, k >= 2, d != 0), the progression equation for
        every term, each term's evidence, and refactors small term values
        outright.  Source-specific structure is checked where it is part of
        the claim: elliptic witnesses must show a 73^3 * square last term
        and pairwise coprime terms.
        """
        if self.k < 2:
            raise WitnessError("k must be >= 2")
        if self.m < 2 or len(self.terms) != self.m:
            raise WitnessError("m must be >= 2 and match the term count")
        if self.diff == 0:
            raise WitnessError("difference must be nonzero")
        if self.first < 1:
            raise WitnessError("first term must be a natural number")
        for j, term in enumerate(self.terms):
            want = self.first + j * self.diff
            if term.value != want:
                raise WitnessError(f"term {j} is {term.value}, progression wants {want}")
            term.check(self.k)
            if term.value <= refactor_bound:
                if not factorize(term.value).is_kfull(self.k):
                    raise WitnessError(f"term {term.value} fails refactoring")
        if self.source == "constructed-elliptic":
            ends = (self.terms[0], self.terms[-1])
            if not any(t.parts is not None and t.parts[-1] % 73 == 0 for t in ends):
                raise WitnessError("elliptic witness lacks the 73^3 * square shape")
            vals = self.values
            for i in range(len(vals)):
                for j in range(i + 1, len(vals)):
                    if math.gcd(vals[i], vals[j]) != 1:
                        raise WitnessError("elliptic witness terms are not pairwise coprime")

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "N": str(self.first),
            "d": str(self.diff),
            "source": self.source,
            "terms": [t.to_json_obj() for t in self.terms],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_obj(), **kw)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ProgressionWitness":
        return cls(
            int(obj["k"]),
            int(obj["m"]),
            int(obj["N"]),
            int(obj["d"]),
            tuple(Term.from_json_obj(t) for t in obj["terms"]),
            obj.get("source", "searched"),
        )

    @classmethod
    def from_json(cls, text: str) -> "ProgressionWitness":
        return cls.from_json_obj(json.loads(text))


def witness_from_values(values, k: int = 2, source: str = "searched") -> ProgressionWitness:
    """Build a fully factored witness from raw term values (must be in AP)."""
    values = [int(v) for v in values]
    m = len(values)
    if m < 2:
        raise WitnessError("need at least two terms")
    d = values[1] - values[0]
    if any(values[j] - values[j - 1] != d for j in range(1, m)):
        raise WitnessError("values are not in arithmetic progression")
    terms = tuple(term_from_factored(factorize(v)) for v in values)
    w = ProgressionWitness(k, m, values[0], d, terms, source)
    return w.normalized()
