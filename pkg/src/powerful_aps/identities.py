"""Alternating binomial products and the binary forms they expand into.

The object of interest is F_l(X, d) = prod over odd j of (X + j*d)^C(l,j)
minus prod over even j, 0 <= j <= l.  Its low-order coefficients in X
vanish through degree l - 1, which is what makes the difference of the
two term-products in an l+1 term progression divisible by d^l.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_CEILING = 12


def stirling2(n: int, l: int) -> int:
    """Stirling number of the second kind via the standard recurrence."""
    if n < 0 or l < 0:
        raise ValueError("stirling2 wants n, l >= 0")
    if n == 0 and l == 0:
        return 1
    if n == 0 or l == 0:
        return 0
    row = [1] + [0] * l
    for _ in range(n):
        new = [0] * (l + 1)
        for j in range(1, l + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[l]


def surjection_sum(l: int, n: int) -> int:
    """sum_{j=1}^{l} (-1)^(j-1) C(l,j) j^n; zero for 1 <= n < l, (-1)^(l-1) l! at n = l."""
    if l < 1 or n < 0:
        raise ValueError("surjection_sum wants l >= 1, n >= 0")
    return sum((-1) ** (j - 1) * math.comb(l, j) * j**n for j in range(1, l + 1))


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_pow(a: list[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = _poly_mul(out, a)
    return out


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous integer form in (X, d); coeffs keyed by (i, j) = (d-, X-degree)."""

    degree: int
    coeffs: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, degree: int, coeffs: dict[tuple[int, int], int]) -> "BinaryForm":
        clean = {(int(i), int(j)): int(c) for (i, j), c in coeffs.items() if c != 0}
        for i, j in clean:
            if i < 0 or j < 0 or i + j != degree:
                raise ValueError(f"coefficient at ({i}, {j}) breaks homogeneity of degree {degree}")
        return cls(degree, tuple(sorted(clean.items())))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coeffs)

    def coeff(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def evaluate(self, x: int, d: int) -> int:
        return sum(c * d**i * x**j for (i, j), c in self.coeffs)

    def x_degree(self) -> int:
        return max((j for (_, j), _ in self.coeffs), default=0)


def build_F(l: int, ceiling: int = DEFAULT_CEILING) -> BinaryForm:
    """The degree 2^(l-1) form prod_{j odd}(X+jd)^C(l,j) - prod_{j even}, expanded exactly.

    Exponents C(l, j) explode with l, hence the ceiling; raise it knowingly.
    """
    if l < 2:
        raise ValueError("build_F wants l >= 2")
    if l > ceiling:
        raise ValueError(f"l = {l} exceeds the ceiling {ceiling}; pass ceiling= to override")
    # homogeneity pins c_{i,j} to i = 2^(l-1) - j, so expand at d = 1
    odd = [1]
    even = [1]
    for j in range(0, l + 1):
        lin = [j, 1]  # X + j at d = 1
        e = math.comb(l, j)
        if j % 2 == 1:
            odd = _poly_mul(odd, _poly_pow(lin, e))
        else:
            even = _poly_mul(even, _poly_pow(lin, e))
    n = max(len(odd), len(even))
    odd += [0] * (n - len(odd))
    even += [0] * (n - len(even))
    diff = [o - e for o, e in zip(odd, even)]
    degree = 2 ** (l - 1)
    assert len(diff) - 1 == degree and diff[degree] == 0  # leading X^2^(l-1) cancels
    coeffs = {(degree - j, j): c for j, c in enumerate(diff) if c != 0}
    return BinaryForm.from_dict(degree, coeffs)


def extract_G(F: BinaryForm, l: int) -> BinaryForm:
    """Divide F by d^l: checks c_{i,j} = 0 for i < l, shifts indices, and
    certifies deg_X G = 2^(l-1) - l with G(1, 0) = (l-1)!."""
    for (i, j), c in F.coeffs:
        if i < l and c != 0:
            raise ValueError(f"F has a nonzero coefficient at d-degree {i} < {l}")
    coeffs = {(i - l, j): c for (i, j), c in F.coeffs}
    G = BinaryForm.from_dict(F.degree - l, coeffs)
    if G.x_degree() != 2 ** (l - 1) - l:
        raise ValueError("wrong X-degree after division")
    if G.evaluate(1, 0) != math.factorial(l - 1):
        raise ValueError("leading X coefficient is not (l-1)!")
    return G


def evaluate_form(form: BinaryForm, x: int, d: int) -> int:
    """Value of a binary form at integer (x, d)."""
    return form.evaluate(x, d)


def product_difference(l: int, x: int, d: int) -> int:
    """Unexpanded reference: prod over odd j of (x+jd)^C(l,j) minus prod over even."""
    odd = 1
    even = 1
    for j in range(0, l + 1):
        t = (x + j * d) ** math.comb(l, j)
        if j % 2 == 1:
            odd *= t
        else:
            even *= t
    return odd - even
