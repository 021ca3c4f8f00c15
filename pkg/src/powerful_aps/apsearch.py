"""Sieve enumeration of k-full numbers and exhaustive progression searches.

Three searches: a windowed one for progressions with small difference
(d below a power of the first term), a pivoted one for m >= 4 term
progressions with d larger than the first term, and the lexicographic
minimum of (d, N) over all m-term progressions inside a box.  Sieves and
scans run in int64 numpy; every surviving candidate is re-verified in
exact Python integers before a witness is issued.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp

from .ntcore import factorize
from .witness import ProgressionWitness, witness_from_values

_INT64_CEILING = 4 * 10**18


def _iroot(n: int, k: int) -> int:
    """floor(n^(1/k)) exactly."""
    if n < 0 or k < 1:
        raise ValueError("iroot wants n >= 0, k >= 1")
    if n == 0:
        return 0
    r = int(round(n ** (1.0 / k)))
    while r > 0 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def squarefree_mask(limit: int) -> np.ndarray:
    """mask[b] says whether b is squarefree, 0 <= b <= limit."""
    mask = np.ones(limit + 1, dtype=bool)
    mask[0] = False
    for p in range(2, _iroot(limit, 2) + 1):
        if mask[p]:  # composite p is either dead or redundant by its prime parts
            mask[p * p :: p * p] = False
    return mask


def enumerate_kfull(bound: int, k: int = 2) -> np.ndarray:
    """All k-full naturals <= bound, sorted, as int64 (1 included).

    k = 2 walks the unique a^2 b^3 representations with b squarefree;
    larger k does a prime-by-prime depth-first product.
    """
    bound = int(bound)
    if k < 2:
        raise ValueError("k >= 2")
    if bound > _INT64_CEILING:
        raise ValueError("bound exceeds the int64 sieve ceiling")
    if bound < 1:
        return np.empty(0, dtype=np.int64)
    if k == 2:
        bmax = _iroot(bound, 3)
        mask = squarefree_mask(bmax)
        chunks = []
        for b in range(1, bmax + 1):
            if not mask[b]:
                continue
            b3 = b * b * b
            amax = _iroot(bound // b3, 2)
            if amax == 0:
                continue
            a = np.arange(1, amax + 1, dtype=np.int64)
            chunks.append(a * a * b3)
        out = np.concatenate(chunks)
        out.sort()
        return out
    from sympy import primerange

    primes = list(primerange(2, _iroot(bound, k) + 1))
    out: list[int] = []

    def dfs(idx: int, cur: int) -> None:
        out.append(cur)
        for i in range(idx, len(primes)):
            p = primes[i]
            v = cur * p**k
            if v > bound:
                break
            while v <= bound:
                dfs(i + 1, v)
                v *= p
    dfs(0, 1)
    return np.array(sorted(out), dtype=np.int64)


def count_kfull(bound: int, k: int = 2) -> int:
    """#{n <= bound : n k-full}; for k = 2 this grows like zeta(3/2)/zeta(3) sqrt(bound)."""
    return int(enumerate_kfull(bound, k).size)


def _member(S: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Boolean membership of x in sorted S, both int64 arrays."""
    idx = np.searchsorted(S, x)
    idx[idx == S.size] = 0  # S[0] never equals an out-of-range x here (x > S[-1])
    return S[idx] == x


def ratio_truncated(d: int, N: int, places: int = 4) -> str | None:
    """log d / log N truncated (not rounded) to `places` decimals, as a string."""
    if d <= 0 or N <= 1:
        return None
    with mp.workdps(50):
        r = mp.log(d) / mp.log(N)
        q = int(mp.floor(r * 10**places))
    if q < 0:
        raise ValueError("negative ratio")
    return f"{q // 10**places}.{q % 10**places:0{places}d}"


@dataclass(frozen=True)
class SearchRow:
    """One progression found by a search, keyed by (d, N)."""

    diff: int
    first: int
    ratio: str | None
    primitive: bool
    witness: ProgressionWitness

    def to_json_obj(self) -> dict:
        return {
            "d": str(self.diff),
            "N": str(self.first),
            "ratio": self.ratio,
            "primitive": self.primitive,
            "witness": self.witness.to_json_obj(),
        }


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an exhaustive search, rows sorted by ratio."""

    k: int
    m: int
    bound: int
    constraint: str
    rows: tuple[SearchRow, ...]

    def primitive_rows(self) -> tuple[SearchRow, ...]:
        return tuple(r for r in self.rows if r.primitive)

    def scale_reduced_rows(self) -> tuple[SearchRow, ...]:
        """Keep the least-d row in each d : N ratio class.

        Exhaustive runs list whole families t * (d0, N0) whenever the scaled
        terms happen to stay k-full; this collapses each family to its
        smallest member.  Row order is preserved.
        """
        best: dict[tuple[int, int], SearchRow] = {}
        for r in self.rows:
            g = math.gcd(r.diff, r.first)
            key = (r.diff // g, r.first // g)
            if key not in best or r.diff < best[key].diff:
                best[key] = r
        keep = set((r.diff, r.first) for r in best.values())
        return tuple(r for r in self.rows if (r.diff, r.first) in keep)

    def pairs(self) -> list[tuple[int, int]]:
        return [(r.diff, r.first) for r in self.rows]

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "bound": str(self.bound),
            "constraint": self.constraint,
            "rows": [r.to_json_obj() for r in self.rows],
        }

    def to_csv(self) -> str:
        lines = ["d,N,d_factored,N_factored,ratio"]
        for r in self.rows:
            lines.append(
                f"{r.diff},{r.first},{factorize(r.diff)},{factorize(r.first)},{r.ratio or ''}"
            )
        return "\n".join(lines) + "\n"


def _sort_key(row: SearchRow):
    return (math.log(row.diff) / math.log(row.first) if row.first > 1 else math.inf, row.diff, row.first)


def _rows_from_pairs(pairs, S_set: set[int], k: int, m: int) -> list[SearchRow]:
    """Exact re-verification of (d, N) candidates and witness assembly."""
    rows = []
    for d, N in sorted(set(pairs)):
        values = [N + j * d for j in range(m)]
        if any(v not in S_set for v in values):
            continue
        for v in values:
            if not factorize(v).is_kfull(k):  # sieve cross-check, never expected to fire
                raise AssertionError(f"sieve claims {v} is {k}-full but factoring disagrees")
        w = witness_from_values(values, k=k)
        rows.append(SearchRow(d, N, ratio_truncated(d, N), w.is_primitive(), w))
    rows.sort(key=_sort_key)
    return rows


def find_aps_window(bound: int, k: int = 2, m: int = 3, max_ratio="sqrt") -> SearchReport:
    """Every m-term k-full progression with N + (m-1)d <= bound and small d.

    max_ratio = "sqrt" keeps d^2 < N; a number r keeps d <= N^r, decided
    exactly as d^q <= N^p for r = p/q (floats only prefilter).
    """
    bound = int(bound)
    if m < 2:
        raise ValueError("m >= 2")
    if m * bound >= 9 * 10**18:
        raise ValueError("m * bound must stay inside int64")
    S = enumerate_kfull(bound, k)
    if S.size < m:
        return SearchReport(k, m, bound, "empty", ())
    if max_ratio == "sqrt":
        constraint = "d^2 < N"
        cap = np.floor(np.sqrt(S.astype(np.float64))).astype(np.int64) + 1
        d_ceiling = _iroot(bound, 2) + 1
    else:
        r = max_ratio if isinstance(max_ratio, Fraction) else Fraction(str(max_ratio))
        if not 0 < r <= 2:
            raise ValueError("max_ratio out of range")
        constraint = f"d <= N^({r.numerator}/{r.denominator})"
        capf = np.power(S.astype(np.float64), float(r)) * (1 + 1e-9) + 1
        cap = np.minimum(capf, float(bound)).astype(np.int64)
        d_ceiling = bound
    candidates: list[tuple[int, int]] = []
    off = 1
    while off < S.size:
        d = S[off:] - S[:-off]
        ok = d <= np.minimum(cap[:-off], d_ceiling)
        if not ok.any():
            break
        idx = np.nonzero(ok)[0]
        first = S[idx]
        dd = d[idx]
        alive = np.ones(idx.size, dtype=bool)
        for j in range(2, m):
            t = first + j * dd
            inside = t <= bound
            alive &= inside
            if not alive.any():
                break
            t_ok = np.zeros(idx.size, dtype=bool)
            t_ok[alive] = _member(S, t[alive])
            alive = t_ok
        for i in np.nonzero(alive)[0]:
            candidates.append((int(dd[i]), int(first[i])))
        off += 1
    # exact constraint on the survivors
    kept = []
    for d, N in candidates:
        if max_ratio == "sqrt":
            if d * d < N:
                kept.append((d, N))
        else:
            if d ** r.denominator <= N ** r.numerator:
                kept.append((d, N))
    S_set = set(S.tolist())
    rows = _rows_from_pairs(kept, S_set, k, m)
    return SearchReport(k, m, bound, constraint, tuple(rows))


def find_aps_large_d(
    term_bound: int, first_term_bound: int, k: int = 2, m: int = 4, chunk: int = 20000
) -> SearchReport:
    """Every m-term k-full progression with N <= first_term_bound, all terms
    <= term_bound, and d > N.

    Pivots on the second term y: the third term must land in the window
    (max(2y - Nmax, 3y/2), min(2y - 1, (B + y)/2)], which is short, and
    N = 2y - z plus the later terms are membership checks.
    """
    B = int(term_bound)
    nmax = int(first_term_bound)
    if m < 4:
        raise ValueError("m >= 4; use the windowed search for shorter progressions")
    if m * B >= 9 * 10**18:
        raise ValueError("m * term_bound must stay inside int64")
    S = enumerate_kfull(B, k)
    small = S[S <= nmax]
    if small.size == 0 or S.size < m:
        return SearchReport(k, m, B, "d > N", ())
    y_hi = (B + 2 * nmax) // 3
    Y = S[(S > 2) & (S <= y_hi)]
    pairs: list[tuple[int, int]] = []
    for start in range(0, Y.size, chunk):
        y = Y[start : start + chunk]
        lo = np.maximum(2 * y - nmax, (3 * y) // 2 + 1)
        hi = np.minimum(2 * y - 1, (B + y) // 2)
        i0 = np.searchsorted(S, lo, side="left")
        i1 = np.searchsorted(S, hi, side="right")
        counts = np.maximum(i1 - i0, 0)
        total = int(counts.sum())
        if total == 0:
            continue
        starts = np.cumsum(counts) - counts
        offsets = np.arange(total) - np.repeat(starts, counts)
        zi = np.repeat(i0, counts) + offsets
        z = S[zi]
        yy = np.repeat(y, counts)
        N = 2 * yy - z
        good = _member(small, N)
        if not good.any():
            continue
        N, z, yy = N[good], z[good], yy[good]
        w = 2 * z - yy
        ok = _member(S, w)
        N, z, yy, w = N[ok], z[ok], yy[ok], w[ok]
        d = yy - N
        alive = np.ones(N.size, dtype=bool)
        for j in range(4, m):
            t = N + j * d
            inside = t <= B
            alive &= inside
            t_ok = np.zeros(N.size, dtype=bool)
            if alive.any():
                t_ok[alive] = _member(S, t[alive])
            alive = t_ok
        for i in np.nonzero(alive)[0]:
            pairs.append((int(d[i]), int(N[i])))
    S_set = set(S.tolist())
    rows = [r for r in _rows_from_pairs(pairs, S_set, k, m) if r.diff > r.first]
    rows.sort(key=_sort_key, reverse=True)
    return SearchReport(k, m, B, "d > N", tuple(rows))


def _large_d_reference(term_bound: int, first_term_bound: int, k: int = 2, m: int = 4):
    """Direct (N, third-term) double loop; small bounds only, for cross-checks."""
    S = sorted(enumerate_kfull(term_bound, k).tolist())
    S_set = set(S)
    out = []
    for N in S:
        if N > first_term_bound:
            break
        for z in S:
            if z <= 3 * N or (z - N) % 2:
                continue
            d = (z - N) // 2
            if N + (m - 1) * d > term_bound:
                break
            if all(N + j * d in S_set for j in range(1, m)):
                out.append((d, N))
    return sorted(out)


@dataclass(frozen=True)
class MinCommonDifference:
    """Lexicographically least (d, N) giving an m-term k-full progression."""

    diff: int
    first: int
    witness: ProgressionWitness


def min_common_difference(m: int, bound_d: int, bound_N: int, k: int = 2) -> MinCommonDifference | None:
    """Smallest d <= bound_d admitting any m-term progression with N <= bound_N,
    with the least such N; None when the box is empty."""
    if m < 2 or bound_d < 1 or bound_N < 1:
        raise ValueError("m >= 2 and positive bounds")
    S = enumerate_kfull(bound_N + (m - 1) * bound_d, k)
    small = S[S <= bound_N]
    for d in range(1, bound_d + 1):
        cur = small
        for j in range(1, m):
            if cur.size == 0:
                break
            keep = _member(S, cur + j * d)
            cur = cur[keep]
        if cur.size:
            N = int(cur[0])
            w = witness_from_values([N + j * d for j in range(m)], k=k)
            return MinCommonDifference(d, N, w)
    return None


def lower_bound_divisor(m: int) -> int:
    """prod of primes <= m/2, which must divide d in any m-term progression."""
    from sympy import primerange

    out = 1
    for p in primerange(2, m // 2 + 1):
        out *= p
    return out


def check_primorial_divisibility(w: ProgressionWitness) -> bool:
    """d must be divisible by every prime p <= m/2."""
    return w.diff % lower_bound_divisor(w.m) == 0


def primitive_filter(w: ProgressionWitness) -> bool:
    """True when no square t^2 dividing gcd(N, d) can be cancelled."""
    return w.is_primitive()
