"""Radical inequalities and abc-style diagnostics on concrete progressions."""

from powerful_aps.abcdiag import (
    abc_quality,
    kabc_triple,
    lemma5ap_check,
    roadie_check,
    theorem1_exponents,
    witness_diagnostics,
)
from powerful_aps.apsearch import enumerate_kfull, find_aps_window
from powerful_aps.identities import build_F, extract_G
from powerful_aps.ntcore import factorize, kfull_divisors

print("conjectural exponents e(m, k) (gcd / d-vs-N / N-vs-d):")
for m, k in ((3, 2), (4, 2), (5, 2), (7, 3)):
    t = theorem1_exponents(m, k)
    star = "  <- exceptional pair" if t.exceptional else ""
    print(f"  (m, k) = ({m}, {k}): {t.e_gcd}, {t.e_dN}, {t.e_Nd}{star}")
print()

print("parity-split forms F = d^l G: (X-degree of G, G(1, 0)) for l = 2..6:")
for l in range(2, 7):
    G = extract_G(build_F(l), l)
    print(f"  l = {l}: ({G.x_degree()}, {G.evaluate(1, 0)})")
print()

print("abc quality of 1 + 8 = 9:", abc_quality(1, 8, 9).quality[:10])
print()

rows = find_aps_window(10**6, 2, 4, "0.75").rows
w = rows[0].witness
diag = witness_diagnostics(w)
kt = kabc_triple(w, with_quality=True)
print(f"the four-term row {w.values}:")
print(f"  observed log d / log N = {diag.ratio_d_N} against the conjectured cap")
print(f"  reduced triple a + b = c with (a, b, c) = ({kt.a}, {kt.b}, {kt.c})")
print(f"  gcd stays under (m-1)^((m-1)^2) = {kt.common_bound}: {kt.common_ok},"
      f"  quality = {kt.quality[:10]}")
print(f"  product bound lhs <= rhs: {roadie_check(w).ok}")
print()

bad = 0
pairs = 0
for n in enumerate_kfull(10**4):
    fn = factorize(int(n))
    for t in kfull_divisors(fn, 2):
        pairs += 1
        bad += not lemma5ap_check(fn, t, 2).ok
print(f"divisor inequality rad(n/t)^4 * t <= n^2 over squarefull n <= 10^4: "
      f"{pairs} pairs, {bad} failures")
