"""Division values on the rank-one curve: recurrences, 2-adic shape, periods."""

import sys

from powerful_aps.ecap4 import DivisionValues, ab_from_n, nu2_closed_form, nu2_psi, scan_periods
from powerful_aps.ellcurve import CURVE, P1

sys.set_int_max_str_digits(100_000)

dv = DivisionValues()
print("psi_n for n = 1..6:", [dv.psi(n) for n in range(1, 7)])
print()

print("(phi_n / psi_n^2, omega_n / psi_n^3) against n * P1 under the group law:")
for n in (2, 5, 11, 17):
    p = dv.point(n)
    q = CURVE.mul(n, P1)
    print(f"  n = {n:>2}: x = {p.x}  match = {p == q}")
print()

print("2-adic valuation of psi_n, computed vs closed form:")
for n in range(2, 17):
    kind, predicted = nu2_closed_form(n)
    got = nu2_psi(n)
    print(f"  nu_2(psi_{n:<2}) = {got:>3}   closed form gives {predicted:>3} ({kind})")
print()

rep = scan_periods(73)
print(f"reductions mod 73 over a window of {rep.window} indices:")
print(f"  least periods: psi {rep.psi_period}, phi {rep.phi_period}, omega {rep.omega_period}")
print(f"  n with psi*phi = 2*omega and 73 not dividing omega: n = {sorted(rep.residue_classes)}"
      f" (mod 73)")
print()

print("reduced coordinates (a, b) of n * P1 and the four flags the 4-term pipeline needs:")
for n in (4, 39, 112):
    red = ab_from_n(n)
    flags = (red.congruence_ok, red.parity_index_ok, red.a_even_b_odd, red.residue_ok)
    print(f"  n = {n:>3}: a has {len(str(abs(red.a)))} digits, flags = {flags}")
