"""Continued fraction of a quartic root, and the small-d progressions it yields.

A large partial quotient means an exceptionally good rational approximation,
and each one pins a three-term squarefull progression with d^2 < N.
"""

from powerful_aps.cfrac import cf_expand, find_small_d, isolate_roots, quartic_at

print("quartic values:", [(u, v, quartic_at(u, v)) for u, v in ((1, 0), (0, 1), (2, -1))])

roots = isolate_roots()
print("real roots isolated by Sturm chains:")
for r in roots:
    tight = r.refined()
    print(f"  root {r.index}: ({float(tight.lo):.6f}, {float(tight.hi):.6f})")
print()

exp = cf_expand(40)
print(f"first quotients of root {exp.root_index}: {list(exp.quotients[:16])} ...")
print()

records = find_small_d(140)
print(f"partial quotients >= 60 among the first 140, and their progressions:")
for rec in records:
    n_digits = len(str(rec.first))
    print(f"  a_{rec.quotient_index} = {rec.quotient}  (after convergent k = {rec.preceding_k}):"
          f"  d = {rec.diff}, N has {n_digits} digits, d^2 < N: {rec.diff**2 < rec.first}")
