"""Hunt progressions whose common difference dwarfs the first term.

The pivot runs over the second term, so d > N costs about as much as d < N
even though the terms spread out over a huge range.
"""

from powerful_aps.apsearch import find_aps_large_d, lower_bound_divisor, min_common_difference

rep = find_aps_large_d(10**8, 10**6)
print(f"four-term squarefull progressions, d > N, terms <= 10^8: {len(rep.rows)} found")
print("the ten largest ratios:")
for r in rep.rows[:10]:
    print(f"  d = {r.diff:>8}  N = {r.first:>7}  log d / log N = {r.ratio}")
print()

print("smallest admissible differences (least d, then least N, exhaustive in the box):")
for m, box in ((3, 1000), (4, 20000)):
    hit = min_common_difference(m, box, 10**6)
    div = lower_bound_divisor(m)
    if hit is None:
        print(f"  m = {m}: nothing with d <= {box} and N <= 10^6")
        continue
    print(f"  m = {m}: d = {hit.diff} at N = {hit.first}, terms {hit.witness.values}"
          f"  (every d is divisible by {div})")
