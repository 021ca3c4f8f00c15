"""Sweep squarefull progressions with bounded ratio and print the row tables."""

from powerful_aps.apsearch import count_kfull, find_aps_window

print("squarefull counts:", ", ".join(f"10^{e}: {count_kfull(10**e)}" for e in (4, 6, 8)))
print()

rep = find_aps_window(10**8, 2, 3, "sqrt")
print(f"three-term progressions with {rep.constraint}, terms <= 10^8:")
for r in sorted(rep.rows, key=lambda r: r.ratio):
    mark = "" if r.primitive else "  (square multiple of a smaller row)"
    print(f"  d = {r.diff:>6}  N = {r.first:>9}  log d / log N = {r.ratio}{mark}")
print()

rep4 = find_aps_window(190_000_000, 2, 4, "0.7426")
reduced = rep4.scale_reduced_rows()
print(f"four-term progressions with {rep4.constraint}, terms <= 1.9*10^8,")
print(f"keeping the least d in each d : N class ({len(rep4.rows)} rows -> {len(reduced)}):")
for r in sorted(reduced, key=lambda r: r.ratio):
    print(f"  d = {r.diff:>6}  N = {r.first:>9}  ratio = {r.ratio}")
print()

w = rep.rows[0].witness
print("every row carries a verified witness, e.g.")
print(f"  {w.values} with factored terms {', '.join(str(t.factored) for t in w.terms)}")
