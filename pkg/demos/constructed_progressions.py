"""Build progressions from parameters instead of searching for them.

Three constructions: a two-parameter squarefull triple, a descent on a cubic
surface for cubefull triples, and Pell-driven four-term families whose common
difference is a perfect square.
"""

import math

from powerful_aps.constructions import (
    ap3_cubefull_iterate,
    ap3_cubefull_seed,
    ap3_cubefull_witness,
    ap3_squarefull,
    family_4term,
    family_params,
)
from powerful_aps.ecap4 import verify_intro_example


def main():
    print("squarefull triples from coprime (a, b) of opposite parity:")
    for a, b in ((2, 1), (3, 2), (5, 2), (7, 4)):
        w = ap3_squarefull(a, b)
        print(f"  (a, b) = ({a}, {b}): {w.values}  d = {w.diff}")
    print()

    t = ap3_cubefull_seed()
    print(f"cubefull descent from the seed {(t.X, t.Y, t.Z)}:")
    w = ap3_cubefull_witness(t)
    print(f"  generation 0 gives {w.values}  d = {w.diff}")
    t = ap3_cubefull_iterate(ap3_cubefull_iterate(t))
    print(f"  generation 2 sits at X = {t.X} ({len(str(abs(t.X)))} digits)")
    print()

    print("Pell families: d is a perfect square and d/N^((2m-4)/(2m-3)) stays bounded:")
    for m, j in ((4, 1), (5, 1), (6, 2)):
        params = family_params(m, j)
        w = family_4term(m, j)
        s = math.isqrt(w.diff)
        root = str(s) if s < 10**30 else f"<{len(str(s))} digits>"
        print(f"  (m, j) = ({m}, {j}): N has {len(str(w.first))} digits, d = {root}^2,"
              f"  ratio = {params.ratio_report()[:14]}")
    print()

    rep = verify_intro_example()
    print(f"stored four-term example: N has {rep.n_digits} digits, all checks pass = {rep.ok}")
    for name, ok in rep.checks:
        print(f"  [{'ok' if ok else 'XX'}] {name}")


if __name__ == "__main__":
    main()
