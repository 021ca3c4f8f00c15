"""Command-line front end: searches, constructions, ladders, diagnostics.

Exit codes: 0 on success, 1 when a verification fails (with a one-line
machine-readable reason on stdout), 2 on usage errors (argparse).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import abcdiag, apsearch, cfrac, constructions, ecap4, identities
from .witness import ProgressionWitness, WitnessError


def _print_witness(w: ProgressionWitness) -> None:
    print(w.to_json(indent=2))


def _cmd_enumerate(args) -> int:
    values = apsearch.enumerate_kfull(args.bound, args.k)
    if args.count_only:
        print(values.size)
    else:
        print(" ".join(str(v) for v in values.tolist()))
    return 0


def _report_out(report: apsearch.SearchReport, args) -> int:
    rows = report.primitive_rows() if getattr(args, "primitive_only", False) else report.rows
    if args.format == "json":
        obj = report.to_json_obj()
        obj["rows"] = [r.to_json_obj() for r in rows]
        print(json.dumps(obj, indent=2))
    elif args.format == "csv":
        out = ["d,N,d_factored,N_factored,ratio"]
        for r in rows:
            out.append(
                f"{r.diff},{r.first},{apsearch.factorize(r.diff)},{apsearch.factorize(r.first)},{r.ratio or ''}"
            )
        print("\n".join(out))
    else:
        for r in rows:
            tag = "primitive" if r.primitive else "imprimitive"
            print(f"d = {r.diff}  N = {r.first}  ratio = {r.ratio}  [{tag}]")
        print(f"{len(rows)} progressions ({report.constraint}, bound {report.bound})")
    return 0


def _cmd_search_ap(args) -> int:
    max_ratio = "sqrt" if args.d_lt_sqrt or args.max_ratio is None else args.max_ratio
    report = apsearch.find_aps_window(args.limit, args.k, args.terms, max_ratio)
    return _report_out(report, args)


def _cmd_search_large_d(args) -> int:
    report = apsearch.find_aps_large_d(args.limit, args.first_max, args.k, args.terms)
    return _report_out(report, args)


def _cmd_search_mind(args) -> int:
    hit = apsearch.min_common_difference(args.terms, args.max_d, args.max_n, args.k)
    if hit is None:
        print(f"no {args.terms}-term progression with d <= {args.max_d}, N <= {args.max_n}")
        return 0
    print(f"d = {hit.diff}  N = {hit.first}")
    _print_witness(hit.witness)
    return 0


def _cmd_construct_ap3_squarefull(args) -> int:
    _print_witness(constructions.ap3_squarefull(args.a, args.b))
    return 0


def _cmd_construct_ap3_cubefull(args) -> int:
    if args.iters < 0:
        print(json.dumps({"ok": False, "reason": "--iters must be >= 0"}))
        return 2
    t = constructions.ap3_cubefull_seed()
    for _ in range(args.iters):
        t = constructions.ap3_cubefull_iterate(t)
    positive = constructions._positive_variant(t) is not None
    print(f"generation {t.generation}: X has {len(str(abs(t.X)))} digits, "
          f"positive variant: {'yes' if positive else 'no, sweeping on'}")
    _print_witness(constructions.ap3_cubefull_witness(t))
    return 0


def _precondition(ok: bool, reason: str) -> bool:
    if not ok:
        print(json.dumps({"ok": False, "reason": reason}))
    return not ok


def _cmd_construct_ap4_elliptic(args) -> int:
    if _precondition(args.n % 1168 == 404, f"n = {args.n}: need n = 404 mod 1168"):
        return 2
    res = ecap4.proposition_witness(args.n)
    print(f"n = {res.n}: a has {len(str(abs(res.a)))} digits, d > 0: {res.diff_positive}")
    if args.full:
        _print_witness(res.witness)
    return 0


def _cmd_construct_family(args) -> int:
    w = constructions.family_4term(args.m, args.j)
    p = constructions.family_params(args.m, args.j)
    print(f"m = {args.m}, j = {args.j}: N has {len(str(w.first))} digits, d = s^2 with s of {len(str(p.s))} digits")
    print(f"d / N^((2m-4)/(2m-3)) = {p.ratio_report()}")
    if args.full:
        _print_witness(w)
    return 0


def _cmd_construct_small_d(args) -> int:
    records = cfrac.find_small_d(args.max_k, args.root, args.min_quotient)
    for rec in records:
        print(
            f"quotient a_{rec.quotient_index} = {rec.quotient} (convergent k = {rec.preceding_k}): "
            f"d = {rec.diff}, N has {len(str(rec.first))} digits, d^2 < N"
        )
        if args.full:
            _print_witness(rec.witness)
    return 0


def _cmd_ec_psi(args) -> int:
    dv = ecap4.DivisionValues(args.mod) if args.mod else ecap4._EXACT
    print(f"psi_{args.n} = {dv.psi(args.n)}")
    if args.n >= 1:
        print(f"phi_{args.n} = {dv.phi(args.n)}")
        print(f"omega_{args.n} = {dv.omega(args.n)}")
    return 0


def _cmd_ec_scan_periods(args) -> int:
    rep = ecap4.scan_periods(args.mod)
    print(f"modulus {rep.modulus} (window {rep.window}, exact fallback: {rep.exact_fallback})")
    print(f"psi period   {rep.psi_period}")
    print(f"phi period   {rep.phi_period}")
    print(f"omega period {rep.omega_period}")
    print(f"residues with psi*phi = 2*omega, omega != 0: {sorted(rep.residue_classes)}")
    return 0


def _cmd_ec_valuations(args) -> int:
    bad = 0
    for n, actual, rel, pred, ok in ecap4.nu2_psi_check(args.max):
        if not ok:
            bad += 1
        print(f"n = {n:3d}  nu2(psi_n) = {actual:5d}  predicted {rel} {pred}  {'ok' if ok else 'MISMATCH'}")
    if bad:
        print(f"{bad} mismatches")
        return 1
    return 0


def _cmd_ec_witness(args) -> int:
    if _precondition(args.n % 1168 == 404, f"n = {args.n}: need n = 404 mod 1168"):
        return 2
    res = ecap4.proposition_witness(args.n)
    _print_witness(res.witness)
    return 0


def _cmd_ec_verify_intro(args) -> int:
    rep = ecap4.verify_intro_example(args.fixtures)
    for name, flag in rep.checks:
        print(f"{'ok ' if flag else 'FAIL'} {name}")
    print(f"N: {rep.n_digits} digits, d: {rep.d_digits} digits, a: {rep.a_digits}, b: {rep.b_digits}")
    if not rep.ok:
        print(json.dumps({"ok": False, "reason": rep.failures()[0]}))
        return 1
    return 0


def _cmd_identity(args) -> int:
    F = identities.build_F(args.ell)
    G = identities.extract_G(F, args.ell)
    print(f"l = {args.ell}: F has {len(F.coeffs)} terms, degree {F.degree}")
    print(f"G = F / d^l has X-degree {G.x_degree()}, G(1, 0) = {G.evaluate(1, 0)}")
    if args.eval:
        X, d = args.eval
        direct = identities.product_difference(args.ell, X, d)
        via_G = d**args.ell * G.evaluate(X, d)
        print(f"F({X}, {d}) = {direct}")
        if direct != via_G:
            print(json.dumps({"ok": False, "reason": "identity mismatch"}))
            return 1
        print(f"matches d^l G = {via_G}")
    return 0


def _cmd_diag_abc(args) -> int:
    with open(args.json) as fh:
        w = ProgressionWitness.from_json(fh.read())
    res = abcdiag.kabc_triple(w, with_quality=args.quality)
    print(f"l = {res.ell}, t = {res.t}, N0 = {res.n0}, d0 = {res.d0}")
    print(f"triple a + b = c: {res.a} + {res.b} = {res.c}")
    print(f"gcd(A, C) = {res.common} <= (m-1)^((m-1)^2) = {res.common_bound}: {res.common_ok}")
    if res.quality is not None:
        print(f"quality = {res.quality}")
    return 0 if res.common_ok else 1


def _cmd_diag_exponents(args) -> int:
    t = abcdiag.theorem1_exponents(args.m, args.k)
    print(f"m = {t.m}, k = {t.k}{'  (exceptional pair)' if t.exceptional else ''}")
    print(f"e_gcd = {t.e_gcd}, e_dN = {t.e_dN}, e_Nd = {t.e_Nd}")
    if t.strengthened_gcd is not None:
        print(f"strengthened: e_gcd = {t.strengthened_gcd}, e_dN = {t.strengthened_dN}, e_Nd = {t.strengthened_Nd}")
    return 0


def _cmd_diag_radicals(args) -> int:
    S = apsearch.enumerate_kfull(args.limit, args.k)
    checked = 0
    worst = None
    from .ntcore import factorize, kfull_divisors

    for n in S.tolist():
        fn = factorize(n)
        for t in kfull_divisors(fn, args.k):
            res = abcdiag.lemma5ap_check(fn, factorize(t), args.k)
            checked += 1
            if not res.ok:
                print(json.dumps({"ok": False, "n": n, "t": t}))
                return 1
            if worst is None or res.lhs * worst[1] > worst[0] * res.rhs:
                worst = (res.lhs, res.rhs, n, t)
    print(f"checked {checked} (n, t) pairs up to {args.limit} for k = {args.k}: all hold")
    if worst:
        print(f"tightest at n = {worst[2]}, t = {worst[3]}")
    return 0


def _cmd_verify(args) -> int:
    with open(args.json) as fh:
        text = fh.read()
    try:
        w = ProgressionWitness.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        print(json.dumps({"ok": False, "reason": f"malformed witness: {exc}"}))
        return 2
    try:
        w.verify()
    except WitnessError as exc:
        print(json.dumps({"ok": False, "reason": str(exc)}))
        return 1
    print(json.dumps({"ok": True, "k": w.k, "m": w.m, "source": w.source}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="powerful-aps", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list k-full numbers up to a bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    search = sub.add_parser("search", help="exhaustive searches").add_subparsers(
        dest="search_command", required=True
    )
    p = search.add_parser("ap", help="windowed search with small d")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--terms", type=int, default=3)
    p.add_argument("--limit", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--max-ratio", type=str, default=None, help="keep d <= N^ratio (exact rational)")
    g.add_argument("--d-lt-sqrt", action="store_true", help="keep d^2 < N (default)")
    p.add_argument("--primitive-only", action="store_true")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(fn=_cmd_search_ap)

    p = search.add_parser("large-d", help="search with d > N, m >= 4")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--terms", type=int, default=4)
    p.add_argument("--limit", type=int, required=True, help="bound on every term")
    p.add_argument("--first-max", type=int, required=True, help="bound on the first term")
    p.add_argument("--primitive-only", action="store_true")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(fn=_cmd_search_large_d)

    p = search.add_parser("mind", help="least common difference in a box")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--max-d", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(fn=_cmd_search_mind)

    con = sub.add_parser("construct", help="parametric constructions").add_subparsers(
        dest="construct_command", required=True
    )
    p = con.add_parser("ap3-squarefull")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(fn=_cmd_construct_ap3_squarefull)

    p = con.add_parser("ap3-cubefull")
    p.add_argument("--iters", type=int, default=0)
    p.set_defaults(fn=_cmd_construct_ap3_cubefull)

    p = con.add_parser("ap4-elliptic")
    p.add_argument("--n", type=int, default=404)
    p.add_argument("--full", action="store_true", help="print the witness JSON (huge)")
    p.set_defaults(fn=_cmd_construct_ap4_elliptic)

    p = con.add_parser("family")
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--full", action="store_true")
    p.set_defaults(fn=_cmd_construct_family)

    p = con.add_parser("small-d")
    p.add_argument("--root", type=int, default=3)
    p.add_argument("--max-k", type=int, default=320)
    p.add_argument("--min-quotient", type=int, default=60)
    p.add_argument("--full", action="store_true")
    p.set_defaults(fn=_cmd_construct_small_d)

    ec = sub.add_parser("ec", help="division values along the curve").add_subparsers(
        dest="ec_command", required=True
    )
    p = ec.add_parser("psi")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=int, default=None)
    p.set_defaults(fn=_cmd_ec_psi)

    p = ec.add_parser("scan-periods")
    p.add_argument("--mod", type=int, default=73)
    p.set_defaults(fn=_cmd_ec_scan_periods)

    p = ec.add_parser("valuations")
    p.add_argument("--max", type=int, default=100)
    p.set_defaults(fn=_cmd_ec_valuations)

    p = ec.add_parser("witness")
    p.add_argument("--n", type=int, default=404)
    p.set_defaults(fn=_cmd_ec_witness)

    p = ec.add_parser("verify-intro")
    p.add_argument("--fixtures", type=str, default=None)
    p.set_defaults(fn=_cmd_ec_verify_intro)

    p = sub.add_parser("identity", help="binary-form expansions")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--eval", type=int, nargs=2, metavar=("X", "D"), default=None)
    p.set_defaults(fn=_cmd_identity)

    diag = sub.add_parser("diag", help="abc-flavoured diagnostics").add_subparsers(
        dest="diag_command", required=True
    )
    p = diag.add_parser("abc")
    p.add_argument("--json", type=str, required=True, help="witness JSON file")
    p.add_argument("--quality", action="store_true")
    p.set_defaults(fn=_cmd_diag_abc)

    p = diag.add_parser("exponents")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_diag_exponents)

    p = diag.add_parser("radicals")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(fn=_cmd_diag_radicals)

    p = sub.add_parser("verify", help="verify a witness JSON file")
    p.add_argument("--json", type=str, required=True)
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(20_000_000)  # witnesses carry million-digit terms
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (WitnessError, ValueError, ArithmeticError, OSError) as exc:
        print(json.dumps({"ok": False, "reason": str(exc)}))
        return 1


dispatch = main


if __name__ == "__main__":
    sys.exit(main())
