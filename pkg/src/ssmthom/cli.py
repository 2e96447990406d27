"""Command-line front end.

Exit codes: 0 success (or infeasible as expected), 1 a mathematical check
failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .polyring import Poly, format_rational
from .projective import ProjectiveSetup, ci_candidates, report
from .prototypes import verify_all
from .symfun import IDENTITY_FAMILIES, identity_suite
from .thomclasses import SingularityId, ssm_component, ssm_truncated

FORMATS = ("text", "latex", "json")


def _num(x) -> str:
    return format_rational(x) if isinstance(x, Fraction) else str(x)


def poly_json(p: Poly) -> dict:
    return {
        "text": str(p),
        "latex": p.to_latex(),
        "terms": [{"coefficient": _num(c), "monomial": {n: str(e) for n, e in exps.items()}}
                  for exps, c in p.terms()],
    }


def _envelope(argv, fmt, payload) -> str:
    return json.dumps({
        "tool": "ssmthom",
        "version": __version__,
        "command": list(argv),
        "format": fmt,
        "payload": payload,
    }, indent=2, sort_keys=False)


def _render(p: Poly, fmt: str) -> str:
    return p.to_latex() if fmt == "latex" else str(p)


# -- subcommands -----------------------------------------------------------------

def _component_json(kind: str, n: int, ell: int, p: Poly) -> dict:
    if kind == "const":
        return {"degree": "0", "N": None, **poly_json(p)}
    return {"degree": str(ell + n), "N": str(n), **poly_json(p)}


def cmd_ssm(args, argv, out) -> int:
    sing = SingularityId(args.singularity)
    ell, nmax = args.ell, args.nmax
    parts = []
    if sing is SingularityId.A0:
        parts.append(("const", 0, ssm_truncated(sing, ell, 0).poly.graded_part(0)))
    for N in range(nmax + 1):
        parts.append(("N", N, ssm_component(sing, ell, N).poly))
    if args.format == "json":
        payload = {
            "singularity": sing.value,
            "ell": str(ell),
            "nmax": str(nmax),
            "components": [_component_json(kind, n, ell, p) for kind, n, p in parts],
        }
        print(_envelope(argv, "json", payload), file=out)
    else:
        for _, _, p in parts:
            print(_render(p, args.format), file=out)
    return 0


def _perturbation(ell: int):
    """Add the leading monomial of the top A_0^2 component once more."""
    N = ell - 1
    comp = ssm_component(SingularityId.A02, ell, N).poly
    exps, _ = comp.terms()[0]
    return {SingularityId.A02: {N: comp.ring.monomial(exps)}}


def cmd_verify(args, argv, out) -> int:
    perturb = _perturbation(args.ell) if args.perturb else None
    reports = verify_all(args.ell, perturb=perturb)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = {
            "ell": str(args.ell),
            "perturbed": args.perturb,
            "all_pass": ok,
            "reports": [{
                "formula": r.formula.value,
                "prototype": r.prototype.value,
                "ell": str(r.ell),
                "N": str(r.N),
                "pass": r.passed,
                "lhs": str(r.lhs),
                "rhs": str(r.rhs),
                "residual": str(r.residual),
            } for r in reports],
        }
        print(_envelope(argv, "json", payload), file=out)
    else:
        for r in reports:
            print(r.line(), file=out)
            if not r.passed:
                print(f"  residual: {_render(r.residual, args.format)}", file=out)
        print(f"{sum(r.passed for r in reports)}/{len(reports)} passed", file=out)
    return 0 if ok else 1


EULER_COLUMNS = ("d", "chi_a0", "chi_a02", "chi_a1", "chi_closure", "degree")


def euler_rows(ell: int, dmin: int, dmax: int) -> list[dict[str, int]]:
    rows = []
    for d in range(dmin, dmax + 1):
        rep = report(ProjectiveSetup(ell, d))
        e = rep.euler
        rows.append({"d": d, "chi_a0": e["A0"], "chi_a02": e["A02"], "chi_a1": e["A1"],
                     "chi_closure": e["closure"], "degree": rep.closure_degree})
    return rows


def cmd_euler(args, argv, out) -> int:
    rows = euler_rows(args.ell, args.dmin, args.dmax)
    if args.format == "json":
        payload = {"ell": str(args.ell),
                   "rows": [{k: str(v) for k, v in row.items()} for row in rows]}
        print(_envelope(argv, "json", payload), file=out)
    elif args.format == "latex":
        print(r"\begin{tabular}{|c|c|c|c|c|c|}\hline", file=out)
        print(r"$d$ & $\chi(A_0)$ & $\chi(A_0^2)$ & $\chi(A_1)$ & "
              r"$\chi(\overline{A_0^2})$ & $\deg$ \\\hline", file=out)
        for row in rows:
            print(" & ".join(str(row[c]) for c in EULER_COLUMNS) + r" \\\hline", file=out)
        print(r"\end{tabular}", file=out)
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in EULER_COLUMNS}
        print("  ".join(c.rjust(widths[c]) for c in EULER_COLUMNS), file=out)
        for row in rows:
            print("  ".join(str(row[c]).rjust(widths[c]) for c in EULER_COLUMNS), file=out)
    return 0


def cmd_ci_check(args, argv, out) -> int:
    rep, cands = ci_candidates(args.ell, args.d)
    chi = rep.euler["closure"]
    deg = rep.closure_degree
    feasible = [f for f, c in cands if c == chi]
    verdict = "FEASIBLE" if feasible else "INFEASIBLE"
    if args.format == "json":
        payload = {
            "ell": str(args.ell), "d": str(args.d), "degree": str(deg), "chi": str(chi),
            "candidates": [{"degrees": [str(x) for x in f], "chi_ci": str(c), "match": c == chi}
                           for f, c in cands],
            "verdict": verdict,
        }
        print(_envelope(argv, "json", payload), file=out)
    else:
        print(f"ell={args.ell} d={args.d} degree={deg} chi={chi}", file=out)
        if deg == 0:
            print("note: degree 0, the double point locus is empty; nothing to check", file=out)
        for f, c in cands:
            mark = "  <- match" if c == chi else ""
            print(f"  ({', '.join(map(str, f))}) chi_CI={c}{mark}", file=out)
        print(verdict, file=out)
    return 1 if feasible else 0


def cmd_identities(args, argv, out) -> int:
    results = identity_suite(max_size=args.max_size)
    by_family: dict[str, list] = {}
    for r in results:
        by_family.setdefault(r.family, []).append(r)
    ok = all(r.passed for r in results)
    if args.format == "json":
        payload = {"max_size": str(args.max_size), "all_pass": ok, "families": [
            {"family": fam, "description": IDENTITY_FAMILIES[fam], "cases": str(len(rs)),
             "failures": [r.label() for r in rs if not r.passed],
             "pass": all(r.passed for r in rs)}
            for fam, rs in sorted(by_family.items())]}
        print(_envelope(argv, "json", payload), file=out)
    else:
        for fam, rs in sorted(by_family.items()):
            status = "PASS" if all(r.passed for r in rs) else "FAIL"
            print(f"{status} ({fam}) {IDENTITY_FAMILIES[fam]} [{len(rs)} cases]", file=out)
            for r in rs:
                if not r.passed:
                    print(f"  failed: {r.label()}", file=out)
    return 0 if ok else 1


# -- argument parsing --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssmthom",
        description="SSM-Thom polynomials of A_0, A_0^2, A_1 and their projective applications.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("ssm", help="print SSM-Thom polynomial components")
    p.add_argument("singularity", choices=[s.value for s in SingularityId])
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_ssm)

    p = sub.add_parser("verify", help="check the interpolation conditions on all prototypes")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--perturb", action="store_true",
                   help="corrupt one coefficient of the A_0^2 formula (negative control)")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("euler", help="Euler characteristics of the loci of P^(l+1) -> P^(2l+1)")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--dmin", type=int, default=1)
    p.add_argument("--dmax", type=int, default=5)
    add_format(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("ci-check", help="search complete-intersection degrees for the double point curve")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_ci_check)

    p = sub.add_parser("identities", help="run the symmetric-function identity suite")
    p.add_argument("--max-size", type=int, default=8)
    add_format(p)
    p.set_defaults(func=cmd_identities)
    return parser


def _validate(parser, args) -> None:
    if args.command == "ssm":
        if args.ell < 1:
            parser.error("ell must be >= 1")
        if args.nmax < 0:
            parser.error("N must be >= 0")
        if args.nmax >= args.ell:
            parser.error(f"N must be < ell (got --nmax {args.nmax}, --ell {args.ell})")
    elif args.command == "verify":
        if args.ell < 1:
            parser.error("ell must be >= 1")
    elif args.command == "euler":
        if args.ell < 1:
            parser.error("ell must be >= 1")
        if not 1 <= args.dmin <= args.dmax:
            parser.error("need 1 <= dmin <= dmax")
    elif args.command == "ci-check":
        if args.ell < 2:
            parser.error("ell must be >= 2 (ell = 1 is trivial)")
        if args.d < 1:
            parser.error("d must be >= 1")
    elif args.command == "identities":
        if args.max_size < 1:
            parser.error("max-size must be >= 1")


def main(argv=None, out=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    return args.func(args, argv, out)


if __name__ == "__main__":
    sys.exit(main())
