"""Command-line front end: counting, zeta functions, resolution, reports.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 unsupported input (e.g. a non-rational blowup center).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .charts import ChartCell, CharacterSpec, zeta_from_charts
from .context import PadicContext
from .counting import count_hensel, count_naive, poincare_truncation, verify_zeta_against_counts
from .divisibility import (
    check_divisibility,
    constructive_shift,
    min_shift,
    smallest_real_pole,
)
from .families import (
    real_pole_parts,
    theorem_membership,
    zeta_sum_squares,
    zeta_x2_ayl,
    zeta_xy_zi,
)
from .integrate2d import zeta_two_var
from .poly import parse_poly
from .resolve import NonRationalCenterError, resolve_germ, resolution_candidate_poles
from .zeta import ZetaRational, laurent_at, poincare_from_zeta


class UsageError(Exception):
    pass


class UnsupportedError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        if "/" in text:
            a, b = text.split("/")
            return Fraction(int(a), int(b))
        return Fraction(int(text))
    except ValueError as e:
        raise UsageError(f"bad fraction {text!r}") from e


def _load_zeta(path: str) -> ZetaRational:
    with open(path) as fh:
        return ZetaRational.from_json(json.load(fh))


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _fmt_frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def cmd_count(args) -> int:
    f = parse_poly(args.f)
    ctx = PadicContext(args.p, f.nvars)
    counter = count_naive if args.mode == "naive" else count_hensel
    m = counter(f, args.p, args.i)
    _emit(args, {"p": args.p, "i": args.i, "count": m},
          f"M_{args.i} = {m} solutions of {f} = 0 mod {args.p}^{args.i}")
    return 0


def cmd_poincare(args) -> int:
    f = parse_poly(args.f)
    PadicContext(args.p, f.nvars)
    series = poincare_truncation(f, args.p, args.k)
    counts = series.counts()
    _emit(args, series.to_json(),
          "\n".join(f"M_{i} = {m}" for i, m in enumerate(counts)))
    return 0


def cmd_zeta(args) -> int:
    if bool(args.family) == bool(args.charts):
        raise UsageError("give exactly one of --family or --charts")
    p = args.p
    if args.charts:
        with open(args.charts) as fh:
            cells = [ChartCell.from_json(d) for d in json.load(fh)]
        ctx = PadicContext(p, cells[0].n)
        z = zeta_from_charts(cells, ctx)
    elif args.family == "sum-squares":
        z, _ = zeta_sum_squares(PadicContext(p, 2))
    elif args.family == "x2ayl":
        if args.a is None or args.l is None:
            raise UsageError("x2ayl needs --a and --l")
        _, _, z = zeta_x2_ayl(PadicContext(p, 2), args.a, args.l)
    elif args.family == "xyzi":
        if args.i is None:
            raise UsageError("xyzi needs --i")
        z = zeta_xy_zi(PadicContext(p, 3), args.i)
    else:
        raise UsageError(f"unknown family {args.family!r}")
    _emit(args, z.to_json(), f"Z(t) = {z!r}")
    return 0


def cmd_resolve(args) -> int:
    f = parse_poly(args.f)
    tree = resolve_germ(f)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(tree.to_dot() + "\n")
    data = {
        "curves": [{"id": c.id, "N": c.N, "nu": c.nu} for c in tree.curves],
        "adjacency": sorted(sorted(e) for e in tree.adjacency),
        "strict_components": [
            {"attached_to": s.attached_to, "degree": s.degree}
            for s in tree.strict_components
        ],
    }
    lines = [f"E{c.id}: (N,nu) = ({c.N},{c.nu})" for c in tree.curves]
    lines += [f"edge E{a} -- E{b}" for a, b in data["adjacency"]]
    _emit(args, data, "\n".join(lines) or "already normal crossings")
    return 0


def cmd_laurent(args) -> int:
    z = _load_zeta(args.zeta)
    s0 = _fraction(args.s0)
    exp = laurent_at(z, s0, extra=max(args.m, 2))
    coeffs = {}
    text = [f"pole order {exp.pole_order} at s0 = {_fmt_frac(s0)}"]
    for k in range(exp.pole_order, -1, -1):
        b = exp.b(k)
        coeffs[f"b_-{k}" if k else "b_0"] = b.to_json()
        text.append(f"b_-{k} = {b!r}" if k else f"b_0 = {b!r}")
    _emit(args, {"s0": args.s0, "pole_order": exp.pole_order, "coefficients": coeffs},
          "\n".join(text))
    return 0


def cmd_poles(args) -> int:
    z = _load_zeta(args.zeta).reduced()
    chi = CharacterSpec(args.chi_order)
    cands = []
    for (N, nu), m in sorted(z.denominator.items()):
        if N % chi.order:
            continue
        cands.append({"N": N, "nu": nu, "real_part": _fmt_frac(Fraction(-nu, N)),
                      "real_pole": z.is_real_pole(Fraction(-nu, N))})
    _emit(args, {"candidates": cands},
          "\n".join(f"-{c['real_part'].lstrip('-')}: N={c['N']}, nu={c['nu']}, "
                    f"real pole: {c['real_pole']}" for c in cands) or "no candidates")
    return 0


def cmd_verify(args) -> int:
    f = parse_poly(args.f)
    z = _load_zeta(args.zeta)
    if z.p != args.p:
        raise UsageError("--p does not match the zeta file")
    ok, predicted, actual = verify_zeta_against_counts(z, f, args.k)
    data = {"ok": ok, "predicted": predicted, "actual": actual}
    if ok:
        _emit(args, data, f"OK: counts match up to p^{args.k}: {actual}")
        return 0
    first = next(i for i in range(len(actual)) if predicted[i] != actual[i])
    _emit(args, data,
          f"MISMATCH at i={first}: zeta predicts {predicted[first]}, "
          f"counting gives {actual[first]}")
    return 1


def cmd_divisibility(args) -> int:
    f = parse_poly(args.f)
    ctx = PadicContext(args.p, f.nvars)
    series = poincare_truncation(f, args.p, args.k)
    z = None
    if args.l is not None:
        l = _fraction(args.l)
    elif f.nvars == 2:
        z = zeta_two_var(f, ctx)
        l = smallest_real_pole(z)
    else:
        raise UsageError("--l is required unless f has exactly 2 variables")
    a_min = min_shift(series, l)
    report = check_divisibility(series, l, a_min)
    data = report.to_json()
    data["a_min_empirical"] = a_min
    if z is not None:
        a_con, _ = constructive_shift(z, f.nvars, l)
        data["a_min_constructive"] = a_con
    text = (f"l = {_fmt_frac(l)}, n = {f.nvars}, a_min = {a_min}, "
            f"checked i <= {args.k}: "
            + ("all divisibility bounds hold" if report.ok else "VIOLATIONS"))
    _emit(args, data, text)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="igusa-zeta",
                                 description="Exact p-adic zeta functions")
    ap.add_argument("--json", action="store_true", help="JSON output")
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("count")
    c.add_argument("-f", required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("-i", type=int, required=True)
    c.add_argument("--mode", choices=["naive", "hensel"], default="hensel")

    c = sub.add_parser("poincare")
    c.add_argument("-f", required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("-k", type=int, required=True)

    c = sub.add_parser("zeta")
    c.add_argument("--family", choices=["sum-squares", "x2ayl", "xyzi"])
    c.add_argument("--charts")
    c.add_argument("--a", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--i", type=int)
    c.add_argument("--p", type=int, required=True)

    c = sub.add_parser("resolve")
    c.add_argument("-f", required=True)
    c.add_argument("--dot")

    c = sub.add_parser("laurent")
    c.add_argument("--zeta", required=True)
    c.add_argument("--s0", required=True)
    c.add_argument("-m", type=int, default=2)

    c = sub.add_parser("poles")
    c.add_argument("--zeta", required=True)
    c.add_argument("--chi-order", type=int, default=1)

    c = sub.add_parser("verify")
    c.add_argument("-f", required=True)
    c.add_argument("--zeta", required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("-k", type=int, required=True)

    c = sub.add_parser("divisibility")
    c.add_argument("-f", required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("-k", type=int, required=True)
    c.add_argument("--l")
    return ap


COMMANDS = {
    "count": cmd_count,
    "poincare": cmd_poincare,
    "zeta": cmd_zeta,
    "resolve": cmd_resolve,
    "laurent": cmd_laurent,
    "poles": cmd_poles,
    "verify": cmd_verify,
    "divisibility": cmd_divisibility,
}


def run(argv) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return COMMANDS[args.cmd](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except NonRationalCenterError as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
