"""Command-line entry point.

Exit codes: 0 success / verified, 1 verification failure, 2 usage or parse
error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from ..center import reduce
from ..cocycle import DerivationBasisElement, psi_basis
from ..current import snf_general, snf_sector0
from ..errors import UceLabError
from ..palindromic import symmetry_report
from ..series import DEFAULT_ORDER
from ..superelliptic import Curve, curve_new, palindromic_family, quadratic, quartic
from .output import FORMATS, OutputDocument
from .parser import elaborate, parse_expr, parse_param
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _curve_from_args(choice: Sequence[str] | None) -> Curve:
    if not choice:
        return quadratic()
    name, *rest = choice
    if name == "quadratic" and not rest:
        return quadratic()
    if name == "quartic" and not rest:
        return quartic()
    if name == "coeffs" and rest:
        text = " ".join(rest)
        coeffs = [parse_param(part) for part in text.split(",")]
        return curve_new(coeffs, name="custom")
    raise _UsageError("--curve expects quadratic, quartic or 'coeffs p0,p1,...,pn'")


def _add_curve(p: argparse.ArgumentParser) -> None:
    p.add_argument("--curve", nargs="+", metavar="CURVE",
                   help="quadratic (default), quartic, or coeffs followed by ascending p0,...,pn")


def _add_format(p: argparse.ArgumentParser, default: str = "markdown") -> None:
    p.add_argument("--format", choices=FORMATS, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ucelab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("reduce", help="normal form of an expression in A/∂A")
    _add_curve(p)
    p.add_argument("--expr", required=True)
    _add_format(p)

    p = sub.add_parser("psi", help="cocycle on a pair of basis derivations")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--kind", choices=("ef", "fe", "ee", "ff"), default="ef")
    _add_curve(p)
    _add_format(p)

    p = sub.add_parser("psi-table", help="table of ψ(e_r, f_s)")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--smax", type=int, required=True)
    p.add_argument("--smin", type=int, default=None, help="defaults to -smax")
    p.add_argument("--kind", choices=("ef", "fe", "ee", "ff"), default="ef")
    _add_curve(p)
    _add_format(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)

    p = sub.add_parser("snf", help="sector polynomial family P^(l,j)_k(c; m, r)")
    for flag in ("--l", "--j", "--k", "--m", "--r"):
        p.add_argument(flag, type=int, required=True)

    p = sub.add_parser("report", help="exploratory reports")
    p.add_argument("topic", choices=("palindromic",))
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--output", help="write the JSON report to this file")
    return parser


def _kinds(kind: str) -> tuple[str, str]:
    return ("E" if kind[0] == "e" else "F", "E" if kind[1] == "e" else "F")


def _cmd_reduce(args, out) -> int:
    curve = _curve_from_args(args.curve)
    element = elaborate(parse_expr(args.expr), curve)
    doc = OutputDocument(curve.degree, ["expr"])
    doc.add({"expr": args.expr}, reduce(curve, element))
    out.write(doc.render(args.format))
    return EXIT_OK


def _cmd_psi(args, out) -> int:
    curve = _curve_from_args(args.curve)
    kx, ky = _kinds(args.kind)
    value = psi_basis(curve, DerivationBasisElement(kx, args.r), DerivationBasisElement(ky, args.s))
    doc = OutputDocument(curve.degree, ["X", "Y"])
    doc.add({"X": f"{kx.lower()}_{args.r}", "Y": f"{ky.lower()}_{args.s}"}, value)
    out.write(doc.render(args.format))
    return EXIT_OK


def psi_table(curve: Curve, rmax: int, smin: int, smax: int, kind: str = "ef") -> OutputDocument:
    kx, ky = _kinds(kind)
    doc = OutputDocument(curve.degree, ["r", "s", "n"], title=f"psi({kx.lower()}_r, {ky.lower()}_s)")
    for r in range(-rmax, rmax + 1):
        for s in range(smin, smax + 1):
            value = psi_basis(curve, DerivationBasisElement(kx, r), DerivationBasisElement(ky, s))
            doc.add({"r": r, "s": s, "n": r + s}, value)
    return doc


def _cmd_psi_table(args, out) -> int:
    if args.rmax < 0 or args.smax < 0:
        raise _UsageError("--rmax and --smax must be non-negative")
    smin = -args.smax if args.smin is None else args.smin
    doc = psi_table(_curve_from_args(args.curve), args.rmax, smin, args.smax, args.kind)
    out.write(doc.render(args.format))
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    status = EXIT_OK
    for name in names:
        res = run_suite(name, args.max_n, args.order)
        for line in res.info or ():
            out.write(f"  {line}\n")
        if res.ok:
            out.write(f"PASS {name}: {res.checks} identities\n")
        else:
            out.write(f"FAIL {name} after {res.checks} checks: {res.failure}\n")
            status = EXIT_FAIL
    return status


def _cmd_snf(args, out) -> int:
    if args.l == 0:
        value = snf_sector0(args.j, args.k)
    else:
        value = snf_general(args.l, args.j, args.k, args.m, args.r)
    out.write(f"P^({args.l},{args.j})_{args.k}(c; {args.m}, {args.r}) = {value}\n")
    return EXIT_OK


def _cmd_report(args, out) -> int:
    report = symmetry_report(palindromic_family(args.degree))
    text = json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"wrote {args.output}: {report.summary}\n")
    else:
        out.write(text)
    return EXIT_OK


_COMMANDS = {
    "reduce": _cmd_reduce,
    "psi": _cmd_psi,
    "psi-table": _cmd_psi_table,
    "verify": _cmd_verify,
    "snf": _cmd_snf,
    "report": _cmd_report,
}


def run_command(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except UceLabError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
