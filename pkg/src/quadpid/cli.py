"""Command-line front end.

Exit codes: 0 success / certified, 1 mathematically negative answer
(Inconclusive, no square root, no element found), 2 misuse or contract error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from pathlib import Path

from .certify import certificate_from_table, certify_range
from .dhstep import dh_step
from .errors import NEGATIVE_OUTCOMES, QuadError
from .euclid import BezoutResult, dh_gcd, prime_element, reduce_unit
from .normsolve import PrimeTable, build_prime_table
from .quadcore import field_params, parse
from .zarith import cfrac_sqrt, fundamental_unit, sqrt_mod

# Elements such as "-19+4*sqrt(14)" would otherwise be taken for options.
_NEG_ELEMENT = re.compile(r"^-[\d(].*[^\d]")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--reduce-unit", action="store_true",
                   help="replace the gcd by the unit multiple with smallest |u|+|v|")
    p.add_argument("--table-cache", type=Path, metavar="PATH",
                   help="load the prime table from PATH, building and saving it if absent")
    p.add_argument("--search-cap", type=int, metavar="N",
                   help="cap on the norm-equation search range")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="quadpid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("norm", parents=[common], help="norm of an element")
    s.add_argument("-m", type=int, required=True)
    s.add_argument("elem")

    for name, text in (("gcd", "Bezout gcd of two elements"),
                       ("step", "one Dedekind-Hasse reduction step")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("-m", type=int, required=True)
        s.add_argument("a")
        s.add_argument("b")

    s = sub.add_parser("prime-elem", parents=[common], help="element of norm +-p")
    s.add_argument("-m", type=int, required=True)
    s.add_argument("-p", type=int, required=True)

    s = sub.add_parser("certify", parents=[common], help="PID certificate")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("-m", type=int)
    g.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"))
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("table", parents=[common], help="prime table")
    s.add_argument("-m", type=int, required=True)
    s.add_argument("--save", type=Path, metavar="PATH")

    s = sub.add_parser("cf", parents=[common], help="continued fraction and unit")
    s.add_argument("-m", type=int, required=True)

    s = sub.add_parser("sqrtmod", parents=[common], help="square root modulo a prime")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-p", type=int, required=True)
    return parser


def _table(args, field) -> PrimeTable:
    path = args.table_cache
    if path is not None and path.exists():
        table = PrimeTable.from_json(path.read_text())
        if table.field.m != field.m:
            raise QuadError(f"{path} holds the table for m={table.field.m}, not m={field.m}")
        return table
    table = build_prime_table(field, args.search_cap)
    if path is not None:
        path.write_text(table.to_json())
    return table


def _emit(args, doc: dict, lines: list[str], out):
    if args.json:
        print(json.dumps(doc, indent=2), file=out)
    else:
        for line in lines:
            print(line, file=out)


def _cmd_norm(args, out):
    f = field_params(args.m)
    x = parse(args.elem, f)
    n = x.norm()
    _emit(args, {"m": f.m, "element": str(x), "norm": n}, [f"N({x}) = {n}"], out)
    return 0


def _bezout_doc(f, res: BezoutResult) -> dict:
    return {
        "m": f.m,
        "gcd": str(res.gcd),
        "lambda": str(res.lam),
        "mu": str(res.mu),
        "norm": res.gcd.norm(),
        "chain_length": res.chain_length,
        "trace": [list(t) for t in res.traces],
    }


def _cmd_gcd(args, out):
    f = field_params(args.m)
    a, b = parse(args.a, f), parse(args.b, f)
    res = dh_gcd(a, b, _table(args, f))
    if args.reduce_unit and f.m > 0 and not res.gcd.is_zero():
        g = reduce_unit(res.gcd, fundamental_unit(f.m).unit)
        w = g / res.gcd
        res = BezoutResult(g, res.lam * w, res.mu * w, res.chain_length, res.traces)
    lines = [
        f"gcd = {res.gcd}",
        f"lambda = {res.lam}",
        f"mu = {res.mu}",
        f"chain = {res.chain_length} step(s): "
        + "; ".join(",".join(t) for t in res.traces),
    ]
    _emit(args, _bezout_doc(f, res), lines, out)
    return 0


def _cmd_step(args, out):
    f = field_params(args.m)
    a, b = parse(args.a, f), parse(args.b, f)
    r = dh_step(a, b, _table(args, f))
    doc = {"m": f.m, "gamma": str(r.gamma), "delta": str(r.delta),
           "rho": str(r.rho), "norm_rho": r.rho.norm(), "trace": list(r.trace)}
    lines = [f"gamma = {r.gamma}", f"delta = {r.delta}", f"rho = {r.rho}",
             f"N(rho) = {r.rho.norm()}", "trace = " + ",".join(r.trace)]
    _emit(args, doc, lines, out)
    return 0


def _cmd_prime_elem(args, out):
    f = field_params(args.m)
    pi = prime_element(f, args.p, _table(args, f))
    if args.reduce_unit and f.m > 0:
        pi = reduce_unit(pi, fundamental_unit(f.m).unit)
    _emit(args, {"m": f.m, "p": args.p, "pi": str(pi), "norm": pi.norm()},
          [f"pi = {pi}", f"N(pi) = {pi.norm()}"], out)
    return 0


def _cmd_certify(args, out):
    if args.range is not None:
        lo, hi = args.range
        certs = certify_range(lo, hi, jobs=args.jobs, cap=args.search_cap)
        _emit(args, {"certificates": [c.to_dict() for c in certs]},
              [f"m={c.field.m}: {c.summary()}" for c in certs], out)
        return 0
    f = field_params(args.m)
    cert = certificate_from_table(_table(args, f))
    _emit(args, cert.to_dict(), [cert.summary()], out)
    return 0 if cert.certified else 1


def _cmd_table(args, out):
    f = field_params(args.m)
    table = _table(args, f)
    if args.save is not None:
        args.save.write_text(table.to_json())
    lines = [f"m = {f.m}, delta = {f.delta}",
             "required = " + ", ".join(map(str, table.required))]
    for p in table.required:
        pi = table.get(p)
        lines.append(f"  {p} -> {pi if pi is not None else 'none'}")
    _emit(args, table.to_dict(), lines, out)
    return 0 if table.complete else 1


def _cmd_cf(args, out):
    cf = cfrac_sqrt(args.m)
    fu = fundamental_unit(args.m)
    _emit(args,
          {"m": args.m, "cf": str(cf), "a0": cf.a0, "period": list(cf.period),
           "unit": str(fu.unit), "norm_sign": fu.norm_sign},
          [f"sqrt({args.m}) = {cf}", f"unit = {fu.unit} (norm {fu.norm_sign:+d})"],
          out)
    return 0


def _cmd_sqrtmod(args, out):
    x = sqrt_mod(args.n, args.p)
    _emit(args, {"n": args.n, "p": args.p, "root": x},
          [str(x) if x is not None else "none"], out)
    return 0 if x is not None else 1


_COMMANDS = {
    "norm": _cmd_norm,
    "gcd": _cmd_gcd,
    "step": _cmd_step,
    "prime-elem": _cmd_prime_elem,
    "certify": _cmd_certify,
    "table": _cmd_table,
    "cf": _cmd_cf,
    "sqrtmod": _cmd_sqrtmod,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [" " + a if _NEG_ELEMENT.match(a) else a for a in argv]
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return _COMMANDS[args.cmd](args, out)
    except NEGATIVE_OUTCOMES as exc:
        print(f"quadpid: {exc}", file=err)
        return 1
    except (QuadError, ValueError, OSError) as exc:
        print(f"quadpid: {type(exc).__name__}: {exc}", file=err)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
