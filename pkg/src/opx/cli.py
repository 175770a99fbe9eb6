"""Command-line front end: ``opx <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
error.  Errors are written to stderr as a single JSON line.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import families as fm
from .exactnum import DomainError, ParamPoly, Surd, UsageError, parse_rational, scalar_to_str
from .favard import inverse_coeffs, moments
from .tridiag import EIGENVECTOR_LABEL, eigenvector_coeffs, matrix_entry

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

_SCALARS = (Fraction, int, Surd, ParamPoly)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (UsageError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _count(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="opx", description="Exact orthogonal-polynomial and lattice-path computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, family=True):
        if family:
            sp.add_argument("--family", required=True, help="e.g. laguerre:alpha=sym, su11+:k=1/2,c=0")
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("moments", help="moments mu_0..mu_n")
    common(sp)
    sp.add_argument("--n", type=_count, required=True)

    sp = sub.add_parser("entry", help="<e_{i+d}, T^m e_i>")
    common(sp)
    sp.add_argument("--m", type=_count, required=True)
    sp.add_argument("--i", type=_count, required=True)
    sp.add_argument("--d", type=_integer, default=0)

    sp = sub.add_parser("inverse", help="coefficients q[n][d] of x^n in the p_d basis")
    common(sp)
    sp.add_argument("--n", type=_count, required=True)
    sp.add_argument("--d", type=_count, default=None)

    sp = sub.add_parser("eigvec", help="formal eigenvector coefficients")
    common(sp)
    sp.add_argument("--z", type=_rational, required=True)
    sp.add_argument("--N", type=_count, required=True)

    sp = sub.add_parser("classify", help="identify p[k,c] as Laguerre / Meixner")
    common(sp)

    sp = sub.add_parser("verify", help="run the cross-check suites")
    common(sp, family=False)
    sp.add_argument(
        "--suite", choices=("all", "motzkin", "favard", "tridiag", "families", "perms"), default="all"
    )
    return p


# ---------------------------------------------------------------------------
# commands


def _flat(value):
    """Scalars become strings; containers are converted recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, _SCALARS):
        return scalar_to_str(value)
    if isinstance(value, dict):
        return {k: _flat(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_flat(v) for v in value]
    return value


def _cmd_moments(args, fam):
    if isinstance(fam, fm.SukumarHodges):
        return [fm.sh_entry(fam.alpha, n, 0, 0, fam.with_s) for n in range(args.n + 1)]
    return moments(fam.recurrence(), args.n)


def _cmd_entry(args, fam):
    if args.i + args.d < 0:
        raise DomainError("need i + d >= 0")
    if isinstance(fam, fm.SukumarHodges):
        return fm.sh_entry(fam.alpha, args.m, args.i + args.d, args.i, fam.with_s)
    return matrix_entry(fam.operator(), args.m, args.i, args.d)


def _cmd_inverse(args, fam):
    if isinstance(fam, fm.SukumarHodges):
        raise UsageError("inverse needs a single recurrence; sh splits into two chains")
    table = inverse_coeffs(fam.recurrence(), args.n)
    if args.d is None:
        return table
    if args.d > args.n:
        raise DomainError("need 0 <= d <= n")
    return table[args.n][args.d]


def _cmd_eigvec(args, fam):
    if isinstance(fam, fm.SukumarHodges):
        raise UsageError("eigvec needs a single tridiagonal operator; sh splits into two chains")
    p, h = eigenvector_coeffs(fam.operator(), args.z, args.N)
    return {"label": EIGENVECTOR_LABEL, "p": p, "h": h}


def _cmd_classify(args, fam):
    if not isinstance(fam, fm.Su11Plus):
        raise UsageError("classify takes an su11+ family, e.g. su11+:k=1,c=3/5")
    cls = fm.plmx_classify(fam.k, fam.c)
    return cls.to_json()


def _cmd_verify(args):
    from .verify import run_suite

    results = run_suite(args.suite)
    return [r.to_json() for r in results], all(r.passed for r in results)


_COMMANDS = {
    "moments": _cmd_moments,
    "entry": _cmd_entry,
    "inverse": _cmd_inverse,
    "eigvec": _cmd_eigvec,
    "classify": _cmd_classify,
}

_PARAM_KEYS = ("m", "i", "d", "n", "z", "N", "suite")


def _params(args) -> dict:
    out = {}
    for key in _PARAM_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            out[key] = scalar_to_str(v) if isinstance(v, Fraction) else v
    return out


# ---------------------------------------------------------------------------
# output


def _csv_rows(result):
    if isinstance(result, dict):
        for k, v in result.items():
            if isinstance(v, list):
                yield [k] + [json.dumps(x) if isinstance(x, (dict, list)) else x for x in v]
            elif isinstance(v, dict):
                yield [k, json.dumps(v)]
            else:
                yield [k, v]
    elif isinstance(result, list):
        for idx, v in enumerate(result):
            if isinstance(v, list):
                yield v
            elif isinstance(v, dict):
                yield list(v.values())
            else:
                yield [idx, v]
    else:
        yield [result]


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in _csv_rows(doc["result"]):
        writer.writerow(["" if x is None else x for x in row])
    return buf.getvalue().rstrip("\n")


def _error(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        status = EXIT_OK
        if args.command == "verify":
            result, ok = _cmd_verify(args)
            family = None
            status = EXIT_OK if ok else EXIT_VERIFY
        else:
            fam = fm.parse_family(args.family)
            family = args.family
            result = _flat(_COMMANDS[args.command](args, fam))
        doc = {"command": args.command, "family": family, "params": _params(args), "result": result}
        sys.stdout.write(render(doc, args.format) + "\n")
        if status == EXIT_VERIFY:
            failed = next(r for r in result if not r["passed"])
            _error("verification", f"{failed['name']}: {failed['detail']}", status)
        return status
    except UsageError as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    except DomainError as exc:
        return _error("domain", str(exc), EXIT_DOMAIN)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
