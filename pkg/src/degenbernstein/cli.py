"""Command-line front end.

    degenbernstein eval --n 3 --k 1 --x 1/2 --lambda 1/4
    degenbernstein table --kind bernstein --n 4 --x 1/3 --lambda 1/10
    degenbernstein series --kind stirling --k 2 --order 6
    degenbernstein verify --n-max 8 --format json
    degenbernstein plot-data --n 3 --lambda 1/10 --grid 11

Exit status: 0 on success, 1 on usage errors, 2 when a verify run reports
any FAIL.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import factorial

from . import __version__
from .algebra import LAM, X, BiPoly, TruncSeries, binomial_series, format_rational, parse_rational
from .bernoulli import bernoulli_series
from .bernstein import (
    basis_csv_rows,
    bernstein,
    write_basis_csv,
)
from .combinatorics import build_stirling_table, degen_falling_factorial, stirling2_series
from .errors import DegenError
from .verifier import FAIL, registered_ids, reports_to_json, verify, verify_each

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="degenbernstein", description="Exact degenerate Bernstein toolkit.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("csv", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--decimals", type=_nonneg, default=None,
                       help="with --format json, add half-even rounded decimal renderings")
        p.add_argument("--out", default="-", help="output path, '-' for stdout")

    p = sub.add_parser("eval", help="evaluate B_{k,n}(x|lambda)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--x", type=_rational, default=None, help="p/q; omit to keep x symbolic")
    p.add_argument("--lambda", dest="lam", type=_rational, default=None,
                   help="p/q; omit to keep lambda symbolic")
    common(p)

    p = sub.add_parser("table", help="tabulate a basis row, Stirling triangle or Bernoulli row")
    p.add_argument("--kind", choices=("bernstein", "stirling", "bernoulli"), default="bernstein")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, default=1, help="Bernoulli order")
    p.add_argument("--x", type=_rational, default=None)
    p.add_argument("--lambda", dest="lam", type=_rational, default=None)
    common(p)

    p = sub.add_parser("series", help="coefficients of a generating function in t")
    p.add_argument("--kind", choices=("binomial", "stirling", "bernoulli", "bernstein"),
                   default="binomial")
    p.add_argument("--order", type=_nonneg, default=8)
    p.add_argument("--k", type=_nonneg, default=1)
    p.add_argument("--x", type=_rational, default=None)
    p.add_argument("--lambda", dest="lam", type=_rational, default=None)
    common(p)

    p = sub.add_parser("verify", help="run the identity verifier")
    p.add_argument("--id", dest="identity", default=None, choices=registered_ids())
    p.add_argument("--interpretation", default=None)
    p.add_argument("--n-max", type=_nonneg, default=8)
    p.add_argument("--no-spot-check", action="store_true")
    common(p, formats=("json", "csv"))

    p = sub.add_parser("plot-data", help="sample the basis curves on a uniform grid of [0, 1]")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(0))
    p.add_argument("--grid", type=int, default=11)
    p.add_argument("--out", default="-")
    return parser


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _check_ranges(n, x, lam) -> None:
    if lam is not None and n >= 1 and abs(lam) * (n - 1) >= 1:
        _warn(f"|lambda|*(n-1) = {format_rational(abs(lam) * (n - 1))} >= 1; "
              "(1)_{n,lambda} changes sign and the basis is no longer a probability vector")
    if x is not None and not 0 <= x <= 1:
        _warn(f"x = {format_rational(x)} lies outside [0, 1]")


def _render(v) -> str:
    if isinstance(v, BiPoly):
        return v.to_text() if not v.is_constant() else format_rational(v.constant_value())
    return format_rational(Fraction(v))


def _decimal(v, places: int) -> str | None:
    if isinstance(v, BiPoly):
        if not v.is_constant():
            return None
        v = v.constant_value()
    v = Fraction(v)
    with localcontext() as ctx:
        ctx.prec = max(50, places + 30)
        d = Decimal(v.numerator) / Decimal(v.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def _records_out(records: list[dict], fields: list[str], value_keys: list[str], args, out) -> None:
    if args.format == "json":
        if args.decimals is not None:
            for rec in records:
                for key in value_keys:
                    rec[f"{key}_decimal"] = _decimal(rec[key], args.decimals)
        for rec in records:
            for key in value_keys:
                rec[key] = _render(rec[key])
        out.write(json.dumps(records, indent=2) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for rec in records:
        writer.writerow([_render(rec[f]) if f in value_keys else rec[f] for f in fields])


def _sym(v, symbol):
    return symbol if v is None else v


def _fmt_opt(v):
    return "symbolic" if v is None else format_rational(v)


def cmd_eval(args, out) -> int:
    _check_ranges(args.n, args.x, args.lam)
    value = bernstein(args.k, args.n, _sym(args.x, X), _sym(args.lam, LAM))
    if args.format == "json":
        rec = {"n": args.n, "k": args.k, "x": _fmt_opt(args.x), "lambda": _fmt_opt(args.lam),
               "value": value}
        if args.decimals is not None:
            rec["value_decimal"] = _decimal(value, args.decimals)
        rec["value"] = _render(value)
        out.write(json.dumps(rec, indent=2) + "\n")
    else:
        out.write(_render(value) + "\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    _check_ranges(args.n, args.x, args.lam)
    lam = _sym(args.lam, LAM)
    if args.kind == "bernstein":
        if args.x is None or args.lam is None:
            raise UsageError("table --kind bernstein needs both --x and --lambda")
        rows = basis_csv_rows(args.n, [args.x], args.lam)
        if args.format == "csv":
            write_basis_csv(rows, out)
            return EXIT_OK
        records = [{"k": k, "x": format_rational(x), "lambda": format_rational(l),
                    "value": Fraction(num, den)} for k, x, l, num, den in rows]
        _records_out(records, [], ["value"], args, out)
        return EXIT_OK
    if args.kind == "stirling":
        table = build_stirling_table(args.n, lam)
        records = [{"n": n, "k": k, "lambda": _fmt_opt(args.lam), "value": table[n, k]}
                   for n in range(args.n + 1) for k in range(n + 1)]
        _records_out(records, ["n", "k", "lambda", "value"], ["value"], args, out)
        return EXIT_OK
    series = bernoulli_series(args.k, args.n, _sym(args.x, X), lam)
    records = [{"n": m, "k": args.k, "x": _fmt_opt(args.x), "lambda": _fmt_opt(args.lam),
                "value": series.egf_coefficient(m)} for m in range(args.n + 1)]
    _records_out(records, ["n", "k", "x", "lambda", "value"], ["value"], args, out)
    return EXIT_OK


def _series_for(args) -> TruncSeries:
    x, lam, order, k = _sym(args.x, X), _sym(args.lam, LAM), args.order, args.k
    if args.kind == "binomial":
        return binomial_series(x, order, lam)
    if args.kind == "stirling":
        return stirling2_series(k, order, lam)
    if args.kind == "bernoulli":
        return bernoulli_series(k, order, x, lam)
    lead = degen_falling_factorial(x, k, lam) / factorial(k)
    return binomial_series(1 - x, order, lam).shift(k).scale(lead)


def cmd_series(args, out) -> int:
    series = _series_for(args)
    records = [{"m": m, "coefficient": series[m], "egf": series.egf_coefficient(m)}
               for m in range(series.order + 1)]
    _records_out(records, ["m", "coefficient", "egf"], ["coefficient", "egf"], args, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    spot = not args.no_spot_check
    if args.identity is None:
        if args.interpretation is not None:
            raise UsageError("--interpretation requires --id")
        reports = []
        for identity in registered_ids():
            reports.extend(verify_each(identity, args.n_max, spot))
    elif args.interpretation is None:
        reports = verify_each(args.identity, args.n_max, spot)
    else:
        reports = [verify(args.identity, args.n_max, args.interpretation, spot)]

    if args.format == "json":
        out.write(reports_to_json(reports))
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["id", "interpretation", "checked", "status", "params", "difference"])
        for r in reports:
            ff = r.first_failure
            writer.writerow([
                r.id, r.interpretation or "", r.checked, r.status,
                "" if ff is None else ";".join(f"{k}={v}" for k, v in ff.params.items()),
                "" if ff is None else ff.difference,
            ])
    return EXIT_FAILED if any(r.status == FAIL for r in reports) else EXIT_OK


def plot_data(n: int, lam, grid: int) -> list[tuple]:
    """CSV rows ``(k, x, lambda, num, den)`` sampling every basis curve at ``x = j/(grid-1)``."""
    if grid < 2:
        raise UsageError("--grid must be at least 2")
    xs = [Fraction(j, grid - 1) for j in range(grid)]
    return basis_csv_rows(n, xs, lam)


def cmd_plot_data(args, out) -> int:
    rows = plot_data(args.n, args.lam, args.grid)
    _check_ranges(args.n, None, args.lam)
    write_basis_csv(rows, out)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "table": cmd_table,
    "series": cmd_series,
    "verify": cmd_verify,
    "plot-data": cmd_plot_data,
}


def run(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        buf = io.StringIO()
        code = COMMANDS[args.command](args, buf)
    except (UsageError, DegenError) as exc:
        msg = str(exc).strip("'\"")
        print(f"degenbernstein: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    if args.out == "-":
        stdout.write(buf.getvalue())
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
