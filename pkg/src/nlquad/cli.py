"""Command line interface: ``nlq sweep|converge|nc-weights|deriv-check|moments``.

Exit codes: 0 success, 2 usage or configuration error, 3 I/O failure,
4 domain error in the numerical input.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import math
import sys

from .bench import (PRESETS, get_preset, get_rule, sweep_records,
                    write_sweep_csv, converge_columns, write_converge_csv)
from .composite import SampledSeries, moment_series
from .construct import diagonal_derivative_report
from .errors import (ConfigError, DomainError, GridError, ParseError,
                     QuadratureError)
from .newtoncotes import solve_alpha

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_DOMAIN = 4


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _fractions_line(values) -> str:
    denom = math.lcm(*(f.denominator for f in values))
    return " ".join(f"{f.numerator * (denom // f.denominator)}/{denom}"
                    for f in values)


def cmd_sweep(args) -> int:
    preset = get_preset(args.integrand)
    rule = get_rule(args.rule)
    baseline = get_rule(args.baseline)
    records = sweep_records(preset, rule, baseline,
                            args.h_min, args.h_max, args.points)
    with _output(args.out) as fh:
        write_sweep_csv(records, fh)
    return EXIT_OK


def cmd_converge(args) -> int:
    preset = get_preset(args.integrand)
    rule_ids = args.rules.split(",")
    rules = [get_rule(rid) for rid in rule_ids]
    panel_counts = [int(p) for p in args.panels.split(",") if p]
    rows = converge_columns(preset, rules, panel_counts)
    with _output(args.out) as fh:
        write_converge_csv(rows, rule_ids, fh)
    return EXIT_OK


def cmd_nc_weights(args) -> int:
    sol = solve_alpha(args.n)
    with _output(args.out) as fh:
        fh.write("alpha: " + _fractions_line(sol.alphas) + "\n")
        fh.write("weights: " + _fractions_line(sol.weights) + "\n")
    return EXIT_OK


def cmd_deriv_check(args) -> int:
    rule = get_rule(args.rule)
    try:
        report = diagonal_derivative_report(rule, args.value, args.fd_step)
    except DomainError as exc:
        # an inadmissible probe value is a bad argument, not runtime data
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    with _output(args.out) as fh:
        fh.write(f"rule {rule.name} at c={args.value}\n")
        fh.write(f"q = {report.q_value!r} (expected c)        "
                 f"[{'ok' if report.value_ok else 'FAIL'}]\n")
        fh.write(f"q10 = {report.q10!r}, q01 = {report.q01!r} (expected 0.5) "
                 f"[{'ok' if report.first_order_ok else 'FAIL'}]\n")
        fh.write(f"q20 = {report.q20!r}, q11 = {report.q11!r}, "
                 f"q02 = {report.q02!r} (expected q20 = -q11 = q02) "
                 f"[{'ok' if report.second_order_ok else 'FAIL'}]\n")
        if report.third_order_ok is not None:
            fh.write(f"q30 = {report.q30!r}, q12 = {report.q12!r} "
                     f"(expected q30 = -3 q12) "
                     f"[{'ok' if report.third_order_ok else 'FAIL'}]\n")
        fh.write("PASS\n" if report.passed else "FAIL\n")
    return EXIT_OK if report.passed else 1


def _read_series_csv(path) -> SampledSeries:
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise exc
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty input file", line=1) from None
        if [c.strip() for c in header] != ["x", "f"]:
            raise ParseError(f"expected header 'x,f', got {','.join(header)}",
                             line=1)
        xs, fs = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise ParseError(f"expected 2 columns, got {len(row)}",
                                 line=lineno)
            try:
                xs.append(float(row[0]))
                fs.append(float(row[1]))
            except ValueError:
                raise ParseError(f"non-numeric value in line {lineno}",
                                 line=lineno) from None
    if len(xs) < 2:
        raise ParseError("need at least two samples", line=len(xs) + 1)
    h = xs[1] - xs[0]
    if not h > 0:
        raise GridError(f"abscissae must increase, got spacing {h}")
    scale = max(abs(xs[0]), abs(xs[-1]), abs(h))
    for i in range(1, len(xs)):
        if abs(xs[i] - xs[i - 1] - h) > 1e-9 * scale:
            raise GridError(
                f"nonuniform spacing at row {i + 1}: "
                f"{xs[i] - xs[i - 1]} vs {h}")
    return SampledSeries(a=xs[0], h=h, values=fs)


def cmd_moments(args) -> int:
    series = _read_series_csv(args.input)
    for i, v in enumerate(series.values):
        if v <= 0:
            raise DomainError(
                f"nonpositive sample f={v} in row {i + 2} of {args.input}")
    result = moment_series(series, args.n, with_tail=args.tail)
    with _output(args.out) as fh:
        fh.write(f"{result.value!r}\n")
        fh.write(f"panels: {result.panels}\n")
        if result.tail is not None:
            fh.write(f"tail: {result.tail!r}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlq", description="Nonlinear quadrature benchmark CLI")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="single-step error sweep on a geometric h grid")
    p.add_argument("--integrand", required=True, choices=sorted(PRESETS))
    p.add_argument("--rule", required=True)
    p.add_argument("--baseline", required=True)
    p.add_argument("--h-min", type=float, default=1e-6)
    p.add_argument("--h-max", type=float, default=0.5)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("converge", help="multistep convergence table")
    p.add_argument("--integrand", required=True, choices=sorted(PRESETS))
    p.add_argument("--rules", required=True,
                   help="comma-separated rule ids, e.g. exp-q1,trapezoid")
    p.add_argument("--panels", required=True,
                   help="comma-separated panel counts, e.g. 1,2,4,8")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("nc-weights", help="derived Newton-Cotes coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_nc_weights)

    p = sub.add_parser("deriv-check", help="diagonal derivative relations of a rule")
    p.add_argument("--rule", required=True)
    p.add_argument("--value", type=float, required=True)
    p.add_argument("--fd-step", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_deriv_check)

    p = sub.add_parser("moments", help="moment integral of a sampled series")
    p.add_argument("--input", required=True, help="CSV with header x,f")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tail", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_moments)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParseError, GridError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
