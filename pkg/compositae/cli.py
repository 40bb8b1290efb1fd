import argparse
import logging
import os
import sys

from beartype import beartype
from beartype.typing import List, Optional, Sequence

from compositae import constants, funcexpr
from compositae.bellpoly import bell_generic, chain_derivatives
from compositae.composita import Composita, close, from_series, to_bell
from compositae.conformance import SUITES, run_suite
from compositae.errors import (
    CompositaError,
    DomainError,
    EngineError,
    ExprError,
    NonInvertibleError,
    OracleMismatchError,
)
from compositae.mpoly import MPoly
from compositae.protocol import FORMATS, Document, Modes, OutputRecord
from compositae.ring import POLYNOMIAL
from compositae.series import Series
from compositae.utils import format_value, parse_point

GENERIC = "generic"


class UsageError(Exception):
    pass


def _order(n: int) -> int:
    if n < 1:
        raise UsageError(f"order must be at least 1, got {n}")
    return n


def _point(text: str):
    try:
        return parse_point(text)
    except ValueError as e:
        raise UsageError(str(e))


def _generic_composita(order: int) -> Composita:
    return from_series(Series([MPoly.zero()] + [MPoly.var(i) for i in range(1, order + 1)], POLYNOMIAL))


def _check(e, x, c: Composita):
    oracle = funcexpr.oracle_composita(e, x, c.order)
    if not close(c, oracle, constants.NUMERIC_DIFF_REL_TOL):
        raise OracleMismatchError(f"{funcexpr.print_expr(e)} at {format_value(x)} disagrees with its Taylor oracle")
    logging.info(f"oracle check passed for {funcexpr.print_expr(e)}")


def _triangle(expr: str, order: int, at: str, symbolic: bool, check: bool, bell: bool) -> Document:
    order = _order(order)
    mode = Modes.BELL if bell else Modes.COMPOSITA
    doc = Document(mode=mode, expr=expr, order=order)
    if symbolic:
        if expr != GENERIC:
            raise UsageError(f"--symbolic needs --expr {GENERIC}")
        if bell:
            rows = bell_generic(order).rows()
        else:
            rows = _generic_composita(order).rows()
    else:
        if expr == GENERIC:
            raise UsageError(f"--expr {GENERIC} needs --symbolic")
        e = funcexpr.parse(expr)
        x = _point(at)
        doc.expr = funcexpr.print_expr(e)
        doc.at = at
        c = funcexpr.build(e, x, order)
        if check:
            _check(e, x, c)
        if bell:
            rows = [[to_bell(c, n, k) for k in range(1, n + 1)] for n in range(1, order + 1)]
        else:
            rows = c.rows()
    for n, row in enumerate(rows, start=1):
        for k, v in enumerate(row, start=1):
            doc.records.append(OutputRecord(mode, n, k, format_value(v)))
    return doc


@beartype
def cmd_bell(expr: str, order: int, at: str = "0", symbolic: bool = False, check: bool = False) -> Document:
    return _triangle(expr, order, at, symbolic, check, bell=True)


@beartype
def cmd_composita(expr: str, order: int, at: str = "0", symbolic: bool = False, check: bool = False) -> Document:
    return _triangle(expr, order, at, symbolic, check, bell=False)


@beartype
def cmd_derivative(
    outer: str,
    order: int,
    at: str = "0",
    inner: Optional[str] = None,
    inner_derivs: Optional[Sequence[str]] = None,
    inner_value: Optional[str] = None,
) -> Document:
    """n-th derivative of outer(inner(x)) by Faa di Bruno."""
    order = _order(order)
    if order > constants.MAX_DERIVATIVE_ORDER:
        raise UsageError(f"order {order} exceeds the limit of {constants.MAX_DERIVATIVE_ORDER}")
    g = funcexpr.parse(outer)
    if inner is not None:
        if inner_derivs is not None or inner_value is not None:
            raise UsageError("--inner cannot be combined with --inner-derivs or --inner-value")
        f = funcexpr.parse(inner)
        x = _point(at)
        y_derivs = funcexpr.derivatives(f, x, order)
        y_value = funcexpr.evaluate(f, x)
        expr = f"comp({funcexpr.print_expr(g)}, {funcexpr.print_expr(f)})"
    else:
        if inner_derivs is None or inner_value is None:
            raise UsageError("give --inner, or both --inner-derivs and --inner-value")
        if len(inner_derivs) < order:
            raise UsageError(f"need {order} inner derivatives, got {len(inner_derivs)}")
        y_derivs = [_point(v) for v in inner_derivs[:order]]
        y_value = _point(inner_value)
        expr = funcexpr.print_expr(g)
    g_derivs = funcexpr.derivatives(g, y_value, order)
    values = chain_derivatives(g_derivs, y_derivs)
    doc = Document(mode=Modes.DERIVATIVE, expr=expr, order=order, at=at if inner is not None else None)
    doc.records.append(OutputRecord(Modes.DERIVATIVE, order, None, format_value(values[order - 1])))
    return doc


@beartype
def cmd_verify(suite: str, seed: int = 0, csv_path: Optional[str] = None) -> Document:
    if suite not in SUITES:
        raise UsageError(f"unknown suite: {suite!r}")
    report = run_suite(suite, seed)
    doc = Document(mode=Modes.VERIFY, records=[], checks=report.records, passed=report.passed, seed=seed)
    if csv_path:
        with open(csv_path, "w", newline="") as f:
            f.write(doc.render_csv())
    return doc


def _common_options(parser: argparse.ArgumentParser, suppress: bool):
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=argparse.SUPPRESS if suppress else None,
        help=f"output format (default: ${constants.FORMAT_ENV_VAR} or {constants.DEFAULT_FORMAT})",
    )
    parser.add_argument(
        "--log-level",
        default=argparse.SUPPRESS if suppress else None,
        help=f"logging level (default: ${constants.LOG_LEVEL_ENV_VAR} or {constants.DEFAULT_LOG_LEVEL})",
    )


def _triangle_options(p: argparse.ArgumentParser):
    p.add_argument("--expr", required=True, help='function expression, e.g. "comp(recip, ln)", or "generic"')
    p.add_argument("--n", type=int, default=constants.DEFAULT_ORDER, dest="order", help="triangle order")
    p.add_argument("--at", default="0", help='evaluation point: "3", "3/2", "0.7" or "pi/3"')
    p.add_argument("--symbolic", action="store_true", help="symbolic entries in y1..yN (needs --expr generic)")
    p.add_argument("--check", action="store_true", help="compare against the Taylor oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compositae", description="Compositae of generating functions and partial Bell polynomials."
    )
    _common_options(parser, suppress=False)
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("bell", help="partial Bell polynomials B(n, k)")
    _triangle_options(p)
    _common_options(p, suppress=True)

    p = commands.add_parser("composita", help="composita triangle Y(n, k)")
    _triangle_options(p)
    _common_options(p, suppress=True)

    p = commands.add_parser("derivative", help="n-th derivative of a composite function")
    p.add_argument("--outer", required=True, help="outer function expression")
    p.add_argument("--inner", help="inner function expression")
    p.add_argument("--inner-derivs", help="comma-separated y'(x), y''(x), ...")
    p.add_argument("--inner-value", help="y(x)")
    p.add_argument("--n", type=int, required=True, dest="order", help="derivative order")
    p.add_argument("--at", default="0", help="evaluation point")
    _common_options(p, suppress=True)

    p = commands.add_parser("verify", help="run the conformance suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", dest="csv_path", help="also write the report as CSV to this path")
    _common_options(p, suppress=True)
    return parser


def _configure_logging(level: Optional[str]):
    level = level or os.getenv(constants.LOG_LEVEL_ENV_VAR) or constants.DEFAULT_LOG_LEVEL
    try:
        logging.basicConfig(level=level.upper(), format="%(levelname)s %(message)s")
    except ValueError:
        raise UsageError(f"unknown log level: {level}")


def _output_format(fmt: Optional[str]) -> str:
    fmt = fmt or os.getenv(constants.FORMAT_ENV_VAR) or constants.DEFAULT_FORMAT
    if fmt not in FORMATS:
        raise UsageError(f"unknown output format: {fmt}")
    return fmt


def _dispatch(args) -> Document:
    if args.command == "bell":
        return cmd_bell(args.expr, args.order, args.at, args.symbolic, args.check)
    if args.command == "composita":
        return cmd_composita(args.expr, args.order, args.at, args.symbolic, args.check)
    if args.command == "derivative":
        derivs = args.inner_derivs.split(",") if args.inner_derivs else None
        return cmd_derivative(args.outer, args.order, args.at, args.inner, derivs, args.inner_value)
    return cmd_verify(args.suite, args.seed, args.csv_path)


def _fail(prefix: str, e: Exception, code: int) -> int:
    print(f"{prefix}: {e}", file=sys.stderr)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else constants.EXIT_USAGE
    try:
        _configure_logging(args.log_level)
        fmt = _output_format(args.format)
        doc = _dispatch(args)
    except (UsageError, ExprError) as e:
        return _fail("parse error", e, constants.EXIT_USAGE)
    except (DomainError, NonInvertibleError) as e:
        return _fail("domain error", e, constants.EXIT_FAILURE)
    except EngineError as e:
        return _fail("oracle mismatch", e, constants.EXIT_FAILURE)
    except CompositaError as e:
        return _fail("error", e, constants.EXIT_FAILURE)
    sys.stdout.write(doc.render(fmt))
    if doc.mode == Modes.VERIFY and not doc.passed:
        failures = sum(1 for c in doc.checks if c.status == "fail")
        print(f"oracle mismatch: {failures} conformance record(s) failed", file=sys.stderr)
        return constants.EXIT_FAILURE
    return constants.EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
