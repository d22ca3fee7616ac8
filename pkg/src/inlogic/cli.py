"""Command-line interface.

Exit codes::

    0   success (check holds / witness found)
    1   formula parse error
    2   unbound variable, unknown symbol, arity mismatch or open formula
    3   counterexample found / no witness found
    4   invalid system, interpretation or input file
    5   no activated output
    64  bad command-line usage

Results go to stdout and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

from . import pred, prop
from .checking import CheckReport
from .connectives import get_connectives
from .interval import NeutroTriple, triple_to_json
from .syntax import ParseError, tokenize
from .inls import (
    ConfigError,
    Crisp,
    NoActivatedOutputError,
    SetValued,
    SynthesisWeights,
    load_system,
    membership_from_spec,
    run,
)
from .inls.config import load_json

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SYMBOL = 2
EXIT_REFUTED = 3
EXIT_CONFIG = 4
EXIT_NO_OUTPUT = 5
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _non_negative(text: str) -> float:
    v = float(text)
    if not v >= 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # given once on the top-level parser with real defaults and again on every
    # subcommand with suppressed defaults, so the flags work in either position
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--eps", type=_non_negative, default=d(1e-9), help="designation tolerance (default 1e-9)")
    parser.add_argument("--samples", type=_positive_int, default=d(10_000), help="random interpretations per check (default 10000)")
    parser.add_argument("--seed", type=int, default=d(0), help="sampling seed (default 0)")
    parser.add_argument("--format", choices=("text", "json", "csv"), default=d("text"), help="output format")
    parser.add_argument(
        "--arithmetic", choices=("residual", "moore"), default=d("residual"),
        help="interval reading of -> and <-> (default residual)",
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)

    parser = _Parser(prog="inlogic", description="Interval neutrosophic logic toolkit.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula under an interpretation")
    p.add_argument("formula")
    p.add_argument("-i", "--interp", help="interpretation JSON file")
    p.add_argument("--fo", action="store_true", help="treat the formula as first-order")
    p.add_argument("-a", "--assign", action="append", default=[], metavar="VAR=ELEM", help="value of a free variable (first-order)")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="sampled semantic checks")
    p.add_argument("kind", choices=("taut", "equiv", "valid", "sat"))
    p.add_argument("formulas", nargs="+")
    p.add_argument("--domains", default="1,2,3", help="domain sizes for valid/sat (default 1,2,3)")
    p.set_defaults(handler=cmd_check)

    inls = sub.add_parser("inls", help="run interval neutrosophic rule systems")
    isub = inls.add_subparsers(dest="inls_command", required=True, parser_class=_Parser)
    engine_opts = argparse.ArgumentParser(add_help=False)
    engine_opts.add_argument("system", help="system JSON file")
    engine_opts.add_argument("--weights", help="synthesis weights a,b,c,d")
    engine_opts.add_argument("--grid", type=_positive_int, help="points per universe")

    p = isub.add_parser("run", parents=[common, engine_opts], help="crisp output for one input")
    p.add_argument("--input", nargs="+", default=[], metavar="X", help="one value or @set.json per input universe")
    p.add_argument("--trace", metavar="CSV", help="write per-grid-point stage arrays")
    p.add_argument("--sweep", metavar="LO:HI:N", help="sweep the first input and print CSV instead")
    p.set_defaults(handler=cmd_inls_run)

    p = isub.add_parser("sweep", parents=[common, engine_opts], help="output as a function of the first input")
    p.add_argument("range", metavar="LO:HI:N")
    p.add_argument("--input", nargs="+", default=[], metavar="X", help="values for the remaining inputs")
    p.add_argument("-o", "--output", metavar="CSV", help="write to a file instead of stdout")
    p.set_defaults(handler=cmd_inls_sweep)
    return parser


# -- helpers ------------------------------------------------------------------


def _emit_triple(v: NeutroTriple, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(triple_to_json(v), sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t_lo", "t_hi", "i_lo", "i_hi", "f_lo", "f_hi"])
        w.writerow([f"{x:.12g}" for x in (v.t.lo, v.t.hi, v.i.lo, v.i.hi, v.f.lo, v.f.hi)])
        sys.stdout.write(buf.getvalue())
    else:
        print(v)


def _emit_report(report: CheckReport, fmt: str) -> None:
    if fmt == "json":
        print(report.to_json())
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "subject", "verdict", "samples_tried", "seed"])
        w.writerow([report.check, report.subject, report.verdict, report.samples_tried, report.seed])
        sys.stdout.write(buf.getvalue())
    else:
        print(report.render_text())


def _looks_first_order(text: str) -> bool:
    toks = tokenize(text)
    if any(t.kind in ("FORALL", "EXISTS") for t in toks):
        return True
    return any(a.kind == "IDENT" and b.kind == "LPAREN" for a, b in zip(toks, toks[1:]))


def _fo_interp(raw: Any) -> pred.FoInterpretation:
    try:
        return pred.FoInterpretation.from_json(raw)
    except (ValueError, TypeError, KeyError) as exc:
        raise ConfigError(f"invalid first-order interpretation: {exc}") from exc


# -- commands -----------------------------------------------------------------


def cmd_eval(args) -> int:
    conn = get_connectives(args.arithmetic)
    raw = load_json(args.interp) if args.interp else None
    first_order = args.fo or _looks_first_order(args.formula) or (isinstance(raw, dict) and "domain" in raw)
    if first_order:
        f = pred.parse_fo_formula(args.formula)
        m = _fo_interp(raw if raw is not None else {"domain": ["1"]})
        env = {}
        for item in args.assign:
            name, sep, elem = item.partition("=")
            if not sep:
                raise UsageError(f"--assign expects VAR=ELEM, got {item!r}")
            env[name] = elem
        try:
            v = pred.eval_fo(f, m, env, conn)
        except (pred.ArityError, pred.OpenFormulaError):
            raise
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    else:
        if args.assign:
            raise UsageError("--assign applies to first-order formulas only")
        f = prop.parse_formula(args.formula)
        try:
            m = prop.interpretation_from_json(raw) if raw is not None else {}
        except ValueError as exc:
            raise ConfigError(f"invalid interpretation: {exc}") from exc
        v = prop.eval_prop(f, m, conn)
    _emit_triple(v, args.format)
    return EXIT_OK


def _domains(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"--domains expects comma-separated sizes, got {text!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise UsageError("domain sizes must be positive")
    return sizes


def cmd_check(args) -> int:
    want = 2 if args.kind == "equiv" else 1
    if len(args.formulas) != want:
        raise UsageError(f"check {args.kind} takes {want} formula{'s' if want > 1 else ''}")
    common = dict(n_samples=args.samples, seed=args.seed, eps=args.eps, connectives=args.arithmetic)
    if args.kind == "taut":
        report = prop.check_tautology(prop.parse_formula(args.formulas[0]), **common)
    elif args.kind == "equiv":
        p, q = (prop.parse_formula(t) for t in args.formulas)
        report = prop.check_equivalence(p, q, **common)
    else:
        f = pred.parse_fo_formula(args.formulas[0])
        check = pred.check_fo_valid if args.kind == "valid" else pred.check_fo_satisfiable
        report = check(f, domain_sizes=_domains(args.domains), **common)
    _emit_report(report, args.format)
    return EXIT_OK if report.ok else EXIT_REFUTED


def _load(args):
    weights = None
    if args.weights:
        try:
            weights = SynthesisWeights.parse(args.weights)
        except ValueError as exc:
            raise ConfigError(f"--weights: {exc}") from exc
    return load_system(args.system, n_points=args.grid, weights=weights)


def _input(system, k: int, text: str):
    grid = system.input_grids[k]
    if text.startswith("@"):
        spec = load_json(text[1:])
        return SetValued(membership_from_spec(grid, spec, where=text[1:]))
    try:
        value = float(text)
    except ValueError:
        raise ConfigError(f"input {k}: expected a number or @file, got {text!r}") from None
    try:
        grid.snap_index(value)
    except ValueError as exc:
        raise ConfigError(f"input {k}: {exc}") from exc
    return Crisp(value)


def _inputs(system, texts: Sequence[str], offset: int = 0) -> list:
    expected = system.n_inputs - offset
    if len(texts) != expected:
        raise ConfigError(f"the system takes {expected} input value{'s' if expected != 1 else ''} here, got {len(texts)}")
    return [_input(system, k + offset, t) for k, t in enumerate(texts)]


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        if len(parts) != 3:
            raise ValueError
    except (ValueError, IndexError):
        raise UsageError(f"expected LO:HI:N, got {text!r}") from None
    if n < 1:
        raise UsageError("sweep needs at least one point")
    return lo, hi, n


def _sweep_rows(system, rng: str, rest: Sequence[str]) -> tuple[list[tuple[float, float]], int]:
    lo, hi, n = _parse_range(rng)
    others = _inputs(system, rest, offset=1)
    grid = system.input_grids[0]
    rows, silent = [], 0
    for j in range(n):
        x = lo if n == 1 else lo + (hi - lo) * j / (n - 1)
        try:
            grid.snap_index(x)
        except ValueError as exc:
            raise ConfigError(f"sweep: {exc}") from exc
        try:
            out, _ = run(system, [Crisp(x), *others])
        except NoActivatedOutputError:
            out, silent = math.nan, silent + 1
        rows.append((x, out))
    return rows, silent


def _write_sweep(rows, stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["x", "output"])
    for x, out in rows:
        w.writerow([f"{x:.12g}", "nan" if math.isnan(out) else f"{out:.12g}"])


def cmd_inls_run(args) -> int:
    system = _load(args)
    if args.sweep:
        rows, silent = _sweep_rows(system, args.sweep, args.input)
        _write_sweep(rows, sys.stdout)
        if silent:
            print(f"note: {silent} sweep point(s) activated no output (written as nan)", file=sys.stderr)
        return EXIT_OK
    out, tr = run(system, _inputs(system, args.input))
    if args.trace:
        Path(args.trace).write_text(tr.to_csv(), encoding="utf-8")
    if args.format == "json":
        print(json.dumps(tr.summary(), sort_keys=True))
    else:
        print(f"{out:.12g}")
    return EXIT_OK


def cmd_inls_sweep(args) -> int:
    system = _load(args)
    rows, silent = _sweep_rows(system, args.range, args.input)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            _write_sweep(rows, fh)
    else:
        _write_sweep(rows, sys.stdout)
    if silent:
        print(f"note: {silent} sweep point(s) activated no output (written as nan)", file=sys.stderr)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"inlogic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (prop.UnboundVariableError, pred.UnknownSymbolError, pred.ArityError, pred.OpenFormulaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYMBOL
    except ConfigError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NoActivatedOutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_OUTPUT


if __name__ == "__main__":
    sys.exit(main())
