"""Command-line interface.

Every subcommand prints a JSON envelope on stdout (``exact`` and
``reproduce`` can print TSV instead). Exit codes:

0 ok, 2 input format or dimensions, 3 statistical domain, 4 capacity,
5 unknown table or figure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import __version__
from .errors import (
    CapacityError,
    DegenerateError,
    DimensionError,
    DomainError,
    NotAttainableError,
    SeriesError,
    TiesError,
    UnknownTargetError,
)
from .exact import critical_value, error_table_row, exact_null_distribution
from .power import METHODS, PowerRequest, min_blocks, power
from .ranks import BlockData, RankTable, run_tests
from .reproduce import run as run_recipe
from .shift import Family, ShiftModel
from .simulation import SimConfig, default_workers, simulate_rejections

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_CAPACITY = 4
EXIT_UNKNOWN = 5


class InputFormatError(ValueError):
    pass


# --- helpers ---------------------------------------------------------------


def _finite(obj: Any) -> Any:
    """JSON has no infinity: map non-finite floats to None."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {str(k): _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    if isinstance(obj, np.generic):
        return _finite(obj.item())
    return obj


def envelope(command: str, argv: Sequence[str], config: dict, results: Any, seed: int | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "argv": list(argv),
        "config": _finite(config),
        "results": _finite(results),
        "version": __version__,
        "seed": seed,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def _fmt(v: Any) -> str:
    if v is None:
        return "*"
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".6g")
    return str(v)


def to_tsv(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    for r in rows[1:]:
        cols += [c for c in r if c not in cols]
    buf = io.StringIO()
    buf.write("\t".join(cols) + "\n")
    for r in rows:
        buf.write("\t".join(_fmt(r.get(c)) for c in cols) + "\n")
    return buf.getvalue()


def read_matrix(path: str, header: bool = False, transpose: bool = False) -> np.ndarray:
    """Comma-separated numeric matrix; ``-`` reads stdin."""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if header and rows:
        rows = rows[1:]
    if not rows:
        raise InputFormatError("no data rows")
    width = len(rows[0])
    out = []
    for n, r in enumerate(rows, start=1):
        if len(r) != width:
            raise InputFormatError(f"row {n} has {len(r)} fields, expected {width}")
        try:
            out.append([float(c) for c in r])
        except ValueError:
            raise InputFormatError(f"row {n} has a non-numeric field: {r}") from None
    mat = np.array(out)
    return mat.T if transpose else mat


def parse_shifts(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputFormatError(f"shifts must be comma-separated numbers, got {text!r}") from None


def parse_scale(text: str) -> str | float:
    if text.lower() == "sd":
        return "sd"
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"scale must be a number or 'sd', got {text!r}") from None


def parse_floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_model(args) -> tuple[ShiftModel, float]:
    shifts = parse_shifts(args.shifts)
    if args.k is not None and args.k != len(shifts):
        raise InputFormatError(f"--k {args.k} does not match {len(shifts)} shifts")
    fam = Family.parse(args.dist)
    factor = fam.sd if args.scale == "sd" else float(args.scale)
    return ShiftModel(fam, [factor * t for t in shifts]), factor


def _methods(m: str) -> list[str]:
    return list(METHODS) if m.lower() == "all" else [m.upper()]


# --- subcommands -----------------------------------------------------------


def cmd_test(args, argv) -> dict:
    mat = read_matrix(args.input, header=args.header, transpose=args.transpose)
    data = RankTable(mat) if args.ranks else BlockData(mat)
    report = run_tests(data, alpha=args.alpha)
    config = {"input": args.input, "ranks": args.ranks, "header": args.header, "transpose": args.transpose, "alpha": args.alpha}
    return envelope("test", argv, config, report.to_dict())


def cmd_power(args, argv) -> dict:
    model, factor = build_model(args)
    results = []
    for m in _methods(args.method):
        p = power(PowerRequest(model, args.b, args.alpha, m))
        results.append({"method": m, "B": args.b, "power": p})
    config = {
        "dist": model.family.value,
        "shifts": parse_shifts(args.shifts),
        "scale": factor,
        "theta": list(model.theta),
        "K": model.K,
        "B": args.b,
        "alpha": args.alpha,
        "method": args.method,
    }
    return envelope("power", argv, config, results)


def cmd_samplesize(args, argv) -> dict:
    model, factor = build_model(args)
    results = []
    for m in _methods(args.method):
        res = min_blocks(model, args.alpha, args.target, m, args.b_min, args.b_max)
        results.append(res.to_dict())
    config = {
        "dist": model.family.value,
        "shifts": parse_shifts(args.shifts),
        "scale": factor,
        "theta": list(model.theta),
        "K": model.K,
        "target": args.target,
        "alpha": args.alpha,
        "method": args.method,
        "b_min": args.b_min,
        "b_max": args.b_max,
    }
    return envelope("samplesize", argv, config, results)


def cmd_exact(args, argv) -> dict:
    d = exact_null_distribution(args.k, args.b, max_k=args.max_k, max_b=args.max_b)
    crit = []
    for a in args.alpha_list:
        c_cons, p_cons = critical_value(d, a, "conservative")
        c_near, p_near = critical_value(d, a, "nearest")
        crit.append({"alpha": a, "conservative": {"c": c_cons, "attained": p_cons}, "nearest": {"c": c_near, "attained": p_near}})
    lo, hi = args.level_range
    rows = []
    for t in d.support():
        level = d.tail_exact(t, inclusive=True)
        if lo <= level <= hi:
            rows.append(error_table_row(d, t).to_dict())
    for c in args.c_list or []:
        rows.append(error_table_row(d, c).to_dict())
    pmf = [
        {"T": float(t), "T_exact": str(t), "prob": float(p), "prob_exact": str(p)}
        for t, p in d.pmf().items()
    ]
    results = {
        "K": d.K,
        "B": d.B,
        "total": d.total,
        "support_size": len(d.counts),
        "mean": str(d.mean()),
        "variance": str(d.variance()),
        "pmf": pmf,
        "critical_values": crit,
        "error_rows": rows,
    }
    config = {
        "K": args.k,
        "B": args.b,
        "alpha_list": args.alpha_list,
        "c_list": args.c_list,
        "level_range": list(args.level_range),
        "max_k": args.max_k,
        "max_b": args.max_b,
    }
    return envelope("exact", argv, config, results)


def _exact_tsv(env: dict) -> str:
    flat = []
    for r in env["results"]["error_rows"]:
        row = {"K": r["K"], "B": r["B"], "alpha": r["alpha_exact"], "c_alpha": r["c_alpha"]}
        row.update({f"err_{t}": r["errors"][t] for t in "TRML"})
        row.update({f"pct_{t}": r["percent_errors"][t] for t in "TRML"})
        flat.append(row)
    return to_tsv(flat)


def cmd_simulate(args, argv) -> dict:
    model, factor = build_model(args)
    workers = args.workers if args.workers is not None else default_workers()
    cfg = SimConfig(model, args.b, args.alpha, args.reps, args.seed, workers, args.debug)
    res = simulate_rejections(cfg)
    config = {
        "dist": model.family.value,
        "shifts": parse_shifts(args.shifts),
        "scale": factor,
        "theta": list(model.theta),
        "K": model.K,
        "B": args.b,
        "alpha": args.alpha,
        "reps": args.reps,
        "workers": workers,
    }
    return envelope("simulate", argv, config, res.to_dict(), seed=args.seed)


def cmd_reproduce(args, argv) -> dict:
    workers = args.workers if args.workers is not None else default_workers()
    rows, elapsed = run_recipe(
        table=args.table,
        figure=args.figure,
        with_sim=args.with_sim,
        reps=args.reps,
        seed=args.seed,
        workers=workers,
        scale=args.scale,
    )
    stochastic = args.table is not None and (4 <= args.table <= 6 or (args.table >= 7 and args.with_sim))
    config = {
        "table": args.table,
        "figure": args.figure,
        "with_sim": args.with_sim,
        "reps": args.reps,
        "workers": workers,
        "scale": args.scale,
        "out": args.out,
    }
    return envelope("reproduce", argv, config, {"rows": rows, "elapsed_s": elapsed}, seed=args.seed if stochastic else None)


# --- parser ----------------------------------------------------------------


def _add_model_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dist", required=True, help="uniform, normal, laplace or exponential")
    p.add_argument("--shifts", required=True, help="comma-separated treatment shifts, e.g. -1,0,1")
    p.add_argument("--scale", type=parse_scale, default=1.0, help="multiplier for the shifts; 'sd' uses the family SD")
    p.add_argument("--k", type=int, help="number of treatments (checked against --shifts)")
    p.add_argument("--alpha", type=float, default=0.05)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcbd", description="Friedman-type tests and power for randomized complete block designs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="run the four tests on a CSV of responses or ranks")
    p.add_argument("input", help="CSV path, rows are blocks; '-' for stdin")
    p.add_argument("--ranks", action="store_true", help="file already holds within-block ranks")
    p.add_argument("--header", action="store_true", help="skip a header row")
    p.add_argument("--transpose", action="store_true", help="rows are treatments instead of blocks")
    p.add_argument("--alpha", type=float, default=0.05)
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("power", help="approximate power at a given number of blocks")
    _add_model_args(p)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--method", default="LB", help="H, MA, MB, LA, LB or all")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("samplesize", help="minimum number of blocks for a target power")
    _add_model_args(p)
    p.add_argument("--target", type=float, default=0.90)
    p.add_argument("--method", default="LB", help="H, MA, MB, LA, LB or all")
    p.add_argument("--b-min", type=int, default=3)
    p.add_argument("--b-max", type=int, default=5000)
    p.set_defaults(func=cmd_samplesize)

    p = sub.add_parser("exact", help="exact null distribution, critical values and error rows")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--alpha-list", type=parse_floats, default=[0.10, 0.05, 0.01])
    p.add_argument("--c-list", type=parse_floats, help="extra critical values to tabulate")
    p.add_argument(
        "--level-range",
        type=parse_floats,
        default=[0.001, 0.25],
        help="tabulate every support point whose level P{T >= c} lies in lo,hi",
    )
    p.add_argument("--max-k", type=int, default=6)
    p.add_argument("--max-b", type=int, default=20)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("simulate", help="Monte Carlo rejection rates of the four tests")
    _add_model_args(p)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--reps", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--workers", type=int, help="processes; default from RCBD_THREADS or 1")
    p.add_argument("--debug", action="store_true", help="check block-effect invariance on the first chunk")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("reproduce", help="regenerate a reference table or power curve as TSV")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--table", type=int)
    g.add_argument("--figure", type=int)
    p.add_argument("--with-sim", action="store_true", help="also simulate the power columns (tables 7-14)")
    p.add_argument("--reps", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--workers", type=int)
    p.add_argument("--scale", type=parse_scale, default="sd", help="'sd' or a number multiplying the shift patterns")
    p.add_argument("--out", help="write TSV here and print the JSON envelope")
    p.set_defaults(func=cmd_reproduce)
    return parser


def _glue_values(argv: list[str]) -> list[str]:
    # "--shifts -1,0,1" would read -1,0,1 as an option; glue it to its flag
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _LIST_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


_LIST_FLAGS = {"--shifts", "--c-list", "--alpha-list", "--level-range"}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_values(argv))
    try:
        env = args.func(args, argv)
    except (InputFormatError, DimensionError) as exc:
        return _fail(EXIT_INPUT, exc)
    except (TiesError, DomainError, DegenerateError, NotAttainableError, SeriesError) as exc:
        return _fail(EXIT_DOMAIN, exc)
    except CapacityError as exc:
        return _fail(EXIT_CAPACITY, exc)
    except UnknownTargetError as exc:
        return _fail(EXIT_UNKNOWN, exc)

    if args.command == "exact" and args.format == "tsv":
        sys.stdout.write(_exact_tsv(env))
    elif args.command == "reproduce":
        tsv = to_tsv(env["results"]["rows"])
        if args.out:
            Path(args.out).write_text(tsv, encoding="utf-8")
            json.dump(env, sys.stdout, indent=2)
            sys.stdout.write("\n")
        else:
            sys.stdout.write(tsv)
    else:
        json.dump(env, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return EXIT_OK


def _fail(code: int, exc: Exception) -> int:
    print(f"rcbd: error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return code
