"""Recipes that regenerate the reference tables and power curves.

Each recipe returns a list of flat row dicts in the column order of the
table. Reference values are carried alongside (``*_ref`` keys) so a
row can be compared at a glance.
"""

from __future__ import annotations

import time

import numpy as np

from .errors import DomainError, UnknownTargetError
from .exact import error_table_row, exact_null_distribution
from .power import METHODS, PowerRequest, min_blocks, power
from .reference import EXACT_ERROR_TABLES, NULL_SIMULATION_TABLES, POWER_TABLES
from .shift import Family, ShiftModel
from .simulation import SimConfig, simulate_levels, simulate_rejections

__all__ = ["TABLES", "FIGURES", "exact_table", "null_sim_table", "power_table", "figure_curves", "row_seed", "shift_scale"]

TABLES = tuple(range(1, 15))
FIGURES = (1, 2)

# which simulated test checks which power method
SIM_TEST = {"H": "T", "MA": "M", "MB": "M", "LA": "L", "LB": "L"}


def row_seed(seed: int, table: int, index: int) -> int:
    """Per-row seed derived from the user seed, so rows do not share streams."""
    ss = np.random.SeedSequence(seed, spawn_key=(table, index))
    return int(ss.generate_state(1, np.uint64)[0])


def shift_scale(family: Family, scale: str | float = "sd") -> float:
    """Multiplier for normalized shift patterns: the family SD or a number."""
    if scale == "sd":
        return Family.parse(family).sd
    if scale == "printed":
        return {Family.UNIFORM: 0.2887, Family.LAPLACE: 1.4142}.get(Family.parse(family), 1.0)
    return float(scale)


def exact_table(number: int) -> list[dict]:
    """Tables 1-3: error rates of the four approximations at exact critical values."""
    K = {1: 3, 2: 4, 3: 5}[number]
    rows = []
    cache = {}
    for B, alpha_ref, c, err_ref, pct_ref in EXACT_ERROR_TABLES[K]:
        if B not in cache:
            cache[B] = exact_null_distribution(K, B)
        r = error_table_row(cache[B], c)
        row = {"K": K, "B": B, "alpha": r.alpha_exact, "alpha_ref": alpha_ref, "c_alpha": c}
        for t in ("T", "R", "M", "L"):
            row[f"err_{t}"] = r.errors[t]
        for t in ("T", "R", "M", "L"):
            row[f"pct_{t}"] = r.percent_errors[t]
        for t, v in zip("TRML", err_ref):
            row[f"err_{t}_ref"] = v
        for t, v in zip("TRML", pct_ref):
            row[f"pct_{t}_ref"] = v
        rows.append(row)
    return rows


def null_sim_table(number: int, *, reps: int = 100_000, seed: int = 1, workers: int = 1) -> list[dict]:
    """Tables 4-6: simulated Type I error rates under normal errors."""
    K = {4: 3, 5: 4, 6: 5}[number]
    ref = NULL_SIMULATION_TABLES[K]
    model = ShiftModel("normal", [0.0] * K)
    rows = []
    for B in sorted({r[0] for r in ref}):
        alphas = [r[1] for r in ref if r[0] == B]
        s = row_seed(seed, number, B)
        res = simulate_levels(SimConfig(model, B, alphas[0], reps, s, workers), alphas)
        for b, a, err_ref, pct_ref in (r for r in ref if r[0] == B):
            sim = res[a]
            row = {"K": K, "B": B, "alpha": a, "seed": s}
            for t in ("T", "R", "M", "L"):
                row[f"err_{t}"] = sim.rates[t] - a
            for t in ("T", "R", "M", "L"):
                row[f"pct_{t}"] = 100.0 * (sim.rates[t] - a) / a
            for t, v in zip("TRML", err_ref):
                row[f"err_{t}_ref"] = v
            rows.append(row)
    return rows


def power_table(
    number: int,
    *,
    with_sim: bool = False,
    reps: int = 100_000,
    seed: int = 1,
    workers: int = 1,
    scale: str | float = "sd",
) -> list[dict]:
    """Tables 7-14: minimum blocks and estimated power at target 0.90, alpha 0.05.

    With ``with_sim`` the test matching each method is simulated at the
    reproduced block count; rows sharing a pattern and B share one pass.
    """
    tab = POWER_TABLES[number]
    fam = Family.parse(tab["family"])
    factor = shift_scale(fam, scale)
    rows = []
    sims: dict[tuple, object] = {}
    for idx, (pattern, method, B_ref, est_ref, sim_ref, diff_ref) in enumerate(tab["rows"]):
        model = ShiftModel(fam, [factor * t for t in pattern])
        res = min_blocks(model, alpha=0.05, target=0.90, method=method)
        row = {
            "shifts": ",".join(f"{t:g}" for t in pattern),
            "method": method,
            "B": res.min_B,
            "power": res.achieved_power,
            "B_ref": B_ref,
            "power_ref": est_ref,
        }
        if with_sim:
            key = (pattern, res.min_B)
            if key not in sims:
                s = row_seed(seed, number, len(sims))
                sims[key] = simulate_rejections(SimConfig(model, res.min_B, 0.05, reps, s, workers))
            sim = sims[key]
            rate = sim.rates[SIM_TEST[method]]
            row.update(sim_power=rate, diff=res.achieved_power - rate, seed=sim.seed)
            row.update(sim_power_ref=sim_ref, diff_ref=diff_ref)
        rows.append(row)
    return rows


def figure_curves(number: int, *, B_range=range(3, 31), scale: str | float = "sd") -> list[dict]:
    """Power against B for the largest shift pattern, every family and method."""
    pattern = {1: (-1.0, 0.0, 1.0), 2: (-1.0, -0.5, 0.0, 0.5, 1.0)}[number]
    rows = []
    for fam in Family:
        model = ShiftModel(fam, [shift_scale(fam, scale) * t for t in pattern])
        for B in B_range:
            row = {"family": fam.value, "B": B}
            for m in METHODS:
                row[m] = power(PowerRequest(model, B, 0.05, m))
            rows.append(row)
    return rows


def run(
    table: int | None = None,
    figure: int | None = None,
    *,
    with_sim: bool = False,
    reps: int = 100_000,
    seed: int = 1,
    workers: int = 1,
    scale: str | float = "sd",
) -> tuple[list[dict], float]:
    """Dispatch one recipe; returns rows and elapsed seconds."""
    t0 = time.perf_counter()
    if figure is not None:
        if figure not in FIGURES:
            raise UnknownTargetError(f"unknown figure {figure}; expected one of {FIGURES}")
        rows = figure_curves(figure, scale=scale)
    elif table is not None:
        if table not in TABLES:
            raise UnknownTargetError(f"unknown table {table}; expected 1..14")
        if table <= 3:
            rows = exact_table(table)
        elif table <= 6:
            rows = null_sim_table(table, reps=reps, seed=seed, workers=workers)
        else:
            rows = power_table(table, with_sim=with_sim, reps=reps, seed=seed, workers=workers, scale=scale)
    else:
        raise DomainError("give a table or a figure number")
    return rows, time.perf_counter() - t0
