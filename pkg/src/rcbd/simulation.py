"""Seeded Monte Carlo estimates of rejection rates.

Reps are processed in fixed-size chunks; chunk ``c`` draws from its own
PCG64 stream seeded by ``SeedSequence(seed, spawn_key=(c,))``. Results
therefore depend only on ``(seed, reps)`` and never on how chunks are
spread over workers.

All four families are generated by inversion of one uniform stream
(``Generator.random``), so the variates are a fixed function of the bit
stream. Block effects are not generated: within-block ranks ignore them.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import special

from . import distributions as dist
from .errors import DomainError
from .ranks import reference_dfs
from .shift import Family, ShiftModel

__all__ = [
    "TESTS",
    "CHUNK_SIZE",
    "SimConfig",
    "SimResult",
    "sample_block",
    "sample_blocks",
    "simulate_rejections",
    "simulate_power",
    "simulate_exact_test",
    "simulate_levels",
    "default_workers",
]

TESTS = ("T", "R", "M", "L")
CHUNK_SIZE = 10_000
_HALF_ULP = 2.0**-54


@dataclass(frozen=True)
class SimConfig:
    model: ShiftModel
    B: int
    alpha: float = 0.05
    reps: int = 100_000
    seed: int = 0
    workers: int = 1
    debug: bool = False

    def __post_init__(self):
        if self.reps < 1000:
            raise DomainError(f"reps must be at least 1000, got {self.reps}")
        if self.B < 2:
            raise DomainError(f"need B >= 2, got {self.B}")
        if not 0 < self.alpha < 1:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        if self.workers < 1:
            raise DomainError("workers must be positive")


@dataclass(frozen=True)
class SimResult:
    K: int
    B: int
    alpha: float
    family: str
    theta: tuple[float, ...]
    reps: int
    seed: int
    rejections: dict[str, int]
    rates: dict[str, float] = field(init=False)
    standard_errors: dict[str, float] = field(init=False)

    def __post_init__(self):
        rates = {k: v / self.reps for k, v in self.rejections.items()}
        se = {k: math.sqrt(r * (1.0 - r) / self.reps) for k, r in rates.items()}
        object.__setattr__(self, "rates", rates)
        object.__setattr__(self, "standard_errors", se)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["theta"] = list(self.theta)
        return d


def _errors_from_uniform(fam: Family, u: np.ndarray) -> np.ndarray:
    if fam is Family.UNIFORM:
        return u - 0.5
    if fam is Family.NORMAL:
        return special.ndtri(u)
    if fam is Family.EXPONENTIAL:
        return -np.log1p(-u)
    # Laplace(0, 1)
    return np.where(u < 0.5, np.log(2.0 * u), -np.log(2.0 * (1.0 - u)))


def sample_blocks(family, theta, rng: np.random.Generator, n: int = 1) -> np.ndarray:
    """``n`` blocks of responses, shape (n, K): theta_i plus an error draw."""
    fam = Family.parse(family)
    th = np.asarray(theta, dtype=float)
    u = rng.random((n, th.size)) + _HALF_ULP  # open interval (0, 1)
    return th + _errors_from_uniform(fam, u)


def sample_block(family, theta, rng: np.random.Generator) -> np.ndarray:
    return sample_blocks(family, theta, rng, 1)[0]


def _rank_sum_squares(x: np.ndarray) -> np.ndarray:
    """x has shape (reps, B, K); returns sum_i R_i^2 per rep as int64."""
    # rank = 1 + number of smaller entries in the block (no ties in continuous data)
    ranks = 1 + (x[..., :, None] > x[..., None, :]).sum(axis=-1, dtype=np.int64)
    sums = ranks.sum(axis=1)
    return (sums * sums).sum(axis=1)


@dataclass(frozen=True)
class _Thresholds:
    # rejection regions expressed as "s > key" on the integer sum of squared rank sums
    keys: dict[str, float]


def _thresholds(K: int, B: int, alpha: float) -> _Thresholds:
    """Convert each test's critical value into a cutoff on s = sum R_i^2."""
    M = B * (K - 1)
    L = B * (K + 1) - 2
    dfs = reference_dfs(K, B)
    c_T = dist.chi2_quantile(alpha, K - 1)
    f_R = dist.f_quantile(alpha, *dfs["R"])
    f_M = dist.f_quantile(alpha, *dfs["M"])
    f_L = dist.f_quantile(alpha, *dfs["L"])
    # invert the monotone transforms: F_R > f  <=>  T > M f / (B - 1 + f)
    t_cut = {
        "T": c_T,
        "R": M * f_R / (B - 1 + f_R),
        "M": M * f_M / (B - 1 + f_M),
        "L": (K - 1) * L * f_L / ((K + 1) * (B - 1) + (K - 1) * f_L),
    }
    scale = B * K * (K + 1) / 12.0
    return _Thresholds({k: (t + 3 * B * (K + 1)) * scale for k, t in t_cut.items()})


def _chunk_counts(args) -> dict[str, int]:
    fam, theta, B, seed, chunk, n, thresholds, debug = args
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk,))))
    K = len(theta)
    x = sample_blocks(fam, theta, rng, n * B).reshape(n, B, K)
    s = _rank_sum_squares(x)
    if debug and chunk == 0:
        gamma = np.random.default_rng(seed).normal(scale=10.0, size=(n, B, 1))
        if not np.array_equal(s, _rank_sum_squares(x + gamma)):
            raise AssertionError("block effects changed the within-block ranks")
    return {k: int(np.count_nonzero(s > key)) for k, key in thresholds.keys.items()}


def _chunks(reps: int) -> list[tuple[int, int]]:
    out = []
    start = 0
    c = 0
    while start < reps:
        n = min(CHUNK_SIZE, reps - start)
        out.append((c, n))
        start += n
        c += 1
    return out


def _run(cfg: SimConfig, thresholds: _Thresholds) -> dict[str, int]:
    fam = cfg.model.family
    jobs = [(fam, cfg.model.theta, cfg.B, cfg.seed, c, n, thresholds, cfg.debug) for c, n in _chunks(cfg.reps)]
    if cfg.workers == 1 or len(jobs) == 1:
        parts = [_chunk_counts(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(cfg.workers, len(jobs))) as ex:
            parts = list(ex.map(_chunk_counts, jobs))
    total = dict.fromkeys(thresholds.keys, 0)
    for part in parts:
        for k, v in part.items():
            total[k] += v
    return total


def simulate_rejections(cfg: SimConfig) -> SimResult:
    """Rejection rates of the chi-square, R, M and L tests at level alpha."""
    K = cfg.model.K
    counts = _run(cfg, _thresholds(K, cfg.B, cfg.alpha))
    return SimResult(
        K=K,
        B=cfg.B,
        alpha=cfg.alpha,
        family=cfg.model.family.value,
        theta=cfg.model.theta,
        reps=cfg.reps,
        seed=cfg.seed,
        rejections=counts,
    )


def simulate_levels(cfg: SimConfig, alphas) -> dict[float, SimResult]:
    """One simulated pass evaluated at several levels; ``cfg.alpha`` is ignored.

    The rates at each level equal those of :func:`simulate_rejections` run
    with that level and the same seed.
    """
    K = cfg.model.K
    keys = {}
    for a in alphas:
        for t, key in _thresholds(K, cfg.B, a).keys.items():
            keys[f"{t}@{a!r}"] = key
    counts = _run(cfg, _Thresholds(keys))
    out = {}
    for a in alphas:
        rej = {t: counts[f"{t}@{a!r}"] for t in TESTS}
        out[a] = SimResult(K, cfg.B, a, cfg.model.family.value, cfg.model.theta, cfg.reps, cfg.seed, rej)
    return out


def simulate_power(cfg: SimConfig) -> SimResult:
    """Simulated power; requires a genuine shift alternative."""
    if cfg.model.is_null():
        raise DomainError("power simulation needs shifts that are not all equal")
    return simulate_rejections(cfg)


def simulate_exact_test(cfg: SimConfig, c: float) -> SimResult:
    """Rejection rate of the exact test that rejects when T >= c."""
    K, B = cfg.model.K, cfg.B
    scale = B * K * (K + 1) / 12.0
    # s >= key(c) on integers; shift down half a step to make it a strict cut
    key = (c + 3 * B * (K + 1)) * scale - 0.5
    counts = _run(cfg, _Thresholds({"exact": key}))
    return SimResult(K, B, cfg.alpha, cfg.model.family.value, cfg.model.theta, cfg.reps, cfg.seed, counts)


def default_workers() -> int:
    env = os.environ.get("RCBD_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise DomainError(f"RCBD_THREADS must be an integer, got {env!r}") from None
        if n < 1:
            raise DomainError("RCBD_THREADS must be positive")
        return n
    return 1
