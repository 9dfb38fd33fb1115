"""Within-block ranking, the Friedman statistic and its F transformations.

Rows of a data matrix are blocks and columns are treatments. Three
reference distributions are attached to the statistic:

* ``T`` against chi-square with ``K - 1`` df;
* ``(B-1) T / (M - T)`` with ``M = B (K - 1)``, read against
  ``F(K-1, (B-1)(K-1))`` (the "R" test) and against the fractional
  ``F(K-1-2/B, (B-1)(K-1-2/B))`` (the "M" test);
* ``(K+1)(B-1) T / ((K-1)(L - T))`` with ``L = B (K + 1) - 2``, read
  against ``F(K-1, (B-1)(K+1))`` (the "L" test).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import distributions as dist
from .errors import DegenerateError, DimensionError, DomainError, TiesError

__all__ = [
    "BlockData",
    "RankTable",
    "TestReport",
    "rank_within_blocks",
    "ranks_from_matrix",
    "friedman_T",
    "friedman_T_from_sum_squares",
    "f_ratio_shared",
    "f_ratio_L",
    "general_class_params",
    "reference_dfs",
    "run_tests",
]


@dataclass(frozen=True)
class BlockData:
    """B x K matrix of continuous responses (rows are blocks)."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2-D matrix, got shape {arr.shape}")
        b, k = arr.shape
        if b < 2 or k < 2:
            raise DimensionError(f"need at least 2 blocks and 2 treatments, got B={b}, K={k}")
        if not np.all(np.isfinite(arr)):
            raise DomainError("responses must be finite")
        srt = np.sort(arr, axis=1)
        dup = np.nonzero(np.any(srt[:, 1:] == srt[:, :-1], axis=1))[0]
        if dup.size:
            raise TiesError(f"tied responses within block(s) {[int(j) + 1 for j in dup]}")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def B(self) -> int:
        return self.values.shape[0]

    @property
    def K(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class RankTable:
    ranks: np.ndarray
    rank_sums: np.ndarray = field(init=False)

    def __post_init__(self):
        r = np.asarray(self.ranks)
        if r.ndim != 2:
            raise DimensionError(f"expected a 2-D rank matrix, got shape {r.shape}")
        b, k = r.shape
        if b < 2 or k < 2:
            raise DimensionError(f"need at least 2 blocks and 2 treatments, got B={b}, K={k}")
        if not np.all(np.isfinite(r)) or np.any(r != np.round(r)):
            raise DomainError("ranks must be integers")
        r = r.astype(np.int64)
        srt = np.sort(r, axis=1)
        if np.any(srt[:, 1:] == srt[:, :-1]):
            raise TiesError("tied ranks within a block")
        if np.any(srt != np.arange(1, k + 1)):
            raise DomainError(f"each block must be a permutation of 1..{k}")
        r.setflags(write=False)
        sums = r.sum(axis=0)
        sums.setflags(write=False)
        object.__setattr__(self, "ranks", r)
        object.__setattr__(self, "rank_sums", sums)

    @property
    def B(self) -> int:
        return self.ranks.shape[0]

    @property
    def K(self) -> int:
        return self.ranks.shape[1]

    @property
    def sum_squares(self) -> int:
        return int(np.dot(self.rank_sums, self.rank_sums))


def rank_within_blocks(data: BlockData | np.ndarray) -> RankTable:
    """Rank each block ascending: the smallest response gets rank 1."""
    if not isinstance(data, BlockData):
        data = BlockData(data)
    ranks = np.argsort(np.argsort(data.values, axis=1, kind="stable"), axis=1) + 1
    return RankTable(ranks)


def ranks_from_matrix(ranks) -> RankTable:
    return RankTable(np.asarray(ranks))


def friedman_T_from_sum_squares(s: int, K: int, B: int) -> float:
    """T for an integer rank-sum square total ``s``; exact rational before rounding."""
    return float(Fraction(12 * s, B * K * (K + 1)) - 3 * B * (K + 1))


def friedman_T(ranks: RankTable) -> float:
    return friedman_T_from_sum_squares(ranks.sum_squares, ranks.K, ranks.B)


def f_ratio_shared(T: float, K: int, B: int) -> float:
    """(B-1) T / (M - T); the common statistic of the R and M tests."""
    M = B * (K - 1)
    if T >= M:
        raise DegenerateError(f"T={T} reaches its maximum M={M}; the F ratio is infinite")
    return (B - 1) * T / (M - T)


def f_ratio_L(T: float, K: int, B: int) -> float:
    L = B * (K + 1) - 2
    return (K + 1) * (B - 1) * T / ((K - 1) * (L - T))


def general_class_params(S: float, K: int, B: int) -> tuple[float, float]:
    """Beta moment-matching degrees of freedom (f1, f2) for the scale S.

    T/S is matched to Beta(f1/2, f2/2) using the null mean K-1 and null
    variance 2(K-1)(B-1)/B of T.
    """
    mu0 = K - 1
    var0 = 2.0 * (K - 1) * (B - 1) / B
    if var0 <= 0:
        raise DomainError("null variance of T must be positive (need K >= 2, B >= 2)")
    if S <= mu0:
        raise DomainError(f"S={S} must exceed the null mean K-1={mu0}")
    d = (2.0 / S) * (mu0 * (S - mu0) / var0 - 1.0)
    f1, f2 = mu0 * d, (S - mu0) * d
    if f1 <= 0 or f2 <= 0:
        raise DomainError(f"S={S} gives nonpositive degrees of freedom ({f1}, {f2})")
    return f1, f2


def reference_dfs(K: int, B: int) -> dict[str, tuple[float, float]]:
    """Reference F degrees of freedom of the R, M and L tests."""
    m1 = K - 1 - 2.0 / B
    return {
        "R": (float(K - 1), float((B - 1) * (K - 1))),
        "M": (m1, (B - 1) * m1),
        "L": (float(K - 1), float((B - 1) * (K + 1))),
    }


@dataclass(frozen=True)
class TestReport:
    K: int
    B: int
    rank_sums: tuple[int, ...]
    T: float
    f_statistic: float
    f_L: float
    dfs: dict[str, tuple[float, float]]
    p_chisq: float
    p_R: float
    p_M: float
    p_L: float
    alpha: float
    decisions: dict[str, bool]

    __test__ = False  # not a pytest class

    def to_dict(self) -> dict:
        return {
            "K": self.K,
            "B": self.B,
            "rank_sums": list(self.rank_sums),
            "T": self.T,
            "F_R": self.f_statistic,
            "F_M": self.f_statistic,
            "F_L": self.f_L,
            "dfs": {
                "chisq": self.K - 1,
                "R": list(self.dfs["R"]),
                "M": list(self.dfs["M"]),
                "L": list(self.dfs["L"]),
            },
            "p_values": {"chisq": self.p_chisq, "R": self.p_R, "M": self.p_M, "L": self.p_L},
            "alpha": self.alpha,
            "reject": dict(self.decisions),
        }


def run_tests(data: BlockData | RankTable | np.ndarray, alpha: float = 0.05) -> TestReport:
    """Friedman chi-square test and the three F-transformation tests.

    When every block ranks the treatments identically, T equals its maximum
    and the shared F ratio is infinite; the R and M tests then report an
    infinite statistic with p-value 0. For K = B = 2 the M reference has no
    degrees of freedom and its p-value is NaN (never rejects).
    """
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    ranks = data if isinstance(data, RankTable) else rank_within_blocks(data)
    K, B = ranks.K, ranks.B
    T = friedman_T(ranks)
    dfs = reference_dfs(K, B)
    try:
        F = f_ratio_shared(T, K, B)
    except DegenerateError:
        F = math.inf
    FL = f_ratio_L(T, K, B)
    p_chisq = dist.chi2_sf(T, K - 1)
    p_R = dist.f_sf(F, *dfs["R"])
    # m1 = K - 1 - 2/B vanishes at K = B = 2: the M test is undefined there
    p_M = dist.f_sf(F, *dfs["M"]) if dfs["M"][0] > 0 else math.nan
    p_L = dist.f_sf(FL, *dfs["L"])
    decisions = {
        "chisq": p_chisq < alpha,
        "R": p_R < alpha,
        "M": p_M < alpha,
        "L": p_L < alpha,
    }
    return TestReport(
        K=K,
        B=B,
        rank_sums=tuple(int(v) for v in ranks.rank_sums),
        T=T,
        f_statistic=F,
        f_L=FL,
        dfs=dfs,
        p_chisq=p_chisq,
        p_R=p_R,
        p_M=p_M,
        p_L=p_L,
        alpha=alpha,
        decisions=decisions,
    )
