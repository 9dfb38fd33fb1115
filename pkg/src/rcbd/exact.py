"""Exact null distribution of the Friedman statistic.

Under the null hypothesis the B blocks carry independent uniformly random
permutations of 1..K. T depends on the data only through the multiset of
rank sums, so the distribution is built block by block over sorted
rank-sum vectors, carrying exact integer multiplicities. The final
distribution is keyed by the integer ``s = sum_i R_i**2``; T is an affine
function of ``s`` and all comparisons happen in key space.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import distributions as dist
from .errors import CapacityError, DomainError
from .ranks import reference_dfs

__all__ = [
    "ExactNullDist",
    "ErrorTableRow",
    "exact_null_distribution",
    "brute_force_null_distribution",
    "exact_tail",
    "critical_value",
    "error_table_row",
    "approximation_error_table",
]

# tabulated critical values are printed to about 3 decimals
SNAP_TOL = 1e-3


@dataclass(frozen=True)
class ExactNullDist:
    K: int
    B: int
    counts: dict[int, int]
    total: int
    keys: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        keys = np.array(sorted(self.counts), dtype=np.int64)
        keys.setflags(write=False)
        object.__setattr__(self, "keys", keys)

    @property
    def M(self) -> int:
        return self.B * (self.K - 1)

    def t_exact(self, s: int) -> Fraction:
        K, B = self.K, self.B
        return Fraction(12 * s, B * K * (K + 1)) - 3 * B * (K + 1)

    def t_value(self, s: int) -> float:
        return float(self.t_exact(s))

    def key_of(self, t: Fraction | float) -> Fraction:
        """Inverse of :meth:`t_exact` (not necessarily an integer)."""
        K, B = self.K, self.B
        return (Fraction(t) + 3 * B * (K + 1)) * Fraction(B * K * (K + 1), 12)

    def pmf(self) -> dict[Fraction, Fraction]:
        """Exact probabilities keyed by the exact value of T."""
        return {self.t_exact(s): Fraction(c, self.total) for s, c in sorted(self.counts.items())}

    def pmf_float(self) -> list[tuple[float, float]]:
        return [(self.t_value(s), c / self.total) for s, c in sorted(self.counts.items())]

    def support(self) -> list[float]:
        return [self.t_value(int(s)) for s in self.keys]

    def probability_mass(self) -> Fraction:
        return Fraction(sum(self.counts.values()), self.total)

    def mean(self) -> Fraction:
        return sum((self.t_exact(s) * c for s, c in self.counts.items()), Fraction(0)) / self.total

    def variance(self) -> Fraction:
        m = self.mean()
        return sum(((self.t_exact(s) - m) ** 2 * c for s, c in self.counts.items()), Fraction(0)) / self.total

    def snap(self, c: float) -> Fraction:
        """Exact value of T at ``c``: the nearest support point if within SNAP_TOL."""
        x = self.key_of(Fraction(c))
        idx = int(np.searchsorted(self.keys, math.floor(x)))
        best = None
        for j in (idx - 1, idx, idx + 1):
            if 0 <= j < len(self.keys):
                t = self.t_exact(int(self.keys[j]))
                if best is None or abs(t - Fraction(c)) < abs(best - Fraction(c)):
                    best = t
        if best is not None and abs(float(best) - c) <= SNAP_TOL:
            return best
        return Fraction(c)

    def tail_exact(self, c: float, inclusive: bool = False) -> Fraction:
        x = self.key_of(self.snap(c))
        if inclusive:
            sel = (s for s in self.counts if s >= x)
        else:
            sel = (s for s in self.counts if s > x)
        return Fraction(sum(self.counts[s] for s in sel), self.total)


def _check_design(K: int, B: int, max_k: int, max_b: int) -> None:
    if K < 2 or B < 2:
        raise DomainError(f"need K >= 2 and B >= 2, got K={K}, B={B}")
    if K > max_k or B > max_b:
        raise CapacityError(f"design K={K}, B={B} exceeds the caps K <= {max_k}, B <= {max_b}")


def exact_null_distribution(
    K: int,
    B: int,
    *,
    max_k: int = 6,
    max_b: int = 20,
    max_states: int = 2_000_000,
) -> ExactNullDist:
    """Exact null distribution of sum R_i^2 by dynamic programming over blocks.

    The state after j blocks is the sorted vector of partial rank sums with
    the number of permutation sequences that produce it.
    """
    _check_design(K, B, max_k, max_b)
    perms = np.array(list(itertools.permutations(range(1, K + 1))), dtype=np.int64)
    n_perm = len(perms)
    base = np.int64(B * K + 1)
    weights = base ** np.arange(K, dtype=np.int64)

    # the first block always sorts to (1, ..., K)
    states = np.arange(1, K + 1, dtype=np.int64)[None, :]
    counts = np.array([math.factorial(K)], dtype=object)
    for _ in range(1, B):
        if len(states) * n_perm > 20 * max_states:
            raise CapacityError(f"state space for K={K}, B={B} exceeds {max_states} states")
        nxt = (states[:, None, :] + perms[None, :, :]).reshape(-1, K)
        nxt.sort(axis=1)
        keys = nxt @ weights
        uniq, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
        if len(uniq) > max_states:
            raise CapacityError(f"state space for K={K}, B={B} exceeds {max_states} states")
        order = np.argsort(inverse, kind="stable")
        starts = np.r_[0, np.flatnonzero(np.diff(inverse[order])) + 1]
        counts = np.add.reduceat(np.repeat(counts, n_perm)[order], starts)
        states = nxt[first]

    sq = (states * states).sum(axis=1)
    out: dict[int, int] = {}
    for s, c in zip(sq.tolist(), counts.tolist()):
        out[s] = out.get(s, 0) + c
    return ExactNullDist(K=K, B=B, counts=out, total=math.factorial(K) ** B)


def brute_force_null_distribution(K: int, B: int) -> ExactNullDist:
    """Enumerate all (K!)^B rank configurations; only for tiny designs."""
    perms = list(itertools.permutations(range(1, K + 1)))
    out: dict[int, int] = {}
    for combo in itertools.product(perms, repeat=B):
        sums = [sum(col) for col in zip(*combo)]
        s = sum(v * v for v in sums)
        out[s] = out.get(s, 0) + 1
    return ExactNullDist(K=K, B=B, counts=out, total=len(perms) ** B)


def exact_tail(d: ExactNullDist, c: float, inclusive: bool = False) -> float:
    """P{T > c}, or P{T >= c} with ``inclusive``.

    ``c`` is snapped to a support point when it is a rounded decimal of one
    (e.g. 4.667 for 14/3).
    """
    return float(d.tail_exact(c, inclusive))


def critical_value(d: ExactNullDist, alpha: float, rule: str = "conservative") -> tuple[float, float]:
    """Critical value c of the exact test rejecting for T >= c.

    ``rule="conservative"`` gives the smallest support point with
    P{T >= c} <= alpha; ``rule="nearest"`` gives the support point whose
    attained level is closest to alpha. Returns ``(c, P{T >= c})``; when no
    support point is rare enough the conservative rule returns ``(inf, 0)``.
    """
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    keys = d.keys.tolist()
    tails = []
    acc = 0
    for s in reversed(keys):
        acc += d.counts[s]
        tails.append((s, Fraction(acc, d.total)))
    tails.reverse()  # ascending in s; tail is P{T >= t(s)}
    if rule == "conservative":
        for s, p in tails:
            if p <= alpha:
                return d.t_value(s), float(p)
        # even the maximum is too likely: the exact test never rejects
        return math.inf, 0.0
    if rule == "nearest":
        s, p = min(tails, key=lambda sp: (abs(float(sp[1]) - alpha), -sp[0]))
        return d.t_value(s), float(p)
    raise DomainError(f"unknown rule {rule!r}")


@dataclass(frozen=True)
class ErrorTableRow:
    """Approximate tail probabilities at an exact critical value.

    ``alpha_exact`` is P{T >= c}; errors are measured against ``alpha_ref``
    which is ``alpha_exact`` rounded to the table's printed precision.
    Entries are ``None`` where the transformed critical value is undefined
    (c at the maximum M of T).
    """

    K: int
    B: int
    c: float
    alpha_exact: float
    alpha_fraction: Fraction
    alpha_ref: float
    probs: dict[str, float | None]
    errors: dict[str, float | None]
    percent_errors: dict[str, float | None]

    def to_dict(self) -> dict:
        return {
            "K": self.K,
            "B": self.B,
            "c_alpha": self.c,
            "alpha_exact": self.alpha_exact,
            "alpha_fraction": str(self.alpha_fraction),
            "alpha_ref": self.alpha_ref,
            "probs": dict(self.probs),
            "errors": dict(self.errors),
            "percent_errors": dict(self.percent_errors),
        }


def error_table_row(d: ExactNullDist, c: float, alpha_digits: int | None = 4) -> ErrorTableRow:
    K, B = d.K, d.B
    t = d.snap(c)
    c_val = float(t)
    alpha_frac = d.tail_exact(c_val, inclusive=True)
    alpha_exact = float(alpha_frac)
    alpha_ref = round(alpha_exact, alpha_digits) if alpha_digits is not None else alpha_exact
    dfs = reference_dfs(K, B)
    M = B * (K - 1)
    L = B * (K + 1) - 2
    probs: dict[str, float | None] = {"T": dist.chi2_sf(c_val, K - 1)}
    if t >= M:
        probs["R"] = probs["M"] = None
    else:
        f_rc = (B - 1) * c_val / (M - c_val)
        probs["R"] = dist.f_sf(f_rc, *dfs["R"])
        probs["M"] = dist.f_sf(f_rc, *dfs["M"])
    f_lc = (K + 1) * (B - 1) * c_val / ((K - 1) * (L - c_val))
    probs["L"] = dist.f_sf(f_lc, *dfs["L"])
    errors = {k: (None if p is None else p - alpha_ref) for k, p in probs.items()}
    pct = {k: (None if e is None else 100.0 * e / alpha_ref) for k, e in errors.items()}
    return ErrorTableRow(K, B, c_val, alpha_exact, alpha_frac, alpha_ref, probs, errors, pct)


def approximation_error_table(
    K: int,
    blocks: Iterable[int],
    alphas: Sequence[float] = (0.10, 0.05, 0.01),
    *,
    rule: str = "nearest",
    alpha_digits: int | None = 4,
    **caps,
) -> list[ErrorTableRow]:
    """Error rows for each block count and target level.

    Targets that resolve to the same critical value produce a single row.
    """
    rows = []
    for B in blocks:
        d = exact_null_distribution(K, B, **caps)
        seen = set()
        for a in alphas:
            c, _ = critical_value(d, a, rule=rule)
            if c in seen:
                continue
            seen.add(c)
            rows.append(error_table_row(d, c, alpha_digits))
    return rows

