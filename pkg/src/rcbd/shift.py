"""Location-shift alternatives: exceedance probabilities, rank-sum moments,
the nonnull mean of T and the noncentrality parameters of the power
approximations.

Shifts are given in raw units of the error distribution:

============  ==================  ========
family        error law           variance
============  ==================  ========
uniform       U(-1/2, 1/2)        1/12
normal        N(0, 1)             1
laplace       Laplace(0, 1)       2
exponential   Exp(1)              1
============  ==================  ========

The closed forms for P1 and P2 are stated for treatments labelled in
nondecreasing shift order; arbitrary labels are handled by looking up the
sorted positions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy import special

from . import distributions as dist
from .errors import DegenerateError, DomainError
from .ranks import reference_dfs

__all__ = [
    "Family",
    "ShiftModel",
    "RankMoments",
    "Noncentrality",
    "VARIANTS",
    "p1",
    "p2",
    "per_block_moments",
    "rank_moments",
    "f_star_zero",
    "tau_H",
    "noncentrality",
]

VARIANTS = ("H", "MA", "MB", "LA", "LB")


class Family(str, enum.Enum):
    UNIFORM = "uniform"
    NORMAL = "normal"
    LAPLACE = "laplace"
    EXPONENTIAL = "exponential"

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, Family):
            return name
        key = str(name).strip().lower()
        aliases = {"unif": "uniform", "norm": "normal", "gaussian": "normal", "exp": "exponential", "expon": "exponential"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown family {name!r}; expected one of {[f.value for f in cls]}") from None

    @property
    def variance(self) -> float:
        return {"uniform": 1.0 / 12.0, "normal": 1.0, "laplace": 2.0, "exponential": 1.0}[self.value]

    @property
    def sd(self) -> float:
        return math.sqrt(self.variance)


@dataclass(frozen=True)
class ShiftModel:
    family: Family
    theta: tuple[float, ...]

    def __init__(self, family: "str | Family", theta: Sequence[float]):
        fam = Family.parse(family)
        th = tuple(float(t) for t in theta)
        if len(th) < 2:
            raise DomainError("need at least two treatments")
        if not all(math.isfinite(t) for t in th):
            raise DomainError("shifts must be finite")
        if fam is Family.UNIFORM and max(th) - min(th) >= 1:
            raise DomainError(
                f"uniform shifts must differ by less than 1 (the support width), got range {max(th) - min(th):.6g}"
            )
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "theta", th)

    @property
    def K(self) -> int:
        return len(self.theta)

    def scaled(self, factor: float) -> "ShiftModel":
        return ShiftModel(self.family, [factor * t for t in self.theta])

    def is_null(self) -> bool:
        return max(self.theta) == min(self.theta)


@dataclass(frozen=True)
class RankMoments:
    mu: np.ndarray
    sigma2: np.ndarray
    mu_T: float


@dataclass(frozen=True)
class Noncentrality:
    variant: str
    value: float
    dfs: tuple[float, float]
    scale: float | None = None  # S of the F transformation; None for H


def _positions(theta: tuple[float, ...]) -> np.ndarray:
    order = np.argsort(theta, kind="stable")
    pos = np.empty(len(theta), dtype=int)
    pos[order] = np.arange(len(theta))
    return pos


# --- closed forms, arguments are the shifts of the labelled treatments ---


def _p1_sorted(fam: Family, ti: float, tl: float, i_first: bool) -> float:
    d = ti - tl
    if fam is Family.UNIFORM:
        return 0.5 + d + 0.5 * d * d if i_first else 0.5 + d - 0.5 * d * d
    if fam is Family.LAPLACE:
        if i_first:
            return 0.25 * (2.0 - d) * math.exp(d)
        return 1.0 - 0.25 * (2.0 + d) * math.exp(-d)
    if fam is Family.EXPONENTIAL:
        return 0.5 * math.exp(d) if i_first else 1.0 - 0.5 * math.exp(-d)
    return float(special.ndtr(d / math.sqrt(2.0)))


def _p2_uniform(ti, tl, tm, case):
    a, b = ti - tm, tl - tm
    if case == "ilm":
        return 1 / 3 - 0.5 * b + a - a * b + a * a - 0.5 * b * a * a + a**3 / 3
    if case == "lim":
        return 1 / 3 + a - 0.5 * b + 0.5 * a * a - 0.5 * b * b - b**3 / 6
    return 1 / 3 + a - 0.5 * b - 0.5 * b * (ti - tl) ** 2 - 0.5 * b * b + (tl - ti) ** 3 / 3


def _p2_laplace(ti, tl, tm, case):
    e = math.exp
    if case == "ilm":
        return (3 - 2 * (tl - tm)) / 8 * e(ti - tm) - e(2 * ti - tl - tm) / 12 + e(ti + tl - 2 * tm) / 24
    if case == "lim":
        return (
            0.25 * (2 - ti + tm) * e(ti - tm)
            - 0.25 * e(tl - tm)
            + e(ti + tl - 2 * tm) / 24
            + e(2 * tl - ti - tm) / 24
        )
    return (
        1
        - (1 + 2 * (ti - tm)) / 8 * e(tl - ti)
        - 0.25 * (2 + ti - tm) * e(tm - ti)
        - e(tl + tm - 2 * ti) / 12
        + e(2 * tl - ti - tm) / 24
    )


def _p2_exponential(ti, tl, tm, case):
    e = math.exp
    if case in ("ilm", "lim"):
        return 0.5 * e(ti - tm) - e(ti + tl - 2 * tm) / 6
    return 1 - 0.5 * e(tl - ti) - 0.5 * e(tm - ti) + e(tl + tm - 2 * ti) / 3


def _p2_normal(ti, tl, tm):
    a, b = ti - tl, ti - tm
    return dist.gauss_quadrature_expectation(lambda z: special.ndtr(z + a) * special.ndtr(z + b))


def p1(model: ShiftModel, i: int, l: int) -> float:
    """P{X_i > X_l} for one block (0-based treatment indices)."""
    if i == l:
        raise DomainError("p1 needs two distinct treatments")
    th = model.theta
    pos = _positions(th)
    return _p1_sorted(model.family, th[i], th[l], pos[i] < pos[l])


def p2(model: ShiftModel, i: int, l: int, m: int) -> float:
    """P{X_i > X_l and X_i > X_m} for one block; symmetric in (l, m)."""
    if len({i, l, m}) < 3:
        raise DomainError("p2 needs three distinct treatments")
    th = model.theta
    fam = model.family
    if fam is Family.NORMAL:
        return _p2_normal(th[i], th[l], th[m])
    pos = _positions(th)
    if pos[l] > pos[m]:
        l, m = m, l
    if pos[i] < pos[l]:
        case = "ilm"
    elif pos[i] < pos[m]:
        case = "lim"
    else:
        case = "lmi"
    f = _p2_uniform if fam is Family.UNIFORM else _p2_laplace if fam is Family.LAPLACE else _p2_exponential
    return f(th[i], th[l], th[m], case)


@lru_cache(maxsize=256)
def _block_moments(fam: Family, theta: tuple[float, ...]) -> tuple[tuple[float, ...], tuple[float, ...]]:
    model = ShiftModel(fam, theta)
    K = model.K
    mean, var = [], []
    for i in range(K):
        others = [l for l in range(K) if l != i]
        s1 = sum(p1(model, i, l) for l in others)
        s2 = sum(p2(model, i, l, m) for a, l in enumerate(others) for m in others[a + 1 :])
        mean.append(s1 + 1.0)
        var.append(s1 - s1 * s1 + 2.0 * s2)
    return tuple(mean), tuple(var)


def per_block_moments(model: ShiftModel) -> tuple[np.ndarray, np.ndarray]:
    """Mean and variance of one treatment's within-block rank."""
    mean, var = _block_moments(model.family, model.theta)
    return np.array(mean), np.array(var)


def _mu_T(mean: np.ndarray, var: np.ndarray, B: int) -> float:
    # centred form of E[T]; avoids cancelling two O(B) terms
    K = len(mean)
    dev = mean - (K + 1) / 2.0
    return 12.0 / (K * (K + 1)) * float(np.sum(B * dev * dev + var))


def rank_moments(model: ShiftModel, B: int) -> RankMoments:
    """Means and variances of the rank sums R_i and the mean of T."""
    if B < 2:
        raise DomainError(f"need B >= 2, got {B}")
    mean, var = per_block_moments(model)
    return RankMoments(mu=B * mean, sigma2=B * var, mu_T=_mu_T(mean, var, B))


def f_star_zero(family: "str | Family") -> float:
    """Integral of the squared error density."""
    fam = Family.parse(family)
    return {
        Family.UNIFORM: 1.0,
        Family.NORMAL: 1.0 / (2.0 * math.sqrt(math.pi)),
        Family.LAPLACE: 0.25,
        Family.EXPONENTIAL: 0.5,
    }[fam]


def tau_H(model: ShiftModel, B: int) -> float:
    """Local-alternative noncentrality of the chi-square power approximation."""
    K = model.K
    th = np.asarray(model.theta)
    ss = float(np.sum((th - th.mean()) ** 2))
    return 12.0 * B * K / (K + 1) * f_star_zero(model.family) ** 2 * ss


def noncentrality(model: ShiftModel, B: int, variant: str) -> Noncentrality:
    """Noncentrality of one of the five power approximations.

    For the F variants, ``delta* = mu_T / (S - mu_T)`` and
    ``A: f2 delta* - f1``, ``B: f2**2 / (f2 - 2) delta* - f1``.
    """
    variant = variant.upper()
    K = model.K
    if variant == "H":
        return Noncentrality("H", tau_H(model, B), (float(K - 1), math.inf))
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    dfs = reference_dfs(K, B)
    if variant[0] == "M":
        S = float(B * (K - 1))
        f1, f2 = dfs["M"]
    else:
        S = float(B * (K + 1) - 2)
        f1, f2 = dfs["L"]
    mu_T = rank_moments(model, B).mu_T
    if mu_T >= S:
        raise DegenerateError(f"mean of T ({mu_T}) reaches the transformation pole S={S}")
    star = mu_T / (S - mu_T)
    if variant[1] == "A":
        value = f2 * star - f1
    else:
        if f2 <= 2:
            raise DomainError(f"variant {variant} needs denominator df > 2, got {f2:.6g} (K={K}, B={B})")
        value = f2 * f2 / (f2 - 2.0) * star - f1
    return Noncentrality(variant, max(0.0, value), (f1, f2), S)
