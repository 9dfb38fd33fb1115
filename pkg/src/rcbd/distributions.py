"""Distribution functions used by the tests and power formulas.

Everything here works with real (fractional) degrees of freedom. The
central survival functions are thin wrappers around the regularized
incomplete gamma and beta functions from :mod:`scipy.special`; the
noncentral versions are Poisson mixtures of those, summed outward from the
Poisson mode until the unused Poisson mass drops below ``abs_tol``.

Quantile functions use the upper-tail convention: ``chi2_quantile(p, df)``
is the point whose survival probability is ``p``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy import optimize, special

from .errors import DomainError, SeriesError

__all__ = [
    "DistAccuracy",
    "DEFAULT_ACCURACY",
    "std_normal_cdf",
    "std_normal_logcdf",
    "chi2_sf",
    "chi2_quantile",
    "f_sf",
    "f_quantile",
    "nc_chi2_sf",
    "nc_f_sf",
    "gauss_quadrature_expectation",
]


@dataclass(frozen=True)
class DistAccuracy:
    abs_tol: float = 1e-12
    max_series_terms: int = 100_000
    quantile_tol: float = 1e-10

    def __post_init__(self):
        if self.abs_tol <= 0 or self.quantile_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_series_terms < 1000:
            raise DomainError("max_series_terms must be at least 1000")


DEFAULT_ACCURACY = DistAccuracy()


def _clamp(p: float) -> float:
    return min(1.0, max(0.0, float(p)))


def std_normal_cdf(x: float) -> float:
    if x < -30.0:
        # ndtr flushes the subnormal range to 0; exp(log) keeps it positive
        return math.exp(float(special.log_ndtr(x)))
    return float(special.ndtr(x))


def std_normal_logcdf(x: float) -> float:
    """log Phi(x); finite far into the lower tail where Phi underflows."""
    return float(special.log_ndtr(x))


def _check_df(*dfs: float) -> None:
    for df in dfs:
        if not (df > 0 and math.isfinite(df)):
            raise DomainError(f"degrees of freedom must be positive and finite, got {df}")


def _check_x(x: float) -> None:
    if math.isnan(x) or x < 0:
        raise DomainError(f"argument must be nonnegative, got {x}")


def _check_p(p: float) -> None:
    if not 0 < p < 1:
        raise DomainError(f"probability must lie in (0, 1), got {p}")


def chi2_sf(x: float, df: float) -> float:
    """Upper tail P{chi2_df > x}."""
    _check_x(x)
    _check_df(df)
    if math.isinf(x):
        return 0.0
    return _clamp(special.gammaincc(df / 2.0, x / 2.0))


def f_sf(x: float, d1: float, d2: float) -> float:
    """Upper tail P{F(d1, d2) > x} via I_{d2/(d1 x + d2)}(d2/2, d1/2)."""
    _check_x(x)
    _check_df(d1, d2)
    if math.isinf(x):
        return 0.0
    if x == 0:
        return 1.0
    # both complementary arguments are formed directly to keep tail accuracy
    return _clamp(special.betainc(d2 / 2.0, d1 / 2.0, d2 / (d1 * x + d2)))


def _upper_quantile(sf: Callable[[float], float], p: float, tol: float) -> float:
    hi = 1.0
    while sf(hi) > p:
        hi *= 2.0
        if hi > 1e300:
            raise DomainError("could not bracket quantile")
    lo = 0.0
    if hi > 1.0:
        lo = hi / 2.0
    return optimize.brentq(lambda x: sf(x) - p, lo, hi, xtol=tol, rtol=4 * np.finfo(float).eps, maxiter=500)


def chi2_quantile(p: float, df: float, acc: DistAccuracy = DEFAULT_ACCURACY) -> float:
    """Point ``x`` with ``chi2_sf(x, df) == p``."""
    _check_p(p)
    _check_df(df)
    return _upper_quantile(lambda x: chi2_sf(x, df), p, acc.quantile_tol)


def f_quantile(p: float, d1: float, d2: float, acc: DistAccuracy = DEFAULT_ACCURACY) -> float:
    """Point ``x`` with ``f_sf(x, d1, d2) == p``."""
    _check_p(p)
    _check_df(d1, d2)
    return _upper_quantile(lambda x: f_sf(x, d1, d2), p, acc.quantile_tol)


def _poisson_mixture(lam: float, term: Callable[[int], float], acc: DistAccuracy) -> float:
    """Sum ``pois(j; lam/2) * term(j)`` outward from the mode of the weights."""
    mu = lam / 2.0
    if mu == 0:
        return term(0)
    mode = int(math.floor(mu))

    def log_w(j: int) -> float:
        return -mu + j * math.log(mu) - math.lgamma(j + 1.0)

    total = 0.0
    mass = 0.0
    used = 0
    up, down = mode, mode - 1
    w_up = math.exp(log_w(up))
    w_down = math.exp(log_w(down)) if down >= 0 else 0.0
    while 1.0 - mass > acc.abs_tol:
        if used >= acc.max_series_terms:
            raise SeriesError(f"Poisson mixture did not converge in {used} terms (lambda={lam})")
        # take the heavier side first so the residual shrinks fastest
        if down >= 0 and w_down >= w_up:
            total += w_down * term(down)
            mass += w_down
            w_down = w_down * down / mu if down > 0 else 0.0
            down -= 1
        else:
            total += w_up * term(up)
            mass += w_up
            up += 1
            w_up = w_up * mu / up
        used += 1
        if w_up == 0.0 and (down < 0 or w_down == 0.0):
            break
    return total


def nc_chi2_sf(x: float, df: float, lam: float, acc: DistAccuracy = DEFAULT_ACCURACY) -> float:
    """Upper tail of the noncentral chi-square with noncentrality ``lam``."""
    _check_x(x)
    _check_df(df)
    if not lam >= 0:
        raise DomainError(f"noncentrality must be nonnegative, got {lam}")
    if math.isinf(x):
        return 0.0
    return _clamp(_poisson_mixture(lam, lambda j: special.gammaincc(df / 2.0 + j, x / 2.0), acc))


def nc_f_sf(x: float, d1: float, d2: float, lam: float, acc: DistAccuracy = DEFAULT_ACCURACY) -> float:
    """Upper tail of the noncentral F(d1, d2, lam)."""
    _check_x(x)
    _check_df(d1, d2)
    if not lam >= 0:
        raise DomainError(f"noncentrality must be nonnegative, got {lam}")
    if math.isinf(x):
        return 0.0
    if x == 0:
        return 1.0
    y = d2 / (d1 * x + d2)
    return _clamp(_poisson_mixture(lam, lambda j: special.betainc(d2 / 2.0, d1 / 2.0 + j, y), acc))


@lru_cache(maxsize=None)
def _hermite_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = special.roots_hermitenorm(n)
    weights = weights / math.sqrt(2.0 * math.pi)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_quadrature_expectation(
    f: Callable[[np.ndarray], np.ndarray],
    n: int = 96,
    *,
    adaptive: bool = True,
    tol: float = 1e-9,
    max_nodes: int = 768,
) -> float:
    """E[f(Z)] for standard normal Z by Gauss-Hermite quadrature.

    ``f`` must accept a numpy array of nodes. With ``adaptive`` the node
    count is doubled from ``n`` until two successive estimates agree to
    ``tol`` (or ``max_nodes`` is reached).
    """
    if n < 8:
        raise DomainError("quadrature needs at least 8 nodes")

    def estimate(m: int) -> float:
        z, w = _hermite_nodes(m)
        return float(np.dot(w, f(z)))

    value = estimate(n)
    if not adaptive:
        return value
    while n < max_nodes:
        n *= 2
        refined = estimate(n)
        if abs(refined - value) <= tol:
            return refined
        value = refined
    return value
