"""Power of the Friedman-type tests and minimum number of blocks."""

from __future__ import annotations

from dataclasses import dataclass

from . import distributions as dist
from .errors import DomainError, NotAttainableError
from .ranks import reference_dfs
from .shift import VARIANTS, ShiftModel, noncentrality

__all__ = ["PowerRequest", "SampleSizeResult", "power", "min_blocks", "METHODS"]

METHODS = VARIANTS


@dataclass(frozen=True)
class PowerRequest:
    model: ShiftModel
    B: int
    alpha: float = 0.05
    method: str = "LB"

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.B < 2:
            raise DomainError(f"need B >= 2, got {self.B}")
        m = self.method.upper()
        if m not in METHODS:
            raise DomainError(f"unknown method {self.method!r}; expected one of {METHODS}")
        object.__setattr__(self, "method", m)


@dataclass(frozen=True)
class SampleSizeResult:
    method: str
    min_B: int
    achieved_power: float
    K: int
    target: float
    alpha: float

    @property
    def total_N(self) -> int:
        return self.K * self.min_B

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "min_B": self.min_B,
            "achieved_power": self.achieved_power,
            "total_N": self.total_N,
            "target": self.target,
            "alpha": self.alpha,
        }


def power(req: PowerRequest) -> float:
    """Approximate power of one procedure.

    ``H`` uses the noncentral chi-square with the local-alternative
    noncentrality; ``MA``/``MB`` and ``LA``/``LB`` use noncentral F
    distributions at the M and L reference degrees of freedom.
    """
    K, B, alpha = req.model.K, req.B, req.alpha
    nc = noncentrality(req.model, B, req.method)
    if req.method == "H":
        crit = dist.chi2_quantile(alpha, K - 1)
        return dist.nc_chi2_sf(crit, K - 1, nc.value)
    d1, d2 = reference_dfs(K, B)["M" if req.method[0] == "M" else "L"]
    crit = dist.f_quantile(alpha, d1, d2)
    if nc.value == 0.0:
        return dist.f_sf(crit, d1, d2)
    return dist.nc_f_sf(crit, d1, d2, nc.value)


def _df_ok(method: str, K: int, B: int) -> bool:
    if method in ("MB", "LB"):
        f2 = reference_dfs(K, B)["M" if method == "MB" else "L"][1]
        return f2 > 2
    return True


def min_blocks(
    model: ShiftModel,
    alpha: float = 0.05,
    target: float = 0.90,
    method: str = "LB",
    B_min: int = 3,
    B_max: int = 5000,
) -> SampleSizeResult:
    """Smallest block count in ``[B_min, B_max]`` whose power reaches ``target``.

    Scans upward one block at a time; power is not known to be monotone in B.
    Block counts where a B-variant has denominator df <= 2 are skipped.
    """
    if not 0 < target < 1:
        raise DomainError(f"target power must lie in (0, 1), got {target}")
    if B_min < 3:
        raise DomainError(f"B_min must be at least 3, got {B_min}")
    if B_max < B_min:
        raise DomainError(f"B_max ({B_max}) is below B_min ({B_min})")
    method = method.upper()
    last = None
    for B in range(B_min, B_max + 1):
        if not _df_ok(method, model.K, B):
            continue
        p = power(PowerRequest(model, B, alpha, method))
        last = p
        if p >= target:
            return SampleSizeResult(method, B, p, model.K, target, alpha)
    raise NotAttainableError(
        f"{method}: power {last if last is not None else float('nan'):.4f} at B={B_max} is below target {target}"
    )
