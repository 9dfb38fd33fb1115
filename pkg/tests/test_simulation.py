import math

import numpy as np
import pytest

from rcbd.errors import DomainError
from rcbd.exact import critical_value, exact_null_distribution
from rcbd.shift import Family, ShiftModel
from rcbd.simulation import (
    CHUNK_SIZE,
    SimConfig,
    default_workers,
    sample_block,
    sample_blocks,
    simulate_exact_test,
    simulate_levels,
    simulate_power,
    simulate_rejections,
)


def _rng(seed=0):
    return np.random.default_rng(seed)


def test_sample_block_shape():
    x = sample_block("normal", [0.0, 1.0, 2.0], _rng())
    assert x.shape == (3,)


def test_normal_mean():
    x = sample_blocks("normal", [0.0], _rng(1), 1_000_000).ravel()
    assert abs(x.mean()) < 4 / math.sqrt(x.size)
    assert x.var() == pytest.approx(1.0, abs=0.01)


@pytest.mark.parametrize("fam", list(Family))
def test_family_variance(fam):
    x = sample_blocks(fam, [0.0], _rng(2), 400_000).ravel()
    assert x.var() == pytest.approx(fam.variance, rel=0.02)


def test_supports():
    th = np.array([0.3, -0.2, 0.0])
    u = sample_blocks("uniform", th, _rng(3), 100_000) - th
    assert np.all((u > -0.5) & (u < 0.5))
    e = sample_blocks("exponential", th, _rng(4), 100_000) - th
    assert np.all(e >= 0)


def test_config_validation():
    m = ShiftModel("normal", [0, 0, 0])
    with pytest.raises(DomainError):
        SimConfig(m, 5, reps=100)
    with pytest.raises(DomainError):
        SimConfig(m, 5, alpha=0.0)
    with pytest.raises(DomainError):
        SimConfig(m, 5, seed=-1)
    with pytest.raises(DomainError):
        simulate_power(SimConfig(m, 5, reps=1000))


def test_standard_errors():
    res = simulate_rejections(SimConfig(ShiftModel("normal", [0, 0, 0]), 5, 0.05, 2000, 1))
    for t, r in res.rates.items():
        assert 0 <= r <= 1
        assert res.standard_errors[t] == pytest.approx(math.sqrt(r * (1 - r) / 2000))


def test_worker_count_independence():
    m = ShiftModel("laplace", [-0.3, 0, 0.3, 0.6])
    reps = 3 * CHUNK_SIZE + 123
    one = simulate_rejections(SimConfig(m, 6, 0.05, reps, 99, workers=1))
    two = simulate_rejections(SimConfig(m, 6, 0.05, reps, 99, workers=2))
    again = simulate_rejections(SimConfig(m, 6, 0.05, reps, 99, workers=1))
    assert one == two == again
    other = simulate_rejections(SimConfig(m, 6, 0.05, reps, 100))
    assert other.rejections != one.rejections


def test_levels_match_single_runs():
    m = ShiftModel("normal", [0.0] * 4)
    multi = simulate_levels(SimConfig(m, 5, 0.05, 20_000, 8), [0.1, 0.05, 0.01])
    for a in (0.1, 0.05, 0.01):
        single = simulate_rejections(SimConfig(m, 5, a, 20_000, 8))
        assert multi[a].rejections == single.rejections


def test_debug_invariance_check_runs():
    m = ShiftModel("exponential", [0, 0.2, 0.4])
    res = simulate_rejections(SimConfig(m, 4, 0.05, 5000, 3, debug=True))
    assert res.reps == 5000


def test_null_rates_table_four():
    res = simulate_rejections(SimConfig(ShiftModel("normal", [0.0] * 3), 10, 0.05, 100_000, 11))
    assert res.rates["T"] == pytest.approx(0.04466, abs=0.005)


def test_null_rates_table_six():
    res = simulate_rejections(SimConfig(ShiftModel("normal", [0.0] * 5), 20, 0.01, 100_000, 12))
    assert res.rates["L"] == pytest.approx(0.00984, abs=0.003)


@pytest.mark.parametrize("K,B", [(3, 5), (4, 4), (5, 3)])
def test_exact_test_rate_matches_exact_level(K, B):
    d = exact_null_distribution(K, B)
    c, level = critical_value(d, 0.05)
    res = simulate_exact_test(SimConfig(ShiftModel("normal", [0.0] * K), B, 0.05, 100_000, K * 10 + B), c)
    rate = res.rates["exact"]
    assert abs(rate - level) < 4 * math.sqrt(level * (1 - level) / res.reps)


@pytest.mark.parametrize(
    "fam,theta,B,ref,tol",
    [
        ("normal", [-1, 0, 1], 12, 0.9503, 0.005),
        ("exponential", [-1, -0.5, 0, 0.5, 1], 7, 0.9074, 0.006),
        ("laplace", [-1.4142, 0, 1.4142], 10, 0.9190, 0.006),
    ],
)
def test_simulated_power_examples(fam, theta, B, ref, tol):
    res = simulate_power(SimConfig(ShiftModel(fam, theta), B, 0.05, 100_000, 2024))
    assert res.rates["L"] == pytest.approx(ref, abs=tol)


def test_threads_env(monkeypatch):
    monkeypatch.delenv("RCBD_THREADS", raising=False)
    assert default_workers() == 1
    monkeypatch.setenv("RCBD_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("RCBD_THREADS", "zero")
    with pytest.raises(DomainError):
        default_workers()
