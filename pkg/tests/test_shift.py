import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, stats

from rcbd.errors import DegenerateError, DomainError
from rcbd.ranks import reference_dfs
from rcbd.shift import (
    Family,
    ShiftModel,
    f_star_zero,
    noncentrality,
    p1,
    p2,
    per_block_moments,
    rank_moments,
    tau_H,
)

FAMILIES = list(Family)

# error laws as scipy frozen distributions; oracles only
ORACLE = {
    Family.UNIFORM: stats.uniform(loc=-0.5, scale=1.0),
    Family.NORMAL: stats.norm(),
    Family.LAPLACE: stats.laplace(),
    Family.EXPONENTIAL: stats.expon(),
}


def _mc_p1_p2(fam, th, n=10_000_000, seed=0):
    """Monte Carlo P{X0 > X1} and P{X0 > X1, X0 > X2}, with standard errors."""
    rng = np.random.default_rng(seed)
    hit1 = hit2 = 0
    done = 0
    while done < n:
        m = min(2_000_000, n - done)
        e = ORACLE[fam].rvs(size=(m, 3), random_state=rng)
        x = e + np.asarray(th)
        a = x[:, 0] > x[:, 1]
        hit1 += int(a.sum())
        hit2 += int((a & (x[:, 0] > x[:, 2])).sum())
        done += m
    p, q = hit1 / n, hit2 / n
    return p, math.sqrt(p * (1 - p) / n), q, math.sqrt(q * (1 - q) / n)


def _quad_p1(fam, d):
    """P{e0 + d > e1} by integrating the density of e0."""
    law = ORACLE[fam]
    lo, hi = law.support()
    return integrate.quad(lambda u: law.pdf(u) * law.cdf(u + d), max(lo, -40), min(hi, 40), limit=200)[0]


def _quad_p2(fam, a, b):
    law = ORACLE[fam]
    lo, hi = law.support()
    return integrate.quad(lambda u: law.pdf(u) * law.cdf(u + a) * law.cdf(u + b), max(lo, -40), min(hi, 40), limit=200)[0]


ADMISSIBLE = {
    Family.UNIFORM: [(0.3, 0.0, -0.25), (-0.4, 0.1, 0.45), (0.05, 0.6, 0.2)],
    Family.NORMAL: [(1.0, -0.5, 0.2), (-1.2, 0.3, 1.1)],
    Family.LAPLACE: [(1.3, 0.0, -0.7), (-0.6, 1.5, 0.4), (0.2, -1.0, 0.9)],
    Family.EXPONENTIAL: [(0.8, 0.0, -0.4), (-0.9, 0.5, 0.1), (0.3, -0.2, 1.2)],
}


@pytest.mark.parametrize("fam", FAMILIES)
def test_closed_forms_against_monte_carlo(fam):
    for k, th in enumerate(ADMISSIBLE[fam]):
        m = ShiftModel(fam, th)
        mc1, se1, mc2, se2 = _mc_p1_p2(fam, th, seed=k)
        assert abs(p1(m, 0, 1) - mc1) < 4 * se1
        assert abs(p2(m, 0, 1, 2) - mc2) < 4 * se2


@pytest.mark.parametrize("fam", FAMILIES)
def test_closed_forms_against_quadrature(fam):
    for th in ADMISSIBLE[fam]:
        m = ShiftModel(fam, th)
        for i, l, r in itertools.permutations(range(3)):
            assert p1(m, i, l) == pytest.approx(_quad_p1(fam, th[i] - th[l]), abs=1e-8)
            assert p2(m, i, l, r) == pytest.approx(_quad_p2(fam, th[i] - th[l], th[i] - th[r]), abs=1e-8)


def test_exponential_example():
    m = ShiftModel("exponential", [-0.5, 0.0])
    assert p1(m, 0, 1) == pytest.approx(0.5 * math.exp(-0.5), abs=1e-12)
    assert p1(m, 0, 1) == pytest.approx(0.30327, abs=1e-5)


@pytest.mark.parametrize("fam", FAMILIES)
def test_equal_shifts(fam):
    m = ShiftModel(fam, [0.2, 0.2, 0.2])
    assert p1(m, 0, 1) == pytest.approx(0.5, abs=1e-12)
    assert p2(m, 0, 1, 2) == pytest.approx(1 / 3, abs=1e-8)


def _shift_strategy(fam):
    width = 0.45 if fam is Family.UNIFORM else 2.0
    return st.lists(st.floats(-width, width), min_size=4, max_size=4)


@pytest.mark.parametrize("fam", FAMILIES)
def test_identities_random(fam):
    @settings(max_examples=25, deadline=None)
    @given(_shift_strategy(fam))
    def check(th):
        m = ShiftModel(fam, th)
        for i, l in itertools.permutations(range(4), 2):
            assert 0 < p1(m, i, l) < 1
            assert p1(m, i, l) + p1(m, l, i) == pytest.approx(1.0, abs=1e-12)
        for i, l, r in itertools.permutations(range(4), 3):
            a, b = p1(m, i, l), p1(m, i, r)
            v = p2(m, i, l, r)
            assert v == pytest.approx(p2(m, i, r, l), abs=1e-12)
            assert max(0.0, a + b - 1) - 1e-9 <= v <= min(a, b) + 1e-9

    check()


def test_uniform_width_constraint():
    with pytest.raises(DomainError):
        ShiftModel("uniform", [-0.5, 0.5])
    ShiftModel("uniform", [-0.49, 0.5])


@pytest.mark.parametrize("fam", FAMILIES)
@pytest.mark.parametrize("B", [2, 7])
def test_null_moments(fam, B):
    K = 4
    rm = rank_moments(ShiftModel(fam, [0.0] * K), B)
    assert rm.mu == pytest.approx([B * (K + 1) / 2] * K, abs=1e-12)
    assert rm.sigma2 == pytest.approx([B * (K * K - 1) / 12] * K, abs=1e-12)
    assert rm.mu_T == pytest.approx(K - 1, abs=1e-12)


@pytest.mark.parametrize("fam", FAMILIES)
def test_rank_sum_conservation(fam):
    rng = np.random.default_rng(2)
    for _ in range(5):
        th = rng.uniform(-0.45, 0.45, size=5)
        rm = rank_moments(ShiftModel(fam, th), 6)
        assert rm.mu.sum() == pytest.approx(6 * 5 * 6 / 2, abs=1e-9)
        assert np.all(rm.sigma2 > 0)
        assert rm.mu_T >= 5 - 1 - 1e-9


def test_mu_T_against_simulation():
    # independent of the library simulation code: scipy ranking on fresh draws
    m = ShiftModel("normal", [-1.0, 0.0, 1.0])
    B, reps = 9, 1_000_000
    rng = np.random.default_rng(7)
    Ts = []
    for _ in range(10):
        x = rng.standard_normal((reps // 10, B, 3)) + np.array(m.theta)
        r = stats.rankdata(x, axis=2)
        R = r.sum(axis=1)
        Ts.append(12 / (B * 3 * 4) * (R**2).sum(axis=1) - 3 * B * 4)
    T = np.concatenate(Ts)
    se = T.std() / math.sqrt(reps)
    assert abs(rank_moments(m, B).mu_T - T.mean()) < 3 * se


def test_f_star_zero():
    assert f_star_zero("uniform") == 1.0
    assert f_star_zero("normal") == pytest.approx(0.2820948, abs=1e-7)
    assert f_star_zero("laplace") == 0.25
    assert f_star_zero("exponential") == 0.5
    for fam in FAMILIES:
        # integral of the squared density
        law = ORACLE[fam]
        lo, hi = law.support()
        val = integrate.quad(lambda u: law.pdf(u) ** 2, max(lo, -40), min(hi, 40), limit=200)[0]
        assert f_star_zero(fam) == pytest.approx(val, abs=1e-8)


def test_tau_H():
    m = ShiftModel("normal", [-1, 0, 1])
    assert tau_H(m, 9) == pytest.approx(162 / (4 * math.pi), abs=1e-12)
    assert tau_H(m, 9) == pytest.approx(12.8916, abs=1e-4)
    assert tau_H(ShiftModel("normal", [0.3] * 3), 9) == 0.0
    assert tau_H(m.scaled(2.0), 9) == pytest.approx(4 * tau_H(m, 9))
    # centring: translation changes nothing
    assert tau_H(ShiftModel("normal", [2, 3, 4]), 9) == pytest.approx(tau_H(m, 9))


@pytest.mark.parametrize("fam", FAMILIES)
def test_null_noncentralities(fam):
    K, B = 4, 6
    m = ShiftModel(fam, [0.0] * K)
    dfs = reference_dfs(K, B)
    assert noncentrality(m, B, "MA").value == pytest.approx(0.0, abs=1e-12)
    assert noncentrality(m, B, "LA").value == pytest.approx(0.0, abs=1e-12)
    m1, m2 = dfs["M"]
    l1, l2 = dfs["L"]
    assert noncentrality(m, B, "MB").value == pytest.approx(2 * m1 / (m2 - 2), abs=1e-12)
    assert noncentrality(m, B, "LB").value == pytest.approx(2 * l1 / (l2 - 2), abs=1e-12)


@pytest.mark.parametrize("fam", FAMILIES)
def test_label_equivariance_and_translation(fam):
    th = np.array([0.3, -0.2, 0.1, 0.4, -0.1])
    m = ShiftModel(fam, th)
    perm = np.array([3, 0, 4, 1, 2])
    mp = ShiftModel(fam, th[perm])
    mt = ShiftModel(fam, th + 0.05)
    mu, var = per_block_moments(m)
    mup, varp = per_block_moments(mp)
    assert mup == pytest.approx(mu[perm], abs=1e-10)
    assert varp == pytest.approx(var[perm], abs=1e-10)
    for v in ("H", "MA", "MB", "LA", "LB"):
        base = noncentrality(m, 8, v).value
        assert noncentrality(mp, 8, v).value == pytest.approx(base, abs=1e-10)
        assert noncentrality(mt, 8, v).value == pytest.approx(base, abs=1e-10)


def test_noncentrality_errors():
    m = ShiftModel("normal", [-1, 0, 1])
    with pytest.raises(DomainError):
        noncentrality(m, 2, "MB")  # m2 = 0.5
    with pytest.raises(DomainError):
        noncentrality(m, 5, "XX")
    far = ShiftModel("normal", [-40, 0, 40])
    with pytest.raises(DegenerateError):
        noncentrality(far, 3, "MA")  # mu_T reaches M


def test_family_parse():
    assert Family.parse("Gaussian") is Family.NORMAL
    assert Family.parse("exp") is Family.EXPONENTIAL
    with pytest.raises(DomainError):
        Family.parse("cauchy")
