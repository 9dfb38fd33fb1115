import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats

from rcbd.errors import DegenerateError, DimensionError, DomainError, TiesError
from rcbd.ranks import (
    BlockData,
    RankTable,
    f_ratio_L,
    f_ratio_shared,
    friedman_T,
    friedman_T_from_sum_squares,
    general_class_params,
    rank_within_blocks,
    reference_dfs,
    run_tests,
)


def test_rank_simple_row():
    r = rank_within_blocks(np.array([[2.3, 1.1, 5.0], [0.0, 1.0, 2.0]]))
    assert r.ranks[0].tolist() == [2, 1, 3]
    assert r.ranks[1].tolist() == [1, 2, 3]


def test_rank_sums_hand_example():
    # (1,2,3) + (3,2,1)
    r = rank_within_blocks(np.array([[0.1, 0.2, 0.3], [0.9, 0.5, 0.1]]))
    assert r.rank_sums.tolist() == [4, 4, 4]
    r = rank_within_blocks(np.array([[0.1, 0.2, 0.3], [0.1, 0.5, 0.9]]))
    assert r.rank_sums.tolist() == [2, 4, 6]


def test_ties_rejected():
    with pytest.raises(TiesError):
        BlockData(np.array([[1.0, 1.0, 2.0], [1.0, 2.0, 3.0]]))


@pytest.mark.parametrize("shape", [(1, 3), (3, 1), (5,)])
def test_dimension_errors(shape):
    with pytest.raises(DimensionError):
        BlockData(np.arange(np.prod(shape), dtype=float).reshape(shape))


def test_nonfinite_rejected():
    with pytest.raises(DomainError):
        BlockData(np.array([[1.0, np.nan], [1.0, 2.0]]))


def test_rank_table_validation():
    with pytest.raises(TiesError):
        RankTable(np.array([[1, 1, 3], [1, 2, 3]]))
    with pytest.raises(DomainError):
        RankTable(np.array([[1, 2, 4], [1, 2, 3]]))


def test_T_worked_example(example_ranks):
    rt = RankTable(example_ranks)
    assert rt.rank_sums.tolist() == [5, 5, 9, 14, 12]
    assert friedman_T(rt) == pytest.approx(8.8, abs=1e-12)


def test_T_extremes():
    same = np.tile(np.arange(1, 5), (6, 1))
    assert friedman_T(RankTable(same)) == pytest.approx(6 * 3)
    balanced = np.array([[1, 2, 3], [3, 2, 1]])
    assert friedman_T(RankTable(balanced)) == 0.0


def test_T_from_sum_squares_is_exact():
    # K=3, B=3: s = 4^2+6^2+8^2 gives T = 8/3 without rounding drift
    assert friedman_T_from_sum_squares(116, 3, 3) == float(Fraction(8, 3))


def test_T_matches_scipy():
    rng = np.random.default_rng(3)
    x = rng.normal(size=(9, 4))
    ours = friedman_T(rank_within_blocks(x))
    ref = stats.friedmanchisquare(*x.T).statistic
    assert ours == pytest.approx(ref, rel=1e-12)


def test_f_ratios():
    assert f_ratio_shared(8.8, 5, 3) == pytest.approx(5.5)
    assert f_ratio_L(8.8, 5, 3) == pytest.approx(3.6667, abs=5e-5)
    assert f_ratio_shared(0.0, 5, 3) == 0.0
    assert f_ratio_L(0.0, 5, 3) == 0.0
    # T = M for K=3, B=4
    assert f_ratio_L(8.0, 3, 4) == pytest.approx(8.0)
    with pytest.raises(DegenerateError):
        f_ratio_shared(8.0, 3, 4)
    assert f_ratio_shared(8.0 - 1e-9, 3, 4) > 1e9


def test_general_class_example():
    # S = M for K=3, B=4 lands on (m1, m2) = (2 - 1/2, 3 * 1.5)
    assert general_class_params(8, 3, 4) == pytest.approx((1.5, 4.5))
    with pytest.raises(DomainError):
        general_class_params(2, 3, 4)


@pytest.mark.parametrize("K", range(2, 11))
@pytest.mark.parametrize("B", [2, 3, 7, 20, 50])
def test_general_class_reproduces_reference_dfs(K, B):
    if K == 2 and B == 2:
        # m1 = K - 1 - 2/B = 0: no valid F reference
        with pytest.raises(DomainError):
            general_class_params(2, 2, 2)
        return
    dfs = reference_dfs(K, B)
    M, L = B * (K - 1), B * (K + 1) - 2
    f1, f2 = general_class_params(M, K, B)
    assert f1 == pytest.approx(dfs["M"][0], abs=1e-12)
    assert f2 == pytest.approx(dfs["M"][1], abs=1e-12)
    f1, f2 = general_class_params(L, K, B)
    assert f1 == pytest.approx(K - 1, abs=1e-12)
    assert f2 == pytest.approx((B - 1) * (K + 1), abs=1e-12)


@pytest.mark.parametrize("K", [3, 4, 6])
@pytest.mark.parametrize("B", [3, 5, 10])
@pytest.mark.parametrize("alpha", [0.1, 0.05, 0.01])
def test_m_quantile_exceeds_r_quantile(K, B, alpha):
    dfs = reference_dfs(K, B)
    assert stats.f.isf(alpha, *dfs["M"]) >= stats.f.isf(alpha, *dfs["R"])


def test_run_tests_worked_example(example_ranks):
    rep = run_tests(RankTable(example_ranks))
    assert rep.T == pytest.approx(8.8)
    assert rep.f_statistic == pytest.approx(5.5)
    assert rep.f_L == pytest.approx(3.6667, abs=5e-5)
    got = (rep.p_chisq, rep.p_R, rep.p_M, rep.p_L)
    assert got == pytest.approx((0.0663, 0.0199, 0.0301, 0.0357), abs=5e-4)
    assert rep.dfs["M"] == pytest.approx((10 / 3, 20 / 3))


def test_run_tests_null_extreme():
    rep = run_tests(RankTable(np.array([[1, 2, 3], [3, 2, 1]])))
    assert min(rep.p_chisq, rep.p_R, rep.p_M, rep.p_L) >= 0.5
    assert not any(rep.decisions.values())


def test_run_tests_degenerate_maximum():
    rep = run_tests(RankTable(np.tile(np.arange(1, 4), (4, 1))))
    assert math.isinf(rep.f_statistic)
    assert rep.p_R == 0.0 and rep.p_M == 0.0
    assert 0 < rep.p_chisq < 1


def test_block_shift_invariance():
    rng = np.random.default_rng(11)
    x = rng.normal(size=(6, 4))
    shifted = x + rng.normal(scale=50, size=(6, 1))
    assert run_tests(x).to_dict() == run_tests(shifted).to_dict()


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 6).flatmap(
        lambda k: st.lists(
            st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=k, max_size=k, unique=True),
            min_size=2,
            max_size=8,
        )
    )
)
def test_monotone_transform_invariance(rows):
    x = np.array(rows)
    y = np.exp(x / 1e3) * 3.0 + 7.0  # strictly increasing
    if np.any(np.diff(np.sort(y, axis=1), axis=1) == 0):
        return  # the transform collapsed two floats
    a, b = run_tests(x).to_dict(), run_tests(y).to_dict()
    assert a == b
    assert 0 <= a["T"] <= a["B"] * (a["K"] - 1) + 1e-9


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8), st.floats(0.0, 0.999))
def test_f_ratios_increasing(K, frac):
    B = 5
    M = B * (K - 1)
    t1, t2 = frac * M * 0.99, frac * M * 0.99 + 0.01
    assert f_ratio_shared(t2, K, B) > f_ratio_shared(t1, K, B)
    assert f_ratio_L(t2, K, B) > f_ratio_L(t1, K, B)


def test_rank_table_invariants():
    rng = np.random.default_rng(5)
    rt = rank_within_blocks(rng.normal(size=(7, 5)))
    assert rt.rank_sums.sum() == 7 * 5 * 6 // 2
    assert rt.rank_sums.min() >= 5 and rt.rank_sums.max() <= 35
