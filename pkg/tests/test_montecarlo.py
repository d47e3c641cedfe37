import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_graph
from structstab.graphs import connected_components
from structstab.matching import has_hamiltonian_decomposition
from structstab.models import ModelAParams, ModelBParams, SampledEdges, sample_model_a_arrays
from structstab.montecarlo import (TrialStats, _run_range, critical_N, critical_p, estimate,
                                   evaluate_sample, run_trials, sweep, wilson_ci)
from structstab.stability import Status, check_L, check_symmetric_stability, classify_thin


def test_wilson_extremes():
    low, high = wilson_ci(0, 100)
    assert low == 0.0 and high == pytest.approx(0.0370, abs=1e-4)
    low, high = wilson_ci(100, 100)
    assert high == 1.0 and low == pytest.approx(0.9630, abs=1e-4)


def test_wilson_midpoint():
    low, high = wilson_ci(50, 100)
    assert low == pytest.approx(0.4038, abs=1e-4)
    assert high == pytest.approx(0.5962, abs=1e-4)


def test_wilson_rejects():
    for args in ((1, 0), (5, 4), (-1, 4)):
        with pytest.raises(ValueError):
            wilson_ci(*args)


@given(st.integers(1, 5000), st.data())
def test_wilson_contains_point(trials, data):
    k = data.draw(st.integers(0, trials))
    low, high = wilson_ci(k, trials)
    assert 0 <= low <= k / trials <= high <= 1
    e = estimate(k, trials, seed=0)
    assert e.ci_low <= e.point <= e.ci_high


def _as_arrays(g):
    u = np.array([a for a, _ in sorted(g.edges)], dtype=np.int64)
    v = np.array([b for _, b in sorted(g.edges)], dtype=np.int64)
    return SampledEdges(g.n, u, v, np.array(sorted(g.loops), dtype=np.int64))


def test_evaluate_sample_matches_exact_checks():
    rng = random.Random(2)
    for _ in range(400):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, p=rng.uniform(0, 0.5), q=rng.uniform(0, 0.6))
        o = evaluate_sample(_as_arrays(g), classify=True)
        v = check_symmetric_stability(g)
        assert o.S == (v.status is Status.STABLE)
        assert o.L == check_L(g)[0]
        assert o.H == has_hamiltonian_decomposition(g)[0]
        assert o.isolated == sum(1 for x in range(1, n + 1) if g.degree(x) == 0)
        sizes = [len(c) for c in connected_components(g)]
        assert o.small_component == any(1 < s <= n / 2 for s in sizes)
        if not o.H:
            assert o.fk == classify_thin(g).k


def test_complete_graph_all_stable():
    st_ = run_trials(ModelAParams(15, 1.0, 0.5, seed=1), 40)
    assert st_.h_count == 40
    assert st_.s_count == st_.l_count


def test_empty_graph_all_isolated():
    n = 30
    st_ = run_trials(ModelAParams(n, 0.0, 0.0, seed=1), 25)
    assert st_.isolated_histogram == {n: 25}
    assert st_.s_count == st_.l_count == st_.h_count == 0


def test_all_looped_is_stable():
    st_ = run_trials(ModelBParams(40, 10, 40, seed=0), 30)
    assert st_.s_count == 30


@pytest.mark.parametrize("params", [ModelAParams(120, 0.04, 0.3, seed=5),
                                    ModelBParams(22, 30, 5, seed=5)])
def test_worker_count_invariance(params):
    one = run_trials(params, 64, workers=1)
    four = run_trials(params, 64, workers=4)
    assert one == four


def test_merge_is_additive():
    params = ModelAParams(20, 0.15, 0.2, seed=9)
    whole = run_trials(params, 30)
    parts = _run_range(params, 0, 11).merge(_run_range(params, 11, 30))
    assert parts == whole


def test_merge_drops_fk_when_missing():
    a = TrialStats(trials=1)
    b = TrialStats(trials=1, fk_counts=None)
    assert a.merge(b).fk_counts is None


def test_isolated_mean_var():
    st_ = TrialStats(trials=4)
    st_.isolated_histogram.update({0: 2, 2: 2})
    assert st_.isolated_mean_var() == (1.0, pytest.approx(4 / 3))


def test_fk_counts_skipped_when_large():
    st_ = run_trials(ModelAParams(30, 0.1, 0.1, seed=0), 5)
    assert st_.fk_counts is None


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30), st.floats(0, 0.6), st.floats(0, 1), st.integers(0, 2**32))
def test_s_bounded_by_l_and_h(n, p, q, seed):
    st_ = run_trials(ModelAParams(n, p, q, seed), 10)
    assert st_.s_count <= min(st_.l_count, st_.h_count)
    assert sum(st_.isolated_histogram.values()) == 10


def test_critical_helpers():
    assert critical_p(1000, 0) == pytest.approx(math.log(1000) / 1000)
    assert critical_N(1000, 0) == round(500 * math.log(1000))
    assert critical_p(2, 50) == 1.0
    assert critical_N(3, 50) == 3


def test_sweep_rows_and_asymptote():
    rows = sweep("a", 40, 20, seed=3, edge_values=[-1, 0, 1], loop_values=[0.5, 0.9])
    assert len(rows) == 6
    assert [r.c for r in rows] == [-1, -1, 0, 0, 1, 1]
    assert all(r.seed == 3 and r.trials == 20 for r in rows)
    assert rows[2].asymptote == pytest.approx(math.exp(-0.5))
    assert rows[0].p < rows[2].p < rows[4].p


def test_sweep_model_b_and_raw_kinds():
    rows = sweep("b", 30, 10, seed=1, edge_values=[40, 60], loop_values=[3], edge_kind="N",
                 loop_kind="M")
    assert [(r.N, r.M, r.asymptote) for r in rows] == [(40, 3, None), (60, 3, None)]
    rows = sweep("b", 30, 10, seed=1, edge_values=[0], loop_values=[0.5], loop_kind="linear")
    assert rows[0].M == 15 and rows[0].asymptote == pytest.approx(math.exp(-0.5))


def test_sweep_rejects_bad_kinds():
    with pytest.raises(ValueError):
        sweep("a", 10, 5, 0, [0], [1], loop_kind="linear")
    with pytest.raises(ValueError):
        sweep("c", 10, 5, 0, [0], [1])
    with pytest.raises(ValueError):
        sweep("a", 10, 5, 0, [], [1])


def test_shared_draws_across_grid():
    # rows with larger p sit above rows with smaller p trial by trial
    lo = sample_model_a_arrays(ModelAParams(50, critical_p(50, -1), 0.5, 2), 0)
    hi = sample_model_a_arrays(ModelAParams(50, critical_p(50, 1), 0.5, 2), 0)
    assert set(zip(lo.u.tolist(), lo.v.tolist())) <= set(zip(hi.u.tolist(), hi.v.tolist()))
