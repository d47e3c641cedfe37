"""Monte Carlo estimates of P(S), P(L), P(H) and related statistics.

Trial t always uses the random streams keyed by (seed, t), and per-trial
results are merged by adding counters, so any partition of trials across
worker processes gives the same TrialStats.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from statistics import NormalDist
from typing import Optional, Sequence, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _cc

from .asymptotics import Constant, Critical, Linear, Scaled, asymptote_for
from .matching import hopcroft_karp
from .models import (ModelAParams, ModelBParams, SampledEdges, sample_model_a_arrays,
                     sample_model_b_arrays)
from .stability import classify_thin

FK_MAX_N = 24

Params = Union[ModelAParams, ModelBParams]


@dataclass
class TrialStats:
    trials: int = 0
    s_count: int = 0
    l_count: int = 0
    h_count: int = 0
    isolated_histogram: Counter = field(default_factory=Counter)
    small_component_count: int = 0
    # None when thin classification was skipped (n > FK_MAX_N)
    fk_counts: Optional[Counter] = field(default_factory=Counter)

    def merge(self, other: "TrialStats") -> "TrialStats":
        fk = None
        if self.fk_counts is not None and other.fk_counts is not None:
            fk = self.fk_counts + other.fk_counts
        return TrialStats(
            self.trials + other.trials,
            self.s_count + other.s_count,
            self.l_count + other.l_count,
            self.h_count + other.h_count,
            self.isolated_histogram + other.isolated_histogram,
            self.small_component_count + other.small_component_count,
            fk,
        )

    def isolated_mean_var(self) -> tuple[float, float]:
        """Sample mean and (unbiased) sample variance of the isolated-vertex count."""
        t = self.trials
        mean = sum(k * c for k, c in self.isolated_histogram.items()) / t
        ss = sum(c * (k - mean) ** 2 for k, c in self.isolated_histogram.items())
        return mean, ss / (t - 1) if t > 1 else 0.0


@dataclass(frozen=True)
class Estimate:
    point: float
    ci_low: float
    ci_high: float
    trials: int
    seed: int


def wilson_ci(successes: int, trials: int, level: float = 0.95) -> tuple[float, float]:
    if trials < 1 or not 0 <= successes <= trials:
        raise ValueError("need trials >= 1 and 0 <= successes <= trials")
    if not 0 < level < 1:
        raise ValueError("level must be in (0, 1)")
    z = NormalDist().inv_cdf(0.5 + level / 2)
    phat = successes / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z / denom * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
    low = 0.0 if successes == 0 else max(0.0, center - half)
    high = 1.0 if successes == trials else min(1.0, center + half)
    return low, high


def estimate(successes: int, trials: int, seed: int, level: float = 0.95) -> Estimate:
    low, high = wilson_ci(successes, trials, level)
    point = successes / trials
    return Estimate(point, min(low, point), max(high, point), trials, seed)


@dataclass(frozen=True)
class TrialOutcome:
    S: bool
    L: bool
    H: bool
    isolated: int
    small_component: bool
    fk: Optional[int]


def evaluate_sample(s: SampledEdges, classify: bool) -> TrialOutcome:
    n = s.n
    u0 = s.u - 1
    v0 = s.v - 1
    deg = np.bincount(np.concatenate([u0, v0]), minlength=n)
    looped = np.zeros(n, dtype=bool)
    looped[s.loops - 1] = True
    isolated = int(np.count_nonzero(deg == 0))

    ones = np.ones(len(u0), dtype=np.int8)
    adj = coo_matrix((ones, (u0, v0)), shape=(n, n))
    ncomp, labels = _cc(adj, directed=False)
    sizes = np.bincount(labels, minlength=ncomp)
    L = bool(np.unique(labels[looped]).size == ncomp)
    small = bool(np.any((sizes > 1) & (sizes <= n / 2)))

    if np.any((deg == 0) & ~looped):
        H = False  # a loopless isolated node has an empty row in the double cover
    else:
        H = _perfect_matching(n, u0, v0, s.loops - 1)

    fk = None
    if classify and not H:
        fk = classify_thin(s.to_graph()).k
    return TrialOutcome(L and H, L, H, isolated, small, fk)


def _perfect_matching(n: int, u0: np.ndarray, v0: np.ndarray, loops0: np.ndarray) -> bool:
    src = np.concatenate([u0, v0, loops0])
    dst = np.concatenate([v0, u0, loops0])
    order = np.argsort(src, kind="stable")
    bounds = np.searchsorted(src[order], np.arange(n + 1))
    targets = dst[order].tolist()
    b = bounds.tolist()
    adj = [targets[b[i]:b[i + 1]] for i in range(n)]
    match = hopcroft_karp(n, n, adj)
    return all(m >= 0 for m in match)


def _sample(params: Params, trial: int) -> SampledEdges:
    if isinstance(params, ModelAParams):
        return sample_model_a_arrays(params, trial)
    return sample_model_b_arrays(params, trial)


def _run_range(params: Params, start: int, stop: int) -> TrialStats:
    classify = params.n <= FK_MAX_N
    st = TrialStats(fk_counts=Counter() if classify else None)
    for t in range(start, stop):
        o = evaluate_sample(_sample(params, t), classify)
        st.trials += 1
        st.s_count += o.S
        st.l_count += o.L
        st.h_count += o.H
        st.isolated_histogram[o.isolated] += 1
        st.small_component_count += o.small_component
        if classify and o.fk is not None and o.fk >= 2:
            st.fk_counts[o.fk] += 1
    return st


def run_trials(params: Params, trials: int, workers: int = 1) -> TrialStats:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or trials < 2 * workers:
        return _run_range(params, 0, trials)
    chunks = max(workers * 4, 1)
    edges = [trials * i // chunks for i in range(chunks + 1)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(_run_range, [params] * chunks, edges[:-1], edges[1:]))
    total = parts[0]
    for p in parts[1:]:
        total = total.merge(p)
    return total


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    model: str
    n: int
    trials: int
    seed: int
    c: Optional[float]
    p: Optional[float]
    q: Optional[float]
    N: Optional[int]
    M: Optional[int]
    mu: Optional[float]
    stable: Estimate
    p_L: float
    p_H: float
    asymptote: Optional[float]


def critical_p(n: int, c: float) -> float:
    return min(1.0, max(0.0, (math.log(n) + c) / n))


def critical_N(n: int, c: float) -> int:
    return min(n * (n - 1) // 2, max(0, round(n / 2 * (math.log(n) + c))))


def sweep(model: str, n: int, trials: int, seed: int,
          edge_values: Sequence[float], loop_values: Sequence[float],
          edge_kind: str = "c", loop_kind: str = "constant",
          workers: int = 1) -> list[SweepRow]:
    """One row per (edge value, loop value), edge value outer.

    edge_kind: 'c' (critical offset), 'p' (model A) or 'N' (model B).
    loop_kind: 'scaled' (q = mu/n), 'constant' (q = mu, or M = round(mu) in
    model B), 'linear' (M = floor(mu n)), or the raw 'q' / 'M'.
    Every grid point uses the same seed, so model-A rows share their draws.
    """
    if not edge_values or not loop_values:
        raise ValueError("empty sweep grid")
    model = model.lower()
    if model not in ("a", "b"):
        raise ValueError(f"unknown model {model!r}")
    allowed = {"a": ({"c", "p"}, {"scaled", "constant", "q"}),
               "b": ({"c", "N"}, {"constant", "linear", "M"})}[model]
    if edge_kind not in allowed[0] or loop_kind not in allowed[1]:
        raise ValueError(f"model {model}: edge kind in {sorted(allowed[0])}, "
                         f"loop kind in {sorted(allowed[1])}")
    rows = []
    for ev in edge_values:
        for lv in loop_values:
            c = float(ev) if edge_kind == "c" else None
            mu = float(lv) if loop_kind in ("scaled", "constant", "linear") else None
            p = q = N = M = None
            if model == "a":
                p = critical_p(n, c) if c is not None else float(ev)
                q = {"scaled": lambda: min(1.0, lv / n), "constant": lambda: float(lv),
                     "q": lambda: float(lv)}[loop_kind]()
                params: Params = ModelAParams(n, p, q, seed)
            else:
                N = critical_N(n, c) if c is not None else int(ev)
                M = {"constant": lambda: int(round(lv)), "linear": lambda: int(math.floor(lv * n)),
                     "M": lambda: int(lv)}[loop_kind]()
                params = ModelBParams(n, N, M, seed)
            st = run_trials(params, trials, workers)
            asym = None
            if c is not None and mu is not None:
                loop_reg = {"scaled": Scaled, "constant": Constant, "linear": Linear}[loop_kind](mu)
                try:
                    asym = asymptote_for(model, Critical(c), loop_reg)
                except ValueError:
                    asym = None
            rows.append(SweepRow(model, n, trials, seed, c, p, q, N, M, mu,
                                 estimate(st.s_count, trials, seed),
                                 st.l_count / trials, st.h_count / trials, asym))
    return rows
