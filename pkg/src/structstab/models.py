"""Seeded samplers for the two random models of symmetric patterns.

Model A: each of the n(n-1)/2 edges independently with probability p, each
loop independently with probability q. Model B: exactly N edges and exactly M
loops, each set uniform.

Randomness comes from numpy's Philox-4x64 counter-based generator. The key for
trial t of seed s is derived by SeedSequence(s, spawn_key=(t, stream)), with
stream 0 for edges and 1 for loops. In model A the uniform for edge {u, v}
(u < v, 0-based) is the draw at position v(v-1)/2 + u of the edge stream, so a
slot's value never depends on p, q or on other trials.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph

EDGE_STREAM = 0
LOOP_STREAM = 1
_CHUNK = 1 << 22


@dataclass(frozen=True)
class ModelAParams:
    n: int
    p: float
    q: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0.0 <= self.p <= 1.0 or not 0.0 <= self.q <= 1.0:
            raise ValueError("p and q must lie in [0, 1]")
        _check_seed(self.seed)


@dataclass(frozen=True)
class ModelBParams:
    n: int
    N: int
    M: int
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.N <= self.n * (self.n - 1) // 2:
            raise ValueError(f"N must be in [0, {self.n * (self.n - 1) // 2}]")
        if not 0 <= self.M <= self.n:
            raise ValueError(f"M must be in [0, {self.n}]")
        _check_seed(self.seed)


@dataclass(frozen=True)
class SampledEdges:
    """Array form of a sample: 1-based endpoints u < v and looped nodes."""

    n: int
    u: np.ndarray
    v: np.ndarray
    loops: np.ndarray

    def to_graph(self) -> Graph:
        edges = frozenset(zip(self.u.tolist(), self.v.tolist()))
        return Graph(self.n, edges, frozenset(self.loops.tolist()))


def _check_seed(seed: int) -> None:
    if not isinstance(seed, (int, np.integer)) or not 0 <= seed < 2**64:
        raise ValueError("seed must be an integer in [0, 2**64)")


def stream(seed: int, trial: int, purpose: int) -> np.random.Generator:
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(trial), int(purpose)))
    return np.random.Generator(np.random.Philox(ss))


def pair_index(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Colex index of 0-based pairs u < v."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    return v * (v - 1) // 2 + u


def index_pair(idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of pair_index, exact for idx < 2**52."""
    idx = np.asarray(idx, dtype=np.int64)
    v = ((1.0 + np.sqrt(1.0 + 8.0 * idx)) / 2.0).astype(np.int64)
    # float rounding can be off by one either way
    v = np.where(v * (v - 1) // 2 > idx, v - 1, v)
    v = np.where((v + 1) * v // 2 <= idx, v + 1, v)
    return idx - v * (v - 1) // 2, v


def _model_a_uniforms(n: int, seed: int, trial: int):
    """Yield (offset, uniforms) chunks over the edge slots."""
    total = n * (n - 1) // 2
    rng = stream(seed, trial, EDGE_STREAM)
    off = 0
    while off < total:
        size = min(_CHUNK, total - off)
        yield off, rng.random(size)
        off += size


def _threshold_a(n: int, seed: int, trial: int, ps: list[float], qs: list[float]):
    hits = [[] for _ in ps]
    for off, u in _model_a_uniforms(n, seed, trial):
        for out, p in zip(hits, ps):
            out.append(np.flatnonzero(u < p) + off)
    lu = stream(seed, trial, LOOP_STREAM).random(n)
    results = []
    for out, q in zip(hits, qs):
        idx = np.concatenate(out) if out else np.zeros(0, dtype=np.int64)
        a, b = index_pair(idx)
        loops = np.flatnonzero(lu < q) + 1
        results.append(SampledEdges(n, a + 1, b + 1, loops))
    return results


def sample_model_a_arrays(params: ModelAParams, trial: int = 0) -> SampledEdges:
    return _threshold_a(params.n, params.seed, trial, [params.p], [params.q])[0]


def sample_model_a(params: ModelAParams, trial: int = 0) -> Graph:
    return sample_model_a_arrays(params, trial).to_graph()


def _partial_fisher_yates(rng: np.random.Generator, total: int, k: int) -> np.ndarray:
    """k distinct values from range(total), uniform over k-subsets, O(k) memory."""
    if k == 0:
        return np.zeros(0, dtype=np.int64)
    picks = rng.integers(np.arange(k, dtype=np.int64), total, dtype=np.int64)
    swapped: dict[int, int] = {}
    out = np.empty(k, dtype=np.int64)
    for i, j in enumerate(picks.tolist()):
        vj = swapped.get(j, j)
        swapped[j] = swapped.get(i, i)
        out[i] = vj
    return out


def sample_model_b_arrays(params: ModelBParams, trial: int = 0) -> SampledEdges:
    n = params.n
    total = n * (n - 1) // 2
    idx = np.sort(_partial_fisher_yates(stream(params.seed, trial, EDGE_STREAM), total, params.N))
    a, b = index_pair(idx)
    loops = np.sort(_partial_fisher_yates(stream(params.seed, trial, LOOP_STREAM), n, params.M)) + 1
    return SampledEdges(n, a + 1, b + 1, loops)


def sample_model_b(params: ModelBParams, trial: int = 0) -> Graph:
    return sample_model_b_arrays(params, trial).to_graph()


def coupled_pair_a(n: int, p1: float, p2: float, q1: float, q2: float, seed: int,
                   trial: int = 0) -> tuple[Graph, Graph]:
    """Two model-A graphs sharing every uniform draw, so G1 is a subgraph of G2.

    Each marginal equals sample_model_a with the same seed and trial.
    """
    if p1 > p2 or q1 > q2:
        raise ValueError("coupling needs p1 <= p2 and q1 <= q2")
    ModelAParams(n, p1, q1, seed)
    ModelAParams(n, p2, q2, seed)
    g1, g2 = _threshold_a(n, seed, trial, [p1, p2], [q1, q2])
    return g1.to_graph(), g2.to_graph()
