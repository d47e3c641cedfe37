"""Shared corpora and brute-force oracles.

The oracles work straight from the definitions (permutations, subset scans)
and never call into the code paths they check.
"""

import itertools
import random
import sys

import pytest
from hypothesis import strategies as st

from structstab.graphs import Graph, build_digraph, build_graph


def all_graphs(n):
    """Every undirected graph with loops on n nodes: 2^(n(n+1)/2) of them."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for em in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if em >> i & 1]
        for lm in range(1 << n):
            yield build_graph(n, edges, [v + 1 for v in range(n) if lm >> v & 1])


def exhaustive_corpus(max_n=4):
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


def random_graph(rng, n, p=None, q=None):
    p = rng.random() if p is None else p
    q = rng.random() * 0.6 if q is None else q
    edges = [(u, v) for u, v in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
    loops = [v for v in range(1, n + 1) if rng.random() < q]
    return build_graph(n, edges, loops)


def random_corpus(count, n_lo, n_hi, seed):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng, rng.randint(n_lo, n_hi))


def arcs_of(g):
    if isinstance(g, Graph):
        arcs = {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
        return arcs | {(v, v) for v in g.loops}
    return set(g.arcs)


def brute_hamiltonian(g):
    """Some permutation sigma with every i -> sigma(i) an arc."""
    arcs = arcs_of(g)
    nodes = range(1, g.n + 1)
    return any(all((i, s) in arcs for i, s in zip(nodes, perm))
               for perm in itertools.permutations(nodes))


def brute_max_matching(n, edges):
    """Largest set of cover edges with distinct endpoints on both sides."""
    edges = sorted(edges)
    best = 0
    for size in range(n, 0, -1):
        for combo in itertools.combinations(edges, size):
            if len({a for a, _ in combo}) == size and len({b for _, b in combo}) == size:
                return size
    return best


def brute_neighbors(g, I):
    arcs = arcs_of(g)
    return {v for (u, v) in arcs if u in I}


def brute_independent(g, I):
    arcs = arcs_of(g)
    return all((u, v) not in arcs for u in I for v in I)


def brute_min_violator(g):
    """(k, I) for the smallest, then lexicographically first, deficiency-one independent set."""
    for k in range(1, g.n + 1):
        for I in itertools.combinations(range(1, g.n + 1), k):
            if brute_independent(g, I) and len(brute_neighbors(g, I)) == k - 1:
                return k, I
    return None


def brute_k_decomposition(g, k):
    arcs = arcs_of(g)
    for S in itertools.combinations(range(1, g.n + 1), k):
        for img in itertools.permutations(S):
            if all((u, v) in arcs for u, v in zip(S, img)):
                return True
    return False


CHAIN3_ARCS = [(1, 2), (2, 1), (3, 2), (1, 3), (2, 2)]


@pytest.fixture
def chain3():
    return build_digraph(3, CHAIN3_ARCS)


@pytest.fixture
def star():
    return build_graph(4, [(1, 4), (2, 4), (3, 4)])


@pytest.fixture
def triangle():
    return build_graph(3, [(1, 2), (2, 3), (1, 3)])


@st.composite
def graphs(draw, max_n=7, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    loops = draw(st.lists(st.integers(1, n), unique=True))
    return build_graph(n, edges, loops)


@st.composite
def digraphs(draw, max_n=6, min_n=1):
    n = draw(st.integers(min_n, max_n))
    cells = list(itertools.product(range(1, n + 1), repeat=2))
    arcs = draw(st.lists(st.sampled_from(cells), unique=True))
    return build_digraph(n, arcs)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
