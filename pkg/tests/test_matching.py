import random

import pytest
from hypothesis import given, settings
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from conftest import (all_graphs, brute_hamiltonian, brute_max_matching, digraphs, graphs,
                      random_corpus)
from structstab.graphs import build_digraph, build_graph
from structstab.matching import (Decomposition, bipartite_double_cover, hall_violator,
                                 has_hamiltonian_decomposition, hopcroft_karp, max_matching)


def test_cover_chain3(chain3):
    assert bipartite_double_cover(chain3).edges == {(1, 2), (2, 1), (3, 2), (1, 3), (2, 2)}


def test_cover_trivial():
    assert bipartite_double_cover(build_digraph(3)).edges == frozenset()
    loops = build_digraph(3, [(1, 1), (2, 2), (3, 3)])
    assert bipartite_double_cover(loops).edges == {(1, 1), (2, 2), (3, 3)}


def test_cover_of_graph_is_symmetric(star):
    e = bipartite_double_cover(star).edges
    assert e == {(1, 4), (2, 4), (3, 4), (4, 1), (4, 2), (4, 3)}


def test_max_matching_chain3(chain3):
    cover = bipartite_double_cover(chain3)
    m = max_matching(cover)
    assert m.size == brute_max_matching(3, cover.edges) == 3
    assert set(m.pairs.items()) <= cover.edges


def test_max_matching_small_cases(star):
    assert max_matching(bipartite_double_cover(build_digraph(4))).size == 0
    cover = bipartite_double_cover(star)
    assert max_matching(cover).size == brute_max_matching(4, cover.edges) == 2


def test_hamiltonian_chain3(chain3):
    ok, dec = has_hamiltonian_decomposition(chain3)
    assert ok and dec.cycles == ((1, 3, 2),)
    assert dec.validate(chain3)


def test_hamiltonian_small():
    assert has_hamiltonian_decomposition(build_graph(1)) == (False, None)
    ok, dec = has_hamiltonian_decomposition(build_graph(2, [(1, 2)]))
    assert ok and dec.cycles == ((1, 2),)


def test_hall_violator_examples(star, triangle):
    h = hall_violator(star)
    assert (h.I, h.neighbors) == ((1, 2), (4,))
    h = hall_violator(build_graph(1))
    assert (h.I, h.neighbors) == ((1,), ())
    assert hall_violator(triangle) is None


def test_decomposition_validate_rejects_bad():
    d = build_digraph(3, [(1, 2), (2, 1), (3, 3)])
    assert Decomposition(((1, 2), (3,))).validate(d)
    assert not Decomposition(((1, 3),)).validate(d)
    assert not Decomposition(((1, 2), (2, 1))).validate(d)


def _scipy_size(n, adj):
    rows = [i for i, js in enumerate(adj) for _ in js]
    cols = [j for js in adj for j in js]
    mat = csr_matrix(([1] * len(rows), (rows, cols)), shape=(n, n))
    return int((maximum_bipartite_matching(mat, perm_type="column") >= 0).sum())


def test_hopcroft_karp_against_scipy():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 60)
        p = rng.random() * 4 / n
        adj = [[j for j in range(n) if rng.random() < p] for _ in range(n)]
        match = hopcroft_karp(n, n, adj)
        used = [j for j in match if j >= 0]
        assert len(used) == len(set(used))
        assert all(j in adj[i] for i, j in enumerate(match) if j >= 0)
        assert len(used) == _scipy_size(n, adj)


def test_hamiltonian_exhaustive_small():
    for n in range(1, 5):
        for g in all_graphs(n):
            ok, dec = has_hamiltonian_decomposition(g)
            assert ok == brute_hamiltonian(g)
            if ok:
                assert dec.validate(g.to_digraph()) and dec.covered == tuple(range(1, n + 1))


def test_hamiltonian_random_corpus():
    for g in random_corpus(2000, 2, 7, seed=11):
        assert has_hamiltonian_decomposition(g)[0] == brute_hamiltonian(g)


@given(digraphs(max_n=6))
def test_matching_size_equals_brute_force(d):
    cover = bipartite_double_cover(d)
    assert max_matching(cover).size == brute_max_matching(d.n, cover.edges)


@settings(max_examples=300)
@given(graphs(max_n=8))
def test_violator_iff_no_perfect_matching(g):
    cert = hall_violator(g)
    ok, dec = has_hamiltonian_decomposition(g)
    assert (cert is None) == ok
    if cert is not None:
        assert cert.validate(g)
    else:
        assert dec.validate(g.to_digraph())


@pytest.mark.parametrize("n", [30, 120])
def test_perfect_matching_on_loops_plus_path(n):
    g = build_graph(n, [(i, i + 1) for i in range(1, n)], [1])
    # a path with a loop at one end: 2-cycles when n is even, plus the loop when odd
    assert has_hamiltonian_decomposition(g)[0]
    g = build_graph(n + 1, [(i, i + 1) for i in range(2, n + 1)])
    assert not has_hamiltonian_decomposition(g)[0]
