import pytest
from hypothesis import given

from conftest import CHAIN3_ARCS, digraphs, graphs
from structstab.graphs import (Digraph, ZeroPattern, build_digraph, build_graph,
                               connected_components, induced_subgraph, is_independent,
                               neighbor_set, pattern_graph_bijection,
                               strongly_connected_components)


def test_build_graph_smallest():
    g = build_graph(1, [], [1])
    assert g.n == 1 and g.loops == {1} and not g.edges


def test_build_graph_components():
    g = build_graph(3, [(1, 2)], [])
    assert connected_components(g) == [(1, 2), (3,)]


def test_build_graph_dedups_and_canonicalizes():
    g = build_graph(3, [(2, 1), (1, 2), (3, 1)], [2, 2])
    assert g.edges == {(1, 2), (1, 3)}
    assert g.loops == {2}


@pytest.mark.parametrize("n, edges, loops", [
    (2, [(2, 2)], []),
    (2, [(1, 3)], []),
    (2, [], [0]),
    (0, [], []),
])
def test_build_graph_rejects(n, edges, loops):
    with pytest.raises(ValueError):
        build_graph(n, edges, loops)


def test_loop_in_edge_list_message():
    with pytest.raises(ValueError, match="loop in edge list"):
        build_graph(2, [(2, 2)])


def test_neighbor_set(star):
    assert neighbor_set(star, [1, 2, 3]) == (4,)
    assert neighbor_set(star, []) == ()
    path = build_graph(3, [(1, 2), (2, 3)])
    assert neighbor_set(path, [2]) == (1, 3)


def test_neighbor_set_loop_and_digraph(chain3):
    g = build_graph(2, [(1, 2)], [1])
    assert neighbor_set(g, [1]) == (1, 2)
    assert neighbor_set(chain3, [3]) == (2,)
    with pytest.raises(ValueError):
        neighbor_set(g, [3])


def test_is_independent(star):
    assert is_independent(star, [1, 2, 3])
    assert not is_independent(build_graph(2, [(1, 2)]), [1, 2])
    assert not is_independent(build_graph(1, [], [1]), [1])


def test_connected_components_examples(triangle):
    assert connected_components(build_graph(3)) == [(1,), (2,), (3,)]
    assert connected_components(triangle) == [(1, 2, 3)]
    assert connected_components(build_graph(4, [(1, 2)], [4])) == [(1, 2), (3,), (4,)]


def test_scc_examples(chain3):
    # reachability closure by hand: 1->2->1, 1->3->2, so all three mutually reach
    assert strongly_connected_components(chain3) == [(1, 2, 3)]
    assert strongly_connected_components(build_digraph(3, [(1, 2), (2, 3)])) == [(1,), (2,), (3,)]
    assert strongly_connected_components(build_digraph(1, [(1, 1)])) == [(1,)]


def test_bijection_chain3(chain3):
    z = ZeroPattern(3, frozenset(CHAIN3_ARCS))
    assert pattern_graph_bijection(z) == chain3
    assert pattern_graph_bijection(chain3) == z
    # rendered as a 0/* matrix
    assert z.to_text() == "0 * *\n* * 0\n0 * 0"


def test_bijection_empty_and_full():
    assert pattern_graph_bijection(ZeroPattern(2, frozenset())) == Digraph(2, frozenset())
    full = frozenset((i, j) for i in (1, 2, 3) for j in (1, 2, 3))
    d = pattern_graph_bijection(ZeroPattern(3, full))
    assert d.arcs == full and d.loops == {1, 2, 3}


def test_collapse_requires_symmetry():
    with pytest.raises(ValueError):
        build_digraph(2, [(1, 2)]).to_graph()
    g = build_digraph(2, [(1, 2), (2, 1), (2, 2)]).to_graph()
    assert g.edges == {(1, 2)} and g.loops == {2}


def test_induced_subgraph(triangle, chain3):
    sub, labels = induced_subgraph(triangle, [1, 2])
    assert sub.edges == {(1, 2)} and labels == (1, 2)
    sub, _ = induced_subgraph(triangle, [1, 2, 3])
    assert sub == triangle
    sub, _ = induced_subgraph(chain3, [1, 2])
    assert sub.arcs == {(1, 2), (2, 1), (2, 2)}
    with pytest.raises(ValueError):
        induced_subgraph(triangle, [])


def test_induced_subgraph_relabels():
    g = build_graph(4, [(2, 4), (1, 2)], [4])
    sub, labels = induced_subgraph(g, [4, 2])
    assert labels == (2, 4)
    assert sub.edges == {(1, 2)} and sub.loops == {2}


@given(digraphs())
def test_bijection_round_trip(d):
    assert pattern_graph_bijection(pattern_graph_bijection(d)) == d


@given(graphs())
def test_graph_digraph_round_trip(g):
    assert g.to_digraph().to_graph() == g


@given(graphs())
def test_components_partition(g):
    comps = connected_components(g)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(1, g.n + 1))
    where = {v: i for i, c in enumerate(comps) for v in c}
    assert all(where[u] == where[v] for u, v in g.edges)


@given(graphs())
def test_independent_sets_avoid_their_neighbors(g):
    for v in range(1, g.n + 1):
        I = [u for u in range(1, g.n + 1) if u >= v and is_independent(g, [u])]
        if is_independent(g, I):
            assert not set(neighbor_set(g, I)) & set(I)


def _reach(d, s):
    seen, stack = {s}, [s]
    while stack:
        u = stack.pop()
        for a, b in d.arcs:
            if a == u and b not in seen:
                seen.add(b)
                stack.append(b)
    return seen


@given(digraphs(max_n=7))
def test_scc_matches_reachability(d):
    reach = {v: _reach(d, v) for v in range(1, d.n + 1)}
    sccs = strongly_connected_components(d)
    for comp in sccs:
        for u in comp:
            for v in range(1, d.n + 1):
                assert (v in comp) == (v in reach[u] and u in reach[v])


@given(digraphs(max_n=7))
def test_condensation_is_acyclic(d):
    sccs = strongly_connected_components(d)
    where = {v: i for i, c in enumerate(sccs) for v in c}
    quotient = {(where[u], where[v]) for u, v in d.arcs if where[u] != where[v]}
    # Kahn's topological sort consumes every component iff the quotient is a DAG
    indeg = {i: 0 for i in range(len(sccs))}
    for _, b in quotient:
        indeg[b] += 1
    ready = [i for i, k in indeg.items() if k == 0]
    done = 0
    while ready:
        a = ready.pop()
        done += 1
        for x, b in quotient:
            if x == a:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
    assert done == len(sccs)
