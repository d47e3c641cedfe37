"""Immutable graph values: undirected graphs with loops, digraphs, zero-patterns.

Node ids are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union


def _check_ids(n: int, ids: Iterable[int]) -> None:
    for v in ids:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
            raise ValueError(f"node id {v!r} out of range [1, {n}]")


def vertex_set(ids: Iterable[int]) -> tuple[int, ...]:
    """Canonical sorted, duplicate-free vertex set."""
    return tuple(sorted(set(ids)))


@dataclass(frozen=True)
class Graph:
    """Undirected graph on nodes 1..n; loops are kept apart from edges."""

    n: int
    edges: frozenset[tuple[int, int]]
    loops: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        for u, v in self.edges:
            if not u < v:
                raise ValueError(f"edge {(u, v)} is not canonical (u < v)")
            _check_ids(self.n, (u, v))
        _check_ids(self.n, self.loops)

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """adjacency[v-1] = neighbours of v, including v itself when looped."""
        adj = self.__dict__.get("_adj")
        if adj is None:
            sets: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.edges:
                sets[u - 1].add(v)
                sets[v - 1].add(u)
            for v in self.loops:
                sets[v - 1].add(v)
            adj = tuple(frozenset(s) for s in sets)
            object.__setattr__(self, "_adj", adj)
        return adj

    def degree(self, v: int) -> int:
        """Number of non-loop edges at v."""
        return len(self.adjacency[v - 1] - {v})

    def to_digraph(self) -> "Digraph":
        arcs = set()
        for u, v in self.edges:
            arcs.add((u, v))
            arcs.add((v, u))
        arcs.update((v, v) for v in self.loops)
        return Digraph(self.n, frozenset(arcs))


@dataclass(frozen=True)
class Digraph:
    """Directed graph on nodes 1..n; a loop is the arc (i, i)."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        for u, v in self.arcs:
            _check_ids(self.n, (u, v))

    @property
    def out_adjacency(self) -> tuple[frozenset[int], ...]:
        adj = self.__dict__.get("_out")
        if adj is None:
            sets: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.arcs:
                sets[u - 1].add(v)
            adj = tuple(frozenset(s) for s in sets)
            object.__setattr__(self, "_out", adj)
        return adj

    @property
    def loops(self) -> frozenset[int]:
        return frozenset(u for u, v in self.arcs if u == v)

    def is_symmetric(self) -> bool:
        return all((v, u) in self.arcs for u, v in self.arcs)

    def to_graph(self) -> Graph:
        """Collapse a symmetric digraph: arc pairs become edges, (i, i) a loop."""
        if not self.is_symmetric():
            raise ValueError("cannot collapse a non-symmetric digraph to a Graph")
        edges = frozenset((u, v) for u, v in self.arcs if u < v)
        return Graph(self.n, edges, self.loops)


@dataclass(frozen=True)
class ZeroPattern:
    """Free (starred) entries of an n x n matrix; everything else is fixed at 0."""

    n: int
    support: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        for i, j in self.support:
            _check_ids(self.n, (i, j))

    def is_symmetric(self) -> bool:
        return all((j, i) in self.support for i, j in self.support)

    def to_text(self) -> str:
        rows = []
        for i in range(1, self.n + 1):
            rows.append(" ".join("*" if (i, j) in self.support else "0"
                                 for j in range(1, self.n + 1)))
        return "\n".join(rows)


AnyGraph = Union[Graph, Digraph]


def build_graph(n: int, edges: Iterable[tuple[int, int]] = (),
                loops: Iterable[int] = ()) -> Graph:
    """Validate and canonicalize an undirected graph with loops."""
    if n < 1:
        raise ValueError("n must be >= 1")
    canon = set()
    for u, v in edges:
        _check_ids(n, (u, v))
        if u == v:
            raise ValueError(f"loop in edge list: ({u}, {v}); pass loops separately")
        canon.add((min(u, v), max(u, v)))
    loops = list(loops)
    _check_ids(n, loops)
    return Graph(n, frozenset(canon), frozenset(loops))


def build_digraph(n: int, arcs: Iterable[tuple[int, int]] = ()) -> Digraph:
    if n < 1:
        raise ValueError("n must be >= 1")
    arcs = frozenset((u, v) for u, v in arcs)
    for u, v in arcs:
        _check_ids(n, (u, v))
    return Digraph(n, arcs)


def neighbor_set(g: AnyGraph, nodes: Iterable[int]) -> tuple[int, ...]:
    """N(I): every v reachable by one edge (or out-arc) from some u in I.

    A loop at u puts u itself into N({u}).
    """
    nodes = list(nodes)
    _check_ids(g.n, nodes)
    adj = g.adjacency if isinstance(g, Graph) else g.out_adjacency
    out: set[int] = set()
    for u in nodes:
        out |= adj[u - 1]
    return vertex_set(out)


def is_independent(g: Graph, nodes: Iterable[int]) -> bool:
    """No edge inside the set and no looped member."""
    members = set(nodes)
    _check_ids(g.n, members)
    adj = g.adjacency
    return all(not (adj[u - 1] & members) for u in members)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components ordered by smallest member; loops connect nothing."""
    seen = [False] * (g.n + 1)
    adj = g.adjacency
    comps = []
    for s in range(1, g.n + 1):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u - 1]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(vertex_set(comp))
    return comps


def strongly_connected_components(d: Digraph) -> list[tuple[int, ...]]:
    """Tarjan's algorithm, iterative. Components ordered by smallest member."""
    adj = [sorted(s) for s in d.out_adjacency]
    index = [0] * (d.n + 1)
    low = [0] * (d.n + 1)
    on_stack = [False] * (d.n + 1)
    visited = [False] * (d.n + 1)
    stack: list[int] = []
    comps = []
    counter = 1
    for root in range(1, d.n + 1):
        if visited[root]:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                visited[v] = True
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            nbrs = adj[v - 1]
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if not visited[w]:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(vertex_set(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sorted(comps)


def pattern_graph_bijection(x: Union[ZeroPattern, Digraph]) -> Union[Digraph, ZeroPattern]:
    """Zero-pattern support <-> digraph arcs; (i, j) free iff arc i -> j."""
    if isinstance(x, ZeroPattern):
        return Digraph(x.n, x.support)
    if isinstance(x, Digraph):
        return ZeroPattern(x.n, x.arcs)
    raise TypeError(f"expected ZeroPattern or Digraph, got {type(x).__name__}")


def pattern_of(g: AnyGraph) -> ZeroPattern:
    d = g.to_digraph() if isinstance(g, Graph) else g
    return ZeroPattern(d.n, d.arcs)


def induced_subgraph(g: AnyGraph, nodes: Iterable[int]):
    """Subgraph on `nodes`, relabelled 1..|S| in sorted order.

    Returns (subgraph, label_map) where label_map[new-1] is the original id.
    """
    s = vertex_set(nodes)
    if not s:
        raise ValueError("induced subgraph of an empty vertex set")
    _check_ids(g.n, s)
    new = {v: i + 1 for i, v in enumerate(s)}
    if isinstance(g, Graph):
        edges = [(new[u], new[v]) for u, v in g.edges if u in new and v in new]
        loops = [new[v] for v in g.loops if v in new]
        return Graph(len(s), frozenset(edges), frozenset(loops)), s
    arcs = [(new[u], new[v]) for u, v in g.arcs if u in new and v in new]
    return Digraph(len(s), frozenset(arcs)), s
