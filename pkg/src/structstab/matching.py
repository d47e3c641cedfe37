"""Bipartite double cover, maximum matching and Hall-violator certificates.

A digraph on nodes 1..n has a Hamiltonian decomposition (a spanning union of
disjoint cycles, loops counting as 1-cycles) exactly when its double cover
(left copy i', right copy j'', an edge i'-j'' per arc i -> j) has a perfect
matching: a perfect matching is a permutation supported on the arcs, and a
permutation splits into disjoint cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graphs import AnyGraph, Digraph, Graph, is_independent, neighbor_set, vertex_set


@dataclass(frozen=True)
class BipartiteCover:
    """left[i-1] lists the right-side ids j with edge (i', j'')."""

    n: int
    left: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((i + 1, j) for i, js in enumerate(self.left) for j in js)


@dataclass(frozen=True)
class Matching:
    pairs: dict[int, int] = field(hash=False)  # left id -> right id

    @property
    def size(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Decomposition:
    """Node-disjoint cycles; a loop is the 1-cycle (v,)."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def covered(self) -> tuple[int, ...]:
        return vertex_set(v for c in self.cycles for v in c)

    def validate(self, d: Digraph) -> bool:
        seen: set[int] = set()
        for cyc in self.cycles:
            if not cyc or seen & set(cyc) or len(set(cyc)) != len(cyc):
                return False
            seen |= set(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if (a, b) not in d.arcs:
                    return False
        return len(self.covered) == sum(len(c) for c in self.cycles)


@dataclass(frozen=True)
class HallCertificate:
    """Independent set I with |N(I)| = |I| - 1."""

    I: tuple[int, ...]
    neighbors: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        return (len(self.I) >= 1
                and is_independent(g, self.I)
                and self.neighbors == neighbor_set(g, self.I)
                and len(self.neighbors) == len(self.I) - 1)


def _as_digraph(g: AnyGraph) -> Digraph:
    return g.to_digraph() if isinstance(g, Graph) else g


def bipartite_double_cover(g: AnyGraph) -> BipartiteCover:
    d = _as_digraph(g)
    return BipartiteCover(d.n, tuple(tuple(sorted(s)) for s in d.out_adjacency))


def hopcroft_karp(n_left: int, n_right: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Maximum matching on 0-based adjacency lists; returns match_left (-1 = free).

    Greedy start, then BFS layering plus iterative DFS along the layers.
    """
    INF = n_left + n_right + 1
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    for u in range(n_left):
        for v in adj[u]:
            if match_r[v] < 0:
                match_l[u] = v
                match_r[v] = u
                break
    dist = [0] * n_left
    while True:
        q = deque()
        for u in range(n_left):
            if match_l[u] < 0:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = INF
        while q:
            u = q.popleft()
            if dist[u] >= found:
                continue
            for v in adj[u]:
                w = match_r[v]
                if w < 0:
                    if found == INF:
                        found = dist[u] + 1
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        if found == INF:
            return match_l
        ptr = [0] * n_left
        for root in range(n_left):
            if match_l[root] >= 0:
                continue
            path = [root]
            while path:
                u = path[-1]
                nbrs = adj[u]
                advanced = False
                while ptr[u] < len(nbrs):
                    v = nbrs[ptr[u]]
                    ptr[u] += 1
                    w = match_r[v]
                    if w < 0:
                        if dist[u] + 1 != found:
                            continue
                        # augment along the stack
                        for x in reversed(path):
                            nxt = match_l[x]
                            match_l[x] = v
                            match_r[v] = x
                            v = nxt
                        path = []
                        advanced = True
                        break
                    if dist[w] == dist[u] + 1:
                        path.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = INF
                    path.pop()


def max_matching(cover: BipartiteCover) -> Matching:
    adj = [[j - 1 for j in js] for js in cover.left]
    match_l = hopcroft_karp(cover.n, cover.n, adj)
    return Matching({i + 1: j + 1 for i, j in enumerate(match_l) if j >= 0})


def _trace_cycles(perm: dict[int, int]) -> Decomposition:
    seen: set[int] = set()
    cycles = []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = perm[start]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = perm[v]
        cycles.append(tuple(cyc))
    return Decomposition(tuple(cycles))


def has_hamiltonian_decomposition(g: AnyGraph) -> tuple[bool, Optional[Decomposition]]:
    cover = bipartite_double_cover(g)
    m = max_matching(cover)
    if m.size < cover.n:
        return False, None
    return True, _trace_cycles(m.pairs)


def _deficient_left_set(cover: BipartiteCover, match_l: list[int]) -> set[int]:
    """König: left vertices reachable from a free left vertex by alternating paths.

    The result W satisfies |N(W)| < |W| when the matching is not perfect.
    0-based ids.
    """
    n = cover.n
    match_r = [-1] * n
    for u, v in enumerate(match_l):
        if v >= 0:
            match_r[v] = u
    free = [u for u in range(n) if match_l[u] < 0]
    seen_l = set(free[:1])
    q = deque(free[:1])
    while q:
        u = q.popleft()
        for j in cover.left[u]:
            w = match_r[j - 1]
            if w >= 0 and w not in seen_l:
                seen_l.add(w)
                q.append(w)
    return seen_l


def hall_violator(g: Graph) -> Optional[HallCertificate]:
    """Independent I with |N(I)| = |I| - 1, or None when g is not thin.

    Starting from a Hall-deficient left set W of a maximum matching, keep the
    members whose own copy is not in N(W) (that subset is independent and
    still deficient), then drop vertices, highest id first, while the set stays
    deficient. An inclusion-minimal deficient set has deficiency exactly 1.
    """
    cover = bipartite_double_cover(g)
    adj = [[j - 1 for j in js] for js in cover.left]
    match_l = hopcroft_karp(cover.n, cover.n, adj)
    if all(v >= 0 for v in match_l):
        return None
    w = {u + 1 for u in _deficient_left_set(cover, match_l)}
    nw = set(neighbor_set(g, w))
    core = {u for u in w if u not in nw}
    assert core and len(neighbor_set(g, core)) < len(core)
    shrunk = True
    while shrunk:
        shrunk = False
        for v in sorted(core, reverse=True):
            trial = core - {v}
            if trial and len(neighbor_set(g, trial)) < len(trial):
                core = trial
                shrunk = True
    I = vertex_set(core)
    return HallCertificate(I, neighbor_set(g, I))
