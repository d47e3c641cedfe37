"""Stability verdicts for zero-patterns given as graphs.

Symmetric patterns (undirected graphs with loops) are decided exactly: stable
iff every connected component carries a loop and the graph has a Hamiltonian
decomposition. General digraphs get the necessary conditions (a k-decomposition
for every k, recursively on strongly connected components) and the sufficient
one (a nested chain of k-decompositions); in between the verdict is UNKNOWN.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Optional

from .graphs import (Digraph, Graph, connected_components, induced_subgraph,
                     neighbor_set, strongly_connected_components, vertex_set)
from .matching import Decomposition, HallCertificate, has_hamiltonian_decomposition, hall_violator

MAX_K_DECOMPOSITION_N = 20
MAX_CHAIN_N = 16


class Status(str, enum.Enum):
    STABLE = "STABLE"
    UNSTABLE = "UNSTABLE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class StabilityVerdict:
    status: Status
    L_flag: bool
    H_flag: bool
    certificate: dict[str, Any]
    reason: str = ""


@dataclass(frozen=True)
class ThinClass:
    k: Optional[int]
    witness: Optional[HallCertificate] = None


def check_L(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Every component has a loop; otherwise return the first loopless one."""
    for comp in connected_components(g):
        if not g.loops.intersection(comp):
            return False, comp
    return True, None


def check_symmetric_stability(g: Graph) -> StabilityVerdict:
    l_ok, loopless = check_L(g)
    h_ok, decomp = has_hamiltonian_decomposition(g)
    cert: dict[str, Any] = {}
    reasons = []
    if h_ok:
        cert["decomposition"] = decomp
    else:
        cert["hall"] = hall_violator(g)
        reasons.append("no Hamiltonian decomposition: every matrix in the pattern is singular")
    if l_ok:
        cert["loop_witness"] = {c: min(g.loops.intersection(c)) for c in connected_components(g)}
    else:
        cert["loopless_component"] = loopless
        reasons.append(f"component {set(loopless)} has no loop: its diagonal block is "
                       "structurally zero, so its trace is identically 0")
    status = Status.STABLE if l_ok and h_ok else Status.UNSTABLE
    return StabilityVerdict(status, l_ok, h_ok, cert, "; ".join(reasons))


def _masks(g: Graph) -> list[int]:
    """Bit v-1 of masks[v-1] set for each neighbour (loops included)."""
    return [sum(1 << (w - 1) for w in nbrs) for nbrs in g.adjacency]


def classify_thin(g: Graph) -> ThinClass:
    """Smallest k with an independent k-set whose neighbourhood has k-1 nodes.

    Sets are tried by increasing size and, within a size, lexicographically;
    the first hit is returned. None when g has a Hamiltonian decomposition.
    """
    if has_hamiltonian_decomposition(g)[0]:
        return ThinClass(None)
    adj = _masks(g)
    n = g.n
    for k in range(1, (n + 2) // 2 + 1):
        cands = [v for v in range(n) if not (adj[v] >> v) & 1
                 and bin(adj[v]).count("1") <= k - 1]
        found = _search_violator(cands, adj, k)
        if found is not None:
            I = tuple(v + 1 for v in found)
            return ThinClass(k, HallCertificate(I, neighbor_set(g, I)))
    raise AssertionError("thin graph without a deficiency-one independent set")


def _search_violator(cands: list[int], adj: list[int], k: int) -> Optional[list[int]]:
    chosen: list[int] = []

    def dfs(start: int, nmask: int) -> bool:
        if len(chosen) == k:
            return bin(nmask).count("1") == k - 1
        for idx in range(start, len(cands) - (k - len(chosen)) + 1):
            v = cands[idx]
            if (nmask >> v) & 1:
                continue  # adjacent to a chosen vertex
            m = nmask | adj[v]
            if bin(m).count("1") > k - 1:
                continue
            chosen.append(v)
            if dfs(idx + 1, m):
                return True
            chosen.pop()
        return False

    return chosen if dfs(0, 0) else None


# ---------------------------------------------------------------------------
# digraph checks
# ---------------------------------------------------------------------------

class _CoverOracle:
    """Exact-cover tests on node subsets of one digraph, memoized per call."""

    def __init__(self, d: Digraph):
        self.n = d.n
        self.out = [0] * d.n
        self.inn = [0] * d.n
        for u, v in d.arcs:
            self.out[u - 1] |= 1 << (v - 1)
            self.inn[v - 1] |= 1 << (u - 1)
        self.memo: dict[int, Optional[dict[int, int]]] = {}

    def cover(self, mask: int) -> Optional[dict[int, int]]:
        """Permutation of the nodes in mask supported on arcs, or None."""
        if mask in self.memo:
            return self.memo[mask]
        nodes = [v for v in range(self.n) if (mask >> v) & 1]
        res: Optional[dict[int, int]] = None
        if all(self.out[v] & mask and self.inn[v] & mask for v in nodes):
            res = self._match(nodes, mask)
        self.memo[mask] = res
        return res

    def _match(self, nodes: list[int], mask: int) -> Optional[dict[int, int]]:
        match_r: dict[int, int] = {}
        for u in nodes:
            if not self._augment(u, mask, match_r, [0]):
                return None
        return {u: v for v, u in match_r.items()}

    def _augment(self, u: int, mask: int, match_r: dict[int, int], seen: list[int]) -> bool:
        avail = self.out[u] & mask & ~seen[0]
        while avail:
            bit = avail & -avail
            seen[0] |= bit
            v = bit.bit_length() - 1
            w = match_r.get(v)
            if w is None or self._augment(w, mask, match_r, seen):
                match_r[v] = u
                return True
            avail &= ~seen[0]
        return False

    def decomposition(self, mask: int) -> Optional[Decomposition]:
        perm = self.cover(mask)
        if perm is None:
            return None
        seen: set[int] = set()
        cycles = []
        for s in sorted(perm):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            v = perm[s]
            while v != s:
                cyc.append(v)
                seen.add(v)
                v = perm[v]
            cycles.append(tuple(x + 1 for x in cyc))
        return Decomposition(tuple(cycles))


def _check_cap(d: Digraph, cap: int, what: str) -> None:
    if d.n > cap:
        raise ValueError(f"{what} is limited to n <= {cap} (got n={d.n})")


def has_k_decomposition(d: Digraph, k: int, _oracle: Optional[_CoverOracle] = None
                        ) -> tuple[bool, Optional[Decomposition]]:
    """Search k-subsets (lexicographic) for one admitting a spanning cycle cover."""
    _check_cap(d, MAX_K_DECOMPOSITION_N, "k-decomposition search")
    if not 1 <= k <= d.n:
        raise ValueError(f"k must be in [1, {d.n}]")
    oracle = _oracle or _CoverOracle(d)
    # nodes without any in- or out-arc can never be covered
    usable = [v for v in range(d.n) if oracle.out[v] and oracle.inn[v]]
    for combo in combinations(usable, k):
        mask = sum(1 << v for v in combo)
        if oracle.cover(mask) is not None:
            return True, oracle.decomposition(mask)
    return False, None


def nested_chain(d: Digraph) -> Optional[list[Decomposition]]:
    """Decompositions D_1 ⊂ ... ⊂ D_n with |D_k| = k, nested on node sets."""
    _check_cap(d, MAX_CHAIN_N, "nested chain search")
    oracle = _CoverOracle(d)
    return _chain(oracle)


def _chain(oracle: _CoverOracle) -> Optional[list[Decomposition]]:
    n = oracle.n
    full = (1 << n) - 1
    dead: set[int] = set()

    def dfs(mask: int) -> Optional[list[int]]:
        if mask == full:
            return [mask]
        if mask in dead:
            return None
        for v in range(n):
            if (mask >> v) & 1:
                continue
            nxt = mask | (1 << v)
            if nxt in dead or oracle.cover(nxt) is None:
                continue
            rest = dfs(nxt)
            if rest is not None:
                return [mask] + rest
        dead.add(mask)
        return None

    for v in range(n):
        start = 1 << v
        if oracle.cover(start) is not None:
            path = dfs(start)
            if path is not None:
                return [oracle.decomposition(m) for m in path]
    return None


def _scc_loops_ok(d: Digraph) -> bool:
    loops = d.loops
    return all(loops.intersection(c) for c in strongly_connected_components(d))


def check_digraph(d: Digraph) -> StabilityVerdict:
    _check_cap(d, MAX_CHAIN_N, "digraph stability check")
    oracle = _CoverOracle(d)
    h_flag = oracle.cover((1 << d.n) - 1) is not None
    l_flag = _scc_loops_ok(d)
    chain = _chain(oracle)
    if chain is not None:
        return StabilityVerdict(Status.STABLE, l_flag, h_flag, {"chain": chain},
                                "nested chain of k-decompositions exists")
    for k in range(1, d.n + 1):
        if not has_k_decomposition(d, k, oracle)[0]:
            return StabilityVerdict(Status.UNSTABLE, l_flag, h_flag, {"missing_k": k},
                                    f"no {k}-decomposition")
    sccs = strongly_connected_components(d)
    if len(sccs) > 1:
        for comp in sccs:
            sub, _ = induced_subgraph(d, comp)
            sub_oracle = _CoverOracle(sub)
            for k in range(1, sub.n + 1):
                if not has_k_decomposition(sub, k, sub_oracle)[0]:
                    return StabilityVerdict(
                        Status.UNSTABLE, l_flag, h_flag,
                        {"failing_scc": comp, "missing_k": k},
                        f"strongly connected component {set(comp)} has no {k}-decomposition")
    return StabilityVerdict(Status.UNKNOWN, l_flag, h_flag, {},
                            "necessary conditions hold but no nested chain exists")


def validate_chain(d: Digraph, chain: list[Decomposition]) -> bool:
    if len(chain) != d.n:
        return False
    prev: set[int] = set()
    for k, dec in enumerate(chain, start=1):
        cov = set(dec.covered)
        if len(cov) != k or not prev < cov or not dec.validate(d):
            return False
        prev = cov
    return True


def validate_verdict(g, verdict: StabilityVerdict) -> bool:
    """Re-check a verdict's certificate without calling the deciding code paths."""
    cert = verdict.certificate
    if isinstance(g, Graph):
        d = g.to_digraph()
        if verdict.status is Status.STABLE:
            dec = cert.get("decomposition")
            wit = cert.get("loop_witness", {})
            return (dec is not None and dec.validate(d) and len(dec.covered) == g.n
                    and all(w in g.loops and w in c for c, w in wit.items())
                    and set(vertex_set(v for c in wit for v in c)) == set(range(1, g.n + 1)))
        ok = False
        comp = cert.get("loopless_component")
        if comp is not None:
            closed = set(neighbor_set(g, comp)) <= set(comp)
            ok = closed and not g.loops.intersection(comp)
        hall = cert.get("hall")
        if hall is not None:
            ok = ok or hall.validate(g)
        return ok
    if verdict.status is Status.STABLE:
        return validate_chain(g, cert["chain"])
    if verdict.status is Status.UNSTABLE:
        target = g
        if "failing_scc" in cert:
            target, _ = induced_subgraph(g, cert["failing_scc"])
        k = cert["missing_k"]
        return not _brute_k_decomposition(target, k)
    return True


def _brute_k_decomposition(d: Digraph, k: int) -> bool:
    """Injective maps on k-subsets, straight from the definition (tiny n only)."""
    from itertools import permutations
    for combo in combinations(range(1, d.n + 1), k):
        for img in permutations(combo):
            if all((u, v) in d.arcs for u, v in zip(combo, img)):
                return True
    return False
