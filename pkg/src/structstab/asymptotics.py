"""Closed-form limits for the probability that a random symmetric pattern is stable.

Regimes are declared by the caller; nothing here tries to guess an asymptotic
class from a single finite (n, p) pair.

Model A (p edge probability, q loop probability), with lambda = exp(-c):

    q \\ p                 sparse   p=(log n + c)/n           dense
    q = (mu + o(1))/n      0        e^-lambda (1 - e^-mu)      1 - e^-mu
    q -> mu in (0, 1)      0        e^(-lambda (1 - mu))       1

Model B (N edges, M loops):

    M \\ N                 sparse   N=n(log n + c)/2           dense
    M -> mu > 0            0        e^-lambda                  1
    M = mu n + o(n)        0        e^(-lambda (1 - mu))       1

When every node carries a loop (q -> 1, or M = n) both conditions hold for
any edge set, so those boundary cells are 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union


@dataclass(frozen=True)
class Sparse:
    pass


@dataclass(frozen=True)
class Critical:
    c: float

    @property
    def lam(self) -> float:
        return math.exp(-self.c)


@dataclass(frozen=True)
class Dense:
    pass


@dataclass(frozen=True)
class Scaled:
    """q = (mu + o(1)) / n."""
    mu: float


@dataclass(frozen=True)
class Constant:
    """Model A: q = mu + o(1). Model B: M = mu + o(1)."""
    mu: float


@dataclass(frozen=True)
class Linear:
    """M = mu n + o(n)."""
    mu: float


EdgeRegime = Union[Sparse, Critical, Dense]


@dataclass(frozen=True)
class RegimeA:
    p: EdgeRegime
    q: Union[Scaled, Constant]


@dataclass(frozen=True)
class RegimeB:
    N: EdgeRegime
    M: Union[Constant, Linear]


@dataclass(frozen=True)
class Asymptote:
    value: float
    # boundary cells that hold because every node carries a loop
    all_loops: bool = False


def model_a_asymptote(r: RegimeA) -> float:
    return model_a_cell(r).value


def model_a_cell(r: RegimeA) -> Asymptote:
    q = r.q
    if isinstance(q, Scaled):
        if q.mu < 0:
            raise ValueError("scaled mu must be >= 0")
    elif isinstance(q, Constant):
        if not 0 < q.mu <= 1:
            raise ValueError("constant mu must be in (0, 1]")
        if q.mu == 1:
            return Asymptote(1.0, all_loops=True)
    else:
        raise TypeError(f"bad q regime {q!r}")
    p = r.p
    if isinstance(p, Sparse):
        return Asymptote(0.0)
    if isinstance(p, Critical):
        if isinstance(q, Scaled):
            return Asymptote(math.exp(-p.lam) * -math.expm1(-q.mu))
        return Asymptote(math.exp(-p.lam * (1 - q.mu)))
    if isinstance(p, Dense):
        if isinstance(q, Scaled):
            return Asymptote(-math.expm1(-q.mu))
        return Asymptote(1.0)
    raise TypeError(f"bad p regime {p!r}")


def model_b_asymptote(r: RegimeB) -> float:
    return model_b_cell(r).value


def model_b_cell(r: RegimeB) -> Asymptote:
    m = r.M
    if isinstance(m, Constant):
        if not m.mu > 0:
            raise ValueError("constant M must be > 0")
    elif isinstance(m, Linear):
        if not 0 < m.mu <= 1:
            raise ValueError("linear mu must be in (0, 1]")
        if m.mu == 1:
            return Asymptote(1.0, all_loops=True)
    else:
        raise TypeError(f"bad M regime {m!r}")
    N = r.N
    if isinstance(N, Sparse):
        return Asymptote(0.0)
    if isinstance(N, Critical):
        if isinstance(m, Constant):
            return Asymptote(math.exp(-N.lam))
        return Asymptote(math.exp(-N.lam * (1 - m.mu)))
    if isinstance(N, Dense):
        return Asymptote(1.0)
    raise TypeError(f"bad N regime {N!r}")


def log_comb(n: float, k: float) -> float:
    """log C(n, k) via log-gamma; -inf outside 0 <= k <= n."""
    if k < 0 or k > n:
        return -math.inf
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def loops_cover_given_split_a(n: int, k: int, q: float) -> float:
    """P(every component has a loop | k isolated nodes + one component on n-k).

    Each isolated node needs its own loop and the big component needs at least
    one: q^k (1 - (1-q)^(n-k)). With k = n there is no big component.
    """
    if not 0 <= k <= n or not 0.0 <= q <= 1.0:
        raise ValueError("need 0 <= k <= n and q in [0, 1]")
    if k == n:
        return q ** n
    return q ** k * (1.0 - (1.0 - q) ** (n - k))


def loops_cover_given_split_b(n: int, k: int, M: int) -> float:
    """Same conditional for exactly M loops placed uniformly on n nodes.

    All k isolated nodes must be among the loops, and with k < M the leftover
    M - k loops surely hit the big component: C(n-k, M-k) / C(n, M).
    """
    if not 0 <= k <= n or not 0 <= M <= n:
        raise ValueError("need 0 <= k <= n and 0 <= M <= n")
    if k >= M:
        # k == M == n: every node looped, no big component left to cover
        return 1.0 if k == n == M else 0.0
    # telescoped ratio prod_{i<k} (M-i)/(n-i); log-gamma differences lose ~1e-11 here
    return math.exp(math.fsum(math.log((M - i) / (n - i)) for i in range(k)))


def fk_upper_bound(n: int, k: int, p: float) -> float:
    """Model-A union bound on P(smallest deficiency-one independent set has size k).

    C(n,k) (1-p)^C(k,2) * C(n-k,k-1) (1-p)^((n-2k+1)k) * (C(k,2) p^2)^(k-1)
    """
    if not 2 <= k <= (n + 2) // 2:
        raise ValueError(f"k must be in [2, ceil((n+1)/2)] = [2, {(n + 2) // 2}]")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    if p == 0.0 or p == 1.0:
        return 0.0
    pairs = k * (k - 1) / 2
    log_b = (log_comb(n, k) + pairs * math.log1p(-p)
             + log_comb(n - k, k - 1) + (n - 2 * k + 1) * k * math.log1p(-p)
             + (k - 1) * (math.log(pairs) + 2 * math.log(p)))
    return math.exp(log_b)


def parse_regime(text: str):
    """'sparse' | 'dense' | 'critical:<c>' | 'scaled:<mu>' | 'constant:<mu>' | 'linear:<mu>'."""
    name, _, arg = text.strip().lower().partition(":")
    simple = {"sparse": Sparse, "dense": Dense}
    if name in simple:
        if arg:
            raise ValueError(f"regime {name!r} takes no argument")
        return simple[name]()
    withargs = {"critical": Critical, "scaled": Scaled, "constant": Constant, "linear": Linear}
    if name not in withargs or not arg:
        raise ValueError(f"bad regime {text!r}")
    return withargs[name](float(arg))


def asymptote_for(model: str, edge_regime, loop_regime) -> Optional[float]:
    if model == "a":
        return model_a_asymptote(RegimeA(edge_regime, loop_regime))
    if model == "b":
        return model_b_asymptote(RegimeB(edge_regime, loop_regime))
    raise ValueError(f"unknown model {model!r}")
