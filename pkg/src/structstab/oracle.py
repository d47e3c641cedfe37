"""Numerical cross-checks of the combinatorial verdicts.

Hurwitz tests use characteristic-polynomial coefficients from the
Faddeev-LeVerrier recursion followed by the Routh array; no eigensolver is
involved. find_hurwitz searches a pattern for a stable matrix, and returning
None proves nothing.
"""

from __future__ import annotations

from typing import Optional

import math

import numpy as np

from .graphs import ZeroPattern

HURWITZ_MAX_N = 24
SEARCH_MAX_N = 16
DET_MAX_N = 64
MARGIN = 1e-9
# the search keeps entries in a bounded dynamic range and asks for a wider
# margin, so accepted witnesses are far from the recursion's rounding error
SEARCH_MARGIN = 1e-6
ENTRY_MIN, ENTRY_MAX = 1e-2, 1e2


def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=tuple(key)))


def random_matrix_in_pattern(z: ZeroPattern, seed: int, lo: float = 0.5, hi: float = 1.5,
                             _rng_override: Optional[np.random.Generator] = None) -> np.ndarray:
    """Free entries uniform in +-[lo, hi] with random sign, zeros elsewhere."""
    if not 0 < lo <= hi:
        raise ValueError("need 0 < lo <= hi")
    rng = _rng_override or _rng(seed)
    a = np.zeros((z.n, z.n))
    support = sorted(z.support)
    if support:
        mags = rng.uniform(lo, hi, len(support))
        signs = rng.choice([-1.0, 1.0], len(support))
        rows, cols = zip(*support)
        a[np.array(rows) - 1, np.array(cols) - 1] = mags * signs
    return a


def char_poly(a) -> list[float]:
    """Monic characteristic polynomial, highest degree first: [1, a1, ..., an].

    Faddeev-LeVerrier: M_k = A M_{k-1} + a_{k-1} I, a_k = -tr(A M_k) / k.
    """
    a = a.tolist() if isinstance(a, np.ndarray) else [list(map(float, r)) for r in a]
    n = len(a)
    idx = range(n)
    coeffs = [1.0]
    m = [[0.0] * n for _ in idx]
    for k in range(1, n + 1):
        c = coeffs[-1]
        new = []
        for i in idx:
            ai = a[i]
            row = [0.0] * n
            for t in idx:
                x = ai[t]
                if x:
                    mt = m[t]
                    for j in idx:
                        row[j] += x * mt[j]
            row[i] += c
            new.append(row)
        m = new
        tr = 0.0
        for i in idx:
            ai = a[i]
            for t in idx:
                tr += ai[t] * m[t][i]
        coeffs.append(-tr / k)
    return coeffs


def routh_first_column(coeffs) -> list[float]:
    """First column of the Routh array; stops early at a zero pivot."""
    coeffs = list(coeffs)
    n = len(coeffs) - 1
    width = n // 2 + 2
    prev = coeffs[0::2] + [0.0] * (width - len(coeffs[0::2]))
    cur = coeffs[1::2] + [0.0] * (width - len(coeffs[1::2]))
    col = [prev[0], cur[0]] if n >= 1 else [prev[0]]
    for _ in range(n - 1):
        if cur[0] == 0.0:
            break
        nxt = [(cur[0] * prev[j + 1] - prev[0] * cur[j + 1]) / cur[0] for j in range(width - 1)]
        prev, cur = cur, nxt + [0.0]
        col.append(cur[0])
    return col


def _prepare(a, margin: float = MARGIN) -> list[list[float]]:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if a.shape[0] > HURWITZ_MAX_N:
        raise ValueError(f"Hurwitz test limited to n <= {HURWITZ_MAX_N}")
    rows = a.tolist()
    flat = [abs(x) for r in rows for x in r]
    if not all(math.isfinite(x) for x in flat):
        raise ValueError("matrix has non-finite entries")
    # margin grows with the norm so it stays above the recursion's rounding error
    scale = max(1.0, max(flat, default=0.0))
    out = [[x / scale for x in r] for r in rows]
    for i, r in enumerate(out):
        r[i] += margin
    return out


def is_hurwitz(a: np.ndarray, margin: float = MARGIN) -> bool:
    """All eigenvalues have real part < -1e-9 * max(1, max|a_ij|).

    Routh-Hurwitz on the scaled, shifted matrix.
    """
    b = _prepare(a, margin)
    col = routh_first_column(char_poly(b))
    return len(col) == len(b) + 1 and all(x > 0 for x in col)


def routh_violation(a: np.ndarray, margin: float = SEARCH_MARGIN) -> tuple[int, float]:
    """(count of non-positive Routh entries, worst squashed entry); lower is better.

    Negative second component with zero count means Hurwitz.
    """
    b = _prepare(a, margin)
    n = len(b)
    col = routh_first_column(char_poly(b))
    missing = n + 1 - len(col)
    squashed = [x / (1.0 + abs(x)) for x in col[1:]]
    bad = sum(x <= 0 for x in col) + missing
    worst = max(-x for x in squashed) if squashed else -1.0
    if missing:
        worst = 1.0
    return bad, worst


def find_hurwitz(z: ZeroPattern, restarts: int = 200, seed: int = 0,
                 iterations: int = 500) -> Optional[np.ndarray]:
    """Random restarts plus per-entry perturbation descent on the Routh violation.

    Restart r uses its own stream (seed, r); the first success in restart
    order is returned, so the result does not depend on scheduling.
    """
    if z.n > SEARCH_MAX_N:
        raise ValueError(f"Hurwitz search limited to n <= {SEARCH_MAX_N}")
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    support = sorted(z.support)
    if not support:
        return None
    rows = np.array([i for i, _ in support]) - 1
    cols = np.array([j for _, j in support]) - 1
    for r in range(restarts):
        rng = _rng(seed, r)
        a = random_matrix_in_pattern(z, seed, _rng_override=rng)
        if _accept(a):
            return a
        score = routh_violation(a)
        for _ in range(iterations):
            k = rng.integers(len(support))
            i, j = rows[k], cols[k]
            old = a[i, j]
            move = rng.integers(3)
            if move == 0:
                a[i, j] = old * np.exp(rng.normal(0.0, 0.5))
            elif move == 1:
                a[i, j] = old + rng.normal(0.0, 0.5)
            else:
                a[i, j] = -old
            a[i, j] = np.copysign(np.clip(abs(a[i, j]), ENTRY_MIN, ENTRY_MAX), a[i, j])
            new = routh_violation(a)
            if new <= score:
                score = new
                if new[0] == 0 and _accept(a):
                    return a
            else:
                a[i, j] = old
    return None


def _accept(a: np.ndarray) -> bool:
    return is_hurwitz(a, SEARCH_MARGIN) and is_hurwitz(a)


def structural_det_zero(z: ZeroPattern, draws: int = 3, tol: float = 1e-8,
                        seed: int = 0) -> bool:
    """Randomized test that every matrix in the pattern is singular.

    |det| is compared against tol times the product of row max-norms.
    """
    if z.n > DET_MAX_N:
        raise ValueError(f"determinant test limited to n <= {DET_MAX_N}")
    for d in range(draws):
        a = random_matrix_in_pattern(z, seed, _rng_override=_rng(seed, d))
        scale = float(np.prod(np.max(np.abs(a), axis=1)))
        if scale == 0.0:
            continue  # a zero row: singular for every draw
        if abs(np.linalg.det(a)) >= tol * scale:
            return False
    return True
