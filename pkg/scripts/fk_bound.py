"""Empirical F_k frequencies in model A next to the union bound.

    python3 scripts/fk_bound.py --n 20 --trials 100000
"""

from __future__ import annotations

import argparse
import math
import os
from dataclasses import dataclass

from structstab.asymptotics import fk_upper_bound
from structstab.models import ModelAParams
from structstab.montecarlo import FK_MAX_N, run_trials, wilson_ci


@dataclass
class FkConfig:
    n: int = 20
    trials: int = 100_000
    seed: int = 1
    c: float = 0.0
    q: float = 0.0  # loops never change H, so any q gives the same thin classes
    workers: int = os.cpu_count() or 1


def run(cfg: FkConfig) -> None:
    if cfg.n > FK_MAX_N:
        raise SystemExit(f"thin classification is limited to n <= {FK_MAX_N}")
    p = min(1.0, (math.log(cfg.n) + cfg.c) / cfg.n)
    stats = run_trials(ModelAParams(cfg.n, p, cfg.q, cfg.seed), cfg.trials, cfg.workers)
    print(f"n={cfg.n} p={p:.5f} trials={cfg.trials} thin={1 - stats.h_count / cfg.trials:.4f}")
    print(f"{'k':>3} {'freq':>8} {'ci_high':>8} {'bound':>10}")
    for k in range(2, (cfg.n + 2) // 2 + 1):
        count = stats.fk_counts.get(k, 0)
        _, high = wilson_ci(count, cfg.trials)
        print(f"{k:>3} {count / cfg.trials:>8.5f} {high:>8.5f} {fk_upper_bound(cfg.n, k, p):>10.4g}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=FkConfig.n)
    ap.add_argument("--trials", type=int, default=FkConfig.trials)
    ap.add_argument("--seed", type=int, default=FkConfig.seed)
    ap.add_argument("--c", type=float, default=FkConfig.c)
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    a = ap.parse_args()
    run(FkConfig(n=a.n, trials=a.trials, seed=a.seed, c=a.c, workers=a.workers))


if __name__ == "__main__":
    main()
