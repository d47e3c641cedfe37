"""Compare the graph verdict with the numerical Hurwitz search on every small pattern.

    python3 scripts/exhaustive_oracle.py --max-n 4 --restarts 200
"""

from __future__ import annotations

import argparse
import itertools
import time
from collections import Counter
from dataclasses import dataclass

from structstab.graphs import build_graph, pattern_of
from structstab.oracle import find_hurwitz, structural_det_zero
from structstab.stability import Status, check_symmetric_stability


@dataclass
class OracleConfig:
    max_n: int = 4
    restarts: int = 200
    # patterns that cannot be stable get fewer restarts; finding one would be a bug
    negative_restarts: int = 10
    seed: int = 0


def all_graphs(n: int):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for em in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if em >> i & 1]
        for lm in range(1 << n):
            yield build_graph(n, edges, [v + 1 for v in range(n) if lm >> v & 1])


def run(cfg: OracleConfig) -> int:
    tally: Counter = Counter()
    for n in range(1, cfg.max_n + 1):
        t0 = time.perf_counter()
        for g in all_graphs(n):
            v = check_symmetric_stability(g)
            z = pattern_of(g)
            stable = v.status is Status.STABLE
            budget = cfg.restarts if stable else cfg.negative_restarts
            found = find_hurwitz(z, restarts=budget, seed=cfg.seed) is not None
            tally[("stable" if stable else "unstable", "witness" if found else "none")] += 1
            if not v.H_flag:
                tally[("thin", "det_zero" if structural_det_zero(z, seed=cfg.seed) else "det_nonzero")] += 1
        print(f"n={n} done in {time.perf_counter() - t0:.1f}s")
    for key, count in sorted(tally.items()):
        print(f"{key[0]:>9} {key[1]:<12} {count}")
    bad = tally[("stable", "none")] + tally[("unstable", "witness")] + tally[("thin", "det_nonzero")]
    print("disagreements:", bad)
    return 1 if bad else 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=OracleConfig.max_n)
    ap.add_argument("--restarts", type=int, default=OracleConfig.restarts)
    ap.add_argument("--seed", type=int, default=OracleConfig.seed)
    a = ap.parse_args()
    raise SystemExit(run(OracleConfig(max_n=a.max_n, restarts=a.restarts, seed=a.seed)))


if __name__ == "__main__":
    main()
