"""Time construction and validation on random feasible score vectors.

    python3 scripts/build_benchmark.py --orders 20 50 100 --count 200
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass, field

from tournaments import TournamentClass, build, is_member, score_vector
from tournaments.sampling import random_feasible

BUILDABLE = (TournamentClass.PLAIN, TournamentClass.LOOPY, TournamentClass.HANKEL,
             TournamentClass.SKEW_HANKEL)


@dataclass
class BenchConfig:
    orders: list[int] = field(default_factory=lambda: [20, 50, 100])
    count: int = 200
    seed: int = 0


def run(cfg: BenchConfig) -> None:
    rng = random.Random(cfg.seed)
    print("class n count seconds failures")
    for cls in BUILDABLE:
        for n in cfg.orders:
            vectors = [random_feasible(n, cls, rng) for _ in range(cfg.count)]
            start = time.perf_counter()
            bad = 0
            for r in vectors:
                m = build(r, cls)
                bad += not (is_member(m, cls) and score_vector(m) == r)
            print(cls.value, n, cfg.count, f"{time.perf_counter() - start:.2f}", bad)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[20, 50, 100])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    run(BenchConfig(a.orders, a.count, a.seed))


if __name__ == "__main__":
    main()
