"""Compare constructive switch-path lengths with switch-graph distances.

    python3 scripts/path_lengths.py --class skewhankel --score 2 2 4 2 4 2 2
"""

from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from tournaments import TournamentClass, enumerate_class, find_path
from tournaments.oracle import neighbours


@dataclass
class LengthConfig:
    cls: TournamentClass
    score: tuple[int, ...]


def run(cfg: LengthConfig) -> None:
    ms = list(enumerate_class(len(cfg.score), cfg.cls, cfg.score))
    index = {m.rows: k for k, m in enumerate(ms)}
    src, dst = [], []
    for k, m in enumerate(ms):
        for _, nb in neighbours(m, cfg.cls):
            if nb.rows in index:
                src.append(k)
                dst.append(index[nb.rows])
    g = csr_matrix((np.ones(len(src)), (src, dst)), shape=(len(ms), len(ms)))
    dist = shortest_path(g, unweighted=True, directed=False)
    ratios = []
    for a, b in itertools.combinations(range(len(ms)), 2):
        found = len(find_path(ms[a], ms[b], cfg.cls))
        ratios.append(found / dist[a, b])
    print(f"members={len(ms)} pairs={len(ratios)} "
          f"mean_ratio={np.mean(ratios):.2f} max_ratio={max(ratios, default=0):.2f}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--class", dest="cls", type=TournamentClass.parse, required=True)
    ap.add_argument("--score", type=int, nargs="+", required=True)
    a = ap.parse_args()
    run(LengthConfig(a.cls, tuple(a.score)))


if __name__ == "__main__":
    main()
