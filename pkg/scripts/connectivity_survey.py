"""Switch-graph survey: connectivity and diameter for every realizable score
vector of a class, for each order up to a bound.

    python3 scripts/connectivity_survey.py --class hankel --max-n 7
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from tournaments import TournamentClass
from tournaments.oracle import members_by_score, switch_graph


@dataclass
class SurveyConfig:
    cls: TournamentClass
    max_n: int
    diameter: bool = True


def survey(cfg: SurveyConfig) -> None:
    print("n vectors disconnected max_vertices max_diameter")
    for n in range(1, cfg.max_n + 1):
        groups = members_by_score(n, cfg.cls)
        reports = [switch_graph(r, cfg.cls, cfg.diameter, ms) for r, ms in groups.items()]
        bad = sum(not rep.connected for rep in reports)
        diam = max((rep.diameter or 0 for rep in reports), default=0) if cfg.diameter else "-"
        size = max(rep.vertices for rep in reports)
        print(n, len(reports), bad, size, diam)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--class", dest="cls", type=TournamentClass.parse, required=True)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--no-diameter", action="store_true")
    a = ap.parse_args()
    survey(SurveyConfig(a.cls, a.max_n, not a.no_diameter))


if __name__ == "__main__":
    main()
