"""Acceptance gate: one PASS/FAIL line per criterion.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import generators as gen  # noqa: E402
from acceptance_log import report  # noqa: E402
from candidates import candidates  # noqa: E402
from fixtures import (HANKEL_5, HANKEL_BUILD_CHAIN, HANKEL_BUILD_OUT, HANKEL_BUILD_R,  # noqa: E402
                      HANKEL_PAIR, LOOPY_5, LOOPY_5_COLUMNS, LOOPY_5_SCORES, SKEW_5,
                      SKEW_7, SKEW_7_SCORES, SKEW_BUILD_CHAIN, SKEW_BUILD_OUT,
                      SKEW_BUILD_R, SKEW_PAIR)
from tournaments.connectivity import find_path  # noqa: E402
from tournaments.construct import (build, build_hankel, build_skew_hankel, fold,  # noqa: E402
                                   format_chain, lift_loopy)
from tournaments.core import TournamentClass as C, column_sums, is_member, score_vector  # noqa: E402
from tournaments.feasibility import exists  # noqa: E402
from tournaments.oracle import enumerate_class, feasibility_oracle, members_by_score, switch_graph  # noqa: E402
from tournaments.sampling import random_feasible  # noqa: E402
from tournaments.switches import MoveError  # noqa: E402

SWEEP = {C.PLAIN: 6, C.LOOPY: 5, C.HANKEL: 8, C.SKEW_HANKEL: 9}
CONNECT = {C.LOOPY: 5, C.HANKEL: 7, C.SKEW_HANKEL: 8}
RANDOM_ORDERS = (20, 50, 100)
RANDOM_PER_CLASS = 1000
PAIR_CAP = 500
LEMMA_TRIALS = 10_000


@lru_cache(maxsize=None)
def _realizable(n, cls):
    return frozenset(feasibility_oracle(n, cls))


def _valid(m, r, cls):
    return is_member(m, cls) and score_vector(m) == tuple(r)


def test_feasibility_matches_enumeration():
    start = time.perf_counter()
    checked = disagreements = 0
    first = None
    for cls, top in SWEEP.items():
        for n in range(1, top + 1):
            real = _realizable(n, cls)
            for r in candidates(n, cls, set(real)):
                checked += 1
                if bool(exists(r, cls)) != (r in real):
                    disagreements += 1
                    first = first or (cls.value, r)
    elapsed = time.perf_counter() - start
    ok = disagreements == 0 and elapsed < 60
    report(1, ok, f"{checked} candidates, {disagreements} disagreements, {elapsed:.1f}s (< 60s)"
           + (f"; first {first}" if first else ""))
    assert ok


def test_reference_matrices():
    checks = [
        is_member(LOOPY_5, C.LOOPY) and score_vector(LOOPY_5) == LOOPY_5_SCORES == (2, 3, 2, 3, 2),
        column_sums(LOOPY_5) == LOOPY_5_COLUMNS == (2, 3, 2, 1, 4),
        is_member(HANKEL_5, C.HANKEL) and score_vector(HANKEL_5) == (2, 2, 2, 2, 2),
        is_member(SKEW_5, C.SKEW_HANKEL) and score_vector(SKEW_5) == (1, 2, 2, 2, 1),
        is_member(SKEW_7, C.SKEW_HANKEL) and score_vector(SKEW_7) == SKEW_7_SCORES == (1, 3, 4, 2, 4, 3, 1),
    ]
    ok = all(checks)
    report(2, ok, f"{sum(checks)}/{len(checks)} membership and score checks on the reference matrices")
    assert ok


def test_chain_reproduction():
    results = []
    exact = []
    for r, out, chain, builder, cls in (
        (HANKEL_BUILD_R, HANKEL_BUILD_OUT, HANKEL_BUILD_CHAIN, build_hankel, C.HANKEL),
        (SKEW_BUILD_R, SKEW_BUILD_OUT, SKEW_BUILD_CHAIN, build_skew_hankel, C.SKEW_HANKEL),
    ):
        trace = []
        m = builder(r, trace)
        results.append(format_chain(trace[0][1], trace[1:]) == chain and _valid(m, r, cls))
        exact.append(m == out)
    ok = all(results)
    report(3, ok, f"chains reproduced {sum(results)}/2; reference matrices bit-equal {sum(exact)}/2 (reported only)")
    assert ok


def test_constructor_totality():
    failures = []
    swept = 0
    for cls, top in SWEEP.items():
        for n in range(1, top + 1):
            for r in _realizable(n, cls):
                swept += 1
                if not _valid(build(r, cls), r, cls):
                    failures.append((cls.value, r))
    rng = random.Random(2024)
    vectors = [(cls, random_feasible(n, cls, rng))
               for cls in SWEEP for n in RANDOM_ORDERS for _ in range(RANDOM_PER_CLASS)]
    start = time.perf_counter()
    for cls, r in vectors:
        if not _valid(build(r, cls), r, cls):
            failures.append((cls.value, r))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30
    report(4, ok, f"{swept} swept + {len(vectors)} random vectors, {len(failures)} failures, "
                  f"random construct+validate {elapsed:.1f}s (< 30s)")
    assert ok


@lru_cache(maxsize=None)
def _groups(n, cls):
    return members_by_score(n, cls)


def test_switch_graph_connectivity():
    graphs = disconnected = 0
    for cls, top in CONNECT.items():
        for n in range(1, top + 1):
            for r, ms in _groups(n, cls).items():
                graphs += 1
                if not switch_graph(r, cls, with_diameter=False, members=ms).connected:
                    disconnected += 1
    ok = disconnected == 0
    report(5, ok, f"{graphs} switch graphs, {disconnected} disconnected")
    assert ok


def _pairs(ms, rng):
    k = len(ms)
    total = k * (k - 1) // 2
    if total <= PAIR_CAP:
        return list(itertools.combinations(ms, 2))
    chosen = set()
    while len(chosen) < PAIR_CAP:
        a, b = sorted(rng.sample(range(k), 2))
        chosen.add((a, b))
    return [(ms[a], ms[b]) for a, b in sorted(chosen)]


def _path_ok(t1, t2, cls):
    try:
        path = find_path(t1, t2, cls, validate=False)
        states = path.replay()  # per-step membership and score checks
    except (MoveError, RuntimeError):
        return False
    r = score_vector(t1)
    return states[-1] == t2 and all(score_vector(s) == r for s in states)


def test_path_soundness():
    rng = random.Random(7)
    pairs = bad = 0
    mandatory = [(HANKEL_PAIR, C.HANKEL), (SKEW_PAIR, C.SKEW_HANKEL)]
    for (t1, t2), cls in mandatory:
        for a, b in ((t1, t2), (t2, t1)):
            pairs += 1
            bad += not _path_ok(a, b, cls)
    for cls, top in CONNECT.items():
        for n in range(1, top + 1):
            for r, ms in sorted(_groups(n, cls).items()):
                for t1, t2 in _pairs(ms, rng):
                    pairs += 1
                    bad += not _path_ok(t1, t2, cls)
    ok = bad == 0
    report(6, ok, f"{pairs} pairs (including both reference pairs), {bad} invalid paths")
    assert ok


def test_lemma_suites():
    rng = random.Random(11)
    suites = [
        ("2-nearly sorted", gen.nearly_landau_case, gen.lemma_nearly_sorted_holds),
        ("odd equality", gen.doubled_case, gen.lemma_odd_equality_propagates),
        ("doubled equivalence", gen.any_half, gen.lemma_doubled_equivalence_holds),
        ("3-nearly sorted half", gen.three_nearly_half_case, gen.lemma_three_nearly_sorted_holds),
    ]
    counter = {}
    for name, make, holds in suites:
        counter[name] = sum(not holds(make(rng)) for _ in range(LEMMA_TRIALS))
    ok = not any(counter.values())
    detail = ", ".join(f"{name} {c}" for name, c in counter.items())
    report(7, ok, f"{LEMMA_TRIALS} trials per suite; counterexamples: {detail}")
    assert ok


def test_lift_fold_round_trips():
    bad = checked = 0
    for n in range(0, 5):
        for t in enumerate_class(n, C.LOOPY):
            checked += 1
            bad += fold(lift_loopy(t)) != t
    for n in range(2, 6):
        for t in enumerate_class(n, C.PLAIN):
            checked += 1
            bad += lift_loopy(fold(t)) != t
    ok = bad == 0
    report(8, ok, f"{checked} round trips, {bad} failures")
    assert ok


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
