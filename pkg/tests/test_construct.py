import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from fixtures import (HANKEL_BUILD_CHAIN, HANKEL_BUILD_OUT, HANKEL_BUILD_R, LOOPY_5, M,
                      SKEW_BUILD_CHAIN, SKEW_BUILD_OUT, SKEW_BUILD_R)
from strategies import members
from tournaments.construct import (
    InfeasibleError,
    PairedPermutation,
    build,
    build_hankel,
    build_loopy,
    build_plain,
    build_skew_hankel,
    fold,
    format_chain,
    hankel_sort,
    lift_loopy,
    skew_half_sort,
)
from tournaments.core import BinaryMatrix, TournamentClass as C, is_member, score_vector
from tournaments.feasibility import exists
from tournaments.oracle import enumerate_class, feasibility_oracle
from tournaments.sampling import random_feasible, regular_vector

BUILDABLE = (C.PLAIN, C.LOOPY, C.HANKEL, C.SKEW_HANKEL)


def _valid(m, r, cls):
    return is_member(m, cls) and score_vector(m) == tuple(r)


def test_transitive_is_unique():
    m = build_plain((0, 1, 2))
    assert [m] == list(enumerate_class(3, C.PLAIN, (0, 1, 2)))


@pytest.mark.parametrize("r", [(1, 1, 1), (2, 2, 2, 3, 3, 3), (3, 2, 3, 4, 3, 0, 6)])
def test_build_plain(r):
    assert _valid(build_plain(r), r, C.PLAIN)


def test_lift_of_reference_loopy():
    lifted = lift_loopy(LOOPY_5)
    assert lifted.n == 6 and is_member(lifted, C.PLAIN)
    assert score_vector(lifted) == (3, 2, 3, 2, 3, 2)
    assert fold(lifted) == LOOPY_5


def test_one_by_one_lift():
    assert lift_loopy(M("1")) == M("00 10")
    assert fold(M("00 10")) == M("1")


def test_lift_and_fold_reject_wrong_class():
    with pytest.raises(ValueError):
        lift_loopy(M("11 11"))
    with pytest.raises(ValueError):
        fold(M("1"))


def test_build_loopy_examples():
    m = build_loopy((2, 3, 2, 3, 2))
    assert _valid(m, (2, 3, 2, 3, 2), C.LOOPY)
    assert sum(m.bit(i, i) for i in range(5)) == 2
    assert build_loopy((1,)) == M("1")
    m = build_loopy((1, 1, 2, 2))
    assert _valid(m, (1, 1, 2, 2), C.LOOPY) and is_member(m, C.PLAIN)


def test_hankel_sort():
    p = hankel_sort((2, 1, 2, 1))
    assert p.apply_scores((2, 1, 2, 1)) == (1, 1, 2, 2)
    assert hankel_sort((0, 1, 2, 3)).is_identity()
    assert hankel_sort((3, 0, 3, 0)).apply_scores((3, 0, 3, 0)) == (0, 0, 3, 3)
    with pytest.raises(ValueError):
        hankel_sort((0, 0, 0, 0))


@given(st.integers(1, 12).flatmap(
    lambda n: st.lists(st.integers(0, n - 1), min_size=n // 2, max_size=n // 2).map(
        lambda left: tuple(left) + ((n - 1) // 2,) * (n % 2) + tuple(n - 1 - a for a in reversed(left)))))
def test_hankel_sort_sorts_and_commutes_with_mirror(r):
    p = hankel_sort(r)
    out = p.apply_scores(r)
    n = len(r)
    assert list(out) == sorted(r)
    assert all(p(n + 1 - i) == n + 1 - p(i) for i in range(1, n + 1))


def test_skew_half_sort():
    r = (2, 1, 3, 3, 1, 2)
    assert skew_half_sort(r).apply_scores(r) == (1, 2, 3, 3, 2, 1)


def test_paired_permutation_rejects_unpaired():
    with pytest.raises(ValueError):
        PairedPermutation((2, 1, 3))


def test_small_hankel_and_skew_builds():
    assert build_hankel((0,)) == M("0")
    assert build_hankel((0, 1)) == M("00 10")
    assert build_skew_hankel((0, 0)) == M("00 00")
    assert _valid(build_skew_hankel((1, 1, 1, 1)), (1, 1, 1, 1), C.SKEW_HANKEL)


def test_reference_build_outputs_and_chains():
    for r, out, chain, builder in (
        (HANKEL_BUILD_R, HANKEL_BUILD_OUT, HANKEL_BUILD_CHAIN, build_hankel),
        (SKEW_BUILD_R, SKEW_BUILD_OUT, SKEW_BUILD_CHAIN, build_skew_hankel),
    ):
        trace = []
        m = builder(r, trace)
        assert format_chain(trace[0][1], trace[1:]) == chain
        assert trace[0][0] == "a"
        assert m == out


def test_trace_is_optional_and_deterministic():
    assert build_hankel(HANKEL_BUILD_R) == build_hankel(HANKEL_BUILD_R, [])
    assert build_skew_hankel(SKEW_BUILD_R) == build_skew_hankel(SKEW_BUILD_R)


@pytest.mark.parametrize("cls, r", [(C.PLAIN, (0, 0)), (C.LOOPY, (0, 0)), (C.HANKEL, (0, 0, 3, 3)),
                                    (C.SKEW_HANKEL, (1, 2, 1, 2)), (C.SKEW_HANKEL, (0, 4, 0))])
def test_infeasible_input_raises(cls, r):
    with pytest.raises(InfeasibleError):
        build(r, cls)


def test_reduction_classes_have_no_constructor():
    with pytest.raises(ValueError):
        build((0,), C.HANKEL_LOOPY)


@pytest.mark.parametrize("cls, top", [(C.PLAIN, 5), (C.LOOPY, 4), (C.HANKEL, 7), (C.SKEW_HANKEL, 8)],
                         ids=lambda x: getattr(x, "value", x))
def test_every_realizable_vector_builds(cls, top):
    for n in range(1, top + 1):
        for r in feasibility_oracle(n, cls):
            assert _valid(build(r, cls), r, cls), (n, r)


@pytest.mark.parametrize("cls", [C.HANKEL, C.SKEW_HANKEL], ids=lambda c: c.value)
def test_output_is_among_enumerated_members(cls):
    r = regular_vector(6, cls)
    assert build(r, cls) in set(enumerate_class(6, cls, r))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(BUILDABLE), st.integers(1, 200), st.randoms(use_true_random=False))
def test_random_feasible_vectors_build(cls, n, rnd):
    r = random_feasible(n, cls, random.Random(rnd.random()))
    assert exists(r, cls)
    assert _valid(build(r, cls), r, cls)


@given(members(C.LOOPY, max_n=5))
def test_fold_inverts_lift(t):
    assert fold(lift_loopy(t)) == t


@given(members(C.PLAIN, max_n=6, min_n=2))
def test_lift_inverts_fold(t):
    assert lift_loopy(fold(t)) == t


def test_lift_is_bijective_onto_plain_order_plus_one():
    lifted = {lift_loopy(t) for t in enumerate_class(3, C.LOOPY)}
    assert lifted == set(enumerate_class(4, C.PLAIN))
