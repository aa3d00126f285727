import pytest
from hypothesis import given, strategies as st

from fixtures import HANKEL_PAIR, HANKEL_PAIR_MOVES, M, SKEW_PAIR, SKEW_PAIR_MOVES
from strategies import member_from_bits, members
from tournaments.core import TournamentClass as C, is_member, score_vector
from tournaments.oracle import orbit_table
from tournaments.switches import (
    Move,
    MoveError,
    apply_edge_loop,
    apply_four_cycle,
    apply_move,
    apply_three_cycle,
    check_move_shape,
    expand,
    format_moves,
    legal_moves,
    parse_moves,
    replay,
)

CYCLE3 = M("010 001 100")  # 1->2->3->1
REVERSED3 = M("001 100 010")


def test_three_cycle_reverses_and_inverts():
    assert apply_three_cycle(CYCLE3, 1, 2, 3) == REVERSED3
    assert apply_three_cycle(REVERSED3, 3, 2, 1) == CYCLE3
    with pytest.raises(MoveError):
        apply_three_cycle(CYCLE3, 1, 3, 2)
    with pytest.raises(MoveError):
        apply_three_cycle(CYCLE3, 1, 1, 2)


def test_edge_loop_example():
    out = apply_edge_loop(M("01 01"), 1, 2)
    assert out == M("10 10")
    assert apply_edge_loop(out, 2, 1) == M("01 01")
    with pytest.raises(MoveError):
        apply_edge_loop(out, 1, 2)


def test_four_cycle_reverses_cycle_keeps_chords():
    m = M("0100 0010 0001 1000")  # 1->2->3->4->1, chords absent
    out = apply_four_cycle(m, 1, 2, 3, 4)
    assert out == M("0001 1000 0100 0010")


def test_four_cycle_equals_two_triangles_when_chord_absent():
    m = M("0100 0011 1001 1000")  # 1->2->3->4->1 with chords 3->1 and 2->4
    two = apply_three_cycle(apply_three_cycle(m, 1, 2, 3), 1, 3, 4)
    assert two == apply_four_cycle(m, 1, 2, 3, 4)


def test_reference_hankel_switch_sequence():
    t1, t2 = HANKEL_PAIR
    moves = parse_moves(HANKEL_PAIR_MOVES)
    states = list(replay(t1, moves, C.HANKEL))
    assert states[-1] == t2
    assert all(score_vector(s) == score_vector(t1) for s in states)


def test_reference_skew_switch():
    t1, t2 = SKEW_PAIR
    (mv,) = parse_moves(SKEW_PAIR_MOVES)
    assert expand(mv, 5) == [(1, 3, 4), (5, 3, 2)]
    assert apply_move(t1, mv, C.SKEW_HANKEL) == t2


def test_composite_expansions():
    assert expand(Move("HP3", (3, 2, 1)), 7) == [(3, 2, 1), (7, 6, 5)]
    assert expand(Move("H3M", (6,)), 7) == [(6, 4, 2)]
    assert expand(Move("H4", (1, 2)), 6) == [(1, 2, 5, 6)]
    assert expand(Move("S4", (1, 2)), 6) == [(1, 2, 6, 5)]
    with pytest.raises(MoveError):
        expand(Move("H3M", (1,)), 6)
    with pytest.raises(MoveError):
        expand(Move("H3M", (4,)), 7)


def test_purity_and_shape_checks():
    with pytest.raises(MoveError):
        check_move_shape(Move("HP3", (1, 2, 6)), 6)  # 1 and 6 are mirrors
    with pytest.raises(MoveError):
        check_move_shape(Move("SP3", (1, 3, 5)), 5)
    check_move_shape(Move("SP3", (1, 3, 4)), 5)  # the middle is allowed
    with pytest.raises(MoveError):
        check_move_shape(Move("H4", (1, 6)), 6)
    with pytest.raises(MoveError):
        check_move_shape(Move("S4", (2, 3)), 4)
    with pytest.raises(MoveError):
        check_move_shape(Move("T", (1, 2, 9)), 3)


def test_move_syntax():
    assert Move.parse("hp3 3 2 1") == Move("HP3", (3, 2, 1))
    text = "Q 7 5 3 1\nHP3 3 2 1\nH3M 6\n"
    assert format_moves(parse_moves(text)) == text
    assert parse_moves("# comment\n\nT 1 2 3  # trailing\n") == [Move("T", (1, 2, 3))]
    for bad in ["T 1 2", "X 1", "T 1 1 2", "T a b c", ""]:
        with pytest.raises(ValueError):
            Move.parse(bad)


def test_vocabulary_is_enforced():
    with pytest.raises(MoveError):
        apply_move(M("01 01"), Move("EL", (1, 2)), C.PLAIN)
    with pytest.raises(MoveError):
        apply_move(HANKEL_PAIR[0], Move("SP3", (3, 2, 1)), C.HANKEL)


def test_replay_reports_failing_step():
    t1, _ = HANKEL_PAIR
    moves = parse_moves(HANKEL_PAIR_MOVES + "H3M 6\nH3M 6\n")
    with pytest.raises(MoveError, match="step"):
        list(replay(t1, moves, C.HANKEL))


CLASSES = {C.PLAIN: 5, C.LOOPY: 4, C.HANKEL: 7, C.SKEW_HANKEL: 8}


@given(st.sampled_from(list(CLASSES)).flatmap(lambda c: st.tuples(st.just(c), members(c, CLASSES[c]))))
def test_legal_moves_preserve_class_scores_and_invert(case):
    cls, m = case
    r = score_vector(m)
    for mv in legal_moves(m, cls):
        out = apply_move(m, mv, cls)
        assert is_member(out, cls) and score_vector(out) == r
        assert apply_move(out, mv.inverse(m.n), cls) == m


def test_edge_loop_preserves_trace_exhaustively():
    for n in range(2, 4):
        f = orbit_table(n, C.LOOPY).free
        for w in range(1 << f):
            m = member_from_bits(n, C.LOOPY, w)
            tr = sum(m.bit(i, i) for i in range(n))
            for mv in legal_moves(m, C.LOOPY):
                if mv.kind == "EL":
                    out = apply_move(m, mv, C.LOOPY)
                    assert sum(out.bit(i, i) for i in range(n)) == tr
