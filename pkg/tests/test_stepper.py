import itertools

import pytest

from ziggu import codes, stepper
from ziggu.state import Move, QuatString, iter_valid_states, is_valid, is_ziggu
from ziggu.stepper import (
    AFTER,
    BEFORE,
    EQUAL,
    End,
    compare,
    greedy_step,
    greedy_walk,
    next_state,
    prev_state,
    solve_path,
)

KINDS = ("quat", "long", "short")


def test_successor_worked_examples():
    assert next_state("quat", "012310").state == "012320"
    assert next_state("long", "20103").state == "20102"
    assert next_state("short", "20103").state == "20203"


def test_successor_end_markers():
    assert next_state("quat", "300").end is End.SOLVED
    assert next_state("short", "333").end is End.SOLVED
    assert next_state("long", "3333").end is End.SOLVED
    assert prev_state("quat", "000").end is End.FIRST
    assert prev_state("short", "0000").end is End.FIRST


def test_predecessor_examples():
    assert prev_state("short", "203").state == "103"
    assert prev_state("long", "20102").state == "20103"


def test_iterating_next_reproduces_listings():
    for kind in KINDS:
        for n in range(1, 9):
            want = list(codes.iter_listing(kind, n))
            cur = QuatString("0" * n)
            got = [cur]
            while True:
                out = next_state(kind, cur)
                if out.at_end:
                    break
                assert out.state.digit(out.index) == cur.digit(out.index) + out.delta
                cur = out.state
                got.append(cur)
            assert got == want


def test_next_prev_inverse_on_interior_states():
    for kind in KINDS:
        for n in range(1, 7):
            states = list(codes.iter_listing(kind, n))
            for a, b in zip(states, states[1:]):
                assert next_state(kind, a).state == b
                assert prev_state(kind, b).state == a


def test_next_accepts_valid_offpath_states_for_short():
    # resumption: the rule is total on valid states and rejoins the path
    for n in range(2, 7):
        goal = "3" * n
        for q in iter_valid_states(n):
            out = next_state("short", q)
            if out.at_end:
                assert q == goal
            else:
                assert is_valid(out.state)
        cur = QuatString("20" + "0" * (n - 2))
        for _ in range(4 ** (n + 1)):
            out = next_state("short", cur)
            if out.at_end:
                break
            cur = out.state
        assert cur == goal


def test_prev_requires_membership():
    with pytest.raises(ValueError):
        prev_state("short", "20203")


def test_compare_examples():
    assert compare("101", "100") == BEFORE
    assert compare("11013", "11023") == BEFORE
    assert compare("00", "00") == EQUAL
    assert compare("1110010", "1111111") == AFTER
    with pytest.raises(ValueError):
        compare("00", "000")


def test_compare_is_total_order_matching_rank():
    from ziggu.ranking import rank

    for n in range(1, 5):
        states = list(codes.iter_listing("quat", n))
        for w, v in itertools.combinations(states, 2):
            assert compare(w, v) == BEFORE
            assert compare(v, w) == AFTER
        for s in states:
            assert compare(s, s) == EQUAL
        ranks = {s: rank("quat", s) for s in states}
        for w, v in itertools.combinations(states, 2):
            assert (ranks[w] < ranks[v]) == (compare(w, v) == BEFORE)


def test_greedy_step_start():
    assert greedy_step("000", None, "leftmost") == Move(1, 1)
    assert greedy_step("000", None, "rightmost") == Move(1, 1)


def test_greedy_walks_match_listings():
    for n in range(1, 9):
        assert greedy_walk("0" * n, "leftmost") == list(codes.iter_listing("short", n))
        assert greedy_walk("0" * n, "rightmost") == list(codes.iter_listing("long", n))


def test_greedy_step_none_at_dead_end():
    # from the solved state the only move undoes the arrival move
    assert greedy_step("333", Move(3, 1), "leftmost") is None


def test_solve_path_modes():
    assert solve_path("333", "shortest_list") == []
    assert solve_path("333", "longest_list") == []
    assert solve_path("333", "bfs") == []
    moves = solve_path("103", "shortest_list")
    assert len(moves) == 34 - 1 - 22
    moves = solve_path("100", "bfs")
    assert moves  # geodesic from an off-path state exists
    with pytest.raises(ValueError):
        solve_path("102", "shortest_list")
    with pytest.raises(ValueError):
        solve_path("103", "warp")


def test_solve_path_moves_apply():
    from ziggu.state import apply_move

    for start, mode in [("103", "shortest_list"), ("100", "bfs"), ("012", "longest_list")]:
        cur = QuatString(start)
        for m in solve_path(cur, mode):
            cur = apply_move(cur, m)
        assert cur == "333"
