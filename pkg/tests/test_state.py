import itertools

import pytest
from hypothesis import given, strategies as st

from ziggu import codes
from ziggu.state import (
    IllegalMoveError,
    InvalidStateError,
    MazeVector,
    Move,
    QuatString,
    apply_move,
    from_maze,
    is_valid,
    is_ziggu,
    iter_valid_states,
    legal_moves,
    max_move_bound,
    parse,
    to_maze,
)

quat_texts = st.text(alphabet="0123", min_size=1, max_size=10)
valid_states = quat_texts.map(
    lambda t: t.rstrip("3").replace("3", "1") + t[len(t.rstrip("3")):]
).filter(is_valid)


def test_parse_positions():
    q = parse("103")
    assert q.digit(3) == 1 and q.digit(2) == 0 and q.digit(1) == 3
    assert parse("000") == "000"


@pytest.mark.parametrize("bad", ["", "4", "10a", "12 3", "-1"])
def test_parse_rejects(bad):
    with pytest.raises(InvalidStateError):
        parse(bad)


def test_validity_examples():
    assert not is_valid("132222")
    assert is_valid("013")
    assert not is_valid("130")


def test_ziggu_examples():
    assert is_ziggu("103")
    assert not is_ziggu("102")
    assert is_ziggu("00210")


def test_ziggu_implies_valid():
    for n in range(1, 7):
        for digits in itertools.product("0123", repeat=n):
            s = "".join(digits)
            if is_ziggu(s):
                assert is_valid(s)


@pytest.mark.parametrize(
    "n,expected_valid",
    [(n, (3 ** (n + 1) - 1) // 2) for n in range(3, 11)],
)
def test_counts_by_exhaustive_enumeration(n, expected_valid):
    valid = ziggu = 0
    for digits in itertools.product("0123", repeat=n):
        s = "".join(digits)
        if is_valid(s):
            valid += 1
        if is_ziggu(s):
            ziggu += 1
    assert valid == expected_valid
    assert ziggu == 6 * 2**n - 3 * n - 5


def test_ziggu_set_matches_shortest_solution_recursion():
    # the string predicate must agree with the recursive construction
    for n in range(1, 11):
        members = set(codes.iter_listing("short", n))
        from_pattern = {q for q in iter_valid_states(n) if is_ziggu(q)}
        assert members == from_pattern


def test_maze_roundtrip_example():
    mv = to_maze("0203")
    assert mv.positions == ((0, 2), (2, 0), (0, 3))
    assert from_maze(mv) == "0203"
    assert to_maze("3333").positions == ((3, 3), (3, 3), (3, 3))


def test_maze_rejects_invalid():
    with pytest.raises(InvalidStateError):
        to_maze("130")
    with pytest.raises(ValueError):
        MazeVector(((3, 0),))
    with pytest.raises(ValueError):
        MazeVector(((0, 1), (2, 3)))  # broken chaining


def test_maze_roundtrip_exhaustive():
    for n in range(2, 9):
        for q in iter_valid_states(n):
            assert from_maze(to_maze(q)) == q


def test_legal_moves_multi_move_state():
    moves = legal_moves("10203")
    assert moves == {Move(5, 1), Move(3, -1), Move(2, 1), Move(1, -1)}
    assert apply_move("10203", Move(5, 1)) == "20203"
    assert apply_move("10203", Move(3, -1)) == "10103"
    assert apply_move("10203", Move(2, 1)) == "10213"


def test_legal_moves_endpoints():
    assert legal_moves("000") == {Move(1, 1)}
    assert legal_moves("333") == {Move(3, -1)}
    assert apply_move("000", Move(1, 1)) == "001"


def test_locked_digit_rejected_with_reason():
    with pytest.raises(IllegalMoveError) as exc:
        apply_move("10203", Move(4, 1))
    assert exc.value.reason == "maze-turn"
    with pytest.raises(IllegalMoveError) as exc:
        apply_move("333", Move(1, -1))
    assert exc.value.reason == "validity"


def test_every_move_preserves_validity_and_is_symmetric():
    for n in range(1, 7):
        for q in iter_valid_states(n):
            for move in legal_moves(q):
                nxt = apply_move(q, move)
                assert is_valid(nxt)
                assert sum(
                    abs(nxt.digit(i) - q.digit(i)) for i in range(1, n + 1)
                ) == 1
                assert move.inverse() in legal_moves(nxt)


def test_exactly_two_states_have_one_move():
    for n in range(2, 7):
        singles = [q for q in iter_valid_states(n) if len(legal_moves(q)) == 1]
        assert sorted(singles) == ["0" * n, "3" * n]


def test_move_count_bound():
    # ceil(n/2) + 1 signed moves, attained by states like 20202
    for n in range(3, 9):
        most = max(len(legal_moves(q)) for q in iter_valid_states(n))
        assert most == max_move_bound(n)


@given(valid_states)
def test_with_digit_roundtrip(text):
    q = QuatString(text)
    for i in range(1, len(q) + 1):
        assert q.with_digit(i, q.digit(i)) == q


@given(st.integers(min_value=1, max_value=9), st.data())
def test_index_adapter_roundtrip(n, data):
    # right-to-left index i maps to text position n - i and back
    i = data.draw(st.integers(min_value=1, max_value=n))
    p = n - i
    assert n - p == i
    q = QuatString("0" * n).with_digit(i, 2)
    assert q[p] == "2"
