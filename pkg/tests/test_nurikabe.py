import itertools

import pytest
from hypothesis import given, strategies as st

from ziggu import codes, oracle
from ziggu.nurikabe import (
    BB,
    BW,
    COLUMNS,
    WB,
    WW,
    NurikabeGrid,
    is_valid_grid,
    nurikabe_counts,
    reflection_check,
    rho,
    sigma,
    sigma_inverse,
)

grids = st.lists(st.sampled_from(COLUMNS), min_size=0, max_size=9).map(
    lambda cols: NurikabeGrid(tuple(cols))
)


def _connected_by_bfs(g: NurikabeGrid) -> bool:
    # reference implementation for the validity check: plain flood fill
    black = {
        (r, c)
        for c, col in enumerate(g.columns)
        for r in (0, 1)
        if col[r]
    }
    if not black:
        return True
    todo = [next(iter(black))]
    seen = {todo[0]}
    while todo:
        r, c = todo.pop()
        for rr, cc in ((r ^ 1, c), (r, c - 1), (r, c + 1)):
            if (rr, cc) in black and (rr, cc) not in seen:
                seen.add((rr, cc))
                todo.append((rr, cc))
    return seen == black


def _no_2x2(g: NurikabeGrid) -> bool:
    return all(
        not (a == BB and b == BB) for a, b in zip(g.columns, g.columns[1:])
    )


@given(grids)
def test_validity_matches_flood_fill(g):
    assert is_valid_grid(g) == (_connected_by_bfs(g) and _no_2x2(g))


def test_validity_examples():
    assert is_valid_grid(NurikabeGrid((WW, WW, WW)))
    assert not is_valid_grid(NurikabeGrid((BB, WW, BB)))  # disconnected
    assert not is_valid_grid(NurikabeGrid((BB, BB)))  # 2x2 block


def test_text_format_roundtrip():
    g = NurikabeGrid((BB, WB, WW))
    assert g.render() == "#.." + "\n" + "##."
    assert NurikabeGrid.from_text(g.render()) == g
    with pytest.raises(ValueError):
        NurikabeGrid.from_text("##\n#")
    with pytest.raises(ValueError):
        NurikabeGrid.from_text("#x\n..")


def test_sigma_fixed_points():
    for n in range(1, 7):
        assert sigma("3" * n) == NurikabeGrid((WW,) * n)
    assert sigma("0") == NurikabeGrid((BB,))


def test_sigma_rejects_offpath():
    with pytest.raises(ValueError):
        sigma("102")


def test_sigma_is_bijection_onto_grids():
    for n in range(1, 9):
        image = [sigma(q) for q in codes.iter_listing("short", n)]
        assert len(set(image)) == len(image)
        assert set(image) == set(oracle.enumerate_nurikabe(n))


def test_sigma_inverse_roundtrip():
    for n in range(1, 9):
        for g in oracle.enumerate_nurikabe(n):
            assert sigma(sigma_inverse(g)) == g
    for n in range(1, 8):
        for q in codes.iter_listing("short", n):
            assert sigma_inverse(sigma(q)) == q


def test_sigma_inverse_rejects_invalid():
    with pytest.raises(ValueError):
        sigma_inverse(NurikabeGrid((BB, WW, BB)))


def test_rho():
    assert rho("1212") == "2121"
    for n in range(1, 7):
        for q in codes.iter_listing("short", n):
            assert rho(rho(q)) == q
    with pytest.raises(ValueError):
        rho("102")


def test_reflection_property():
    for n in range(1, 7):
        for q in codes.iter_listing("short", n):
            assert reflection_check(q)


def test_counts():
    assert nurikabe_counts(3)[0] == 34
    assert nurikabe_counts(0) == (1, 0, 1)
    assert nurikabe_counts(5) == (172, 48, 124)
    for n in range(0, 11):
        a, b, c = nurikabe_counts(n)
        assert a == 6 * 2**n - 3 * n - 5
        assert a == b + c
        if n >= 1:
            assert b == 3 * 2 ** (n - 1)
            assert c == 9 * 2 ** (n - 1) - 3 * n - 5


def test_counts_against_enumeration():
    # the empty grid (n = 0) is counted on the all-white side by convention
    assert len(oracle.enumerate_nurikabe(0)) == 1
    for n in range(1, 9):
        enumerated = oracle.enumerate_nurikabe(n)
        a, b, c = nurikabe_counts(n)
        assert len(enumerated) == a
        full = sum(1 for g in enumerated if all(t or b_ for t, b_ in g.columns))
        assert full == b
        assert a - full == c


def test_all_white_column_partition():
    # b counts grids with black in every column; under sigma those are
    # exactly the 3-free states shaped run-of-[12] plus optional final 0
    import re

    full_shape = re.compile(r"[12]*0?")
    for n in range(1, 8):
        full = 0
        for q in codes.iter_listing("short", n):
            g = sigma(q)
            if all(t or bo for t, bo in g.columns):
                full += 1
                assert full_shape.fullmatch(q)
        assert full == nurikabe_counts(n)[1]
