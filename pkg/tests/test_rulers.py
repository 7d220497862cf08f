import pytest

from ziggu import codes, rulers
from ziggu.rulers import (
    RulerKind,
    complement,
    complement_max,
    complement_mid,
    replay,
    ruler,
    ruler_entry_binary,
    ruler_list,
)


def test_binary_unsigned_small():
    assert ruler_list("binary", 3) == [1, 2, 1, 3, 1, 2, 1]
    assert ruler_list("binary", 1) == [1]


def test_binary_signed_prefix():
    assert ruler_list("binary", 4, signed=True)[:8] == [1, 2, -1, 3, 1, -2, -1, 4]


def test_short_unsigned_n3():
    assert ruler_list("short", 3) == [
        1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 3, 2, 1, 1, 1, 2, 1, 1, 1, 2, 3,
        2, 1, 1, 1, 2, 1, 1, 1, 2, 3,
    ]


def test_short_signed_n3():
    got = ruler_list("short", 3, signed=True)
    assert got == [
        1, 1, 1, 2, -1, -1, -1, 2, 1, 1, 1, 2, 3, -2, -1, -1, -1, -2, 1, 1,
        1, -2, 3, 2, -1, -1, -1, 2, 1, 1, 1, 2, 3,
    ]
    # contains the worked fragment and ends with ...,2,1,1,1,2,3
    frag = [-2, 3, 2, -1, -1, -1, 2, 1, 1, 1, 2, 3]
    assert any(got[i : i + len(frag)] == frag for i in range(len(got)))
    assert got[-6:] == [2, 1, 1, 1, 2, 3]


def test_sequence_lengths():
    for n in range(1, 9):
        assert len(ruler_list("binary", n)) == 2**n - 1
        assert len(ruler_list("quat", n)) == 4**n - 1
        assert len(ruler_list("long", n)) == (3 ** (n + 1) - 3) // 2
        assert len(ruler_list("short", n)) == 6 * 2**n - 3 * n - 6


def test_unsigned_is_magnitude_of_signed():
    sentinel = object()
    from itertools import zip_longest

    for kind in RulerKind:
        for n in range(1, 11):
            pairs = zip_longest(
                ruler(kind, n, signed=True), ruler(kind, n), fillvalue=sentinel
            )
            assert all(abs(s) == u for s, u in pairs)


def test_stair_climbing_property():
    # consecutive change positions differ by at most 1
    for n in range(1, 13):
        prev = None
        for v in ruler("short", n):
            if prev is not None:
                assert abs(v - prev) <= 1
            prev = v


def test_metronome_property():
    # every second change touches position 1
    for n in range(1, 13):
        for j, v in enumerate(ruler("binary", n), start=1):
            if j % 2 == 1:
                assert v == 1


def test_direct_binary_entry():
    assert ruler_entry_binary(152) == 4
    assert ruler_entry_binary(152, signed=True) == -4
    assert ruler_entry_binary(1) == 1
    with pytest.raises(ValueError):
        ruler_entry_binary(0)
    for n in range(1, 11):
        seq = ruler_list("binary", n, signed=True)
        for j, v in enumerate(seq, start=1):
            assert ruler_entry_binary(j, signed=True) == v
            assert ruler_entry_binary(j) == abs(v)


def test_replay_reproduces_listings():
    for kind, listing_kind in [
        ("binary", "brgc"), ("quat", "quat"), ("long", "long"), ("short", "short"),
    ]:
        for n in range(1, 8):
            want = list(codes.iter_listing(listing_kind, n))
            assert replay("0" * n, ruler(kind, n, signed=True), signed=True) == want
            assert replay("0" * n, ruler(kind, n), signed=False) == want


def test_replay_single_step():
    assert replay("00", [1], signed=False) == ["00", "01"]
    assert replay("00", [1], signed=True) == ["00", "01"]


def test_replay_range_error():
    with pytest.raises(ValueError):
        replay("03", [1], signed=True)  # 3 + 1 out of range
    with pytest.raises(ValueError):
        replay("00", [3], signed=False)  # no third digit


def test_transforms():
    assert complement([1, -2, 3]) == [-1, 2, -3]
    assert complement_max([1, 2, -1, -2]) == [1, -2, -1, 2]
    assert complement_mid([1, 2, 1]) == [1, -2, 1]
    with pytest.raises(ValueError):
        complement_mid([1, 2])


def test_reverse_complement_equals_complement_max_on_palindromic_bases():
    # where the unsigned base sequence is a palindrome, reversing the
    # complemented signed sequence is the same as negating its largest
    # entries; this is what lets the recursions drop explicit reversals
    for n in range(1, 6):
        squat = ruler_list("quat", n, signed=True)
        assert list(reversed(complement(squat))) == complement_max(squat)
        sbin = ruler_list("binary", n, signed=True)
        assert list(reversed(complement(sbin))) == complement_mid(sbin)
        assert complement_mid(sbin) == complement_max(sbin)


def test_kind_coercion_and_errors():
    assert RulerKind.coerce("short") is RulerKind.SHORT
    with pytest.raises(ValueError):
        ruler_list("ternary", 3)
    with pytest.raises(ValueError):
        list(ruler("binary", 0))
    with pytest.raises(ValueError):
        ruler_list("binary", 13)
