import itertools

import pytest

from ziggu import codes, loopless


def all_cases():
    for algorithm in loopless.ALGORITHMS:
        for backend in loopless.available_backends():
            yield algorithm, backend


@pytest.mark.parametrize("algorithm,backend", list(all_cases()))
def test_emits_shortest_solution(algorithm, backend):
    for n in range(1, 11):
        got = list(loopless.iter_short(n, algorithm, backend))
        want = list(codes.iter_listing("short", n))
        assert got == want, f"n={n}"


@pytest.mark.parametrize("algorithm,backend", list(all_cases()))
def test_change_stream_length(algorithm, backend):
    for n in range(1, 12):
        changes = sum(1 for _ in loopless.short_changes(n, algorithm, backend))
        assert changes == codes.count("short", n) - 1


def test_backends_agree():
    if len(loopless.available_backends()) < 2:
        pytest.skip("compiled kernel not built")
    for algorithm in loopless.ALGORITHMS:
        for n in (1, 2, 5, 9):
            assert list(loopless.short_changes(n, algorithm, "c")) == list(
                loopless.short_changes(n, algorithm, "py")
            )


def test_change_stream_is_the_signed_ruler():
    from ziggu import rulers

    for n in range(1, 9):
        stream = [i * d for i, d in loopless.short_changes(n, "index")]
        assert stream == rulers.ruler_list("short", n, signed=True)


def test_constant_work_per_state():
    # digit reads+writes between consecutive emitted states stay bounded
    # by 4, independent of n
    for algorithm in loopless.ALGORITHMS:
        maxima = []
        for n in (8, 12, 16):
            max_ops, total = loopless.ops_per_state(n, algorithm)
            assert max_ops <= 4, (algorithm, n, max_ops)
            maxima.append(max_ops)
        assert len(set(maxima)) == 1, f"per-state bound grew with n: {maxima}"


def test_distinct_iterators_are_independent():
    a = loopless.short_changes(4, "index")
    b = loopless.short_changes(4, "index")
    first = list(itertools.islice(a, 5))
    assert list(itertools.islice(b, 5)) == first


def test_argument_validation():
    with pytest.raises(ValueError):
        loopless.short_changes(0, "index")
    with pytest.raises(ValueError):
        loopless.short_changes(3, "warp")
    with pytest.raises(ValueError):
        loopless.short_changes(3, "index", "fortran")
    with pytest.raises(ValueError):
        loopless.ops_per_state(3, "warp")
