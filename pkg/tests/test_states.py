import io
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gerrymander.states import (
    State,
    blocks_of,
    build_state_space,
    chunks,
    coloring_from_int,
    enumerate_arc_configs,
    is_uninteresting,
    leaders_from_blocks,
    load_state_space,
)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def crossing(blocks):
    for a, b in itertools.permutations(blocks, 2):
        for a1, a2 in itertools.combinations(sorted(a), 2):
            if any(a1 < b1 < a2 for b1 in b) and any(b2 > a2 or b2 < a1 for b2 in b):
                return True
    return False


def brute_arc_configs(colors):
    """All monochromatic non-crossing partitions via full set-partition enumeration."""
    out = set()
    for part in set_partitions(list(range(len(colors)))):
        if all(len({colors[j] for j in b}) == 1 for b in part) and not crossing(part):
            out.add(leaders_from_blocks(part, len(colors)))
    return out


def column_with_pattern(pattern, sizes):
    return tuple(color for color, size in zip(pattern, sizes) for _ in range(size))


def test_chunks():
    assert chunks((1, 1, 1, 1)) == [(0, 3, 1)]
    assert len(chunks((0, 1, 0, 1))) == 4
    c = (0, 0, 1, 1, 1, 0, 1, 0)
    assert chunks(c) == [(0, 1, 0), (2, 4, 1), (5, 5, 0), (6, 6, 1), (7, 7, 0)]


def test_five_chunk_column_has_seven_configs():
    c = (0, 0, 1, 1, 1, 0, 1, 0)
    configs = enumerate_arc_configs(c)
    assert len(configs) == 7
    assert set(configs) == brute_arc_configs([0, 1, 0, 1, 0])


def test_trivial_configs():
    assert enumerate_arc_configs((1, 1, 1, 1)) == [(0,)]
    assert enumerate_arc_configs((0, 0, 1)) == [(0, 1)]


@pytest.mark.parametrize("n", range(1, 8))
def test_single_color_gives_catalan(n):
    from gerrymander.states import _noncrossing_partitions

    catalan = [1, 1, 2, 5, 14, 42, 132, 429][n]
    assert len(set(_noncrossing_partitions([0] * n))) == catalan


@pytest.mark.parametrize("value", range(2 ** 7))
def test_configs_match_bruteforce(value):
    c = coloring_from_int(value, 7)
    assert set(enumerate_arc_configs(c)) == brute_arc_configs([ch[2] for ch in chunks(c)])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 7).flatmap(
    lambda k: st.tuples(st.integers(0, 1), st.lists(st.integers(1, 3), min_size=k, max_size=k))))
def test_config_count_ignores_chunk_sizes(case):
    first, sizes = case
    pattern = [(first + j) % 2 for j in range(len(sizes))]
    base = len(enumerate_arc_configs(column_with_pattern(pattern, [1] * len(sizes))))
    assert len(enumerate_arc_configs(column_with_pattern(pattern, sizes))) == base


def cell_leaders(c, cell_blocks):
    # cell-level blocks, numbered from 1 top down -> chunk leaders
    owner = {}
    for j, (lo, hi, _) in enumerate(chunks(c)):
        for i in range(lo, hi + 1):
            owner[i + 1] = j
    return leaders_from_blocks([{owner[i] for i in b} for b in cell_blocks], len(chunks(c)))


def test_uninteresting_examples():
    c = (0, 1, 0, 1)
    assert is_uninteresting(c, cell_leaders(c, [{1}, {2}, {3}, {4}]))
    assert not is_uninteresting(c, cell_leaders(c, [{1, 3}, {2}, {4}]))
    assert not is_uninteresting(c, cell_leaders(c, [{1}, {3}, {2, 4}]))
    assert not is_uninteresting((1, 1, 1, 1), (0,))
    assert not is_uninteresting((0,) * 5, (0,))


def test_uninteresting_six_chunk_examples():
    # Left-side arcs only.  Joining black 2 and 6 traps black 4 between
    # white 3 and 5; joining 1-3 and 4-6 leaves a way to finish on the right.
    c = (0, 1, 0, 1, 0, 1)
    assert is_uninteresting(c, cell_leaders(c, [{1}, {3}, {5}, {2, 6}, {4}]))
    assert not is_uninteresting(c, cell_leaders(c, [{1, 3}, {4, 6}, {2}, {5}]))


@pytest.mark.parametrize("n,ell", [(1, 6), (2, 26), (3, 154), (4, 1026), (5, 7222)])
def test_state_counts(n, ell):
    assert len(build_state_space(2 * n)) == ell


@pytest.mark.slow
@pytest.mark.parametrize("n,ell", [(6, 52650), (7, 393878)])
def test_state_counts_large(n, ell):
    assert len(build_state_space(2 * n)) == ell


def test_odd_rows():
    assert len(build_state_space(1)) == 4
    assert len(build_state_space(3)) == 12


def test_zero_rows_rejected():
    with pytest.raises(ValueError):
        build_state_space(0)


@pytest.mark.parametrize("r", range(1, 9))
def test_space_invariants(r):
    space = build_state_space(r)
    assert all(space.lookup(s) == i for i, s in enumerate(space))
    primed = [s for s in space if s.primed]
    assert primed == [State((0,) * r, (0,), True), State((1,) * r, (0,), True)]
    for s in space:
        ch = chunks(s.coloring)
        blocks = blocks_of(s.leaders)
        assert all(len({ch[j][2] for j in b}) == 1 for b in blocks)
        assert not crossing(blocks)
        assert not is_uninteresting(s.coloring, s.leaders)
    keys = [s.sort_key() for s in space]
    assert keys == sorted(keys)


def test_every_column_appears():
    space = build_state_space(6)
    assert {s.coloring for s in space} == {coloring_from_int(v, 6) for v in range(64)}


def test_dump_roundtrip():
    space = build_state_space(4)
    buf = io.StringIO()
    space.dump(buf)
    text = buf.getvalue()
    lines = text.splitlines()
    assert lines[0] == "gerrystates v1 r=4 count=26"
    assert lines[1] == "0 0000 0 0"
    assert lines[-1] == "25 1111 0 1"
    again = io.StringIO()
    load_state_space(io.StringIO(text)).dump(again)
    assert again.getvalue() == text
    rebuilt = io.StringIO()
    build_state_space(4).dump(rebuilt)
    assert rebuilt.getvalue() == text
