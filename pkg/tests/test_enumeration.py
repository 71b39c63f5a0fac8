import json

import pytest

from conftest import brute_ascending, brute_ni
from downest.enumeration import (
    TABLE1,
    double_factorial_odd,
    enumerate_ascending,
    min_size_for_ni,
    prefixes,
    squares_below,
    tally_csv,
    tally_json,
    tally_nesting,
)
from downest.words import ascending_relabel, validate_dow


def test_small_sizes():
    assert list(enumerate_ascending(0)) == [()]
    assert list(enumerate_ascending(1)) == [(1, 1)]
    assert set(enumerate_ascending(2)) == {(1, 1, 2, 2), (1, 2, 1, 2), (1, 2, 2, 1)}
    assert sum(1 for _ in enumerate_ascending(3)) == 15


@pytest.mark.parametrize("n", range(1, 5))
def test_matches_multiset_permutation_oracle(n):
    assert set(enumerate_ascending(n)) == brute_ascending(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_stream_properties(n):
    words = list(enumerate_ascending(n))
    assert len(words) == len(set(words)) == double_factorial_odd(n)
    for word in words:
        assert validate_dow(word) and ascending_relabel(word) == word


def test_prefix_partition_is_disjoint_cover():
    n = 5
    parts = [list(enumerate_ascending(n, p)) for p in prefixes(n, 4)]
    flat = [x for part in parts for x in part]
    assert len(flat) == len(set(flat)) == double_factorial_odd(n)


def test_tally_small_rows_against_brute_force():
    for n in range(1, 5):
        expect = {}
        for word in enumerate_ascending(n):
            k = brute_ni(word)
            expect[k] = expect.get(k, 0) + 1
        assert tally_nesting(n) == dict(sorted(expect.items())) == TABLE1[n]


@pytest.mark.parametrize("n", [3, 5, 6])
def test_tally_rows(n):
    assert tally_nesting(n) == TABLE1[n]


def test_tally_worker_independent():
    assert tally_nesting(6, workers=2) == tally_nesting(6, workers=1)
    assert tally_nesting(5, workers=3, split_depth=3) == TABLE1[5]


def test_csv_and_json_formats():
    text = tally_csv({4: TABLE1[4], 1: TABLE1[1]})
    assert text == "size,ni,count\n1,1,1\n4,1,17\n4,2,78\n4,3,10\n"
    assert json.loads(tally_json(3, TABLE1[3])) == {"size": 3, "tallies": {"1": 7, "2": 8}}


def test_squares_below():
    assert [squares_below(n) for n in range(1, 11)] == [0, 1, 1, 1, 2, 2, 2, 2, 2, 3]


def test_min_size_for_ni():
    rows = min_size_for_ni(4, max_size=6)
    assert [r["min_size"] for r in rows] == [1, 3, 4, 5]
    assert rows[3] == {"ni": 4, "min_size": 5, "n": 4, "s": 1, "n_minus_s": 3, "n_plus_s": 5}


def test_min_size_uses_supplied_tallies_and_reports_missing():
    rows = min_size_for_ni(6, max_size=7, tallies=TABLE1)
    assert [r["min_size"] for r in rows] == [1, 3, 4, 5, 7, None]
    with pytest.raises(ValueError):
        min_size_for_ni(3, max_size=9)
