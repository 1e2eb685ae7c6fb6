import random

import pytest

from corewalk.errors import UniquenessError
from corewalk.modarith import primes_in_range
from corewalk.oracle import (
    enumerate_valid_walks,
    exhaustive_partition_search,
    iter_partitions,
    longest_walk_dp,
    max_size_walk,
    partition_counts,
)
from corewalk.partitions import Partition, is_p_core, is_p_regular
from corewalk.residue_walk import lambda_profile, partition_from_row_counts, profile_to_partition


def _collect(p):
    seen = []
    count = enumerate_valid_walks(p, seen.append)
    assert count == len(seen)
    return seen


def test_enumeration_counts_frozen():
    assert enumerate_valid_walks(3, lambda c: None) == 6
    assert enumerate_valid_walks(5, lambda c: None) == 115
    assert enumerate_valid_walks(7, lambda c: None) == 5488


def test_enumeration_caps():
    with pytest.raises(ValueError):
        enumerate_valid_walks(11, lambda c: None)
    with pytest.raises(ValueError):
        enumerate_valid_walks(4, lambda c: None)


def test_max_size_walk_frozen():
    assert max_size_walk(3) == ((2, 1), 3, 10)
    assert max_size_walk(5) == ((4, 2, 2, 3), 11, 198)
    assert max_size_walk(7) == ((6, 2, 5, 5, 2, 5), 25, 1726)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_max_size_walk_matches_profile(p):
    cand = max_size_walk(p)
    prof = lambda_profile(p)
    assert cand.m == tuple(prof.m[1:].tolist())
    assert cand.size == prof.size
    assert cand.length == int(prof.m[1:].sum())


@pytest.mark.parametrize("p", [5, 7])
def test_candidates_encode_core_regular_partitions(p):
    # every valid walk is an aligned display of a p-core p'-partition
    candidates = _collect(p)
    rng = random.Random(p)
    for cand in rng.sample(candidates, 50):
        lam = partition_from_row_counts(p, cand.m)
        assert lam.size == cand.size
        assert is_p_core(lam, p)
        assert is_p_regular(lam, p)


def test_candidate_sizes_are_distinct_at_maximum():
    sizes = sorted(c.size for c in _collect(5))
    assert sizes[-1] == 198
    assert sizes[-2] < 198


def test_longest_walk_dp_frozen():
    r = longest_walk_dp(3)
    assert (r.length, r.count, r.m) == (3, 1, (2, 1))
    assert longest_walk_dp(5).m == (4, 2, 2, 3)
    assert longest_walk_dp(13).length == int(lambda_profile(13).m[1:].sum())


@pytest.mark.parametrize("p", primes_in_range(3, 60))
def test_longest_walk_dp_matches_profile(p):
    r = longest_walk_dp(p)
    prof = lambda_profile(p)
    assert r.count == 1
    assert r.m == tuple(prof.m[1:].tolist())


def test_longest_walk_dp_caps():
    with pytest.raises(ValueError):
        longest_walk_dp(521)
    with pytest.raises(ValueError):
        longest_walk_dp(2)


def test_longest_walk_dp_without_profile_comparison():
    assert longest_walk_dp(7, compare_profile=False).length == 25


def test_iter_partitions_matches_pentagonal_counts():
    counts = partition_counts(12)
    for n in range(13):
        assert sum(1 for _ in iter_partitions(n)) == counts[n]


def test_partition_counts_frozen():
    assert partition_counts(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_iter_partitions_respects_max_part():
    assert list(iter_partitions(4, 2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(iter_partitions(0)) == [()]


def test_exhaustive_search_finds_the_known_maximum():
    r = exhaustive_partition_search(3, 16)
    assert r.partition.parts == (4, 2, 2, 1, 1)
    assert r.size == 10
    assert r.num_maximal == 1


def test_exhaustive_search_agrees_with_profile_at_p3():
    prof = lambda_profile(3)
    r = exhaustive_partition_search(3, prof.size)
    assert r.partition == profile_to_partition(prof)


def test_exhaustive_search_cap_semantics():
    # cap 9 excludes the true maximum of size 10; the best below is unique
    r = exhaustive_partition_search(3, 9)
    assert r.partition.parts == (4, 2, 1, 1)
    assert r.size == 8


def test_exhaustive_search_p2():
    r = exhaustive_partition_search(2, 3)
    assert r.partition.parts == (1,)
    assert r.size == 1


def test_exhaustive_search_tie_handling():
    with pytest.raises(UniquenessError):
        exhaustive_partition_search(3, 6)
    r = exhaustive_partition_search(3, 6, require_unique=False)
    assert r.num_maximal == 2
    assert r.size == 6
    assert r.partition.parts == (4, 2)


def test_exhaustive_search_budget():
    with pytest.raises(ValueError):
        exhaustive_partition_search(3, 100)
    with pytest.raises(ValueError):
        exhaustive_partition_search(4, 5)


def test_empty_cap_returns_empty_partition():
    r = exhaustive_partition_search(3, 0)
    assert r.partition == Partition(())
    assert r.size == 0
