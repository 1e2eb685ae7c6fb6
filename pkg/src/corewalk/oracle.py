"""Brute-force cross-checks for the closed-form construction.

Three independent routes: exhaustive enumeration of all valid walks (tiny
p), a longest-walk dynamic program with exact tie counting (moderate p),
and exhaustive search over all p-core p'-partitions up to a size cap.  None
of them shares code with the closed-form pipeline beyond modular inverses,
so a bug on either side shows up as a loud disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Optional

from .errors import UniquenessError, VerificationError
from .modarith import inverse_range, is_prime
from .partitions import Partition, is_p_core, is_p_regular
from .residue_walk import lambda_profile

MAX_ENUM_PRIME = 9
MAX_DP_PRIME = 500
DEFAULT_SEARCH_BUDGET = 2_000_000


class WalkCandidate(NamedTuple):
    m: tuple[int, ...]
    length: int
    size: int


class LongestWalkResult(NamedTuple):
    length: int
    count: int
    m: tuple[int, ...]


@dataclass(frozen=True)
class PartitionSearchResult:
    partition: Partition
    size: int
    num_maximal: int


def enumerate_valid_walks(p: int, visitor: Callable[[WalkCandidate], None], max_p: int = MAX_ENUM_PRIME) -> int:
    """Visit every walk from 0 with nondecreasing labels avoiding 0.

    Labels run over 1..p-1 in order; for each label the walk may take any
    number of steps short of the count that would land it back on 0.  The
    size of the encoded partition accumulates as (p - label) * position
    weight per step.  Returns the number of walks visited; that count grows
    brutally fast, hence the cap.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p > max_p:
        raise ValueError(f"enumeration is capped at p <= {max_p}, got {p}")
    inv = inverse_range(p - 1, p)
    m = [0] * p

    def rec(label: int, v: int, w: int, size: int) -> int:
        if label == p:
            mt = tuple(m[1:])
            visitor(WalkCandidate(mt, sum(mt), size))
            return 1
        steps_to_zero = (p - v) * inv[label] % p or p
        total = 0
        vk, wk, sk = v, w, size
        for k in range(steps_to_zero):
            if k:
                wk += label
                vk += label
                if vk >= p:
                    vk -= p
                sk += (p - label) * wk
            m[label] = k
            total += rec(label + 1, vk, wk, sk)
        m[label] = 0
        return total

    return rec(1, 0, 0, 0)


def max_size_walk(p: int) -> WalkCandidate:
    """The unique size-maximal walk, by exhaustive enumeration.

    Also insists that the length-maximal walk is unique and is the same
    candidate, since the construction leans on that coincidence.
    """
    state = {
        "best_size": None,
        "size_ties": 0,
        "size_m": None,
        "best_len": None,
        "len_ties": 0,
        "len_m": None,
        "winner": None,
    }

    def visit(cand: WalkCandidate) -> None:
        if state["best_size"] is None or cand.size > state["best_size"]:
            state["best_size"] = cand.size
            state["size_ties"] = 1
            state["size_m"] = cand.m
            state["winner"] = cand
        elif cand.size == state["best_size"]:
            state["size_ties"] += 1
        if state["best_len"] is None or cand.length > state["best_len"]:
            state["best_len"] = cand.length
            state["len_ties"] = 1
            state["len_m"] = cand.m
        elif cand.length == state["best_len"]:
            state["len_ties"] += 1

    enumerate_valid_walks(p, visit)
    if state["size_ties"] != 1:
        raise UniquenessError(f"{state['size_ties']} size-maximal walks at p={p}")
    if state["len_ties"] != 1:
        raise UniquenessError(f"{state['len_ties']} length-maximal walks at p={p}")
    if state["size_m"] != state["len_m"]:
        raise UniquenessError(f"size and length maximizers differ at p={p}")
    return state["winner"]


def longest_walk_dp(p: int, compare_profile: bool = True) -> LongestWalkResult:
    """Longest valid walk via dynamic programming over (label, vertex).

    Vertices reachable with label i sit at positions q = v * inv(i) mod p
    along the label-i cycle; extending by k steps of label i moves q to
    q + k, so the transition is a prefix maximum over positions.  Exact tie
    counts ride along, and the result must be a unique optimum.  With
    compare_profile set, the optimal length is checked against the
    closed-form profile.
    """
    if not is_prime(p) or p < 3:
        raise ValueError(f"p must be an odd prime, got {p}")
    if p > MAX_DP_PRIME:
        raise ValueError(f"dynamic program is capped at p <= {MAX_DP_PRIME}, got {p}")
    inv = inverse_range(p - 1, p)
    neg = -(1 << 60)
    best = [neg] * p
    best[0] = 0
    cnt = [0] * p
    cnt[0] = 1
    backs: list[list[int]] = []
    for i in range(1, p):
        nbest = [neg] * p
        ncnt = [0] * p
        nback = [-1] * p
        run_val = neg
        run_cnt = 0
        run_src = -1
        v = 0
        for q in range(p):
            bv = best[v]
            if bv > neg:
                cand = bv - q
                if cand > run_val:
                    run_val = cand
                    run_cnt = cnt[v]
                    run_src = v
                elif cand == run_val:
                    run_cnt += cnt[v]
            if run_val > neg:
                nbest[v] = run_val + q
                ncnt[v] = run_cnt
                nback[v] = run_src
            v += i
            if v >= p:
                v -= p
        best, cnt = nbest, ncnt
        backs.append(nback)

    length = max(best)
    count = sum(c for bv, c in zip(best, cnt) if bv == length)
    if count != 1:
        raise UniquenessError(f"{count} longest walks at p={p}")
    end = best.index(length)

    mvec = [0] * p
    v = end
    for i in range(p - 1, 0, -1):
        u = backs[i - 1][v]
        if u < 0:
            raise VerificationError(f"broken backpointer at label {i}, p={p}")
        mvec[i] = (v - u) * inv[i] % p
        v = u
    if v != 0:
        raise VerificationError(f"reconstructed walk does not start at 0, p={p}")
    if sum(mvec) != length:
        raise VerificationError(f"reconstructed walk length mismatch at p={p}")

    if compare_profile:
        profile = lambda_profile(p)
        expected = int(profile.m[1:].sum())
        if length != expected:
            raise VerificationError(f"longest walk {length} != profile total {expected} at p={p}")
    return LongestWalkResult(length, count, tuple(mvec[1:]))


def iter_partitions(n: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    top = n if max_part is None or max_part > n else max_part
    for first in range(top, 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def partition_counts(n: int) -> list[int]:
    """p(0), ..., p(n) by the pentagonal number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    counts = [0] * (n + 1)
    counts[0] = 1
    for k in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            sign = -1 if j % 2 == 0 else 1
            total += sign * counts[k - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= k:
                total += sign * counts[k - g2]
            j += 1
        counts[k] = total
    return counts


def exhaustive_partition_search(
    p: int,
    size_cap: int,
    require_unique: bool = True,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> PartitionSearchResult:
    """Largest p-core p'-partition among all partitions of size <= size_cap.

    Visits every partition up to the cap, so the cap is budgeted through the
    exact partition counts before starting.  Ties at the maximal size raise
    unless require_unique is off, in which case the lexicographically
    greatest winner is returned for determinism.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if size_cap < 0:
        raise ValueError("size_cap must be nonnegative")
    visits = sum(partition_counts(size_cap))
    if visits > budget:
        raise ValueError(f"search would visit {visits} partitions, above the budget of {budget}")

    best_size = 0
    best: list[tuple[int, ...]] = [()]
    for n in range(1, size_cap + 1):
        hits = [
            parts
            for parts in iter_partitions(n)
            if is_p_regular(Partition(parts), p) and is_p_core(Partition(parts), p)
        ]
        if hits:
            best_size = n
            best = hits
    if require_unique and len(best) > 1:
        raise UniquenessError(f"{len(best)} maximal candidates of size {best_size} at p={p}")
    return PartitionSearchResult(Partition(max(best)), best_size, len(best))
