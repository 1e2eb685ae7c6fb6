"""Agreement sweep between the closed-form profile and every oracle.

Runs exhaustive walk enumeration where feasible, the longest-walk dynamic
program over a prime range, and the exhaustive partition search at p = 3,
reporting agreement with lambda_profile for each.  Any disagreement raises,
so a clean exit is the result.
"""

import argparse
import time

from corewalk.modarith import primes_in_range
from corewalk.oracle import (
    MAX_ENUM_PRIME,
    exhaustive_partition_search,
    longest_walk_dp,
    max_size_walk,
)
from corewalk.residue_walk import lambda_profile, profile_to_partition


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dp-max", type=int, default=200, help="upper end of the DP range")
    args = ap.parse_args()

    for p in primes_in_range(3, MAX_ENUM_PRIME):
        t0 = time.perf_counter()
        cand = max_size_walk(p)
        prof = lambda_profile(p)
        assert cand.m == tuple(prof.m[1:].tolist()) and cand.size == prof.size
        print(f"enumeration p={p}: unique maximum agrees, size={cand.size} "
              f"({time.perf_counter() - t0:.2f}s)")

    t0 = time.perf_counter()
    dp_primes = primes_in_range(3, args.dp_max)
    for p in dp_primes:
        result = longest_walk_dp(p)
        assert result.m == tuple(lambda_profile(p).m[1:].tolist())
    print(f"longest-walk DP: {len(dp_primes)} primes up to {args.dp_max} agree "
          f"({time.perf_counter() - t0:.2f}s)")

    t0 = time.perf_counter()
    prof3 = lambda_profile(3)
    found = exhaustive_partition_search(3, prof3.size)
    assert found.partition == profile_to_partition(prof3)
    print(f"partition search p=3: unique maximum agrees, size={found.size} "
          f"({time.perf_counter() - t0:.2f}s)")
    print("all oracles agree")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
