"""Timed sweep of the size interval at and beyond the 10^6 threshold.

Constructs the profile for the N smallest primes above a threshold, checks
both interval inequalities plus the polynomial bound chain, and prints one
row per prime with wall time and the 24 |size| / p^6 ratio.  This is the
experiment behind the headline claim; the default settings reproduce it.
"""

import argparse
import time

from corewalk.bounds import failed_assertions, bounds_report
from corewalk.cli import RATIO_DIGITS, _decimal_ratio
from corewalk.modarith import primes_in_range
from corewalk.residue_walk import lambda_profile


def smallest_primes_above(threshold: int, count: int) -> list[int]:
    primes: list[int] = []
    lo = threshold + 1
    while len(primes) < count:
        primes.extend(primes_in_range(lo, lo + 999))
        lo += 1000
    return primes[:count]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threshold", type=int, default=10**6, help="lower bound, exclusive")
    ap.add_argument("--count", type=int, default=20, help="number of primes to sweep")
    ap.add_argument("--digits", type=int, default=RATIO_DIGITS, help="ratio digits")
    args = ap.parse_args()

    primes = smallest_primes_above(args.threshold, args.count)
    print(f"sweeping {len(primes)} primes in [{primes[0]}, {primes[-1]}]")
    print("p,seconds,size_digits,c,ratio_24size_p6,asserted_failures")
    total = 0.0
    bad = 0
    for p in primes:
        t0 = time.perf_counter()
        profile = lambda_profile(p)
        report = bounds_report(p, profile)
        dt = time.perf_counter() - t0
        total += dt
        failures = failed_assertions(report)
        bad += bool(failures)
        ratio = _decimal_ratio(24 * profile.size, p**6, args.digits)
        print(f"{p},{dt:.3f},{len(str(profile.size))},{profile.c},{ratio},{';'.join(failures)}")
    print(f"total: {total:.2f}s, primes with asserted failures: {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
