"""Exact inequality checks for the size and gap statistics of the profile.

Every bound involving p^(3/2) is decided by comparing signed squares of
integer forms, so no floating point enters any verdict.  Polynomial bounds
divide exactly over the integers for the relevant p; divisibility is
asserted rather than floored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import VerificationError
from .residue_walk import LambdaProfile

STATED_THEOREM_MIN_P = 10**6
STATED_C_UPPER_MIN_P = 17
STATED_C_LOWER_MIN_P = 10**6
STATED_C18_MIN_P = 256


def _signed_square(u: int) -> int:
    """u * |u|: strictly increasing, so comparisons survive the squaring."""
    return u * abs(u)


def mcspirit_ono_bound(p: int) -> int:
    """(p^6 - 2 p^5 + 2 p^4 - 3 p^2 + 2 p) / 24, exactly."""
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    val = p**6 - 2 * p**5 + 2 * p**4 - 3 * p**2 + 2 * p
    q, r = divmod(val, 24)
    if r:
        raise ArithmeticError(f"bound polynomial is not divisible by 24 at p={p}")
    return q


def mcdowell_upper(p: int) -> int:
    """(p^6 - 4 p^5 + 5 p^4 + 12 p^3 - 42 p^2 + 52 p - 24) / 24, exactly."""
    if p < 3:
        raise ValueError(f"p must be at least 3, got {p}")
    val = p**6 - 4 * p**5 + 5 * p**4 + 12 * p**3 - 42 * p**2 + 52 * p - 24
    q, r = divmod(val, 24)
    if r:
        raise ArithmeticError(f"bound polynomial is not divisible by 24 at p={p}")
    return q


def mcdowell_construction_value(p: int) -> Fraction:
    """(p^6 + 6 p^4 - 12 p^3 + 89 p^2 - 120 p - 48) / 96 as an exact rational.

    Reported for comparison only; nothing is asserted against it.
    """
    if p < 3:
        raise ValueError(f"p must be at least 3, got {p}")
    return Fraction(p**6 + 6 * p**4 - 12 * p**3 + 89 * p**2 - 120 * p - 48, 96)


@dataclass(frozen=True)
class TheoremVerdict:
    p: int
    size: int
    lower_ok: bool
    upper_ok: bool
    margin_lower: int
    margin_upper: int
    in_stated_range: bool


def theorem_interval_check(p: int, size: int) -> TheoremVerdict:
    """Decide p^6/24 - p^5 sqrt(p) < size < p^6/24 - (1/200) p^5 sqrt(p).

    With L = p^6 - 24 size both inequalities become one-sided comparisons of
    L against multiples of p^5 sqrt(p): the lower bound is L < 24 p^5
    sqrt(p), i.e. sgn-square(L) < 576 p^11, and the upper bound is 25 L >
    3 p^5 sqrt(p) scaled to sgn-square(25 L) > 9 p^11.  Strictness is safe
    because p^11 is an odd prime power, never a perfect square times a
    matching integer on the other side.
    """
    if p < 2 or size < 0:
        raise ValueError("need p >= 2 and size >= 0")
    p11 = p**11
    big_l = p**6 - 24 * size
    margin_lower = 576 * p11 - _signed_square(big_l)
    margin_upper = _signed_square(25 * big_l) - 9 * p11
    return TheoremVerdict(
        p,
        size,
        margin_lower > 0,
        margin_upper > 0,
        margin_lower,
        margin_upper,
        p > STATED_THEOREM_MIN_P,
    )


@dataclass(frozen=True)
class CBoundsVerdict:
    p: int
    c: int
    c_upper_ok: bool
    c_lower_ok: bool
    c18_ok: Optional[bool]
    margin_c_upper: int
    margin_c_lower: int
    margin_c18: Optional[int]
    c_upper_asserted: bool
    c_lower_asserted: bool
    c18_asserted: bool


def c_bounds_check(p: int, profile: LambdaProfile) -> CBoundsVerdict:
    """Bounds on the gap statistic c and the prefix value at floor(p/18).

    c < (11/3) p sqrt(p) compares 9 c^2 against 121 p^3; the lower bound
    c > (6/5) p sqrt(p) - 16 p compares (5c + 80p)^2 against 36 p^3; and
    c_k < (2/5) p sqrt(p) + p at k = floor(p/18) compares 25 (c_k - p)^2
    against 4 p^3.  The k = 0 case has nothing to check.
    """
    if profile.p != p:
        raise ValueError(f"profile is for p={profile.p}, not p={p}")
    c = profile.c
    p3 = p**3
    margin_upper = 121 * p3 - 9 * c * c
    margin_lower = _signed_square(5 * c + 80 * p) - 36 * p3
    k = p // 18
    if k >= 1:
        ck = int(profile.c_prefix[k])
        margin_c18: Optional[int] = 4 * p3 - _signed_square(5 * (ck - p))
        c18_ok: Optional[bool] = margin_c18 > 0
    else:
        margin_c18 = None
        c18_ok = None
    return CBoundsVerdict(
        p,
        c,
        margin_upper > 0,
        margin_lower > 0,
        c18_ok,
        margin_upper,
        margin_lower,
        margin_c18,
        p >= STATED_C_UPPER_MIN_P,
        p > STATED_C_LOWER_MIN_P,
        k >= 1 and p > STATED_C18_MIN_P,
    )


@dataclass(frozen=True)
class BoundsReport:
    """All inequality verdicts for one prime.

    verdicts[name] is True/False, or None when the check has no content at
    this p; asserted[name] says whether a False verdict is an error or
    merely a data point outside the stated range.  margins are exact
    integers, positive on success, except construction_comparison whose
    margin is scaled by 96.
    """

    p: int
    size: int
    c: int
    verdicts: dict[str, Optional[bool]]
    margins: dict[str, Optional[int]]
    asserted: dict[str, bool]
    notes: tuple[str, ...]


def bounds_report(p: int, profile: LambdaProfile) -> BoundsReport:
    """Assemble every size and gap inequality for one prime."""
    if profile.p != p:
        raise ValueError(f"profile is for p={profile.p}, not p={p}")
    size = profile.size
    tv = theorem_interval_check(p, size)
    cb = c_bounds_check(p, profile)
    ono = mcspirit_ono_bound(p)
    upper = mcdowell_upper(p)
    poly96 = p**6 + 6 * p**4 - 12 * p**3 + 89 * p**2 - 120 * p - 48

    verdicts: dict[str, Optional[bool]] = {
        "theorem_lower": tv.lower_ok,
        "theorem_upper": tv.upper_ok,
        "eq1_upper": size <= upper,
        "bound_chain": upper <= ono,
        "mcspirit_ono_upper": size <= ono,
        "construction_comparison": 96 * size >= poly96,
        "c_upper": cb.c_upper_ok,
        "c_lower": cb.c_lower_ok,
        "c18": cb.c18_ok,
    }
    margins: dict[str, Optional[int]] = {
        "theorem_lower": tv.margin_lower,
        "theorem_upper": tv.margin_upper,
        "eq1_upper": upper - size,
        "bound_chain": ono - upper,
        "mcspirit_ono_upper": ono - size,
        "construction_comparison": 96 * size - poly96,
        "c_upper": cb.margin_c_upper,
        "c_lower": cb.margin_c_lower,
        "c18": cb.margin_c18,
    }
    asserted = {
        "theorem_lower": tv.in_stated_range,
        "theorem_upper": tv.in_stated_range,
        "eq1_upper": True,
        "bound_chain": True,
        "mcspirit_ono_upper": True,
        "construction_comparison": False,
        "c_upper": cb.c_upper_asserted,
        "c_lower": cb.c_lower_asserted,
        "c18": cb.c18_asserted,
    }
    notes: list[str] = []
    if not tv.in_stated_range:
        notes.append(f"theorem interval stated for p > {STATED_THEOREM_MIN_P}; reported only")
    if not cb.c_upper_asserted:
        notes.append(f"c upper bound stated for p >= {STATED_C_UPPER_MIN_P}; reported only")
    if not cb.c_lower_asserted:
        notes.append(f"c lower bound stated for p > {STATED_C_LOWER_MIN_P}; reported only")
    if cb.c18_ok is None:
        notes.append("c18 check empty at this p (floor(p/18) = 0)")
    elif not cb.c18_asserted:
        notes.append(f"c18 bound stated for p > {STATED_C18_MIN_P}; reported only")
    return BoundsReport(p, size, profile.c, verdicts, margins, asserted, tuple(notes))


def failed_assertions(report: BoundsReport) -> list[str]:
    """Names of checks that are both asserted and false."""
    return [name for name, ok in report.verdicts.items() if report.asserted[name] and ok is False]


def totient_sieve(n: int) -> list[int]:
    """phi(0..n) by the standard multiplicative sieve."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    phi = list(range(n + 1))
    for i in range(2, n + 1):
        if phi[i] == i:
            for j in range(i, n + 1, i):
                phi[j] -= phi[j] // i
    return phi


def totient_partial_sum(n: int) -> Fraction:
    """Sum of phi(m)/m for m <= n, exactly.  Fine for modest n only."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    phi = totient_sieve(n)
    total = Fraction(0)
    for m in range(1, n + 1):
        total += Fraction(phi[m], m)
    return total


@dataclass(frozen=True)
class TotientCheckResult:
    """Outcome of the sweep, with the tightest certified slack.

    slack_bounds encloses 5K-scaled truth: the slack at argmin_n lies in
    [slack_bounds[0], slack_bounds[1]).  exact_slack is filled by an exact
    rational recomputation when argmin_n is small enough to afford one.
    """

    n_max: int
    ok: bool
    first_violation: Optional[int]
    argmin_n: int
    slack_bounds: tuple[Fraction, Fraction]
    exact_slack: Optional[Fraction]


_EXACT_RECHECK_LIMIT = 5_000


def totient_sum_check(n_max: int, scale_bits: int = 40) -> TotientCheckResult:
    """Check sum_{m<=n} phi(m)/m > (3/5) n - 6 for every n <= n_max.

    The running sum A_n is pinned by the integer S_n = sum of
    floor(5 K phi(m) / m) with K = 2**scale_bits: 5 K A_n lies in
    [S_n, S_n + n).  Comparing S_n against K (3n - 30) certifies each n
    exactly; should any n ever land inside the enclosure width (about
    n / 5K, vastly below the observed slack of ~6) the sweep restarts with
    more bits, so a returned verdict is always exact.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    phi = totient_sieve(n_max)
    for attempt in range(4):
        kk = 1 << (scale_bits + 24 * attempt)
        five_k = 5 * kk
        s = 0
        min_lo: Optional[int] = None
        argmin = 1
        outcome: Optional[tuple[bool, int, int]] = None
        undecided = False
        for n in range(1, n_max + 1):
            s += five_k * phi[n] // n
            lo = s - kk * (3 * n - 30)
            if lo <= 0:
                if lo + n <= 0:
                    outcome = (False, n, lo)
                else:
                    undecided = True
                break
            if min_lo is None or lo < min_lo:
                min_lo = lo
                argmin = n
        if undecided:
            continue
        if outcome is not None:
            _, bad_n, lo = outcome
            bounds = (Fraction(lo, five_k), Fraction(lo + bad_n, five_k))
            exact = _exact_slack(bad_n)
            return TotientCheckResult(n_max, False, bad_n, bad_n, bounds, exact)
        assert min_lo is not None
        bounds = (Fraction(min_lo, five_k), Fraction(min_lo + argmin, five_k))
        exact = _exact_slack(argmin)
        return TotientCheckResult(n_max, True, None, argmin, bounds, exact)
    raise VerificationError(f"could not certify the totient bound up to n={n_max}")


def _exact_slack(n: int) -> Optional[Fraction]:
    if n > _EXACT_RECHECK_LIMIT:
        return None
    return totient_partial_sum(n) - Fraction(3 * n - 30, 5)
