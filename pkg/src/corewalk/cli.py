"""Command-line interface.

Subcommands: lambda (one profile), verify (inequality sweep over a prime
range), oracle (brute-force cross-checks), table (convergence table),
totient-check (the harmonic totient bound).  Exit codes: 0 success, 1 a
verified mathematical assertion failed, 2 usage or environment trouble.

All numeric output is produced from exact integers; values that may
overflow 64-bit readers are serialized as decimal strings in JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import __version__
from .bounds import (
    bounds_report,
    failed_assertions,
    mcdowell_construction_value,
    mcdowell_upper,
    mcspirit_ono_bound,
    theorem_interval_check,
    totient_sum_check,
)
from .errors import VerificationError
from .modarith import is_prime, primes_in_range
from .oracle import (
    MAX_DP_PRIME,
    MAX_ENUM_PRIME,
    exhaustive_partition_search,
    longest_walk_dp,
    max_size_walk,
)
from .partitions import format_partition
from .residue_walk import (
    check_st_lemmas,
    check_sum_identity,
    check_symmetry,
    classify_residues,
    lambda_profile,
    profile_to_partition,
    validate_walk,
)

TABLE_HEADER = "p,size,c,mcdowell_upper,mcspirit_ono,theorem_lower_ok,theorem_upper_ok,ratio_24size_p6"
VERIFY_CHECKS = ("theorem", "eq1", "c-bounds", "symmetry", "identity", "structure", "lemmas")
ORACLE_MODES = ("walks", "longest-dp", "partitions")
RATIO_DIGITS = 12


@dataclass(frozen=True)
class RunConfig:
    """Parsed arguments for one invocation."""

    command: str
    p: Optional[int] = None
    lo: Optional[int] = None
    hi: Optional[int] = None
    fmt: str = "text"
    output: Optional[str] = None
    workers: int = 1
    checks: tuple[str, ...] = VERIFY_CHECKS
    emit: tuple[str, ...] = ()
    mode: str = "walks"
    n_max: Optional[int] = None


def _decimal_ratio(num: int, den: int, digits: int = RATIO_DIGITS) -> str:
    """num / den truncated to a fixed number of digits, by long division."""
    if den <= 0:
        raise ValueError("denominator must be positive")
    if num < 0:
        return "-" + _decimal_ratio(-num, den, digits)
    q, r = divmod(num, den)
    frac = []
    for _ in range(digits):
        r *= 10
        d, r = divmod(r, den)
        frac.append(str(d))
    return f"{q}." + "".join(frac)


def _decimal_fraction(value: Fraction, digits: int = 9) -> str:
    return _decimal_ratio(value.numerator, value.denominator, digits)


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _run_ordered(func: Callable, items: Sequence, workers: int) -> list:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    chunk = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunk))


def _bool_token(flag: bool) -> str:
    return "true" if flag else "false"


def _require_odd_prime(p: Optional[int]) -> int:
    if p is None or p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


# one profile


MAX_PARTS_PRIME = 300


def cmd_lambda(cfg: RunConfig) -> int:
    p = _require_odd_prime(cfg.p)
    emit = cfg.emit
    if "parts" in emit and p > MAX_PARTS_PRIME:
        raise ValueError(f"explicit parts are limited to p <= {MAX_PARTS_PRIME}, got {p}")
    profile = lambda_profile(p)
    ratio = _decimal_ratio(24 * profile.size, p**6)
    if cfg.fmt == "json":
        doc: dict = {
            "p": p,
            "size": str(profile.size),
            "c": profile.c,
            "ratio_24size_p6": ratio,
        }
        if "m" in emit:
            doc["m"] = profile.m[1:].tolist()
        if "b" in emit:
            doc["b"] = profile.b[1:].tolist()
        if "parts" in emit:
            doc["parts"] = list(profile_to_partition(profile).parts)
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [f"p: {p}", f"size: {profile.size}", f"c: {profile.c}", f"ratio_24size_p6: {ratio}"]
        if "m" in emit:
            lines.append("m: " + ",".join(map(str, profile.m[1:].tolist())))
        if "b" in emit:
            lines.append("b: " + ",".join(map(str, profile.b[1:].tolist())))
        if "parts" in emit:
            lines.append("parts: " + format_partition(profile_to_partition(profile)))
        text = "\n".join(lines) + "\n"
    _write_output(text, cfg.output)
    return 0


# inequality sweep


def _group_status(report, names: Sequence[str]) -> tuple[str, list[str]]:
    notes: list[str] = []
    asserted_fail = soft_fail = starred = applicable = False
    for name in names:
        ok = report.verdicts[name]
        if ok is None:
            continue
        applicable = True
        if report.asserted[name]:
            if not ok:
                asserted_fail = True
                notes.append(f"{name} fails, margin {report.margins[name]}")
        else:
            starred = True
            if not ok:
                soft_fail = True
                notes.append(f"{name} does not hold (outside its stated range, not asserted)")
    if not applicable:
        return "n/a", notes
    if asserted_fail:
        return "fail", notes
    if soft_fail:
        return "fail*", notes
    if starred:
        return "pass*", notes
    return "pass", notes


_CHECK_GROUPS = {
    "theorem": ("theorem_lower", "theorem_upper"),
    "eq1": ("eq1_upper", "bound_chain", "mcspirit_ono_upper"),
    "c-bounds": ("c_upper", "c_lower", "c18"),
}


def _verify_row(args: tuple[int, tuple[str, ...]]) -> dict:
    p, checks = args
    cls_ = classify_residues(p)
    profile = lambda_profile(p, cls_)
    report = bounds_report(p, profile)
    row: dict = {"p": p, "size": str(profile.size), "c": profile.c, "checks": {}, "notes": []}
    for check in checks:
        if check in _CHECK_GROUPS:
            status, notes = _group_status(report, _CHECK_GROUPS[check])
        elif check == "symmetry":
            viol = check_symmetry(profile)
            status, notes = ("fail", viol) if viol else ("pass", [])
        elif check == "identity":
            viol = check_sum_identity(profile)
            status, notes = ("fail", viol) if viol else ("pass", [])
        elif check == "structure":
            wv = validate_walk(profile)
            status, notes = ("pass", []) if wv.ok else ("fail", [wv.violation])
        elif check == "lemmas":
            viol, lemma_notes = check_st_lemmas(cls_, profile)
            status, notes = ("fail", viol) if viol else ("pass", [])
            notes = notes + lemma_notes
        else:
            raise ValueError(f"unknown check {check!r}")
        row["checks"][check] = {"status": status, "notes": notes}
    row["bounds"] = {
        name: {
            "ok": report.verdicts[name],
            "asserted": report.asserted[name],
            "margin": None if report.margins[name] is None else str(report.margins[name]),
        }
        for name in report.verdicts
    }
    row["failed"] = any(entry["status"] == "fail" for entry in row["checks"].values())
    return row


def _prime_range(cfg: RunConfig) -> tuple[int, int, list[int]]:
    lo, hi = cfg.lo, cfg.hi
    if lo is None or hi is None:
        raise ValueError("both --min and --max are required")
    if lo > hi:
        raise ValueError(f"bad range: --min {lo} exceeds --max {hi}")
    return lo, hi, primes_in_range(max(3, lo), hi)


def cmd_verify(cfg: RunConfig) -> int:
    lo, hi, primes = _prime_range(cfg)
    checks = cfg.checks
    rows = _run_ordered(_verify_row, [(p, checks) for p in primes], cfg.workers)
    failures = sum(1 for row in rows if row["failed"])

    if cfg.fmt == "json":
        doc = {
            "meta": {"range": [lo, hi], "count": len(rows), "checks": list(checks), "version": __version__},
            "rows": rows,
            "failures": failures,
        }
        text = json.dumps(doc, indent=2) + "\n"
    elif cfg.fmt == "csv":
        header = "p," + ",".join(checks) + ",notes"
        lines = [header]
        for row in rows:
            notes = "; ".join(note for entry in row["checks"].values() for note in entry["notes"])
            lines.append(
                f"{row['p']},"
                + ",".join(row["checks"][check]["status"] for check in checks)
                + f",{notes}"
            )
        text = "\n".join(lines) + "\n"
    else:
        lines = []
        for row in rows:
            tokens = " ".join(f"{check}={row['checks'][check]['status']}" for check in checks)
            lines.append(f"p={row['p']} {tokens}")
            for check in checks:
                for note in row["checks"][check]["notes"]:
                    lines.append(f"  note[{check}]: {note}")
        verdict = "no asserted failures" if failures == 0 else f"{failures} primes with asserted failures"
        lines.append(f"checked {len(rows)} primes in [{lo}, {hi}]: {verdict}")
        text = "\n".join(lines) + "\n"
    _write_output(text, cfg.output)
    return 1 if failures else 0


# brute-force cross-checks


def cmd_oracle(cfg: RunConfig) -> int:
    p = _require_odd_prime(cfg.p)
    lines = [f"mode: {cfg.mode}", f"p: {p}"]
    if cfg.mode == "walks":
        if p > MAX_ENUM_PRIME:
            raise ValueError(f"walk enumeration is capped at p <= {MAX_ENUM_PRIME}")
        cand = max_size_walk(p)
        profile = lambda_profile(p)
        if cand.m != tuple(profile.m[1:].tolist()):
            raise VerificationError(f"enumerated maximal walk {cand.m} differs from the profile at p={p}")
        if cand.size != profile.size:
            raise VerificationError(f"enumerated maximal size {cand.size} != profile size {profile.size}")
        lines.append(f"unique maximal walk matches the profile: length={cand.length} size={cand.size}")
        lines.append("m: " + ",".join(map(str, cand.m)))
    elif cfg.mode == "longest-dp":
        if p > MAX_DP_PRIME:
            raise ValueError(f"the longest-walk dynamic program is capped at p <= {MAX_DP_PRIME}")
        result = longest_walk_dp(p)
        profile = lambda_profile(p)
        if result.m != tuple(profile.m[1:].tolist()):
            raise VerificationError(f"longest walk row counts differ from the profile at p={p}")
        lines.append(f"unique longest walk matches the profile: length={result.length}")
        lines.append("m: " + ",".join(map(str, result.m)))
    elif cfg.mode == "partitions":
        profile = lambda_profile(p)
        found = exhaustive_partition_search(p, profile.size)
        expected = profile_to_partition(profile)
        if found.partition.parts != expected.parts or found.size != profile.size:
            raise VerificationError(f"exhaustive search winner differs from the profile at p={p}")
        lines.append(f"exhaustive search up to size {profile.size} found the same unique maximum")
        lines.append("parts: " + format_partition(expected))
    else:
        raise ValueError(f"unknown oracle mode {cfg.mode!r}")
    _write_output("\n".join(lines) + "\n", cfg.output)
    return 0


# convergence table


def _table_row(p: int) -> dict:
    profile = lambda_profile(p)
    tv = theorem_interval_check(p, profile.size)
    return {
        "p": p,
        "size": str(profile.size),
        "c": profile.c,
        "mcdowell_upper": str(mcdowell_upper(p)),
        "mcspirit_ono": str(mcspirit_ono_bound(p)),
        "theorem_lower_ok": tv.lower_ok,
        "theorem_upper_ok": tv.upper_ok,
        "ratio_24size_p6": _decimal_ratio(24 * profile.size, p**6),
    }


def cmd_table(cfg: RunConfig) -> int:
    lo, hi, primes = _prime_range(cfg)
    rows = _run_ordered(_table_row, primes, cfg.workers)
    if cfg.fmt == "json":
        doc = {
            "meta": {"range": [lo, hi], "count": len(rows), "version": __version__},
            "rows": rows,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [TABLE_HEADER]
        for row in rows:
            lines.append(
                f"{row['p']},{row['size']},{row['c']},{row['mcdowell_upper']},{row['mcspirit_ono']},"
                f"{_bool_token(row['theorem_lower_ok'])},{_bool_token(row['theorem_upper_ok'])},"
                f"{row['ratio_24size_p6']}"
            )
        text = "\n".join(lines) + "\n"
    _write_output(text, cfg.output)
    return 0


# totient bound


def cmd_totient_check(cfg: RunConfig) -> int:
    n_max = cfg.n_max
    if n_max is None or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max}")
    result = totient_sum_check(n_max)
    lines = [f"checked n = 1..{result.n_max}: " + ("bound holds" if result.ok else "bound FAILS")]
    if result.first_violation is not None:
        lines.append(f"first violation at n = {result.first_violation}")
    slack_lo, slack_hi = result.slack_bounds
    if result.exact_slack is not None:
        lines.append(
            f"smallest certified slack at n = {result.argmin_n}: {result.exact_slack} "
            f"(= {_decimal_fraction(result.exact_slack)})"
        )
    else:
        lines.append(
            f"smallest certified slack at n = {result.argmin_n}: in "
            f"[{_decimal_fraction(slack_lo)}, {_decimal_fraction(slack_hi)})"
        )
    _write_output("\n".join(lines) + "\n", cfg.output)
    return 0 if result.ok else 1


# parser plumbing


def _parse_checks(raw: str) -> tuple[str, ...]:
    names = tuple(name.strip() for name in raw.split(",") if name.strip())
    bad = [name for name in names if name not in VERIFY_CHECKS]
    if bad or not names:
        raise argparse.ArgumentTypeError(
            f"unknown checks {bad}; valid names: {', '.join(VERIFY_CHECKS)}"
        )
    return names


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corewalk",
        description="Exact construction and verification of maximal p-core p'-partitions.",
    )
    parser.add_argument("--version", action="version", version=f"corewalk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("lambda", help="construct the profile for one prime")
    sp.add_argument("-p", type=int, required=True, dest="p")
    sp.add_argument("--emit", action="append", choices=("m", "b", "parts"), default=None)
    sp.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_lambda)

    sp = sub.add_parser("verify", help="verify inequalities over a prime range")
    sp.add_argument("--min", type=int, required=True, dest="lo")
    sp.add_argument("--max", type=int, required=True, dest="hi")
    sp.add_argument("--checks", type=_parse_checks, default=VERIFY_CHECKS)
    sp.add_argument("--format", dest="fmt", choices=("text", "csv", "json"), default="text")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="brute-force cross-checks at small p")
    sp.add_argument("-p", type=int, required=True, dest="p")
    sp.add_argument("--mode", choices=ORACLE_MODES, default="walks")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("table", help="convergence table over a prime range")
    sp.add_argument("--min", type=int, required=True, dest="lo")
    sp.add_argument("--max", type=int, required=True, dest="hi")
    sp.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("totient-check", help="verify the harmonic totient lower bound")
    sp.add_argument("--n-max", type=int, required=True, dest="n_max")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_totient_check)
    return parser


def _config_from_namespace(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        p=getattr(ns, "p", None),
        lo=getattr(ns, "lo", None),
        hi=getattr(ns, "hi", None),
        fmt=getattr(ns, "fmt", "text"),
        output=getattr(ns, "output", None),
        workers=getattr(ns, "workers", 1),
        checks=tuple(getattr(ns, "checks", VERIFY_CHECKS)),
        emit=tuple(getattr(ns, "emit", None) or ()),
        mode=getattr(ns, "mode", "walks"),
        n_max=getattr(ns, "n_max", None),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    cfg = _config_from_namespace(ns)
    if cfg.workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return 2
    try:
        return ns.func(cfg)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
