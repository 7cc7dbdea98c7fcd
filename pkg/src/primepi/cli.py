"""Command-line interface.

Subcommands: pi, sigma, gamma, upsilon, verify, table, bench. Exit codes are
0 (success), 1 (verification mismatch) and 2 (usage or domain error), never
anything else. All numeric output is plain decimal; output is byte-stable
across runs except for elapsed-time fields.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .errors import SieveBudgetError, TableTooSmallError
from .gamma_upsilon import gamma_vector, upsilon
from .pi_exact import BaseCase, _auto_table, pi_exact, verify_overlap, verify_theorem
from .primes import generate_primes, max_sieve_bits, table_with_at_least
from .sigma import EvalPoint, sigma_vector

USAGE_ERROR = 2
MISMATCH_ERROR = 1
MAX_BENCH_EXPONENT = 9


@dataclass(frozen=True)
class OutputRecord:
    """One row of `table` output."""

    x: str
    pi: int
    n_used: int | str
    elapsed_ns: int

    def csv_row(self) -> str:
        return f"{self.x},{self.pi},{self.n_used},{self.elapsed_ns}"

    def json_obj(self) -> dict:
        return {
            "x": self.x,
            "pi": self.pi,
            "n_used": self.n_used,
            "elapsed_ns": self.elapsed_ns,
        }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primepi",
        description="Exact prime counting from floor sums over prime subsets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", help="count primes <= x")
    p.add_argument("x", help="non-negative decimal, e.g. 100 or 121.5")
    p.add_argument(
        "--explain",
        action="store_true",
        help="also print the selected n, interval and term breakdown",
    )

    p = sub.add_parser("sigma", help="floor sum over m-subsets of the first n primes")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("x")

    p = sub.add_parser("gamma", help="binomial-corrected coefficient gamma(n, m, x)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("x")

    p = sub.add_parser("upsilon", help="counting expression upsilon(n, x)")
    p.add_argument("n", type=int)
    p.add_argument("x")

    p = sub.add_parser(
        "verify",
        help="check upsilon against the sieve on (p_n, p_{n+1}^2), plus overlaps",
    )
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument(
        "--sample",
        type=int,
        default=None,
        help="check this many uniform draws per interval instead of all points",
    )

    p = sub.add_parser("table", help="tabulate pi(x) over a range")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")

    p = sub.add_parser("bench", help="time pi(10^e) and cross-check the sieve")
    p.add_argument("--exponents", type=int, nargs="+", required=True)

    return parser


def _cmd_pi(args: argparse.Namespace) -> int:
    result = pi_exact(EvalPoint.parse(args.x))
    print(result.value)
    if args.explain:
        if isinstance(result.method, BaseCase):
            print("method=base")
            print(f"branch={result.method.branch}")
        else:
            sel = result.method.selection
            detail = result.method.detail
            print("method=upsilon")
            print(f"n={sel.n}")
            print(f"interval=({sel.lower},{sel.upper})")
            print(f"floor={detail.floor_term}")
            print(f"sigma1={detail.sigma1}")
            print(f"weighted_gamma={detail.weighted_gamma}")
            print(f"constant={detail.constant}")
    return 0


def _cmd_sigma(args: argparse.Namespace) -> int:
    if args.n < 1 or not 1 <= args.m <= args.n:
        raise ValueError(f"need 1 <= m <= n, got n={args.n} m={args.m}")
    table = table_with_at_least(args.n)
    print(sigma_vector(args.n, EvalPoint.parse(args.x), table).value(args.m))
    return 0


def _cmd_gamma(args: argparse.Namespace) -> int:
    if args.n < 2 or not 2 <= args.m <= args.n:
        raise ValueError(f"need 2 <= m <= n, got n={args.n} m={args.m}")
    table = table_with_at_least(args.n)
    print(gamma_vector(args.n, EvalPoint.parse(args.x), table).value(args.m))
    return 0


def _cmd_upsilon(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise ValueError(f"need n >= 2, got {args.n}")
    table = table_with_at_least(args.n)
    print(upsilon(args.n, EvalPoint.parse(args.x), table).value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = [verify_theorem(args.n_min, args.n_max, sample=args.sample)]
    for n in range(args.n_min, args.n_max):
        reports.append(verify_overlap(n))
    failed = False
    for report in reports:
        for block in report.blocks:
            verdict = "PASS" if block.passed else "FAIL"
            print(
                f"{report.kind} n={block.n} interval=({block.lower},{block.upper}) "
                f"checked={block.checked} mismatches={block.mismatches} {verdict}"
            )
        for m in report.mismatches:
            failed = True
            print(f"mismatch n={m.n} x={m.x} expected={m.expected} got={m.got}")
    total = sum(r.total_checked for r in reports)
    bad = sum(len(r.mismatches) for r in reports)
    print(f"total checked={total} mismatches={bad}")
    return MISMATCH_ERROR if failed else 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.start < 0 or args.end < args.start:
        raise ValueError(f"need 0 <= from <= to, got from={args.start} to={args.end}")
    if args.step < 1:
        raise ValueError(f"step must be >= 1, got {args.step}")
    table = None if args.end <= 3 else _auto_table(args.end)
    records = []
    for x in range(args.start, args.end + 1, args.step):
        t0 = time.perf_counter_ns()
        result = pi_exact(x, table)
        elapsed = time.perf_counter_ns() - t0
        records.append(
            OutputRecord(x=str(x), pi=result.value, n_used=result.n_used, elapsed_ns=elapsed)
        )
    if args.fmt == "csv":
        print("x,pi,n_used,elapsed_ns")
        for rec in records:
            print(rec.csv_row())
    else:
        print(json.dumps([rec.json_obj() for rec in records], separators=(",", ":")))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    for e in args.exponents:
        if not 0 <= e <= MAX_BENCH_EXPONENT:
            raise ValueError(
                f"exponent must be in [0, {MAX_BENCH_EXPONENT}], got {e}"
            )
    failed = False
    for e in args.exponents:
        x = 10**e
        t0 = time.perf_counter_ns()
        result = pi_exact(x)
        elapsed_ms = (time.perf_counter_ns() - t0) / 1e6
        if x <= max_sieve_bits():
            oracle = generate_primes(max(x, 2)).pi_sieve(x)
            check = "ok" if oracle == result.value else f"MISMATCH(expected {oracle})"
            failed = failed or oracle != result.value
        else:
            check = "skipped"
        print(
            f"x=10^{e} pi={result.value} n_used={result.n_used} "
            f"elapsed_ms={elapsed_ms:.2f} oracle={check}"
        )
    return MISMATCH_ERROR if failed else 0


_HANDLERS = {
    "pi": _cmd_pi,
    "sigma": _cmd_sigma,
    "gamma": _cmd_gamma,
    "upsilon": _cmd_upsilon,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse exits 2 on usage errors, 0 on --help
        return int(exit_.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, TableTooSmallError, SieveBudgetError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
