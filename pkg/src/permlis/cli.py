"""Command-line interface.

Subcommands:
  count     exact number of avoiders (optionally with a fixed LIS length)
  table     full exact LIS-length distribution for one class, CSV or JSON
  verify    cross-check closed forms and bijections against enumeration
  sample    uniform random avoiders with their LIS lengths
  cdf       evaluate one of the three limit laws
  converge  per-n KS distance / moment errors against the matching limit law

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .convergence import LAWS, convergence_report, law_for_pattern
from .counting import catalan, count_lis, dist_table
from .errors import LawMismatchError
from .limits import gamma321_cdf, normal_cdf, theta_cdf
from .permutations import PATTERNS, lis_length
from .sampling import SamplerState, sample_avoider
from .verification import run_verification


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _add_pattern(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pattern", required=True, choices=PATTERNS)


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permlis",
        description="LIS-length statistics of pattern-avoiding permutations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact avoider counts")
    _add_pattern(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="restrict to LIS length exactly K")

    p = sub.add_parser("table", help="full LIS-length distribution")
    _add_pattern(p)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("verify", help="cross-check formulas and bijections")
    p.add_argument("--n-max", type=int, default=9)

    p = sub.add_parser("sample", help="uniform random avoiders")
    _add_pattern(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, help="64-bit seed; omitted = OS entropy, printed for replay")
    _add_format(p)

    p = sub.add_parser("cdf", help="evaluate a limit law")
    p.add_argument("--law", required=True, choices=sorted(LAWS))
    p.add_argument("--theta", type=float, required=True)

    p = sub.add_parser("converge", help="distance from the limit law per n")
    _add_pattern(p)
    p.add_argument("--n-list", required=True, help="comma-separated sizes, e.g. 100,400,1600")
    _add_format(p)

    return parser


def _cmd_count(args: argparse.Namespace) -> int:
    if args.k is None:
        print(catalan(args.n))
    else:
        print(count_lis(args.pattern, args.n, args.k))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    table = dist_table(args.pattern, args.n)
    probs = table.probabilities()
    if args.format == "json":
        payload = {
            "pattern": table.pattern,
            "n": table.n,
            "total": table.total,
            "counts": {str(k): c for k, c in sorted(table.counts.items())},
            "probabilities": {str(k): _fmt(float(p)) for k, p in probs.items()},
        }
        print(json.dumps(payload, indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["pattern", "n", "k", "count", "probability"])
        for k in sorted(table.counts):
            writer.writerow([table.pattern, table.n, k, table.counts[k], _fmt(float(probs[k]))])
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_verification(args.n_max)
    ok = True
    for r in results:
        status = "ok" if r.ok else "FAIL"
        line = f"{status:4s} {r.name}"
        if r.detail:
            line += f" ({r.detail})"
        print(line)
        ok = ok and r.ok
    return 0 if ok else 1


def _cmd_sample(args: argparse.Namespace) -> int:
    state = SamplerState(args.seed)
    if args.seed is None:
        print(f"seed: {state.seed}", file=sys.stderr)
    rows = []
    for i in range(args.count):
        p = sample_avoider(args.pattern, args.n, state)
        rows.append((i, lis_length(p), p))
    if args.format == "json":
        payload = {
            "pattern": args.pattern,
            "n": args.n,
            "seed": state.seed,
            "samples": [{"index": i, "lis": l, "values": list(p)} for i, l, p in rows],
        }
        print(json.dumps(payload, indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["index", "lis", "values"])
        for i, l, p in rows:
            writer.writerow([i, l, " ".join(map(str, p))])
    return 0


# raw evaluators (not the clamped law views): domain errors must surface
_CDF_FUNCS = {
    "normal231": normal_cdf,
    "theta132": theta_cdf,
    "gamma321": gamma321_cdf,
}


def _cmd_cdf(args: argparse.Namespace) -> int:
    print(_fmt(_CDF_FUNCS[args.law](args.theta)))
    return 0


def _cmd_converge(args: argparse.Namespace) -> int:
    try:
        n_list = [int(s) for s in args.n_list.split(",") if s.strip()]
    except ValueError:
        raise ValueError(f"--n-list must be comma-separated integers, got {args.n_list!r}")
    if not n_list:
        raise ValueError("--n-list must name at least one size")
    law = law_for_pattern(args.pattern)
    report = convergence_report(args.pattern, n_list, law)
    if args.format == "json":
        payload = {
            "pattern": report.pattern,
            "law": report.law,
            "rows": [
                {
                    "n": r.n,
                    "ks_distance": _fmt(r.ks_distance),
                    "mean_error": _fmt(r.mean_error),
                    "stdev_ratio": _fmt(r.stdev_ratio),
                }
                for r in report.rows
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["pattern", "law", "n", "ks_distance", "mean_error", "stdev_ratio"])
        for r in report.rows:
            writer.writerow(
                [report.pattern, report.law, r.n, _fmt(r.ks_distance), _fmt(r.mean_error), _fmt(r.stdev_ratio)]
            )
    return 0


_COMMANDS = {
    "count": _cmd_count,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "sample": _cmd_sample,
    "cdf": _cmd_cdf,
    "converge": _cmd_converge,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, LawMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
