"""Command line entry point: ``bench``, ``check`` and ``demo-lru``."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .baselines import VariantId


def _alpha(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"load factor must lie in (0, 1), got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _count(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _seed(text: str) -> int:
    value = int(text, 10)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stableprobe",
        description="Linear probing with stable slots and minimal tombstones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="run a churn workload and write CSV")
    bench.add_argument("--m", type=_positive, default=100_000)
    bench.add_argument("--alpha", type=_alpha, default=0.5)
    bench.add_argument("--policy", choices=["fifo", "random"], default="fifo")
    bench.add_argument("--rounds", type=_count, default=None,
                       help="delete+insert rounds (default: 10 * n)")
    bench.add_argument("--measure-every", type=_positive, default=None)
    bench.add_argument("--seed", type=_seed, default=0)
    bench.add_argument("--variant", choices=[v.value for v in VariantId], default="minimal")
    bench.add_argument("--out", default="-", help="CSV destination, '-' for stdout")

    check = sub.add_parser("check", help="randomized model and invariant check")
    check.add_argument("--seed", type=_seed, default=0)
    check.add_argument("--ops", type=_count, default=100_000)
    check.add_argument("--m", type=_positive, default=256)
    check.add_argument("--variant", choices=[v.value for v in VariantId], default="minimal")

    demo = sub.add_parser("demo-lru", help="compare the LRU cache with a reference")
    demo.add_argument("--capacity", type=_positive, default=64)
    demo.add_argument("--ops", type=_count, default=10_000)
    demo.add_argument("--seed", type=_seed, default=0)
    return parser


def _bench(args, parser) -> int:
    from .harness import Policy, WorkloadConfig, emit_csv, run_workload

    try:
        config = WorkloadConfig(
            m=args.m, alpha=args.alpha, policy=Policy(args.policy),
            rounds=args.rounds, measure_every=args.measure_every,
            seed=args.seed, variant=VariantId(args.variant),
        )
    except ValueError as exc:
        parser.error(str(exc))
    records = run_workload(config)
    if args.out == "-":
        emit_csv(records, sys.stdout)
    else:
        emit_csv(records, args.out)
    return 0


def _check(args, parser) -> int:
    from .stress import random_op_check

    if args.m < 2:
        parser.error("--m must be at least 2")
    report = random_op_check(args.seed, args.ops, args.m, VariantId(args.variant))
    if report.violations:
        print(report.violations[0])
        return 1
    counts = ", ".join(f"{k}={v}" for k, v in sorted(report.op_counts.items()))
    print(f"ok: {report.ops} operations ({counts})")
    return 0


def _demo_lru(args, parser) -> int:
    from .cache import lru_trace_check

    problems = lru_trace_check(args.capacity, args.ops, args.seed)
    if problems:
        print(problems[0])
        return 1
    print(f"ok: {args.ops} operations, capacity {args.capacity}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {"bench": _bench, "check": _check, "demo-lru": _demo_lru}[args.command]
        return handler(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
