"""Command-line interface: batch covering-equivalence queries on system files.

Reports go to stdout and are byte-stable for fixed inputs; progress and
diagnostics go to stderr.  Exit codes: 0 affirmative answer or successful
report, 1 well-formed query answered "no", 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .covsys import (
    DEFAULT_MAX_PERIOD,
    System,
    covering_table,
    equivalent_bruteforce,
    exact_m_cover_bruteforce,
    parse_system,
    s_set,
)
from .arith import least_prime_greater_than
from .equivalence import are_equivalent, is_exact_m_cover
from .explorer import composite_counterexample, go_search


def _load_system(path: str) -> System:
    return parse_system(Path(path).read_text(encoding="utf-8"))


def _print_witness(witness) -> None:
    coeffs = ", ".join(str(c) for c in witness.combined_sum.coefficients)
    print(f"sum = [{coeffs}] (order {witness.prime})")


def cmd_equiv(args: argparse.Namespace) -> int:
    a = _load_system(args.file_a)
    b = _load_system(args.file_b)
    equivalent, witness = are_equivalent(a, b, prime=args.prime)
    oracle_agrees = None
    if args.oracle:
        oracle_agrees = equivalent_bruteforce(a, b, args.max_period) == equivalent
        if not oracle_agrees:
            print("covereq: internal error: oracle disagrees with criterion", file=sys.stderr)
            return 2
    word = "equivalent" if equivalent else "not equivalent"
    print(f"{word} (p={witness.prime}, |S|={witness.s_cardinality})")
    if args.witness:
        _print_witness(witness)
    if oracle_agrees:
        print("oracle agrees")
    return 0 if equivalent else 1


def cmd_exact_cover(args: argparse.Namespace) -> int:
    system = _load_system(args.file)
    exact, witness = is_exact_m_cover(system, args.m, prime=args.prime)
    oracle_agrees = None
    if args.oracle:
        oracle_agrees = exact_m_cover_bruteforce(system, args.m, args.max_period) == exact
        if not oracle_agrees:
            print("covereq: internal error: oracle disagrees with criterion", file=sys.stderr)
            return 2
    word = "yes" if exact else "no"
    print(f"exact {args.m}-cover: {word} (p={witness.prime}, |S|={witness.s_cardinality})")
    if oracle_agrees:
        print("oracle agrees")
    return 0 if exact else 1


def cmd_table(args: argparse.Namespace) -> int:
    system = _load_system(args.file)
    table = covering_table(system, args.max_period)
    print(f"L={table.period}: " + " ".join(str(v) for v in table.values))
    return 0


def cmd_sset(args: argparse.Namespace) -> int:
    system = _load_system(args.file)
    if not system.classes:
        raise ValueError("empty system")
    fractions = s_set(system.moduli)
    prime = least_prime_greater_than(fractions.cardinality)
    print(f"|S|={fractions.cardinality} p={prime}")
    if args.list:
        print(" ".join(str(f) for f in fractions.sorted_fractions()))
    return 0


def cmd_example_composite(args: argparse.Namespace) -> int:
    result = composite_counterexample(args.q, args.p_div, args.n)
    print("classes: " + " ".join(f"{c.residue}({c.modulus})" for c in result.classes))
    print(f"sum = 0 in Q(zeta_{args.q})")
    print(f"|S| = {result.s_cardinality} < q = {args.q}")
    return 0


def cmd_go_search(args: argparse.Namespace) -> int:
    def progress(index: int, total: int, k: int, combo) -> None:
        mods = ",".join(str(n) for n in combo)
        print(f"searching unit {index + 1}/{total}: k={k} moduli={mods}", file=sys.stderr)

    result = go_search(
        args.q,
        args.k_max,
        budget_seconds=args.budget_seconds,
        progress=progress,
    )
    for witness in result.witnesses:
        print(witness.wire_format())
    if not result.holds:
        print("VIOLATION FOUND")
        return 1
    if result.partial:
        print(
            f"PARTIAL: searched {result.units_done}/{result.units_total} "
            f"modulus subsets at q={args.q} k<={args.k_max} without violation"
        )
        return 0
    print(f"CONJECTURE HOLDS at q={args.q} k<={args.k_max}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covereq",
        description="Exact covering-equivalence queries on residue-class systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    equiv = sub.add_parser("equiv", help="decide covering equivalence of two system files")
    equiv.add_argument("file_a")
    equiv.add_argument("file_b")
    equiv.add_argument("--oracle", action="store_true", help="cross-check with the brute-force table")
    equiv.add_argument("--witness", action="store_true", help="print the combined sum's coefficients")
    equiv.add_argument("--prime", type=int, default=None, help="override the least qualifying prime")
    equiv.add_argument("--max-period", type=int, default=DEFAULT_MAX_PERIOD)
    equiv.set_defaults(handler=cmd_equiv)

    exact = sub.add_parser("exact-cover", help="test whether a system is an exact m-cover")
    exact.add_argument("file")
    exact.add_argument("m", type=int, help="target cover multiplicity")
    exact.add_argument("--oracle", action="store_true", help="cross-check with the brute-force table")
    exact.add_argument("--prime", type=int, default=None, help="override the least qualifying prime")
    exact.add_argument("--max-period", type=int, default=DEFAULT_MAX_PERIOD)
    exact.set_defaults(handler=cmd_exact_cover)

    table = sub.add_parser("table", help="print the covering function over one period")
    table.add_argument("file")
    table.add_argument("--max-period", type=int, default=DEFAULT_MAX_PERIOD)
    table.set_defaults(handler=cmd_table)

    sset = sub.add_parser("sset", help="print |S| and the least qualifying prime")
    sset.add_argument("file")
    sset.add_argument("--list", action="store_true", help="also print the sorted fractions")
    sset.set_defaults(handler=cmd_sset)

    example = sub.add_parser(
        "example-composite",
        help="build a vanishing sum at a composite order below the prime bound",
    )
    example.add_argument("q", type=int, help="composite order")
    example.add_argument("p_div", type=int, help="prime divisor of q")
    example.add_argument("n", type=int, help="shared modulus in [1, q-1]")
    example.set_defaults(handler=cmd_example_composite)

    search = sub.add_parser("go-search", help="exhaustive Graham-O'Bryant conjecture scan")
    search.add_argument("q", type=int, help="root-of-unity order (at least 2)")
    search.add_argument("k_max", type=int, help="largest number of classes to try")
    search.add_argument(
        "--budget-seconds",
        type=float,
        default=None,
        help="wall-clock budget; aborts between subsets with a PARTIAL report",
    )
    search.set_defaults(handler=cmd_go_search)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"covereq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
