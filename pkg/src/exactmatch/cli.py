"""Command-line surface for the exactmatch toolkit.

Subcommands: gen (instance generation), reduce (exact matching to top-k
matching gadget), solve (em / tkpm / cpm / bcpm with selectable engines),
verify (exhaustive or randomized differential campaigns).

Exit codes: 0 yes/ok, 1 no, 2 usage or input error, 3 disagreement found.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebraic import algebraic_em_decide, bcpm_via_em, cpm_via_em
from .campaign import (
    exhaustive_sweep,
    merge_reports,
    randomized_campaign,
    report_to_json,
)
from .engines import brute_bcpm, brute_cpm, brute_em, brute_tkpm
from .formats import (
    InstanceFormatError,
    format_em_instance,
    format_matching,
    format_tkpm_instance,
    parse_em_instance,
    parse_tkpm_instance,
)
from .generator import GenSpec, gen_instance
from .reduction import decide_em_via_tkpm, format_gadget_map, gadgetize

# n -> default extra edge count for the mixed-size randomized verify
_VERIFY_SIZES = ((2, 0), (4, 2), (6, 5), (8, 9))


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(n=args.n, extra_edges=args.extra, red_prob=args.red_prob,
                   seed=args.seed, bipartite=args.bipartite)
    text = format_em_instance(gen_instance(spec))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    instance = parse_em_instance(Path(args.infile).read_text())
    tkpm, gadget_map = gadgetize(instance)
    Path(args.out).write_text(format_tkpm_instance(tkpm))
    Path(args.map).write_text(format_gadget_map(gadget_map))
    print(f"gadget: {tkpm.graph.n} vertices, {len(tkpm.graph.edges)} edges, "
          f"k'={gadget_map.kprime}, threshold={gadget_map.threshold}")
    return 0


def _solve_em(args: argparse.Namespace) -> int:
    instance = parse_em_instance(Path(args.infile).read_text())
    if args.engine == "brute":
        witness = brute_em(instance)
        if witness is None:
            print("no")
            return 1
        print("yes")
        print(format_matching(witness))
        return 0
    if args.engine == "via-tkpm":
        if decide_em_via_tkpm(instance):
            print("yes")
            return 0
        print("no")
        return 1
    decision = algebraic_em_decide(instance, trials=args.trials, seed=args.seed)
    if decision.answer:
        print("yes")
        return 0
    print("no")
    print(f"error-bound {decision.error_bound:.3g}")
    return 1


def _solve_tkpm(args: argparse.Namespace) -> int:
    instance = parse_tkpm_instance(Path(args.infile).read_text())
    result = brute_tkpm(instance)
    if result is None:
        print("no")
        return 1
    matching, value = result
    print(f"value {value}")
    print(format_matching(matching))
    return 0


def _solve_parity(args: argparse.Namespace) -> int:
    instance = parse_em_instance(Path(args.infile).read_text())
    if args.engine == "brute":
        witness = (brute_cpm if args.problem == "cpm" else brute_bcpm)(instance)
        if witness is None:
            print("no")
            return 1
        print("yes")
        print(format_matching(witness))
        return 0
    via = cpm_via_em if args.problem == "cpm" else bcpm_via_em
    if via(instance).answer:
        print("yes")
        return 0
    print("no")
    return 1


def _cmd_solve(args: argparse.Namespace) -> int:
    allowed = {
        "em": ("brute", "algebraic", "via-tkpm"),
        "tkpm": ("brute",),
        "cpm": ("brute", "via-em"),
        "bcpm": ("brute", "via-em"),
    }[args.problem]
    if args.engine is None:
        args.engine = "brute"
    if args.engine not in allowed:
        print(f"error: engine {args.engine!r} is not available for "
              f"{args.problem} (choose from {', '.join(allowed)})", file=sys.stderr)
        return 2
    if args.problem == "em":
        return _solve_em(args)
    if args.problem == "tkpm":
        return _solve_tkpm(args)
    return _solve_parity(args)


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.exhaustive:
        if args.max_n is None:
            print("error: --exhaustive requires --max-n", file=sys.stderr)
            return 2
        report = exhaustive_sweep(args.max_n, seed=args.seed)
    else:
        if args.count is None:
            print("error: --random requires --count", file=sys.stderr)
            return 2
        shares = [args.count // len(_VERIFY_SIZES)] * len(_VERIFY_SIZES)
        shares[-1] += args.count - sum(shares)
        reports = []
        offset = 0
        for (n, extra), share in zip(_VERIFY_SIZES, shares):
            template = GenSpec(n=n, extra_edges=extra, red_prob=0.5,
                               seed=args.seed + offset)
            reports.append(randomized_campaign(share, template))
            offset += share
        report = merge_reports(reports, args.seed)
    if args.json:
        Path(args.json).write_text(report_to_json(report))
    print(f"instances {report.instances_run} agreements {report.agreements} "
          f"disagreements {len(report.disagreements)} "
          f"statistical {len(report.statistical_events)} skipped {report.skipped}")
    for note in report.budget_notes:
        print(note)
    for event in report.disagreements + report.statistical_events:
        print(f"{event.kind}: {event.engine_a}={event.verdict_a} "
              f"{event.engine_b}={event.verdict_b} on instance {event.instance_id}")
        print(event.instance_text, end="")
    return 3 if report.disagreements else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactmatch",
        description="Exact matching toolkit: generate, reduce, solve, verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random exact matching instance")
    gen.add_argument("--n", type=int, required=True, help="vertex count (even)")
    gen.add_argument("--extra", type=int, default=0,
                     help="edges beyond the planted perfect matching")
    gen.add_argument("--red-prob", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--bipartite", action="store_true",
                     help="generate a bipartite instance")
    gen.add_argument("--out", help="output file (default stdout)")
    gen.set_defaults(func=_cmd_gen)

    red = sub.add_parser("reduce", help="reduce exact matching to top-k matching")
    red.add_argument("--in", dest="infile", required=True, help="input instance")
    red.add_argument("--out", required=True, help="gadget instance output file")
    red.add_argument("--map", required=True, help="gadget map output file")
    red.set_defaults(func=_cmd_reduce)

    solve = sub.add_parser("solve", help="solve an instance")
    solve.add_argument("problem", choices=("em", "tkpm", "cpm", "bcpm"))
    solve.add_argument("--in", dest="infile", required=True, help="input instance")
    solve.add_argument("--engine",
                       choices=("brute", "algebraic", "via-tkpm", "via-em"),
                       help="solver engine (default brute)")
    solve.add_argument("--trials", type=int, default=40,
                       help="trial count for the algebraic engine")
    solve.add_argument("--seed", type=int, default=None,
                       help="seed for the algebraic engine")
    solve.set_defaults(func=_cmd_solve)

    ver = sub.add_parser("verify", help="run a differential-testing campaign")
    mode = ver.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", action="store_true")
    ver.add_argument("--max-n", type=int, help="size bound for --exhaustive")
    ver.add_argument("--count", type=int, help="instance count for --random")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--json", help="write the full report to this file")
    ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
