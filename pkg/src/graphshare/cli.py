"""Command-line front end: parse graphs, run the solver, decomposer and
strategies, and emit line-oriented verification reports.

Every flag can also be supplied through an environment variable with the
``GRAPHSHARE_`` prefix (``GRAPHSHARE_SEEDS=100`` mirrors ``--seeds 100``);
explicit flags win.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, TextIO

from .decompose import subdivision_decomposition
from .game import DEFAULT_MEMO_BUDGET, Solver, optimal_strategy, play
from .generators import GeneratorSpec, generate
from .graph import BudgetExceeded
from .strategies import SubdivisionSurfaced, master_strategy
from .textio import ParseError, format_graph, load_graph
from .verify import SUITES, run_suite

ENV_PREFIX = "GRAPHSHARE_"


def _env_default(name: str) -> Optional[str]:
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphshare",
        description="Exact solver, decomposer and certified strategies "
        "for the connected graph sharing game.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p: argparse.ArgumentParser, *, input_required: bool = True) -> None:
        p.add_argument("--input", default=_env_default("input"),
                       required=input_required and _env_default("input") is None,
                       help="path to a graph file")
        p.add_argument("--budget", type=int,
                       default=_env_default("budget"),
                       help="memoization / search budget")
        p.add_argument("--out", default=_env_default("out"),
                       help="write the report here instead of stdout")

    p = sub.add_parser("value", help="print the exact game value")
    add_common(p)

    p = sub.add_parser("play", help="pit two strategies and print the move log")
    add_common(p)
    p.add_argument("alice", nargs="?", default="oracle",
                   choices=["oracle", "master"], help="Alice's strategy")
    p.add_argument("bob", nargs="?", default="oracle",
                   choices=["oracle"], help="Bob's strategy")
    p.add_argument("--n", type=int, default=_env_default("n"),
                   help="clique order targeted by the master strategy")
    p.add_argument("--escalation-cap", type=int,
                   default=_env_default("escalation_cap"))

    p = sub.add_parser("decompose", help="print the structural outcome")
    add_common(p)
    p.add_argument("--n", type=int, default=_env_default("n"),
                   help="clique order whose subdivision is sought", required=_env_default("n") is None)

    p = sub.add_parser("certify",
                       help="run the master strategy against an optimal "
                            "opponent and check the certified bound")
    add_common(p)
    p.add_argument("--n", type=int, default=_env_default("n"))
    p.add_argument("--escalation-cap", type=int,
                   default=_env_default("escalation_cap"))

    p = sub.add_parser("generate", help="write a generated instance")
    p.add_argument("family",
                   choices=["hedgehog", "oddConstruction", "evenSubdivision",
                            "randomConnected", "ringOfStars", "sparseWeighted"])
    p.add_argument("--size", type=int, default=_env_default("size"),
                   required=_env_default("size") is None)
    p.add_argument("--seed", type=int, default=_env_default("seed") or 0)
    p.add_argument("--parity", choices=["odd", "even"], default=None)
    p.add_argument("--spine", choices=["path", "star"], default="path")
    p.add_argument("--out", default=_env_default("out"))

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seeds", type=int, default=_env_default("seeds") or 100)
    p.add_argument("--size", type=int, default=_env_default("size"))
    p.add_argument("--out", default=_env_default("out"))

    return parser


def _open_out(args: argparse.Namespace) -> TextIO:
    if getattr(args, "out", None):
        return open(args.out, "w")
    return sys.stdout


def _load(args: argparse.Namespace):
    try:
        return load_graph(args.input)
    except OSError as exc:
        raise SystemExit(f"error: cannot read {args.input}: {exc}")
    except ParseError as exc:
        raise SystemExit(f"error: {args.input}: {exc}")


def _memo_budget(args: argparse.Namespace) -> int:
    if getattr(args, "budget", None):
        return int(args.budget)
    return DEFAULT_MEMO_BUDGET


def cmd_value(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load(args)
    value = Solver(graph, memo_budget=_memo_budget(args)).game_value()
    print(f"value {value.numerator}/{value.denominator}", file=out)
    return 0


def cmd_play(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load(args)
    budget = _memo_budget(args)
    if args.alice == "master":
        n = int(args.n) if args.n else 4
        cap = int(args.escalation_cap) if args.escalation_cap else None
        alice = master_strategy(graph, n, escalation_cap=cap, memo_budget=budget)
    else:
        alice = optimal_strategy(graph, memo_budget=budget)
    bob = optimal_strategy(graph, memo_budget=budget)
    alice_gain, bob_gain, log = play(graph, alice, bob)
    for record in log:
        print(record.format(), file=out)
    print(f"gain alice={alice_gain.numerator}/{alice_gain.denominator} "
          f"bob={bob_gain.numerator}/{bob_gain.denominator}", file=out)
    return 0


def cmd_decompose(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load(args)
    outcome = subdivision_decomposition(graph, int(args.n))
    print(outcome.format(), file=out)
    return 0


def cmd_certify(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load(args)
    n = int(args.n) if args.n else 4
    cap = int(args.escalation_cap) if args.escalation_cap else None
    try:
        strategy = master_strategy(graph, n, escalation_cap=cap,
                                   memo_budget=_memo_budget(args))
    except SubdivisionSurfaced as exc:
        print(f"surfaced witness={sorted(exc.witness.branch_vertices)}", file=out)
        return 1
    print(strategy.dichotomy.format(), file=out)
    gain, _, _ = play(graph, strategy, optimal_strategy(graph))
    print(strategy.format(), file=out)
    ok = gain >= strategy.bound
    print(f"gain {gain.numerator}/{gain.denominator} "
          f"{'pass' if ok else 'fail'}", file=out)
    return 0 if ok else 1


def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    spec = GeneratorSpec(family=args.family, size=int(args.size),
                         seed=int(args.seed), parity=args.parity,
                         spine=args.spine)
    graph = generate(spec)
    out.write(format_graph(graph))
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    size = int(args.size) if args.size else None
    results = run_suite(args.suite, int(args.seeds), size)
    passed = 0
    for seed, status, detail in results:
        line = f"seed={seed} status={status}"
        if detail:
            line += f" detail={detail!r}"
        print(line, file=out)
        if status != "fail":
            passed += 1
    print(f"{passed}/{len(results)} pass", file=out)
    return 0 if passed == len(results) else 1


COMMANDS = {
    "value": cmd_value,
    "play": cmd_play,
    "decompose": cmd_decompose,
    "certify": cmd_certify,
    "generate": cmd_generate,
    "verify": cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = _open_out(args)
    try:
        return COMMANDS[args.verb](args, out)
    except BudgetExceeded as exc:
        print(f"error: budget exhausted: {exc}", file=sys.stderr)
        return 2
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
