"""Command-line entry points.

    ztsim run --scenario <path> [--seed N | --seeds A..B] [--out <path>] [--metrics <path>]
    ztsim solve --game <path> [--mode pure|mixed] [--off-path uniform|prior|pessimistic] [--out <path>]

Exit codes: 0 success, 1 validation error, 2 runtime error, 3 enumeration
budget exceeded. Diagnostics go to stderr. All randomness flows from the
scenario seed (or its --seed/--seeds override); the CLI adds no entropy.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import EnumerationBudgetExceeded, ScenarioFormatError, ZtsimError
from .games import (
    BayesianGameSpec,
    BimatrixGame,
    MatrixGame,
    SignalingGameSpec,
    find_bne,
    find_pbe,
    solve_stackelberg,
    solve_zero_sum,
)
from .gamespec import load_game
from .scenario import load_scenario
from .sim import compute_metrics, run
from .trace import emit_trace, metrics_to_dict, solver_record

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2
EXIT_BUDGET = 3


def _parse_seeds(spec):
    if ".." not in spec:
        raise ValueError(f"--seeds expects A..B, got {spec!r}")
    lo, hi = spec.split("..", 1)
    lo, hi = int(lo), int(hi)
    if hi < lo:
        raise ValueError(f"--seeds range is empty: {spec!r}")
    return range(lo, hi + 1)


def _seeded_path(path, seed):
    p = Path(path)
    return p.with_name(f"{p.stem}.seed{seed}{p.suffix}")


def _write_trace(records, out_path):
    if out_path is None:
        return emit_trace(records, sys.stdout)
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        return emit_trace(records, fh)


def cmd_run(args) -> int:
    try:
        scenario = load_scenario(args.scenario)
    except ScenarioFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    if args.seeds is not None:
        try:
            seeds = list(_parse_seeds(args.seeds))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_VALIDATION
    else:
        seeds = [args.seed if args.seed is not None else scenario.seed]

    sweep = len(seeds) > 1
    all_metrics = {}
    try:
        for seed in seeds:
            trace = run(scenario, seed=seed)
            out_path = args.out
            if out_path is not None and sweep:
                out_path = _seeded_path(out_path, seed)
            if out_path is not None or not sweep:
                _write_trace(trace.records, out_path)
            all_metrics[seed] = metrics_to_dict(compute_metrics(trace))
    except ZtsimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME

    if args.metrics is not None:
        payload = all_metrics[seeds[0]] if not sweep else {"seeds": all_metrics}
        with open(args.metrics, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def _solve_records(game, mode, off_path):
    if isinstance(game, MatrixGame):
        sol = solve_zero_sum(game)
        yield solver_record(
            "zero_sum",
            value=sol.value,
            row_strategy=dict(zip(game.row_labels, sol.row_strategy.weights)),
            col_strategy=dict(zip(game.col_labels, sol.col_strategy.weights)),
        )
    elif isinstance(game, BimatrixGame):
        sol = solve_stackelberg(game, mode=mode)
        yield solver_record(
            "stackelberg",
            mode=sol.mode,
            leader_strategy=dict(zip(game.row_labels, sol.leader_strategy.weights)),
            follower_action=game.col_labels[sol.follower_action],
            leader_value=sol.leader_value,
            follower_value=sol.follower_value,
        )
    elif isinstance(game, BayesianGameSpec):
        equilibria = find_bne(game)
        yield solver_record("bne_summary", count=len(equilibria))
        for eq in equilibria:
            yield solver_record(
                "bne",
                strategy={p: dict(tmap) for p, tmap in eq.choices},
            )
    elif isinstance(game, SignalingGameSpec):
        results = find_pbe(game, off_path_rule=off_path)
        yield solver_record(
            "pbe_summary",
            count=len(results),
            classifications=sorted({r.classification for r in results}),
            off_path_rule=off_path,
        )
        for r in results:
            yield solver_record(
                "pbe",
                classification=r.classification,
                sender_strategy=dict(r.sender_strategy),
                receiver_strategy=dict(r.receiver_strategy),
                beliefs={
                    s: {
                        "probs": dict(zip(game.types, b.probs)),
                        "on_path": b.on_path,
                    }
                    for s, b in r.beliefs.by_signal
                },
            )
    else:  # pragma: no cover - parse_game only returns the four kinds
        raise ZtsimError(f"unsupported game object {type(game).__name__}")


def cmd_solve(args) -> int:
    try:
        game = load_game(args.game)
    except ScenarioFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        records = list(_solve_records(game, args.mode, args.off_path))
    except EnumerationBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ZtsimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    _write_trace(records, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ztsim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario simulation")
    p_run.add_argument("--scenario", required=True, help="scenario YAML path")
    p_run.add_argument("--seed", type=int, default=None, help="override the scenario seed")
    p_run.add_argument("--seeds", default=None, help="seed sweep A..B (inclusive)")
    p_run.add_argument("--out", default=None, help="trace output path (default stdout)")
    p_run.add_argument("--metrics", default=None, help="metrics JSON output path")
    p_run.set_defaults(func=cmd_run)

    p_solve = sub.add_parser("solve", help="solve a game spec")
    p_solve.add_argument("--game", required=True, help="game spec YAML path")
    p_solve.add_argument("--mode", choices=("pure", "mixed"), default="mixed")
    p_solve.add_argument(
        "--off-path", choices=("uniform", "prior", "pessimistic"), default="uniform"
    )
    p_solve.add_argument("--out", default=None, help="result output path (default stdout)")
    p_solve.set_defaults(func=cmd_solve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
