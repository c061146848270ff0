#!/usr/bin/env python3
"""Solve every game spec shipped under game_specs/ and print a short report
for each: game value and optimal mixes, commitment values, equilibrium sets.

Usage: python3 scripts/solve_example_games.py [--dir PATH]
"""
import argparse
from pathlib import Path

from ztsim.games import (
    BayesianGameSpec,
    BimatrixGame,
    MatrixGame,
    SignalingGameSpec,
    find_bne,
    find_pbe,
    leader_maximin,
    solve_stackelberg,
    solve_zero_sum,
)
from ztsim.gamespec import load_game

DEFAULT_DIR = Path(__file__).resolve().parent.parent / "game_specs"


def fmt_mix(labels, weights):
    return ", ".join(f"{l}={w:.3f}" for l, w in zip(labels, weights) if w > 1e-9)


def report(path, game):
    print(f"== {path.name}")
    if isinstance(game, MatrixGame):
        sol = solve_zero_sum(game)
        print(f"   value {sol.value:.4f}")
        print(f"   row mix: {fmt_mix(game.row_labels, sol.row_strategy.weights)}")
        print(f"   col mix: {fmt_mix(game.col_labels, sol.col_strategy.weights)}")
    elif isinstance(game, BimatrixGame):
        mixed = solve_stackelberg(game, mode="mixed")
        pure = solve_stackelberg(game, mode="pure")
        print(f"   mixed commitment value {mixed.leader_value:.4f} "
              f"(mix: {fmt_mix(game.row_labels, mixed.leader_strategy.weights)}, "
              f"follower plays {game.col_labels[mixed.follower_action]})")
        print(f"   pure commitment value  {pure.leader_value:.4f}")
        print(f"   leader security level  {leader_maximin(game):.4f}")
    elif isinstance(game, BayesianGameSpec):
        eqs = find_bne(game)
        print(f"   {len(eqs)} pure equilibria")
        for eq in eqs:
            parts = [f"{p}: " + ", ".join(f"{t}->{a}" for t, a in tmap) for p, tmap in eq.choices]
            print("     " + "; ".join(parts))
    elif isinstance(game, SignalingGameSpec):
        for rule in ("uniform", "prior", "pessimistic"):
            results = find_pbe(game, off_path_rule=rule)
            kinds = sorted({r.classification for r in results})
            print(f"   off-path={rule}: {len(results)} equilibria {kinds}")
            for r in results:
                sends = ", ".join(f"{t}->{s}" for t, s in r.sender_strategy)
                acts = ", ".join(f"{s}->{a}" for s, a in r.receiver_strategy)
                print(f"     [{r.classification}] sender {sends}; receiver {acts}")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dir", type=Path, default=DEFAULT_DIR)
    args = parser.parse_args()
    for path in sorted(args.dir.glob("*.yaml")):
        report(path, load_game(path))


if __name__ == "__main__":
    main()
