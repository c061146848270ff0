"""Stackelberg commitment in bimatrix games: pure-commitment enumeration and
the strong Stackelberg equilibrium via one linear program per follower action.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError, ZtsimError
from .matrix import MixedStrategy, _default_labels
from .simplex import InfeasibleLP, solve_lp

EQ_TOL = 1e-9


@dataclass(frozen=True)
class BimatrixGame:
    leader_payoff: tuple
    follower_payoff: tuple
    row_labels: tuple = ()
    col_labels: tuple = ()

    def __post_init__(self):
        L = tuple(tuple(float(v) for v in row) for row in self.leader_payoff)
        F = tuple(tuple(float(v) for v in row) for row in self.follower_payoff)
        if not L or not L[0]:
            raise ValidationError("payoff matrices must be at least 1x1")
        if len(L) != len(F) or any(len(a) != len(b) for a, b in zip(L, F)):
            raise ValidationError("leader and follower matrices must have matching shapes")
        if len({len(r) for r in L}) != 1 or len({len(r) for r in F}) != 1:
            raise ValidationError("payoff rows must have equal length")
        for M in (L, F):
            for row in M:
                for v in row:
                    if not math.isfinite(v):
                        raise ValidationError(f"payoff entries must be finite, got {v}")
        object.__setattr__(self, "leader_payoff", L)
        object.__setattr__(self, "follower_payoff", F)
        object.__setattr__(
            self, "row_labels", tuple(self.row_labels) or _default_labels("r", len(L))
        )
        object.__setattr__(
            self, "col_labels", tuple(self.col_labels) or _default_labels("c", len(L[0]))
        )
        if len(self.row_labels) != len(L) or len(self.col_labels) != len(L[0]):
            raise ValidationError("label lengths must match matrix dimensions")

    @property
    def shape(self):
        return len(self.leader_payoff), len(self.leader_payoff[0])


@dataclass(frozen=True)
class SSEResult:
    leader_strategy: MixedStrategy
    follower_action: int
    leader_value: float
    follower_value: float
    mode: str


def solve_stackelberg(game: BimatrixGame, mode="mixed") -> SSEResult:
    """Leader commits first; follower best-responds, ties broken in the
    leader's favor (strong Stackelberg convention).

    pure: enumerate leader rows. mixed: for each follower column, maximize the
    leader payoff over the region where that column is a follower best
    response, then keep the best feasible program.
    """
    if mode not in ("pure", "mixed"):
        raise ValidationError(f"mode must be 'pure' or 'mixed', got {mode!r}")
    L = np.array(game.leader_payoff)
    F = np.array(game.follower_payoff)
    n_rows, n_cols = L.shape

    if mode == "pure":
        best = None
        for i in range(n_rows):
            br_val = F[i].max()
            # follower ties break in the leader's favor
            cols = [j for j in range(n_cols) if F[i, j] >= br_val - EQ_TOL]
            j = max(cols, key=lambda jj: (L[i, jj], -jj))
            if best is None or L[i, j] > best[0] + EQ_TOL:
                best = (L[i, j], i, j)
        value, i, j = best
        weights = tuple(1.0 if k == i else 0.0 for k in range(n_rows))
        return SSEResult(
            MixedStrategy(weights), j, float(value), float(F[i, j]), "pure"
        )

    best = None
    for j in range(n_cols):
        # max x @ L[:, j]  s.t.  x @ (F[:, k] - F[:, j]) <= 0 for all k,
        # sum(x) = 1, x >= 0
        others = [k for k in range(n_cols) if k != j]
        A_ub = np.array([F[:, k] - F[:, j] for k in others]) if others else None
        b_ub = np.zeros(len(others)) if others else None
        try:
            x, neg = solve_lp(
                -L[:, j],
                A_ub=A_ub,
                b_ub=b_ub,
                A_eq=np.ones((1, n_rows)),
                b_eq=np.ones(1),
            )
        except InfeasibleLP:
            continue
        value = -neg
        if best is None or value > best[0] + EQ_TOL:
            best = (value, j, x)
    if best is None:
        raise ZtsimError(
            "no follower best-response region is feasible; unreachable for finite games"
        )
    value, j, x = best
    x = np.clip(x, 0.0, None)
    x = x / x.sum()
    return SSEResult(
        MixedStrategy(tuple(x)), j, float(value), float(x @ F[:, j]), "mixed"
    )


def leader_maximin(game: BimatrixGame) -> float:
    """Leader's pure security level on its own payoff matrix:
    max over rows of the row minimum. Commitment (pure or mixed) with a
    best-responding follower can never do worse than this."""
    return float(max(min(row) for row in game.leader_payoff))
