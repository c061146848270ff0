"""Two-player zero-sum matrix games: exact minimax via linear programming,
support enumeration as a reference method for tiny games, classical fictitious
play with value bounds, and alternating pure best-response dynamics.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import ValidationError
from .simplex import solve_lp

CHECK_TOL = 1e-9


def _default_labels(prefix, n):
    return tuple(f"{prefix}{i}" for i in range(n))


@dataclass(frozen=True)
class MatrixGame:
    """Row-player payoffs; the column player receives the negation."""

    payoff: tuple
    row_labels: tuple = ()
    col_labels: tuple = ()

    def __post_init__(self):
        rows = tuple(tuple(float(v) for v in row) for row in self.payoff)
        if not rows or not rows[0]:
            raise ValidationError("payoff matrix must be at least 1x1")
        if len({len(r) for r in rows}) != 1:
            raise ValidationError("payoff rows must have equal length")
        for row in rows:
            for v in row:
                if not math.isfinite(v):
                    raise ValidationError(f"payoff entries must be finite, got {v}")
        object.__setattr__(self, "payoff", rows)
        object.__setattr__(
            self, "row_labels", tuple(self.row_labels) or _default_labels("r", len(rows))
        )
        object.__setattr__(
            self, "col_labels", tuple(self.col_labels) or _default_labels("c", len(rows[0]))
        )
        if len(self.row_labels) != len(rows) or len(self.col_labels) != len(rows[0]):
            raise ValidationError("label lengths must match matrix dimensions")

    @property
    def matrix(self):
        return np.array(self.payoff, dtype=float)

    @property
    def shape(self):
        return len(self.payoff), len(self.payoff[0])


@dataclass(frozen=True)
class MixedStrategy:
    weights: tuple

    def __post_init__(self):
        w = tuple(float(v) for v in self.weights)
        if any(v < -CHECK_TOL for v in w):
            raise ValidationError("mixed strategy weights must be non-negative")
        if abs(sum(w) - 1.0) > 1e-9:
            raise ValidationError(f"mixed strategy weights must sum to 1, got {sum(w)}")
        object.__setattr__(self, "weights", tuple(max(0.0, v) for v in w))

    def support(self, tol=1e-9):
        return tuple(i for i, v in enumerate(self.weights) if v > tol)


@dataclass(frozen=True)
class ZeroSumSolution:
    value: float
    row_strategy: MixedStrategy
    col_strategy: MixedStrategy


def solve_zero_sum(game: MatrixGame) -> ZeroSumSolution:
    """Exact minimax solution of a zero-sum matrix game via the LP formulation.

    The returned (value, x, y) satisfy the bilateral certificate
    min_j (x'A)_j >= v - tol and max_i (A y)_i <= v + tol.
    """
    A = game.matrix
    n_rows, n_cols = A.shape
    shift = 1.0 - A.min()
    As = A + shift  # strictly positive entries keep both LPs bounded/feasible

    # Column player: max sum(w) s.t. As @ w <= 1, w >= 0; y = w / sum(w).
    w, neg = solve_lp(-np.ones(n_cols), A_ub=As, b_ub=np.ones(n_rows))
    # Row player: min sum(u) s.t. As' @ u >= 1, u >= 0; x = u / sum(u).
    u, _ = solve_lp(np.ones(n_rows), A_ub=-As.T, b_ub=-np.ones(n_cols))
    value = 1.0 / u.sum() - shift
    x = u / u.sum()
    y = w / w.sum()
    return ZeroSumSolution(
        value=float(value),
        row_strategy=MixedStrategy(tuple(x)),
        col_strategy=MixedStrategy(tuple(y)),
    )


def support_enumeration(game: MatrixGame, tol=1e-8) -> ZeroSumSolution:
    """Reference solver for games up to 4x4: enumerate equal-size supports and
    solve the indifference equations directly."""
    A = game.matrix
    n_rows, n_cols = A.shape
    if n_rows > 4 or n_cols > 4:
        raise ValidationError("support enumeration is limited to 4x4 games")
    from itertools import combinations

    for k in range(1, min(n_rows, n_cols) + 1):
        for I in combinations(range(n_rows), k):
            for J in combinations(range(n_cols), k):
                sub = A[np.ix_(I, J)]
                # Solve [sub' x = v, sum x = 1] and [sub y = v, sum y = 1].
                M = np.zeros((k + 1, k + 1))
                M[:k, :k] = sub.T
                M[:k, k] = -1.0
                M[k, :k] = 1.0
                rhs = np.zeros(k + 1)
                rhs[k] = 1.0
                try:
                    solx = np.linalg.solve(M, rhs)
                except np.linalg.LinAlgError:
                    continue
                M2 = np.zeros((k + 1, k + 1))
                M2[:k, :k] = sub
                M2[:k, k] = -1.0
                M2[k, :k] = 1.0
                try:
                    soly = np.linalg.solve(M2, rhs)
                except np.linalg.LinAlgError:
                    continue
                xs, v = solx[:k], solx[k]
                ys, v2 = soly[:k], soly[k]
                if abs(v - v2) > tol:
                    continue
                if (xs < -tol).any() or (ys < -tol).any():
                    continue
                x = np.zeros(n_rows)
                y = np.zeros(n_cols)
                x[list(I)] = np.clip(xs, 0.0, None)
                y[list(J)] = np.clip(ys, 0.0, None)
                x /= x.sum()
                y /= y.sum()
                if (x @ A).min() < v - tol or (A @ y).max() > v + tol:
                    continue
                return ZeroSumSolution(
                    float(v), MixedStrategy(tuple(x)), MixedStrategy(tuple(y))
                )
    raise ValidationError("no equilibrium support found (should be impossible)")


@dataclass(frozen=True)
class FictitiousPlayStep:
    iteration: int
    row_empirical: tuple
    col_empirical: tuple
    lower: float
    upper: float


@dataclass(frozen=True)
class FictitiousPlayResult:
    trace: tuple
    lower: float
    upper: float
    iterations: int
    row_empirical: tuple  # empirical mix certifying the lower bound
    col_empirical: tuple  # empirical mix certifying the upper bound


def fictitious_play(game: MatrixGame, max_iters=10_000, tolerance=1e-3) -> FictitiousPlayResult:
    """Classical fictitious play. The running bounds
    max_t min_j (xbar'A)_j <= v <= min_t max_i (A ybar)_i
    always bracket the exact game value; iteration stops early when the gap
    drops below `tolerance`."""
    if max_iters < 1:
        raise ValidationError("max_iters must be >= 1")
    if tolerance <= 0:
        raise ValidationError("tolerance must be positive")
    A = game.matrix
    n_rows, n_cols = A.shape
    row_counts = np.zeros(n_rows)
    col_counts = np.zeros(n_cols)
    lower, upper = -math.inf, math.inf
    best_x = best_y = None
    trace = []
    for it in range(1, max_iters + 1):
        if it == 1:
            br_row, br_col = 0, 0
        else:
            br_row = int(np.argmax(A @ col_counts))
            br_col = int(np.argmin(row_counts @ A))
        row_counts[br_row] += 1
        col_counts[br_col] += 1
        xbar = row_counts / it
        ybar = col_counts / it
        x_guarantee = float((xbar @ A).min())
        y_guarantee = float((A @ ybar).max())
        if x_guarantee > lower:
            lower, best_x = x_guarantee, tuple(map(float, xbar))
        if y_guarantee < upper:
            upper, best_y = y_guarantee, tuple(map(float, ybar))
        trace.append(
            FictitiousPlayStep(it, tuple(map(float, xbar)), tuple(map(float, ybar)), lower, upper)
        )
        if upper - lower < tolerance:
            break
    return FictitiousPlayResult(tuple(trace), lower, upper, len(trace), best_x, best_y)


@dataclass(frozen=True)
class BestResponseResult:
    trace: tuple  # profiles, (row index, col index), appended on change
    termination: str  # converged | cycle_detected | budget_exhausted
    final_profile: tuple
    cycle: tuple = ()


def alternate_best_response(game: MatrixGame, start, max_iters=1000) -> BestResponseResult:
    """Turn-taking exact pure best responses, row first. Detects revisited
    (profile, mover) states and reports the profile cycle; a pure saddle point
    reports convergence."""
    A = game.matrix
    n_rows, n_cols = A.shape
    r, c = start
    if not (0 <= r < n_rows and 0 <= c < n_cols):
        raise ValidationError(f"start profile {start} out of range")
    profile = (r, c)
    trace = [profile]
    mover = "row"
    seen = {(profile, mover): 0}
    states = [(profile, mover)]
    no_change = 0
    for _ in range(2 * max_iters):
        r, c = profile
        if mover == "row":
            new = (int(np.argmax(A[:, c])), c)
            mover = "col"
        else:
            new = (r, int(np.argmin(A[r, :])))
            mover = "row"
        if new == profile:
            no_change += 1
        else:
            no_change = 0
            trace.append(new)
        profile = new
        if no_change >= 2:
            return BestResponseResult(tuple(trace), "converged", profile)
        key = (profile, mover)
        if key in seen:
            first = seen[key]
            cycle_profiles = []
            for p, _m in states[first:]:
                if not cycle_profiles or cycle_profiles[-1] != p:
                    cycle_profiles.append(p)
            return BestResponseResult(
                tuple(trace), "cycle_detected", profile, cycle=tuple(cycle_profiles)
            )
        seen[key] = len(states)
        states.append(key)
    return BestResponseResult(tuple(trace), "budget_exhausted", profile)
