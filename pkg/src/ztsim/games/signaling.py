"""Signaling games: Bayes posterior over sender types, receiver/sender best
responses, and exhaustive pure-strategy perfect Bayesian equilibrium search
with a configurable off-path belief rule.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from ..errors import EnumerationBudgetExceeded, ValidationError

EQ_TOL = 1e-9
DEFAULT_BUDGET = 10**6
OFF_PATH_RULES = ("uniform", "prior", "pessimistic")


@dataclass(frozen=True)
class SignalingGameSpec:
    """Sender with private type sends a signal; receiver updates beliefs and
    acts. Signal costs, if any, are folded into the sender utility table."""

    types: tuple
    prior: dict  # type -> probability
    signals: tuple
    receiver_actions: tuple
    sender_utility: dict  # (type, signal, action) -> utility
    receiver_utility: dict  # (action, type) -> utility

    def __post_init__(self):
        object.__setattr__(self, "types", tuple(self.types))
        object.__setattr__(self, "prior", dict(self.prior))
        object.__setattr__(self, "signals", tuple(self.signals))
        object.__setattr__(self, "receiver_actions", tuple(self.receiver_actions))
        object.__setattr__(self, "sender_utility", dict(self.sender_utility))
        object.__setattr__(self, "receiver_utility", dict(self.receiver_utility))
        if not self.types or not self.signals or not self.receiver_actions:
            raise ValidationError("types, signals, and receiver actions must be non-empty")
        total = sum(self.prior.get(t, 0.0) for t in self.types)
        if abs(total - 1.0) > 1e-9:
            raise ValidationError(f"sender type prior sums to {total}, expected 1")
        for t in self.types:
            if self.prior.get(t, 0.0) < 0:
                raise ValidationError(f"prior[{t!r}] must be non-negative")
            for s in self.signals:
                for a in self.receiver_actions:
                    if (t, s, a) not in self.sender_utility:
                        raise ValidationError(
                            f"sender utility missing (type={t!r}, signal={s!r}, action={a!r})"
                        )
        for a in self.receiver_actions:
            for t in self.types:
                if (a, t) not in self.receiver_utility:
                    raise ValidationError(
                        f"receiver utility missing (action={a!r}, type={t!r})"
                    )


@dataclass(frozen=True)
class Belief:
    """Receiver belief over sender types at one signal."""

    probs: tuple  # aligned with spec.types
    on_path: bool

    def __post_init__(self):
        if abs(sum(self.probs) - 1.0) > 1e-9:
            raise ValidationError(f"belief must sum to 1, got {sum(self.probs)}")


@dataclass(frozen=True)
class BeliefSystem:
    by_signal: tuple  # ((signal, Belief), ...)

    def belief(self, signal) -> Belief:
        for s, b in self.by_signal:
            if s == signal:
                return b
        raise KeyError(signal)


@dataclass(frozen=True)
class PBEResult:
    sender_strategy: tuple  # ((type, signal), ...)
    receiver_strategy: tuple  # ((signal, action), ...)
    beliefs: BeliefSystem
    classification: str  # pooling | separating | hybrid

    def sender_signal(self, ptype):
        return dict(self.sender_strategy)[ptype]

    def receiver_action(self, signal):
        return dict(self.receiver_strategy)[signal]


def off_path_belief(spec: SignalingGameSpec, signal, rule) -> tuple:
    """Belief assigned at a signal no sender type emits.

    uniform: flat over types. prior: the type prior. pessimistic: the
    degenerate belief whose induced receiver response minimizes the best
    deviation payoff any sender type could get at this signal (first type on
    ties), i.e. the most deviation-deterring point belief.
    """
    n = len(spec.types)
    if rule == "uniform":
        return tuple(1.0 / n for _ in spec.types)
    if rule == "prior":
        return tuple(spec.prior[t] for t in spec.types)
    if rule == "pessimistic":
        best = None
        for i, t in enumerate(spec.types):
            point = tuple(1.0 if j == i else 0.0 for j in range(n))
            action, _, _ = receiver_best_response(spec, point)
            worst_gain = max(
                spec.sender_utility[(th, signal, action)] for th in spec.types
            )
            if best is None or worst_gain < best[0] - EQ_TOL:
                best = (worst_gain, point)
        return best[1]
    raise ValidationError(f"unknown off-path rule {rule!r}; expected one of {OFF_PATH_RULES}")


def signal_posterior(spec: SignalingGameSpec, sender_strategy, signal, off_path_rule="uniform") -> Belief:
    """Bayes posterior over sender types after observing `signal`.

    `sender_strategy` maps each type to a distribution over signals (a pure
    strategy may be given as type -> signal). Zero total signal probability
    yields the configured off-path belief.
    """
    if signal not in spec.signals:
        raise ValidationError(f"unknown signal {signal!r}")
    weights = []
    for t in spec.types:
        row = sender_strategy[t]
        p_sig = row.get(signal, 0.0) if isinstance(row, dict) else (1.0 if row == signal else 0.0)
        if p_sig < -1e-12 or p_sig > 1 + 1e-12:
            raise ValidationError(f"sender strategy row for {t!r} has invalid probability {p_sig}")
        weights.append(p_sig * spec.prior[t])
    z = sum(weights)
    if z > 0:
        return Belief(tuple(w / z for w in weights), on_path=True)
    return Belief(off_path_belief(spec, signal, off_path_rule), on_path=False)


def receiver_best_response(spec: SignalingGameSpec, belief):
    """(action, expected value, tie flag) maximizing the belief-weighted
    receiver utility; first action in declared order wins ties."""
    probs = belief.probs if isinstance(belief, Belief) else tuple(belief)
    if abs(sum(probs) - 1.0) > 1e-9:
        raise ValidationError(f"belief must sum to 1, got {sum(probs)}")
    values = [
        sum(p * spec.receiver_utility[(a, t)] for p, t in zip(probs, spec.types))
        for a in spec.receiver_actions
    ]
    best = max(values)
    winners = [i for i, v in enumerate(values) if v >= best - EQ_TOL]
    return spec.receiver_actions[winners[0]], values[winners[0]], len(winners) > 1


def sender_optimal_signal(spec: SignalingGameSpec, ptype, receiver_strategy):
    """(signal, value, tie flag) maximizing the sender's utility given the
    receiver's signal-contingent actions; first signal wins ties."""
    for s in spec.signals:
        if s not in receiver_strategy:
            raise ValidationError(f"receiver strategy missing signal {s!r}")
    values = [
        spec.sender_utility[(ptype, s, receiver_strategy[s])] for s in spec.signals
    ]
    best = max(values)
    winners = [i for i, v in enumerate(values) if v >= best - EQ_TOL]
    return spec.signals[winners[0]], values[winners[0]], len(winners) > 1


def _classify(spec, sender_map):
    used = [sender_map[t] for t in spec.types]
    if len(set(used)) == 1:
        return "pooling"
    if len(set(used)) == len(used):
        return "separating"
    return "hybrid"


def find_pbe(spec: SignalingGameSpec, off_path_rule="uniform", budget=DEFAULT_BUDGET):
    """All pure-strategy perfect Bayesian equilibria.

    Keeps (sender strategy, receiver strategy) pairs where on-path beliefs are
    Bayes-consistent, off-path beliefs follow the rule, every receiver action
    is a best response to the belief at its signal, and no sender type gains
    more than EQ_TOL by deviating to another signal.
    """
    if off_path_rule not in OFF_PATH_RULES:
        raise ValidationError(f"unknown off-path rule {off_path_rule!r}")
    required = len(spec.signals) ** len(spec.types) * len(spec.receiver_actions) ** len(
        spec.signals
    )
    if required > budget:
        raise EnumerationBudgetExceeded(required, budget)

    results = []
    for sender_combo in itertools.product(spec.signals, repeat=len(spec.types)):
        sender_map = dict(zip(spec.types, sender_combo))
        beliefs = BeliefSystem(
            tuple(
                (s, signal_posterior(spec, sender_map, s, off_path_rule))
                for s in spec.signals
            )
        )
        # Receiver best-response values per signal, allowing any tied action.
        per_signal_ok = {}
        for s in spec.signals:
            _, best_val, _ = receiver_best_response(spec, beliefs.belief(s))
            ok = []
            for a in spec.receiver_actions:
                val = sum(
                    p * spec.receiver_utility[(a, t)]
                    for p, t in zip(beliefs.belief(s).probs, spec.types)
                )
                if val >= best_val - EQ_TOL:
                    ok.append(a)
            per_signal_ok[s] = ok
        for receiver_combo in itertools.product(
            *(per_signal_ok[s] for s in spec.signals)
        ):
            receiver_map = dict(zip(spec.signals, receiver_combo))
            if _sender_deviation_exists(spec, sender_map, receiver_map):
                continue
            results.append(
                PBEResult(
                    sender_strategy=tuple((t, sender_map[t]) for t in spec.types),
                    receiver_strategy=tuple((s, receiver_map[s]) for s in spec.signals),
                    beliefs=beliefs,
                    classification=_classify(spec, sender_map),
                )
            )
    return results


def _sender_deviation_exists(spec, sender_map, receiver_map):
    for t in spec.types:
        if spec.prior[t] <= 0:
            continue
        current = spec.sender_utility[(t, sender_map[t], receiver_map[sender_map[t]])]
        for s in spec.signals:
            if spec.sender_utility[(t, s, receiver_map[s])] > current + EQ_TOL:
                return True
    return False


def verify_pbe(spec: SignalingGameSpec, result: PBEResult, off_path_rule="uniform") -> bool:
    """Standalone consistency check: recompute beliefs from the sender strategy
    via signal_posterior and re-run both players' deviation checks."""
    sender_map = dict(result.sender_strategy)
    receiver_map = dict(result.receiver_strategy)
    for s in spec.signals:
        expected = signal_posterior(spec, sender_map, s, off_path_rule)
        got = result.beliefs.belief(s)
        if expected.on_path != got.on_path:
            return False
        if any(abs(a - b) > 1e-9 for a, b in zip(expected.probs, got.probs)):
            return False
        _, best_val, _ = receiver_best_response(spec, expected)
        val = sum(
            p * spec.receiver_utility[(receiver_map[s], t)]
            for p, t in zip(expected.probs, spec.types)
        )
        if val < best_val - EQ_TOL:
            return False
    return not _sender_deviation_exists(spec, sender_map, receiver_map)
