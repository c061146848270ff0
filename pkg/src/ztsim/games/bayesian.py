"""Finite Bayesian games: interim expected utility and exhaustive pure-strategy
Bayesian Nash equilibrium enumeration.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ..errors import EnumerationBudgetExceeded, UnreachableType, ValidationError

EQ_TOL = 1e-9
DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class BayesianGameSpec:
    """Players with private types, a joint type prior, and utility tables over
    (action profile, type profile)."""

    players: tuple
    types: dict  # player -> tuple of types
    actions: dict  # player -> tuple of actions
    prior: dict  # type profile tuple -> probability
    utilities: dict  # player -> {(action profile, type profile): utility}

    def __post_init__(self):
        object.__setattr__(self, "players", tuple(self.players))
        object.__setattr__(self, "types", {p: tuple(v) for p, v in self.types.items()})
        object.__setattr__(self, "actions", {p: tuple(v) for p, v in self.actions.items()})
        object.__setattr__(self, "prior", dict(self.prior))
        object.__setattr__(
            self, "utilities", {p: dict(v) for p, v in self.utilities.items()}
        )
        if not self.players:
            raise ValidationError("at least one player required")
        for p in self.players:
            if not self.types.get(p):
                raise ValidationError(f"player {p!r} has no types")
            if not self.actions.get(p):
                raise ValidationError(f"player {p!r} has no actions")
        total = 0.0
        for profile, prob in self.prior.items():
            if len(profile) != len(self.players):
                raise ValidationError(f"type profile {profile!r} has wrong arity")
            if prob < 0 or not math.isfinite(prob):
                raise ValidationError(f"prior[{profile!r}] must be a finite non-negative number")
            total += prob
        if abs(total - 1.0) > 1e-9:
            raise ValidationError(f"joint type prior sums to {total}, expected 1")
        for aprof in self.action_profiles():
            for tprof in self.type_profiles():
                for p in self.players:
                    if (aprof, tprof) not in self.utilities.get(p, {}):
                        raise ValidationError(
                            f"utility table for player {p!r} missing entry "
                            f"(actions={aprof!r}, types={tprof!r})"
                        )

    def type_profiles(self):
        return itertools.product(*(self.types[p] for p in self.players))

    def action_profiles(self):
        return itertools.product(*(self.actions[p] for p in self.players))

    def prior_prob(self, tprofile):
        return self.prior.get(tuple(tprofile), 0.0)

    def marginal(self, player, ptype):
        i = self.players.index(player)
        return sum(v for k, v in self.prior.items() if k[i] == ptype)

    def conditional(self, player, ptype):
        """Belief over the other players' type profiles given own type."""
        i = self.players.index(player)
        marg = self.marginal(player, ptype)
        if marg <= 0:
            raise UnreachableType(
                f"type {ptype!r} of player {player!r} has zero marginal probability"
            )
        out = {}
        for k, v in self.prior.items():
            if k[i] == ptype and v > 0:
                rest = tuple(t for j, t in enumerate(k) if j != i)
                out[rest] = out.get(rest, 0.0) + v / marg
        return out


@dataclass(frozen=True)
class BayesianStrategy:
    """One pure strategy per player: a map from each type to an action."""

    choices: tuple  # ((player, ((type, action), ...)), ...)

    @classmethod
    def from_dict(cls, mapping):
        return cls(
            tuple(
                (p, tuple(sorted(tmap.items(), key=lambda kv: str(kv[0]))))
                for p, tmap in mapping.items()
            )
        )

    def as_dict(self):
        return {p: dict(tmap) for p, tmap in self.choices}

    def action(self, player, ptype):
        for p, tmap in self.choices:
            if p == player:
                return dict(tmap)[ptype]
        raise KeyError(player)


def bayes_expected_utility(spec: BayesianGameSpec, strategy, player, ptype) -> float:
    """Interim expected utility of `player` with type `ptype` under a pure
    strategy profile, averaging over opponents' types with the conditional
    belief derived from the joint prior."""
    if isinstance(strategy, BayesianStrategy):
        strategy = strategy.as_dict()
    for p in spec.players:
        for t in spec.types[p]:
            if t not in strategy.get(p, {}):
                raise ValidationError(f"strategy missing action for player {p!r} type {t!r}")
    i = spec.players.index(player)
    belief = spec.conditional(player, ptype)
    total = 0.0
    for rest, prob in belief.items():
        tprof = list(rest)
        tprof.insert(i, ptype)
        tprof = tuple(tprof)
        aprof = tuple(strategy[p][tprof[j]] for j, p in enumerate(spec.players))
        total += prob * spec.utilities[player][(aprof, tprof)]
    return total


def strategy_space_size(spec: BayesianGameSpec) -> int:
    n = 1
    for p in spec.players:
        n *= len(spec.actions[p]) ** len(spec.types[p])
    return n


def find_bne(spec: BayesianGameSpec, budget=DEFAULT_BUDGET):
    """All pure Bayesian Nash equilibria: profiles where no positive-probability
    type of any player can gain more than EQ_TOL by a unilateral action change."""
    required = strategy_space_size(spec)
    if required > budget:
        raise EnumerationBudgetExceeded(required, budget)

    per_player = []
    for p in spec.players:
        ts = spec.types[p]
        maps = [dict(zip(ts, combo)) for combo in itertools.product(spec.actions[p], repeat=len(ts))]
        per_player.append(maps)

    live_types = {
        p: [t for t in spec.types[p] if spec.marginal(p, t) > 0] for p in spec.players
    }

    results = []
    for combo in itertools.product(*per_player):
        strategy = {p: dict(tmap) for p, tmap in zip(spec.players, combo)}
        if _is_bne(spec, strategy, live_types):
            results.append(BayesianStrategy.from_dict(strategy))
    return results


def _is_bne(spec, strategy, live_types):
    for p in spec.players:
        for t in live_types[p]:
            base = bayes_expected_utility(spec, strategy, p, t)
            current = strategy[p][t]
            for alt in spec.actions[p]:
                if alt == current:
                    continue
                trial = {q: dict(m) for q, m in strategy.items()}
                trial[p][t] = alt
                if bayes_expected_utility(spec, trial, p, t) > base + EQ_TOL:
                    return False
    return True
