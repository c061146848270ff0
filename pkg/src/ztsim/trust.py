"""Bayesian trust model: finite type space, trust scoring, posterior updates,
prior composition from weighted sources, and exponential attenuation toward a
baseline.

All types are immutable values and all operations are pure functions; nothing
here holds shared mutable state.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import NoPriorSources, ValidationError, ZeroProbabilityObservation

PROB_TOL = 1e-9


def _check_prob(p, what):
    if not (isinstance(p, (int, float)) and math.isfinite(p)):
        raise ValidationError(f"{what} must be a finite number, got {p!r}")
    if p < -PROB_TOL or p > 1 + PROB_TOL:
        raise ValidationError(f"{what} must lie in [0, 1], got {p}")


@dataclass(frozen=True)
class TypeSpace:
    """Finite set of entity types with a designated trusted (non-adversarial) subset."""

    types: tuple
    trusted: frozenset

    def __post_init__(self):
        object.__setattr__(self, "types", tuple(self.types))
        object.__setattr__(self, "trusted", frozenset(self.trusted))
        if not self.types:
            raise ValidationError("type space must be non-empty")
        if len(set(self.types)) != len(self.types):
            raise ValidationError("type identifiers must be unique")
        extra = self.trusted - set(self.types)
        if extra:
            raise ValidationError(f"trusted subset contains unknown types: {sorted(extra)}")


@dataclass(frozen=True)
class TrustState:
    """Probability mass over a TypeSpace's types for one entity, plus the tick
    at which it was last updated."""

    mass: dict
    timestamp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "mass", dict(self.mass))
        if self.timestamp < 0:
            raise ValidationError("timestamp must be non-negative")
        total = 0.0
        for t, p in self.mass.items():
            _check_prob(p, f"mass[{t!r}]")
            total += p
        if abs(total - 1.0) > PROB_TOL:
            raise ValidationError(f"trust mass must sum to 1, got {total}")


@dataclass(frozen=True)
class BehaviorModel:
    """Action likelihoods per type: likelihood[(type, action)] = P(action | type)."""

    actions: tuple
    likelihood: dict

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(self.actions))
        object.__setattr__(self, "likelihood", dict(self.likelihood))
        if not self.actions:
            raise ValidationError("behavior model needs at least one action")
        if len(set(self.actions)) != len(self.actions):
            raise ValidationError("action identifiers must be unique")
        for theta in self.types():
            row = 0.0
            for a in self.actions:
                if (theta, a) not in self.likelihood:
                    raise ValidationError(f"behavior row for type {theta!r} missing action {a!r}")
                p = self.likelihood[(theta, a)]
                _check_prob(p, f"behavior[{theta!r}, {a!r}]")
                row += p
            if abs(row - 1.0) > PROB_TOL:
                raise ValidationError(
                    f"behavior row for type {theta!r} sums to {row}, expected 1"
                )

    def types(self):
        return tuple(dict.fromkeys(t for t, _ in self.likelihood))

    def prob(self, action, theta):
        return self.likelihood[(theta, action)]


@dataclass(frozen=True)
class EvidenceModel:
    """Side-evidence likelihoods: likelihood[(action, type, evidence)] =
    P(evidence | action, type)."""

    evidence_values: tuple
    likelihood: dict

    def __post_init__(self):
        object.__setattr__(self, "evidence_values", tuple(self.evidence_values))
        object.__setattr__(self, "likelihood", dict(self.likelihood))
        if not self.evidence_values:
            raise ValidationError("evidence model needs at least one evidence value")
        if len(set(self.evidence_values)) != len(self.evidence_values):
            raise ValidationError("evidence identifiers must be unique")
        pairs = dict.fromkeys((a, t) for a, t, _ in self.likelihood)
        for a, t in pairs:
            row = 0.0
            for e in self.evidence_values:
                if (a, t, e) not in self.likelihood:
                    raise ValidationError(
                        f"evidence row for (action={a!r}, type={t!r}) missing value {e!r}"
                    )
                p = self.likelihood[(a, t, e)]
                _check_prob(p, f"evidence[{a!r}, {t!r}, {e!r}]")
                row += p
            if abs(row - 1.0) > PROB_TOL:
                raise ValidationError(
                    f"evidence row for (action={a!r}, type={t!r}) sums to {row}, expected 1"
                )

    def prob(self, evidence, action, theta):
        return self.likelihood[(action, theta, evidence)]


@dataclass(frozen=True)
class Observation:
    """One observed (action, side evidence) pair at a given tick."""

    action: object
    evidence: object
    tick: int = 0

    def __post_init__(self):
        if self.tick < 0:
            raise ValidationError("observation tick must be non-negative")


def trust_score(state: TrustState, space: TypeSpace) -> float:
    """Probability mass on the trusted subset: the entity's trust score."""
    if set(state.mass) != set(space.types):
        raise ValidationError(
            f"state types {sorted(map(repr, state.mass))} do not match "
            f"space types {sorted(map(repr, space.types))}"
        )
    return sum(state.mass[t] for t in space.types if t in space.trusted)


def bayes_update(
    state: TrustState,
    obs: Observation,
    behavior: BehaviorModel,
    evidence: EvidenceModel,
) -> TrustState:
    """Posterior over types after one observation.

    mass'(theta) = h(e|a,theta) * sigma(a|theta) * mass(theta), normalized.
    Raises ZeroProbabilityObservation when the normalizer is zero.
    """
    if obs.action not in behavior.actions:
        raise ValidationError(f"unknown action {obs.action!r}")
    if obs.evidence not in evidence.evidence_values:
        raise ValidationError(f"unknown evidence value {obs.evidence!r}")
    joint = {
        t: evidence.prob(obs.evidence, obs.action, t) * behavior.prob(obs.action, t) * p
        for t, p in state.mass.items()
    }
    z = sum(joint.values())
    if z <= 0.0:
        raise ZeroProbabilityObservation(obs.action, obs.evidence, tick=obs.tick)
    return TrustState(mass={t: v / z for t, v in joint.items()}, timestamp=obs.tick)


def sequence_update(state, obs_list, behavior, evidence) -> TrustState:
    """Left-fold of bayes_update over an ordered list of observations."""
    prev = -1
    for i, obs in enumerate(obs_list):
        if obs.tick < prev:
            raise ValidationError(f"observation ticks must be non-decreasing (index {i})")
        prev = obs.tick
    out = state
    for i, obs in enumerate(obs_list):
        try:
            out = bayes_update(out, obs, behavior, evidence)
        except ZeroProbabilityObservation as exc:
            raise ZeroProbabilityObservation(
                exc.action, exc.evidence, tick=exc.tick, index=i
            ) from exc
    return out


def compose_prior(sources) -> float:
    """Weight-normalized mean of (score, weight) sources from policy checks,
    reputation, recommendations, etc."""
    sources = list(sources)
    if not sources:
        raise NoPriorSources("no prior sources given")
    total_w = 0.0
    total = 0.0
    for score, weight in sources:
        _check_prob(score, "prior source score")
        if weight < 0:
            raise ValidationError(f"prior source weight must be non-negative, got {weight}")
        total += score * weight
        total_w += weight
    if total_w <= 0:
        raise NoPriorSources("all prior source weights are zero")
    return min(1.0, max(0.0, total / total_w))


def attenuate(state: TrustState, elapsed, rate, baseline: TrustState) -> TrustState:
    """Exponential decay of the mass toward a baseline state.

    mass'(theta) = baseline(theta) + (mass(theta) - baseline(theta)) * exp(-rate*elapsed).
    Renormalization only corrects float drift.
    """
    if elapsed < 0:
        raise ValidationError(f"elapsed must be non-negative, got {elapsed}")
    if rate < 0:
        raise ValidationError(f"decay rate must be non-negative, got {rate}")
    if set(state.mass) != set(baseline.mass):
        raise ValidationError("state and baseline must share a type space")
    k = math.exp(-rate * elapsed)
    if k == 1.0:
        return state
    raw = {t: baseline.mass[t] + (state.mass[t] - baseline.mass[t]) * k for t in state.mass}
    z = sum(raw.values())
    return TrustState(mass={t: v / z for t, v in raw.items()}, timestamp=state.timestamp)


def uniform_state(space: TypeSpace, timestamp: int = 0) -> TrustState:
    n = len(space.types)
    return TrustState(mass={t: 1.0 / n for t in space.types}, timestamp=timestamp)


def state_from_score(score, space: TypeSpace, timestamp: int = 0) -> TrustState:
    """Spread a scalar trust score uniformly over the trusted types and the
    remainder over the untrusted ones."""
    _check_prob(score, "trust score")
    trusted = [t for t in space.types if t in space.trusted]
    untrusted = [t for t in space.types if t not in space.trusted]
    if not trusted and score > PROB_TOL:
        raise ValidationError("positive trust score but no trusted types")
    if not untrusted and score < 1 - PROB_TOL:
        raise ValidationError("trust score below 1 but no untrusted types")
    mass = {}
    for t in trusted:
        mass[t] = score / len(trusted)
    for t in untrusted:
        mass[t] = (1.0 - score) / len(untrusted)
    return TrustState(mass=mass, timestamp=timestamp)
