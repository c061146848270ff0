"""Zero-trust Bayesian trust engine, finite-game solvers, and a deterministic
discrete-time access-control simulator."""

from .trust import (
    BehaviorModel,
    EvidenceModel,
    Observation,
    TrustState,
    TypeSpace,
    attenuate,
    bayes_update,
    compose_prior,
    sequence_update,
    trust_score,
)
from .sim import (
    EntitySpec,
    Metrics,
    PolicyConfig,
    Profile,
    Scenario,
    SimTrace,
    StepRecord,
    compute_metrics,
    policy_decide,
    run,
    step,
)
from .scenario import load_scenario, parse_scenario, serialize_scenario
from .gamespec import load_game, parse_game, serialize_game
from .trace import emit_trace

__version__ = "0.1.0"
