from .matrix import (
    BestResponseResult,
    FictitiousPlayResult,
    MatrixGame,
    MixedStrategy,
    ZeroSumSolution,
    alternate_best_response,
    fictitious_play,
    solve_zero_sum,
    support_enumeration,
)
from .bayesian import (
    BayesianGameSpec,
    BayesianStrategy,
    bayes_expected_utility,
    find_bne,
)
from .signaling import (
    Belief,
    BeliefSystem,
    PBEResult,
    SignalingGameSpec,
    find_pbe,
    off_path_belief,
    receiver_best_response,
    sender_optimal_signal,
    signal_posterior,
    verify_pbe,
)
from .stackelberg import BimatrixGame, SSEResult, leader_maximin, solve_stackelberg

__all__ = [
    "BestResponseResult",
    "FictitiousPlayResult",
    "MatrixGame",
    "MixedStrategy",
    "ZeroSumSolution",
    "alternate_best_response",
    "fictitious_play",
    "solve_zero_sum",
    "support_enumeration",
    "BayesianGameSpec",
    "BayesianStrategy",
    "bayes_expected_utility",
    "find_bne",
    "Belief",
    "BeliefSystem",
    "PBEResult",
    "SignalingGameSpec",
    "find_pbe",
    "off_path_belief",
    "receiver_best_response",
    "sender_optimal_signal",
    "signal_posterior",
    "verify_pbe",
    "BimatrixGame",
    "SSEResult",
    "leader_maximin",
    "solve_stackelberg",
]
