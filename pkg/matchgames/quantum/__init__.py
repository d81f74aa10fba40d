from .strategy import (
    Observable,
    QuantumCorrelation,
    QuantumStrategy,
    correlation_of,
    deterministic_strategy,
    k32_optimal_strategy,
    kn2_answer_pairs,
    maximally_entangled,
    observable_sum_norms,
    quantum_win_prob,
    random_strategy,
    sum_zero_observables,
    synchronous_strategy,
    trivial_strategy,
)
from .sweep import SeesawRun, SweepResult, bias_value, seesaw_kn2, seesaw_sweep

__all__ = [
    "Observable",
    "QuantumCorrelation",
    "QuantumStrategy",
    "SeesawRun",
    "SweepResult",
    "bias_value",
    "correlation_of",
    "deterministic_strategy",
    "k32_optimal_strategy",
    "kn2_answer_pairs",
    "maximally_entangled",
    "observable_sum_norms",
    "quantum_win_prob",
    "random_strategy",
    "seesaw_kn2",
    "seesaw_sweep",
    "sum_zero_observables",
    "synchronous_strategy",
    "trivial_strategy",
]
