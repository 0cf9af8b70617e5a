"""Stochastic simulator of technology deployment on generated networks.

Thin Python facade over the C++ core: graph generators, the logistic
adoption dynamics, preset experiments, ensembles, and growth-curve shape
analysis.
"""

from ._core import (
    CostKind,
    CostModel,
    DynamicsParams,
    EnsembleSummary,
    Graph,
    GraphKind,
    GraphSpec,
    GrowthCurve,
    Mode,
    RunResult,
    SeedNodeRule,
    SimulationConfig,
    analyze_runs,
    count_bursts,
    derive_run_seed,
    detect_early_flattening,
    growth_rate,
    preset,
    preset_names,
    run,
    run_ensemble,
    saturation_step,
    smooth,
    transition_probability,
)

__all__ = [
    "CostKind",
    "CostModel",
    "DynamicsParams",
    "EnsembleSummary",
    "Graph",
    "GraphKind",
    "GraphSpec",
    "GrowthCurve",
    "Mode",
    "RunResult",
    "SeedNodeRule",
    "SimulationConfig",
    "analyze_runs",
    "count_bursts",
    "derive_run_seed",
    "detect_early_flattening",
    "growth_rate",
    "preset",
    "preset_names",
    "run",
    "run_ensemble",
    "saturation_step",
    "smooth",
    "transition_probability",
]

__version__ = "0.1.0"
