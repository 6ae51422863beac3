"""Exact two-atom Jaynes-Cummings dynamics under ideal bang-bang pulses,
with discord, concurrence, mutual information and classical correlation."""
from .config import (
    EwlState,
    Fock,
    PhysicalParams,
    PulseMode,
    PulseSchedule,
    Scenario,
    Thermal,
    initial_ewl_matrix,
    thermal_weights,
    validate,
)
from .dynamics import evolve_reduced, evolve_series, special_alpha
from .measures import (
    CorrelationReport,
    MeasurementAngles,
    classical_correlation,
    concurrence,
    conditional_entropy,
    correlations,
    dark_periods,
    discord,
    entropy,
    mutual_information,
    small_T_discord,
    x_spectrum,
)
from .scenario import ScenarioConfig, preset
from .xstate import XDensityMatrix

__version__ = "0.1.0"
