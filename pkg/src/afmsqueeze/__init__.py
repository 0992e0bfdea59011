"""Cantilever probe mechanics near a surface: van der Waals force models,
beam modes, effective-oscillator reduction, mechanical squeezing, and
quadrature readout, with CSV/JSON/SVG reporting."""

__version__ = "0.1.0"

from .constants import (
    DEFAULT_TOLERANCES,
    HBAR,
    K_B,
    NM,
    Tolerances,
    angular_from_cyclic,
    meters_from_nm,
)
from .errors import (
    AfmSqueezeError,
    AttractiveRegimeError,
    InsufficientDataError,
    PhysicsError,
    SnapInError,
    ValidationError,
)
from .forces import ApproachProtocol, ForceParams, force_noncontact, force_static, force_timed
from .beam import (
    ModeSet,
    ProbeSpec,
    characteristic_residual,
    compute_modes,
    eigenfrequencies,
    mode_coefficient,
    mode_shape,
    solve_eigenvalues,
)
from .oscillator import (
    TIP_GAIN,
    AlphaSensitivity,
    EffectiveOscillator,
    ReductionResult,
    curvature_frequency,
    minimize_potential,
    potential_exact,
    reduce,
    sensitivity_dqbar_dalpha,
    sensitivity_dqbar_dz0,
)
from .quadratures import (
    QuadratureState,
    ThermalEnvironment,
    ThermalOccupation,
    apply_squeezing,
    bogoliubov_coeffs,
    free_quadratures,
    homodyne_variance,
    squeezing_lifetime,
    thermal_occupation,
    zero_point_spread,
)
from .dynamics import (
    DriveSpec,
    DynamicsConfig,
    Trajectory,
    integrate,
    ringdown_frequency,
)
from .sweeps import AxisSpec, MapResult, SweepGrid, TraceResult, omega_map, uncertainty_trace

__all__ = [
    "__version__",
    "DEFAULT_TOLERANCES",
    "HBAR",
    "K_B",
    "NM",
    "Tolerances",
    "angular_from_cyclic",
    "meters_from_nm",
    "AfmSqueezeError",
    "AttractiveRegimeError",
    "InsufficientDataError",
    "PhysicsError",
    "SnapInError",
    "ValidationError",
    "ApproachProtocol",
    "ForceParams",
    "force_noncontact",
    "force_static",
    "force_timed",
    "ModeSet",
    "ProbeSpec",
    "characteristic_residual",
    "compute_modes",
    "eigenfrequencies",
    "mode_coefficient",
    "mode_shape",
    "solve_eigenvalues",
    "TIP_GAIN",
    "AlphaSensitivity",
    "EffectiveOscillator",
    "ReductionResult",
    "curvature_frequency",
    "minimize_potential",
    "potential_exact",
    "reduce",
    "sensitivity_dqbar_dalpha",
    "sensitivity_dqbar_dz0",
    "QuadratureState",
    "ThermalEnvironment",
    "ThermalOccupation",
    "apply_squeezing",
    "bogoliubov_coeffs",
    "free_quadratures",
    "homodyne_variance",
    "squeezing_lifetime",
    "thermal_occupation",
    "zero_point_spread",
    "DriveSpec",
    "DynamicsConfig",
    "Trajectory",
    "integrate",
    "ringdown_frequency",
    "AxisSpec",
    "MapResult",
    "SweepGrid",
    "TraceResult",
    "omega_map",
    "uncertainty_trace",
]
