"""Physical constants, shared numeric tolerances, and unit conversions.

Internal convention: SI units throughout, with every frequency an angular
frequency in rad/s.  Cyclic frequencies (Hz) and nanometer distances are
converted at the CLI boundary only, never inside the physics modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError

_MOD = "constants"

# CODATA fixed values: k_B is exact by SI definition, hbar follows from the
# exact Planck constant.
HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23      # J/K

NM = 1e-9  # meters per nanometer


@dataclass(frozen=True)
class Tolerances:
    """Numeric tolerances used consistently across the package.

    Attributes
    ----------
    rel_eps : float
        Relative tolerance for closed-form identities.
    fd_eps : float
        Relative step / tolerance for finite-difference checks.
    root_eps : float
        Localization tolerance for root bracketing and line minimization.
    """

    rel_eps: float = 1e-9
    fd_eps: float = 1e-6
    root_eps: float = 1e-12

    def __post_init__(self):
        for name in ("rel_eps", "fd_eps", "root_eps"):
            if not getattr(self, name) > 0.0:
                raise ValidationError(f"tolerance {name} must be positive", module=_MOD)


DEFAULT_TOLERANCES = Tolerances()


def angular_from_cyclic(frequency_hz: float) -> float:
    """Convert a cyclic frequency in Hz to an angular frequency in rad/s."""
    if frequency_hz < 0.0:
        raise ValidationError("cyclic frequency must be non-negative", module=_MOD)
    return 2.0 * math.pi * frequency_hz


def meters_from_nm(value_nm: float) -> float:
    """Convert a distance in nanometers to meters."""
    return value_nm * NM
