"""Gaussian-state quadrature statistics of the probe.

Thermal occupancy, free-probe quadrature uncertainties under cavity
coupling, squeezing transforms, readout-angle variance, and the
Bogoliubov coefficients of the mode mixing.  Normalization: a vacuum
quadrature is 1/sqrt(2), so the uncertainty product is bounded by 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import HBAR, K_B
from .errors import ValidationError

_MOD = "quadratures"


def zero_point_spread(mass: float, omega1: float) -> float:
    """Ground-state position spread sqrt(hbar/(m*omega1)) (m)."""
    if not mass > 0.0 or not omega1 > 0.0:
        raise ValidationError("mass and omega1 must be positive", module=_MOD)
    return math.sqrt(HBAR / (mass * omega1))


@dataclass(frozen=True)
class ThermalOccupation:
    """Mean phonon number of a mode in a thermal bath.

    Attributes
    ----------
    linear : float
        High-temperature estimate k_B*T/(hbar*omega).
    bose : float
        Exact Bose factor 1/(exp(hbar*omega/(k_B*T)) - 1).
    """

    linear: float
    bose: float


def thermal_occupation(omega1: float, temperature: float) -> ThermalOccupation:
    """Thermal phonon occupancy of a mode at ``omega1`` and ``temperature``."""
    if not omega1 > 0.0:
        raise ValidationError("omega1 must be positive", module=_MOD)
    if temperature < 0.0:
        raise ValidationError("temperature must be non-negative", module=_MOD)
    if temperature == 0.0:
        return ThermalOccupation(linear=0.0, bose=0.0)
    x = HBAR * omega1 / (K_B * temperature)
    bose = 0.0 if x > 700.0 else 1.0 / math.expm1(x)
    return ThermalOccupation(linear=1.0 / x, bose=bose)


@dataclass(frozen=True)
class ThermalEnvironment:
    """Bath at a given temperature seen by a mode at ``omega1``.

    Exposes the Boltzmann factor beta = exp(-hbar*omega1/(k_B*T)) and the
    thermal weights beta_plus = (1+beta)/(1-beta) = 2<n>+1 and
    beta_minus = 1/beta_plus, computed in overflow-safe form.
    """

    temperature: float
    omega1: float

    def __post_init__(self):
        if self.temperature < 0.0:
            raise ValidationError("temperature must be non-negative", module=_MOD)
        if not self.omega1 > 0.0:
            raise ValidationError("omega1 must be positive", module=_MOD)

    def _exponent(self) -> float:
        return HBAR * self.omega1 / (K_B * self.temperature)

    @property
    def beta(self) -> float:
        if self.temperature == 0.0:
            return 0.0
        return math.exp(-self._exponent())

    @property
    def beta_plus(self) -> float:
        if self.temperature == 0.0:
            return 1.0
        return 1.0 / math.tanh(0.5 * self._exponent())

    @property
    def beta_minus(self) -> float:
        if self.temperature == 0.0:
            return 1.0
        return math.tanh(0.5 * self._exponent())


@dataclass(frozen=True)
class QuadratureState:
    """Quadrature uncertainties of a Gaussian probe state.

    Attributes
    ----------
    dx1, dx2 : float
        Uncertainties of the two quadratures (dimensionless, vacuum =
        1/sqrt(2) each).
    chi : float
        Cavity coupling at which the state was prepared.
    r : float
        Squeezing parameter applied on top of the free state.
    """

    dx1: float
    dx2: float
    chi: float
    r: float = 0.0

    def __post_init__(self):
        if not self.dx1 > 0.0 or not self.dx2 > 0.0:
            raise ValidationError("quadrature uncertainties must be positive", module=_MOD)
        if self.dx1 * self.dx2 < 0.5 - 1e-9:
            raise ValidationError(
                f"uncertainty product {self.dx1 * self.dx2:.12g} violates the 1/2 bound",
                module=_MOD,
            )


def free_quadratures(env: ThermalEnvironment, chi: float) -> QuadratureState:
    """Free-probe quadrature uncertainties at cavity coupling chi.

    dX1 = sqrt((chi^2 + b+) / (2*(1 + b+*chi^2 + chi^4))) and
    dX2 = sqrt((1 + b-*chi^2 + chi^4) / (2*(chi^2 + b-))) with the
    thermal weights b+- of the environment.  At T = 0 the product is
    exactly 1/2 for every chi.
    """
    if chi < 0.0:
        raise ValidationError("coupling chi must be non-negative", module=_MOD)
    bp = env.beta_plus
    bm = env.beta_minus
    c2 = chi * chi
    c4 = c2 * c2
    dx1 = math.sqrt((c2 + bp) / (2.0 * (1.0 + bp * c2 + c4)))
    dx2 = math.sqrt((1.0 + bm * c2 + c4) / (2.0 * (c2 + bm)))
    return QuadratureState(dx1=dx1, dx2=dx2, chi=chi, r=0.0)


def apply_squeezing(state: QuadratureState, r: float) -> QuadratureState:
    """Squeeze a free state: dX1 -> e^-r * dX1, dX2 -> e^r * dX2.

    The uncertainty product is invariant under the transform.
    """
    if r < 0.0:
        raise ValidationError("squeezing parameter r must be non-negative", module=_MOD)
    return QuadratureState(
        dx1=state.dx1 * math.exp(-r),
        dx2=state.dx2 * math.exp(r),
        chi=state.chi,
        r=r,
    )


def homodyne_variance(state: QuadratureState, theta: float) -> float:
    """Readout uncertainty at quadrature angle theta (rad).

    sqrt(cos^2(theta)*dX1^2 + sin^2(theta)*dX2^2); cross-quadrature
    correlations are taken as zero.
    """
    c = math.cos(theta)
    s = math.sin(theta)
    return math.sqrt(c * c * state.dx1**2 + s * s * state.dx2**2)


def squeezing_lifetime(quality_factor: float, omega1: float) -> float:
    """Damping-limited lifetime Q/omega1 of a prepared squeezed state (s)."""
    if not quality_factor > 0.0 or not omega1 > 0.0:
        raise ValidationError("quality factor and omega1 must be positive", module=_MOD)
    return quality_factor / omega1


def bogoliubov_coeffs(r: float) -> tuple[float, float]:
    """Mode-mixing coefficients (cosh r, sinh r) of the squeezing transform.

    They satisfy cosh^2 - sinh^2 = 1; the transformed lowering operator is
    b = cosh(r)*(a + zeta) + sinh(r)*(a^dag + zeta).
    """
    if r < 0.0:
        raise ValidationError("squeezing parameter r must be non-negative", module=_MOD)
    return (math.cosh(r), math.sinh(r))
