"""Clamped-free beam eigenproblem.

Eigenvalues of the transcendental characteristic equation, orthonormal
mode shapes, and modal frequencies for a rectangular cantilever clamped
at x = 0 and free at x = L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .constants import DEFAULT_TOLERANCES, Tolerances
from .errors import ValidationError

_MOD = "beam"


@dataclass(frozen=True)
class ProbeSpec:
    """Rectangular cantilever geometry and material.

    Attributes
    ----------
    length : float
        Beam length L (m).
    width : float
        Beam width (m).
    thickness : float
        Beam thickness, the dimension along the oscillation (m).
    density : float
        Mass density (kg/m^3).
    youngs_modulus : float
        Young modulus (Pa).
    """

    length: float
    width: float
    thickness: float
    density: float
    youngs_modulus: float

    def __post_init__(self):
        for name in ("length", "width", "thickness", "density", "youngs_modulus"):
            if not getattr(self, name) > 0.0:
                raise ValidationError(f"{name} must be positive", module=_MOD)
        if not self.thickness <= self.width <= self.length:
            raise ValidationError(
                "expected thickness <= width <= length for a cantilever", module=_MOD
            )

    @property
    def linear_density(self) -> float:
        """Mass per unit length mu = rho*width*thickness (kg/m)."""
        return self.density * self.width * self.thickness

    @property
    def mass(self) -> float:
        """Total beam mass mu*L (kg)."""
        return self.linear_density * self.length

    @property
    def second_moment(self) -> float:
        """Area moment of inertia width*thickness^3/12 (m^4)."""
        return self.width * self.thickness**3 / 12.0


def characteristic_residual(lam: float) -> float:
    """Bounded residual of the clamped-free characteristic equation.

    The eigenvalue condition 1 + cos(lam)*cosh(lam) = 0 is evaluated in
    the rescaled form cos(lam) + sech(lam), which stays O(1) for large
    lam instead of growing like cosh(lam).
    """
    return math.cos(lam) + 1.0 / math.cosh(lam)


def solve_eigenvalues(count: int, tolerances: Tolerances = DEFAULT_TOLERANCES) -> tuple[float, ...]:
    """First ``count`` roots of the characteristic equation, ascending.

    Root n is bracketed in ((n-1)*pi, n*pi), where the residual changes
    sign, and polished by Brent's method to ``tolerances.root_eps``.
    """
    if count < 1:
        raise ValidationError("mode count must be >= 1", module=_MOD)
    roots = []
    for k in range(1, count + 1):
        lo = (k - 1) * math.pi
        hi = k * math.pi
        roots.append(float(brentq(characteristic_residual, lo, hi, xtol=tolerances.root_eps)))
    return tuple(roots)


def mode_coefficient(lam: float) -> float:
    """Shape coefficient (sinh - sin)/(cosh + cos) at the eigenvalue."""
    return (math.sinh(lam) - math.sin(lam)) / (math.cosh(lam) + math.cos(lam))


@dataclass(frozen=True)
class ModeSet:
    """Eigenvalues, shape coefficients, and angular frequencies of a probe.

    Produced by :func:`compute_modes`; entries are index-aligned and
    ascending in frequency.
    """

    lambdas: tuple[float, ...]
    gammas: tuple[float, ...]
    omegas: tuple[float, ...]

    @property
    def n_modes(self) -> int:
        return len(self.lambdas)


def compute_modes(spec: ProbeSpec, count: int, tip_mass: float = 0.0,
                  tolerances: Tolerances = DEFAULT_TOLERANCES) -> ModeSet:
    """Solve the first ``count`` flexural modes of a cantilever.

    Frequencies follow omega_n = (lambda_n/L)^2 * sqrt(E*I/mu).  A point
    mass attached at the free end (``tip_mass``, kg) lowers every
    frequency through its Rayleigh-quotient modal-mass correction
    1/sqrt(1 + 4*tip_mass/m_beam); the shape functions are unchanged.
    """
    if tip_mass < 0.0:
        raise ValidationError("tip_mass must be non-negative", module=_MOD)
    lambdas = solve_eigenvalues(count, tolerances)
    gammas = tuple(mode_coefficient(lam) for lam in lambdas)
    wave_speed = math.sqrt(spec.youngs_modulus * spec.second_moment / spec.linear_density)
    # The end-loaded modal mass is m + tip_mass*L*X_n(L)^2 = m + 4*tip_mass.
    scale = 1.0 / math.sqrt(1.0 + 4.0 * tip_mass / spec.mass)
    omegas = tuple((lam / spec.length) ** 2 * wave_speed * scale for lam in lambdas)
    return ModeSet(lambdas=lambdas, gammas=gammas, omegas=omegas)


def eigenfrequencies(spec: ProbeSpec, count: int, tip_mass: float = 0.0,
                     tolerances: Tolerances = DEFAULT_TOLERANCES) -> tuple[float, ...]:
    """Angular frequencies (rad/s) of the first ``count`` modes."""
    return compute_modes(spec, count, tip_mass, tolerances).omegas


def mode_shape(spec: ProbeSpec, modes: ModeSet, n: int, x):
    """Orthonormal shape X_n(x) of mode n (1-based) at position(s) x.

    Normalization: integral of X_n^2 over [0, L] equals 1, which puts the
    free-end magnitude at |X_n(L)| = 2/sqrt(L).

    Parameters
    ----------
    n : int
        Mode number, 1 <= n <= modes.n_modes.
    x : float or array_like
        Position(s) along the beam, each in [0, L].
    """
    if not 1 <= n <= modes.n_modes:
        raise ValidationError(f"mode number {n} outside 1..{modes.n_modes}", module=_MOD)
    xs = np.asarray(x, dtype=float)
    if np.any(xs < 0.0) or np.any(xs > spec.length):
        raise ValidationError("position x must lie in [0, L]", module=_MOD)
    lam = modes.lambdas[n - 1]
    gam = modes.gammas[n - 1]
    xn = lam * xs / spec.length
    val = (np.cosh(xn) - np.cos(xn) - gam * (np.sinh(xn) - np.sin(xn))) / math.sqrt(spec.length)
    if xs.ndim == 0:
        return float(val)
    return val
