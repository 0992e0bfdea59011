"""Single-mode reduction of the near-surface probe.

The fundamental flexural mode coupled to the inverse-square tip force
reduces to an oscillator with a softened frequency, a shifted equilibrium,
and a squeezing parameter.  Closed forms here are cross-checked against
brute-force scans of the exact reduced potential by the sensitivity and
minimizer routines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import DEFAULT_TOLERANCES, HBAR, Tolerances
from .errors import PhysicsError, SnapInError, ValidationError
from .forces import ForceParams

_MOD = "oscillator"

# Free-end magnitude sqrt(L)*|X_n(L)| of a clamped-free shape function;
# the tip deflection of a single retained mode is TIP_GAIN * q.
TIP_GAIN = 2.0

# Fourth root of machine epsilon: near-optimal step for second differences.
_CURVATURE_STEP = float(np.finfo(float).eps) ** 0.25

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class EffectiveOscillator:
    """Fundamental-mode probe facing an inverse-square attraction.

    Attributes
    ----------
    mass : float
        Modal (total beam) mass (kg).
    omega1 : float
        Free fundamental angular frequency (rad/s).
    z0 : float
        Rest tip-sample distance (m).
    alpha : float
        Attractive strength H*R/6 (J m); zero means a decoupled probe.
    """

    mass: float
    omega1: float
    z0: float
    alpha: float

    def __post_init__(self):
        for name in ("mass", "omega1", "z0"):
            if not getattr(self, name) > 0.0:
                raise ValidationError(f"{name} must be positive", module=_MOD)
        if self.alpha < 0.0:
            raise ValidationError("alpha must be non-negative", module=_MOD)

    @classmethod
    def from_force(cls, mass: float, omega1: float, z0: float,
                   params: ForceParams) -> "EffectiveOscillator":
        return cls(mass=mass, omega1=omega1, z0=z0, alpha=params.alpha)

    @property
    def delta_sq(self) -> float:
        """Softening rate 8*alpha/(m*z0^3) (rad^2/s^2)."""
        return 2.0 * TIP_GAIN**2 * self.alpha / (self.mass * self.z0**3)

    @property
    def z_crit(self) -> float:
        """Snap-in distance (8*alpha/(m*omega1^2))^(1/3) (m)."""
        return (8.0 * self.alpha / (self.mass * self.omega1**2)) ** (1.0 / 3.0)


@dataclass(frozen=True)
class ReductionResult:
    """Effective-oscillator parameters at a working distance.

    Attributes
    ----------
    omega : float
        Softened angular frequency Omega (rad/s).
    q_bar : float
        Shifted modal equilibrium (m), negative toward the sample.
    r : float
        Squeezing parameter ln(omega1/Omega)/2.
    r_tilde : float
        Frequency-softening ratio exp(4r) = (omega1/Omega)^2.
    zeta : float
        Dimensionless coherent displacement sqrt(m*Omega/(2*hbar))*q_bar;
        the mode-mixing transform is b = cosh(r)*(a + zeta) +
        sinh(r)*(a^dag + zeta).
    """

    omega: float
    q_bar: float
    r: float
    r_tilde: float
    zeta: float


def _q_bar(mass: float, omega1: float, z0: float, alpha: float) -> float:
    return 2.0 * alpha * z0 / (8.0 * alpha - mass * omega1**2 * z0**3)


def reduce(osc: EffectiveOscillator) -> ReductionResult:
    """Quadratic reduction about q = 0 of the exact reduced potential.

    Raises SnapInError when z0 <= z_crit, where the curvature at the
    expansion point is no longer positive and no oscillation survives.
    """
    if not osc.z0 > osc.z_crit:
        raise SnapInError(
            f"snap-in: z0 = {osc.z0:.6g} m <= z_crit = {osc.z_crit:.6g} m; "
            "no stable oscillation at this distance",
            module=_MOD,
        )
    omega = math.sqrt(osc.omega1**2 - osc.delta_sq)
    q_bar = _q_bar(osc.mass, osc.omega1, osc.z0, osc.alpha)
    ratio = osc.omega1 / omega
    r = 0.5 * math.log(ratio)
    r_tilde = ratio * ratio
    zeta = math.sqrt(osc.mass * omega / (2.0 * HBAR)) * q_bar
    return ReductionResult(omega=omega, q_bar=q_bar, r=r, r_tilde=r_tilde, zeta=zeta)


def potential_exact(osc: EffectiveOscillator, q: float) -> float:
    """Exact reduced potential at modal coordinate q (J).

    U(q) = m*omega1^2*q^2/2 - alpha/(z0 + 2q); the pole at q = -z0/2 is
    outside the domain.
    """
    gap = osc.z0 + TIP_GAIN * q
    if gap <= 0.0:
        raise ValidationError(
            f"coordinate q = {q:.6g} m puts the gap at or past the pole", module=_MOD
        )
    return 0.5 * osc.mass * osc.omega1**2 * q * q - osc.alpha / gap


def _golden_min(f, a: float, b: float, tol: float) -> float:
    # Golden-section line minimization on a unimodal bracket [a, b].
    h = b - a
    c = b - _INVPHI * h
    d = a + _INVPHI * h
    fc = f(c)
    fd = f(d)
    while h > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - _INVPHI * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
    return 0.5 * (a + b)


def minimize_potential(osc: EffectiveOscillator, samples: int = 4096,
                       tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Brute-force location of the stable minimum of the exact potential.

    A dense scan over (-z0/2 + margin, +z0) isolates the interior local
    minimum (the potential dives to -inf toward the pole, so the stable
    point is never the global minimum); golden-section refinement then
    narrows it to root_eps*z0.  Raises SnapInError when no interior
    minimum exists.
    """
    if samples < 16:
        raise ValidationError("need at least 16 scan samples", module=_MOD)
    z0 = osc.z0
    lo = -0.5 * z0 + 1e-3 * z0
    hi = z0
    grid = np.linspace(lo, hi, samples)
    gaps = z0 + TIP_GAIN * grid
    u = 0.5 * osc.mass * osc.omega1**2 * grid * grid - osc.alpha / gaps
    interior = np.nonzero((u[1:-1] < u[:-2]) & (u[1:-1] < u[2:]))[0]
    if interior.size == 0:
        raise SnapInError(
            "snap-in: exact potential has no interior minimum on the scan range",
            module=_MOD,
        )
    idx = int(interior[np.argmin(u[interior + 1])]) + 1
    return _golden_min(
        lambda q: potential_exact(osc, q),
        float(grid[idx - 1]),
        float(grid[idx + 1]),
        tolerances.root_eps * z0,
    )


def curvature_frequency(osc: EffectiveOscillator, q_at: float,
                        step: float | None = None) -> float:
    """Local oscillation frequency sqrt(U''(q)/m) from a second difference.

    Parameters
    ----------
    q_at : float
        Expansion point (m).
    step : float, optional
        Second-difference step; defaults to eps^(1/4) * z0.

    Raises PhysicsError at points of non-positive curvature.
    """
    h = step if step is not None else _CURVATURE_STEP * osc.z0
    if not h > 0.0:
        raise ValidationError("step must be positive", module=_MOD)
    u_m = potential_exact(osc, q_at - h)
    u_0 = potential_exact(osc, q_at)
    u_p = potential_exact(osc, q_at + h)
    curv = (u_p - 2.0 * u_0 + u_m) / (h * h)
    if curv <= 0.0:
        raise PhysicsError(
            f"non-positive curvature at q = {q_at:.6g} m; no oscillation there",
            module=_MOD,
        )
    return math.sqrt(curv / osc.mass)


def sensitivity_dqbar_dz0(osc: EffectiveOscillator) -> float:
    """Drift gain of the equilibrium against distance, d q_bar / d z0.

    Closed form (1 - 4*rt + 3*rt^2)/4 in the softening ratio rt = exp(4r);
    dimensionless.  Raises SnapInError below z_crit, like reduce().
    """
    rt = reduce(osc).r_tilde
    return 0.25 * (1.0 - 4.0 * rt + 3.0 * rt * rt)


@dataclass(frozen=True)
class AlphaSensitivity:
    """Equilibrium sensitivity to the attractive strength, two ways.

    Attributes
    ----------
    finite_difference : float
        Ground truth d q_bar / d alpha by central difference of the
        closed-form equilibrium (m per J m).
    printed_form : float
        The commonly quoted cube-root expression
        (rt*(rt-1)^2 / (216*m*alpha^2*omega1^2))^(1/3), reported
        side by side; it does not reduce to the ground truth.
    magnitude_ratio : float
        printed_form / |finite_difference|.
    """

    finite_difference: float
    printed_form: float
    magnitude_ratio: float


def sensitivity_dqbar_dalpha(osc: EffectiveOscillator,
                             tolerances: Tolerances = DEFAULT_TOLERANCES) -> AlphaSensitivity:
    """Equilibrium sensitivity d q_bar / d alpha with a cross-check field.

    The finite difference of the closed-form equilibrium is the ground
    truth; the cube-root form is evaluated alongside for comparison, and
    ``magnitude_ratio`` records their disagreement.
    """
    if not osc.alpha > 0.0:
        raise ValidationError("alpha sensitivity needs alpha > 0", module=_MOD)
    rt = reduce(osc).r_tilde
    h = tolerances.fd_eps * osc.alpha
    fd = (
        _q_bar(osc.mass, osc.omega1, osc.z0, osc.alpha + h)
        - _q_bar(osc.mass, osc.omega1, osc.z0, osc.alpha - h)
    ) / (2.0 * h)
    printed = (
        rt * (rt - 1.0) ** 2 / (216.0 * osc.mass * osc.alpha**2 * osc.omega1**2)
    ) ** (1.0 / 3.0)
    return AlphaSensitivity(
        finite_difference=fd,
        printed_form=printed,
        magnitude_ratio=printed / abs(fd),
    )
