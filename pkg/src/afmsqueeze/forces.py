"""Tip-sample interaction force.

Inverse-square attraction above the contact distance a0, an elastic
indentation branch below it, and a sigmoid-gated time-dependent variant
for surface-approach protocols.  Sign convention: negative force pulls
the tip toward the sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AttractiveRegimeError, ValidationError

_MOD = "forces"


@dataclass(frozen=True)
class ForceParams:
    """Material and geometry constants of the tip-sample force law.

    Attributes
    ----------
    hamaker : float
        Hamaker constant of the tip-sample pair (J).
    tip_radius : float
        Tip apex radius (m).
    a0 : float
        Contact distance where the repulsive branch sets in, about one
        interatomic spacing (m).
    e_tip, e_sample : float
        Young moduli of tip and sample (Pa).
    nu_tip, nu_sample : float
        Poisson ratios, each in [0, 0.5).
    blend_halfwidth : float
        Optional relative half-width s of a cubic smoothing window across
        the branch switch, applied on [a0*(1-s), a0*(1+s)].  Zero (the
        default) keeps the plain piecewise law, which is already C0.
    """

    hamaker: float
    tip_radius: float
    a0: float
    e_tip: float = 1.5e11
    e_sample: float = 1.5e11
    nu_tip: float = 0.4
    nu_sample: float = 0.4
    blend_halfwidth: float = 0.0

    def __post_init__(self):
        if not self.hamaker > 0.0:
            raise ValidationError("hamaker constant must be positive", module=_MOD)
        if not self.tip_radius > 0.0:
            raise ValidationError("tip radius must be positive", module=_MOD)
        if not self.a0 > 0.0:
            raise ValidationError("contact distance a0 must be positive", module=_MOD)
        for name in ("e_tip", "e_sample"):
            if not getattr(self, name) > 0.0:
                raise ValidationError(f"{name} must be positive", module=_MOD)
        for name in ("nu_tip", "nu_sample"):
            nu = getattr(self, name)
            if not 0.0 <= nu < 0.5:
                raise ValidationError(f"{name} must lie in [0, 0.5)", module=_MOD)
        if not 0.0 <= self.blend_halfwidth < 1.0:
            raise ValidationError("blend_halfwidth must lie in [0, 1)", module=_MOD)

    @property
    def alpha(self) -> float:
        """Attractive strength H*R/6 (J m)."""
        return self.hamaker * self.tip_radius / 6.0

    @property
    def e_eff(self) -> float:
        """Effective contact modulus of the tip-sample pair (Pa)."""
        compliance = (1.0 - self.nu_tip**2) / self.e_tip
        compliance += (1.0 - self.nu_sample**2) / self.e_sample
        return 1.0 / compliance


@dataclass(frozen=True)
class ApproachProtocol:
    """Surface-approach schedule for the time-gated force.

    The interaction switches on smoothly around t = 0 over the time scale
    t0, while the probe rest position sits at distance z0 from the sample.

    Attributes
    ----------
    t0 : float
        Switching time constant of the sigmoid gate (s).
    z0 : float
        Rest tip-sample distance after the approach (m).
    z_far : float
        Initial (disengaged) distance, must exceed z0 (m).
    speed : float
        Translation speed of the holder during approach (m/s), metadata
        for reports; it does not enter the gate shape.
    """

    t0: float
    z0: float
    z_far: float = 1e-7
    speed: float = 1e-5

    def __post_init__(self):
        if not self.t0 > 0.0:
            raise ValidationError("switching time t0 must be positive", module=_MOD)
        if not self.z0 > 0.0:
            raise ValidationError("rest distance z0 must be positive", module=_MOD)
        if not self.z_far > self.z0:
            raise ValidationError("z_far must exceed the rest distance z0", module=_MOD)
        if not self.speed > 0.0:
            raise ValidationError("approach speed must be positive", module=_MOD)


def _attractive(params: ForceParams, d: float) -> float:
    return -params.alpha / (d * d)


def _contact(params: ForceParams, d: float) -> float:
    # Elastic indentation on top of the attraction frozen at its a0 value.
    indent = params.a0 - d
    hertz = (4.0 / 3.0) * params.e_eff * math.sqrt(params.tip_radius) * indent**1.5
    return -params.alpha / (params.a0 * params.a0) + hertz


def _blend(params: ForceParams, d: float, lo: float, hi: float) -> float:
    # Cubic Hermite across [lo, hi]: matches value and slope of the contact
    # branch at lo and of the attractive branch at hi.
    width = hi - lo
    t = (d - lo) / width
    f0 = _contact(params, lo)
    g0 = -2.0 * params.e_eff * math.sqrt(params.tip_radius * (params.a0 - lo)) * width
    f1 = _attractive(params, hi)
    g1 = 2.0 * params.alpha / hi**3 * width
    h00 = (1.0 + 2.0 * t) * (1.0 - t) ** 2
    h10 = t * (1.0 - t) ** 2
    h01 = t * t * (3.0 - 2.0 * t)
    h11 = t * t * (t - 1.0)
    return h00 * f0 + h10 * g0 + h01 * f1 + h11 * g1


def force_static(params: ForceParams, d: float) -> float:
    """Static tip-sample force at separation d (N).

    Attractive inverse-square branch for d > a0, elastic indentation for
    d <= a0; both branches meet continuously at a0.  With a nonzero
    ``blend_halfwidth`` the switch is replaced by a C1 cubic blend.

    Parameters
    ----------
    d : float
        Tip-sample separation (m), must be positive.
    """
    if not d > 0.0:
        raise ValidationError("separation d must be positive", module=_MOD)
    s = params.blend_halfwidth
    if s > 0.0:
        lo = params.a0 * (1.0 - s)
        hi = params.a0 * (1.0 + s)
        if lo < d < hi:
            return _blend(params, d, lo, hi)
    if d > params.a0:
        return _attractive(params, d)
    return _contact(params, d)


def force_noncontact(params: ForceParams, rest_distance: float, tip_deflection: float) -> float:
    """Attractive force at gap = rest_distance + tip_deflection (N).

    Valid only on the attractive branch; raises AttractiveRegimeError once
    the gap reaches the contact distance a0.
    """
    gap = rest_distance + tip_deflection
    if gap <= params.a0:
        raise AttractiveRegimeError(
            f"gap {gap:.6g} m left the attractive regime (a0 = {params.a0:.6g} m)",
            module=_MOD,
        )
    return -params.alpha / (gap * gap)


def _sigmoid(x: float) -> float:
    # Logistic gate 1/(1 + exp(-x)) in its overflow-free tanh form.
    return 0.5 * (1.0 + math.tanh(0.5 * x))


def force_timed(params: ForceParams, protocol: ApproachProtocol,
                tip_deflection: float, t: float) -> float:
    """Sigmoid-gated approach force at time t (N).

    The full non-contact force at rest distance ``protocol.z0`` is scaled
    by a logistic gate rising from 0 (t << -t0) through 1/2 at t = 0 to 1
    (t >> t0).
    """
    base = force_noncontact(params, protocol.z0, tip_deflection)
    return base * _sigmoid(t / protocol.t0)
