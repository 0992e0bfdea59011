"""Time-domain integration of the modal beam equations.

Fixed-step classical RK4 over the retained flexural modes, each forced
through the free-end shape gain by the gated tip force and an optional
harmonic drive.  Includes snap-in detection, an energy audit for the
conservative case, and ringdown frequency extraction by zero crossings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .beam import ModeSet, ProbeSpec
from .errors import InsufficientDataError, ValidationError
from .forces import ApproachProtocol, ForceParams
from .oscillator import TIP_GAIN

_MOD = "dynamics"

# Relative energy growth that flags an unstable step size in the
# conservative (undamped, drive-free, gate-frozen) case.
ENERGY_DRIFT_LIMIT = 1e-6


@dataclass(frozen=True)
class DriveSpec:
    """External harmonic tip drive a*cos(omega*t + phase) (N)."""

    amplitude: float
    omega: float
    phase: float = 0.0

    def __post_init__(self):
        if self.amplitude < 0.0:
            raise ValidationError("drive amplitude must be non-negative", module=_MOD)
        if self.omega < 0.0:
            raise ValidationError("drive omega must be non-negative", module=_MOD)


@dataclass(frozen=True)
class DynamicsConfig:
    """Integration plan for a modal trajectory.

    Attributes
    ----------
    dt : float
        Fixed step (s).
    t_start, t_end : float
        Time span; t_start may be negative to capture a gate turn-on.
    n_modes : int
        Number of retained modes.
    quality_factor : float, optional
        Modal quality factor Q; None integrates without damping.
    drive : DriveSpec, optional
        Harmonic tip drive; None for free evolution.
    initial : tuple of (q, qdot) pairs, optional
        Per-mode initial conditions (m, m/s); defaults to rest at origin.
    store_every : int
        Keep every k-th step in the trajectory (the step itself is
        unchanged).
    """

    dt: float
    t_start: float
    t_end: float
    n_modes: int = 1
    quality_factor: float | None = None
    drive: DriveSpec | None = None
    initial: tuple[tuple[float, float], ...] | None = None
    store_every: int = 1

    def __post_init__(self):
        if not self.dt > 0.0:
            raise ValidationError("dt must be positive", module=_MOD)
        if not self.t_end > self.t_start:
            raise ValidationError("t_end must exceed t_start", module=_MOD)
        if self.n_modes < 1:
            raise ValidationError("n_modes must be >= 1", module=_MOD)
        if self.quality_factor is not None and not self.quality_factor > 0.0:
            raise ValidationError("quality factor must be positive", module=_MOD)
        if self.store_every < 1:
            raise ValidationError("store_every must be >= 1", module=_MOD)
        if self.initial is not None and len(self.initial) != self.n_modes:
            raise ValidationError(
                f"initial conditions cover {len(self.initial)} modes, expected {self.n_modes}",
                module=_MOD,
            )


@dataclass(frozen=True)
class Trajectory:
    """Stored modal trajectory with tip-level observables.

    Attributes
    ----------
    times : ndarray
        Stored instants, uniformly spaced.
    modal_coords, modal_velocities : ndarray
        Shape (n_stored, n_modes).
    tip_deflection : ndarray
        w(L, t) = TIP_GAIN * sum of modal coordinates (m).
    gap : ndarray
        Tip-sample gap z0 + w (m); +inf when no surface is present.
    energy : ndarray
        Kinetic + elastic + gated interaction energy (J).
    snap_in : bool
        True when integration halted at gap <= a0.
    diagnostics : dict
        ``energy_drift`` (relative, conservative runs only, else None)
        and ``energy_stable`` (drift within ENERGY_DRIFT_LIMIT).
    """

    times: np.ndarray
    modal_coords: np.ndarray
    modal_velocities: np.ndarray
    tip_deflection: np.ndarray
    gap: np.ndarray
    energy: np.ndarray
    snap_in: bool
    diagnostics: dict = field(default_factory=dict)


def integrate(probe: ProbeSpec, modes: ModeSet, config: DynamicsConfig,
              force: ForceParams | None = None,
              protocol: ApproachProtocol | None = None) -> Trajectory:
    """Integrate the retained modal equations with fixed-step RK4.

    Each mode obeys m*q_n'' + (m*omega_n/Q)*q_n' + m*omega_n^2*q_n =
    TIP_GAIN*(gated tip force + drive), with the force evaluated at the
    instantaneous tip deflection w = TIP_GAIN*sum(q_n).  Passing
    ``force=None`` integrates the bare (optionally driven, damped) beam.

    The run halts early with ``snap_in=True`` the moment an accepted step
    puts the gap at or below the contact distance a0.
    """
    if config.n_modes > modes.n_modes:
        raise ValidationError(
            f"n_modes = {config.n_modes} exceeds the {modes.n_modes} solved modes",
            module=_MOD,
        )
    if force is not None and protocol is None:
        raise ValidationError("a force model requires an approach protocol", module=_MOD)

    n = config.n_modes
    m = probe.mass
    om = np.asarray(modes.omegas[:n], dtype=float)
    om_sq = om * om
    if config.quality_factor is not None:
        damp = om / config.quality_factor
    else:
        damp = np.zeros(n)

    q = np.zeros(n)
    v = np.zeros(n)
    if config.initial is not None:
        for i, (qi, vi) in enumerate(config.initial):
            q[i] = qi
            v[i] = vi

    has_force = force is not None
    if has_force:
        alpha = force.alpha
        a0 = force.a0
        z0 = protocol.z0
        t0 = protocol.t0
        gap_floor = 1e-6 * a0
        if z0 + TIP_GAIN * float(q.sum()) <= a0:
            raise ValidationError(
                "initial gap must exceed the contact distance a0", module=_MOD
            )
    drive = config.drive

    dt = config.dt
    n_steps = int(round((config.t_end - config.t_start) / dt))
    if n_steps < 1:
        raise ValidationError("time span shorter than one step", module=_MOD)

    def tip_force(t: float, w: float) -> float:
        f = 0.0
        if has_force:
            gap = z0 + w
            if gap < gap_floor:
                gap = gap_floor
            f -= alpha / (gap * gap) * (0.5 * (1.0 + math.tanh(0.5 * t / t0)))
        if drive is not None:
            f += drive.amplitude * math.cos(drive.omega * t + drive.phase)
        return f

    gain_over_m = TIP_GAIN / m

    def accel(t: float, qq: np.ndarray, vv: np.ndarray) -> np.ndarray:
        return gain_over_m * tip_force(t, TIP_GAIN * float(qq.sum())) - om_sq * qq - damp * vv

    stride = config.store_every
    max_store = n_steps // stride + 1
    ts = np.empty(max_store)
    qs = np.empty((max_store, n))
    vs = np.empty((max_store, n))
    ts[0] = config.t_start
    qs[0] = q
    vs[0] = v
    stored = 1

    half = 0.5 * dt
    sixth = dt / 6.0
    snap = False
    t = config.t_start
    for k in range(1, n_steps + 1):
        a1 = accel(t, q, v)
        q2 = q + half * v
        v2 = v + half * a1
        a2 = accel(t + half, q2, v2)
        q3 = q + half * v2
        v3 = v + half * a2
        a3 = accel(t + half, q3, v3)
        q4 = q + dt * v3
        v4 = v + dt * a3
        a4 = accel(t + dt, q4, v4)
        q = q + sixth * (v + 2.0 * (v2 + v3) + v4)
        v = v + sixth * (a1 + 2.0 * (a2 + a3) + a4)
        t = config.t_start + k * dt
        if has_force and z0 + TIP_GAIN * float(q.sum()) <= a0:
            snap = True
            break
        if k % stride == 0:
            ts[stored] = t
            qs[stored] = q
            vs[stored] = v
            stored += 1

    ts = ts[:stored]
    qs = qs[:stored]
    vs = vs[:stored]

    tip = TIP_GAIN * qs.sum(axis=1)
    energy = 0.5 * m * (vs * vs).sum(axis=1) + 0.5 * m * (qs * qs) @ om_sq
    if has_force:
        gap = z0 + tip
        gate = 0.5 * (1.0 + np.tanh(0.5 * ts / t0))
        energy = energy - alpha / gap * gate
    else:
        gap = np.full(stored, np.inf)

    gate_frozen = (not has_force) or config.t_start >= 20.0 * t0 or config.t_end <= -20.0 * t0
    conservative = config.quality_factor is None and drive is None and gate_frozen
    if conservative and stored > 1:
        e0 = energy[0]
        scale = abs(e0)
        if scale == 0.0:
            scale = float(np.max(np.abs(energy))) or 1.0
        drift = float(np.max(np.abs(energy - e0)) / scale)
        diagnostics = {"energy_drift": drift,
                       "energy_stable": bool(drift <= ENERGY_DRIFT_LIMIT)}
    else:
        diagnostics = {"energy_drift": None, "energy_stable": None}

    return Trajectory(
        times=ts,
        modal_coords=qs,
        modal_velocities=vs,
        tip_deflection=tip,
        gap=gap,
        energy=energy,
        snap_in=snap,
        diagnostics=diagnostics,
    )


def ringdown_frequency(traj: Trajectory, transient_fraction: float = 0.5) -> float:
    """Dominant angular frequency (rad/s) of the fundamental coordinate.

    Counts mean crossings of q_1 over the trailing window (after
    discarding ``transient_fraction`` of the samples) with linear
    interpolation of the crossing instants.

    Raises InsufficientDataError when the window holds fewer than 10
    full cycles.
    """
    if not 0.0 <= transient_fraction < 1.0:
        raise ValidationError("transient_fraction must lie in [0, 1)", module=_MOD)
    start = int(len(traj.times) * transient_fraction)
    t = traj.times[start:]
    x = traj.modal_coords[start:, 0]
    if len(t) < 4:
        raise InsufficientDataError("trajectory window too short", module=_MOD)
    x = x - x.mean()
    flips = np.nonzero(np.diff(np.signbit(x)))[0]
    if flips.size < 2:
        raise InsufficientDataError(
            f"found {max(flips.size - 1, 0)} half-cycles, need >= 20", module=_MOD
        )
    x0 = x[flips]
    x1 = x[flips + 1]
    t0 = t[flips]
    t1 = t[flips + 1]
    crossings = t0 - x0 * (t1 - t0) / (x1 - x0)
    n_half = crossings.size - 1
    if n_half < 20:
        raise InsufficientDataError(
            f"found {n_half} half-cycles, need >= 20 (10 full cycles)", module=_MOD
        )
    return math.pi * n_half / float(crossings[-1] - crossings[0])
