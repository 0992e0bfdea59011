"""Parameter sweeps: softened-frequency maps and uncertainty traces.

Grid cells are pure functions of their coordinates; assembly is
index-ordered (row-major, y outer), so results are deterministic and
independent of any evaluation parallelism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .errors import SnapInError, ValidationError
from .oscillator import EffectiveOscillator, reduce
from .quadratures import ThermalEnvironment, apply_squeezing, free_quadratures

_MOD = "sweeps"

_SCALES = ("linear", "log")


@dataclass(frozen=True)
class AxisSpec:
    """One sweep axis: name, closed range, sample count, and scale."""

    name: str
    minimum: float
    maximum: float
    count: int
    scale: str = "linear"

    def __post_init__(self):
        if self.count < 2:
            raise ValidationError(f"axis '{self.name}' needs count >= 2", module=_MOD)
        if not self.minimum < self.maximum:
            raise ValidationError(f"axis '{self.name}' needs minimum < maximum", module=_MOD)
        if self.scale not in _SCALES:
            raise ValidationError(
                f"axis '{self.name}' scale must be one of {_SCALES}", module=_MOD
            )
        if self.scale == "log" and not self.minimum > 0.0:
            raise ValidationError(
                f"axis '{self.name}' log scale needs a positive minimum", module=_MOD
            )

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.minimum, self.maximum, self.count)
        return np.linspace(self.minimum, self.maximum, self.count)


@dataclass(frozen=True)
class SweepGrid:
    """Two sweep axes plus fixed scalar parameters."""

    x_axis: AxisSpec
    y_axis: AxisSpec
    fixed: dict = field(default_factory=dict)


@dataclass(frozen=True)
class MapResult:
    """Grid evaluation result.

    ``values`` and ``mask`` have shape (y.count, x.count); a True mask
    entry marks a cell with no numeric claim (its value slot is NaN).
    ``meta`` records all inputs, the code version, and a timestamp.
    """

    grid: SweepGrid
    values: np.ndarray
    mask: np.ndarray
    meta: dict = field(default_factory=dict)


def _axis_meta(axis: AxisSpec) -> dict:
    return {
        "name": axis.name,
        "minimum": axis.minimum,
        "maximum": axis.maximum,
        "count": axis.count,
        "scale": axis.scale,
    }


def omega_map(grid: SweepGrid) -> MapResult:
    """Softened frequency Omega over a (z0, omega1) grid.

    Expects ``x_axis.name == "z0"`` (m), ``y_axis.name == "omega1"``
    (rad/s), and fixed parameters ``mass`` (kg) and ``alpha`` (J m).
    Cells where the reduction reports snap-in (z0 <= z_crit) are masked.
    """
    if grid.x_axis.name != "z0" or grid.y_axis.name != "omega1":
        raise ValidationError(
            "omega_map expects x_axis 'z0' and y_axis 'omega1'", module=_MOD
        )
    try:
        mass = float(grid.fixed["mass"])
        alpha = float(grid.fixed["alpha"])
    except KeyError as missing:
        raise ValidationError(
            f"omega_map needs fixed parameter {missing}", module=_MOD
        ) from None

    z0s = grid.x_axis.values()
    omega1s = grid.y_axis.values()
    values = np.full((grid.y_axis.count, grid.x_axis.count), np.nan)
    mask = np.zeros_like(values, dtype=bool)
    for j, omega1 in enumerate(omega1s):
        for i, z0 in enumerate(z0s):
            osc = EffectiveOscillator(mass=mass, omega1=float(omega1),
                                      z0=float(z0), alpha=alpha)
            try:
                values[j, i] = reduce(osc).omega
            except SnapInError:
                mask[j, i] = True
    meta = {
        "fixed": {"mass": mass, "alpha": alpha},
        "x_axis": _axis_meta(grid.x_axis),
        "y_axis": _axis_meta(grid.y_axis),
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    return MapResult(grid=grid, values=values, mask=mask, meta=meta)


@dataclass(frozen=True)
class TraceResult:
    """Quadrature uncertainties along a coupling sweep, free and squeezed."""

    chi: np.ndarray
    dx1_free: np.ndarray
    dx2_free: np.ndarray
    dx1_squeezed: np.ndarray
    dx2_squeezed: np.ndarray
    product: np.ndarray
    r: float
    meta: dict = field(default_factory=dict)


def uncertainty_trace(chi_values, env: ThermalEnvironment, r: float = 0.0) -> TraceResult:
    """Free and squeezed quadrature uncertainties over a chi sweep.

    Output order follows the input order of ``chi_values``;
    ``product`` is the squeezed-state uncertainty product.
    """
    chis = np.asarray(list(chi_values), dtype=float)
    if chis.size == 0:
        raise ValidationError("chi sweep needs at least one value", module=_MOD)
    dx1f = np.empty(chis.size)
    dx2f = np.empty(chis.size)
    dx1s = np.empty(chis.size)
    dx2s = np.empty(chis.size)
    for i, chi in enumerate(chis):
        free = free_quadratures(env, float(chi))
        squeezed = apply_squeezing(free, r)
        dx1f[i] = free.dx1
        dx2f[i] = free.dx2
        dx1s[i] = squeezed.dx1
        dx2s[i] = squeezed.dx2
    meta = {
        "temperature": env.temperature,
        "omega1": env.omega1,
        "r": r,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    return TraceResult(
        chi=chis,
        dx1_free=dx1f,
        dx2_free=dx2f,
        dx1_squeezed=dx1s,
        dx2_squeezed=dx2s,
        product=dx1s * dx2s,
        r=r,
        meta=meta,
    )
