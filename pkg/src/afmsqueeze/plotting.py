"""Matplotlib rendering of simulation outputs to SVG/PNG files.

Figures are written atomically next to their delimited counterparts.
SVG output is self-contained (glyphs as paths, fixed hash salt, no
date metadata), so identical runs produce identical files.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .beam import ModeSet, ProbeSpec, mode_shape
from .dynamics import Trajectory
from .sweeps import MapResult, TraceResult

plt.rcParams["svg.hashsalt"] = "afmsqueeze"

MASK_COLOR = "lightgray"


def _save(fig, path) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=target.name + ".",
                               suffix=target.suffix)
    os.close(fd)
    try:
        kwargs = {"metadata": {"Date": None}} if target.suffix == ".svg" else {}
        fig.savefig(tmp, **kwargs)
        os.chmod(tmp, 0o644)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    finally:
        plt.close(fig)


def plot_force_curve(d, gamma, a0: float, path) -> None:
    """Force-distance curve with the contact distance marked."""
    fig, ax = plt.subplots(figsize=(6, 4), layout="constrained")
    ax.plot(np.asarray(d) * 1e9, np.asarray(gamma) * 1e12, lw=1.5)
    ax.axvline(a0 * 1e9, color="gray", ls="--", lw=0.8, label="contact distance")
    ax.axhline(0.0, color="gray", lw=0.5)
    ax.set_xlabel("separation d (nm)")
    ax.set_ylabel("force (pN)")
    ax.grid(alpha=0.3)
    ax.legend()
    _save(fig, path)


def plot_mode_shapes(spec: ProbeSpec, modes: ModeSet, path, samples: int = 200) -> None:
    """Normalized shape functions of every solved mode."""
    xs = np.linspace(0.0, spec.length, samples)
    fig, ax = plt.subplots(figsize=(6, 4), layout="constrained")
    for n in range(1, modes.n_modes + 1):
        ax.plot(xs / spec.length, mode_shape(spec, modes, n, xs) * np.sqrt(spec.length),
                label=f"mode {n}")
    ax.set_xlabel("x / L")
    ax.set_ylabel("sqrt(L) * X_n(x)")
    ax.grid(alpha=0.3)
    ax.legend()
    _save(fig, path)


def plot_trajectory(traj: Trajectory, path) -> None:
    """Tip deflection and gap over time."""
    fig, axes = plt.subplots(2, 1, figsize=(7, 5), sharex=True, layout="constrained")
    axes[0].plot(traj.times * 1e3, traj.tip_deflection * 1e9, lw=0.8)
    axes[0].set_ylabel("tip deflection (nm)")
    axes[0].grid(alpha=0.3)
    if np.all(np.isfinite(traj.gap)):
        axes[1].plot(traj.times * 1e3, traj.gap * 1e9, lw=0.8, color="tab:orange")
        axes[1].set_ylabel("gap (nm)")
    else:
        axes[1].plot(traj.times * 1e3, traj.energy, lw=0.8, color="tab:orange")
        axes[1].set_ylabel("energy (J)")
    axes[1].set_xlabel("t (ms)")
    axes[1].grid(alpha=0.3)
    if traj.snap_in:
        axes[0].set_title("snap-in: trajectory truncated")
    _save(fig, path)


def plot_omega_map(result: MapResult, path) -> None:
    """Softened-frequency heatmap; masked (snap-in) cells in gray."""
    xs = result.grid.x_axis.values()
    ys = result.grid.y_axis.values()
    data = np.ma.masked_array(result.values, mask=result.mask)
    cmap = plt.get_cmap("viridis").copy()
    cmap.set_bad(MASK_COLOR)
    fig, ax = plt.subplots(figsize=(6.5, 4.5), layout="constrained")
    mesh = ax.pcolormesh(xs * 1e9, ys, data, cmap=cmap, shading="nearest")
    if result.grid.x_axis.scale == "log":
        ax.set_xscale("log")
    if result.grid.y_axis.scale == "log":
        ax.set_yscale("log")
    ax.set_xlabel("z0 (nm)")
    ax.set_ylabel("omega1 (rad/s)")
    fig.colorbar(mesh, ax=ax, label="Omega (rad/s)")
    _save(fig, path)


def plot_uncertainty_trace(trace: TraceResult, path) -> None:
    """Free vs squeezed trace in the (dX1, dX2) plane with the 1/2 bound."""
    fig, ax = plt.subplots(figsize=(5.5, 5.5), layout="constrained")
    ax.plot(trace.dx1_free, trace.dx2_free, lw=1.5, label="free")
    if trace.r > 0.0:
        ax.plot(trace.dx1_squeezed, trace.dx2_squeezed, lw=1.5, label=f"squeezed, r={trace.r:.3g}")
    grid_x = np.geomspace(min(trace.dx1_squeezed.min(), trace.dx1_free.min()),
                          max(trace.dx1_squeezed.max(), trace.dx1_free.max()), 200)
    ax.plot(grid_x, 0.5 / grid_x, color="gray", ls="--", lw=0.8, label="dX1*dX2 = 1/2")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("dX1")
    ax.set_ylabel("dX2")
    ax.grid(alpha=0.3)
    ax.legend()
    _save(fig, path)


def plot_quadratures_vs_chi(trace: TraceResult, path) -> None:
    """Quadrature uncertainties against the coupling sweep."""
    fig, ax = plt.subplots(figsize=(6, 4), layout="constrained")
    ax.plot(trace.chi, trace.dx1_free, lw=1.5, label="dX1 free")
    ax.plot(trace.chi, trace.dx2_free, lw=1.5, label="dX2 free")
    if trace.r > 0.0:
        ax.plot(trace.chi, trace.dx1_squeezed, lw=1.0, ls="--", label="dX1 squeezed")
        ax.plot(trace.chi, trace.dx2_squeezed, lw=1.0, ls="--", label="dX2 squeezed")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("coupling chi")
    ax.set_ylabel("quadrature uncertainty")
    ax.grid(alpha=0.3)
    ax.legend()
    _save(fig, path)
