"""Command-line front end.

Parameters merge from three layers: schema defaults, then a JSON config
file (--config), then explicit flags.  Unknown config keys are rejected
by name.  Artifacts (CSV/JSON, optional SVG figures) are written
atomically.

Exit codes: 0 success, 2 validation error, 3 physics-domain error
(e.g. snap-in), 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .beam import ProbeSpec, compute_modes, mode_shape
from .constants import NM, angular_from_cyclic
from .dynamics import DriveSpec, DynamicsConfig, integrate, ringdown_frequency
from .errors import (
    AfmSqueezeError,
    InsufficientDataError,
    PhysicsError,
    ValidationError,
)
from .forces import ApproachProtocol, ForceParams, force_static
from .oscillator import (
    EffectiveOscillator,
    reduce,
    sensitivity_dqbar_dalpha,
    sensitivity_dqbar_dz0,
)
from .output import csv_text, json_text, meta_block, write_text_atomic
from .quadratures import ThermalEnvironment
from .sweeps import AxisSpec, SweepGrid, omega_map, uncertainty_trace

_MOD = "cli"

DEFAULT_OMEGA1 = math.pi * 1e6          # rad/s (0.5 MHz cyclic)
DEFAULT_OMEGA1_MIN = 2.0 * math.pi * 0.1e6
DEFAULT_OMEGA1_MAX = 2.0 * math.pi * 2.0e6


@dataclass(frozen=True)
class Param:
    """One CLI/config parameter of a command."""

    name: str
    kind: type = float
    default: object = None
    required: bool = False
    unit: str = ""
    help: str = ""


@dataclass(frozen=True)
class RunConfig:
    """A fully merged, validated run request."""

    command: str
    parameters: dict


_PROBE = (
    Param("length", float, 1e-4, unit="m", help="beam length"),
    Param("width", float, 2e-5, unit="m", help="beam width"),
    Param("thickness", float, 3e-6, unit="m", help="beam thickness"),
    Param("density", float, 3.1e3, unit="kg/m^3", help="mass density"),
    Param("young", float, 2.5e11, unit="Pa", help="Young modulus"),
)

_TIP = (
    Param("hamaker", float, 1e-20, unit="J", help="Hamaker constant"),
    Param("radius", float, 1e-8, unit="m", help="tip apex radius"),
)

_OMEGA1 = (
    Param("omega1", float, unit="rad/s", help="fundamental angular frequency"),
    Param("omega1_hz", float, unit="Hz", help="fundamental cyclic frequency"),
)

_CHI_RANGE = (
    Param("chi_min", float, 0.01, unit="", help="smallest coupling"),
    Param("chi_max", float, 100.0, unit="", help="largest coupling"),
    Param("chi_count", int, 101, unit="", help="number of couplings"),
    Param("chi_scale", str, "log", unit="", help="'linear' or 'log'"),
)

_R_SOURCE = (
    Param("r", float, unit="", help="squeezing parameter (overrides the z0 route)"),
    Param("z0_nm", float, unit="nm", help="rest distance; derives r via the oscillator reduction"),
    Param("mass", float, 3e-11, unit="kg", help="modal mass (z0 route)"),
)

_OUTPUT = (
    Param("out", str, unit="path", help="output file (stdout when omitted)"),
    Param("format", str, unit="", help="override the output format ('svg' renders the figure to --out)"),
)

_PLOT = (
    Param("plot", str, unit="path", help="also render a figure to this path"),
)

COMMANDS: dict[str, tuple[Param, ...]] = {
    "force": _TIP + (
        Param("a0_nm", float, 0.165, unit="nm", help="contact distance"),
        Param("e_tip", float, 1.5e11, unit="Pa", help="tip Young modulus"),
        Param("e_sample", float, 1.5e11, unit="Pa", help="sample Young modulus"),
        Param("nu_tip", float, 0.4, unit="", help="tip Poisson ratio"),
        Param("nu_sample", float, 0.4, unit="", help="sample Poisson ratio"),
        Param("blend", float, 0.0, unit="", help="relative half-width of the C1 branch blend (0 = off)"),
        Param("d_min_nm", float, 0.05, unit="nm", help="smallest separation"),
        Param("d_max_nm", float, 1.0, unit="nm", help="largest separation"),
        Param("samples", int, 400, unit="", help="number of separations"),
    ) + _OUTPUT + _PLOT,
    "modes": _PROBE + (
        Param("n_modes", int, 5, unit="", help="number of modes"),
        Param("tip_mass", float, 0.0, unit="kg", help="point mass at the free end"),
        Param("shape_samples", int, 0, unit="", help="per-mode shape samples for --shape-out"),
        Param("shape_out", str, unit="path", help="write sampled shape functions to this CSV"),
    ) + _OUTPUT + _PLOT,
    "squeeze": (
        Param("mass", float, 3e-11, unit="kg", help="modal mass"),
    ) + _OMEGA1 + (
        Param("z0_nm", float, required=True, unit="nm", help="rest tip-sample distance"),
    ) + _TIP + _OUTPUT,
    "quadratures": (
        Param("temp", float, 0.01, unit="K", help="bath temperature"),
    ) + _OMEGA1 + (
        Param("chi", float, unit="", help="single coupling value (overrides the range)"),
    ) + _CHI_RANGE + _R_SOURCE + _TIP + _OUTPUT + _PLOT,
    "trace": (
        Param("temp", float, 0.0, unit="K", help="bath temperature"),
    ) + _OMEGA1 + _CHI_RANGE + _R_SOURCE + _TIP + _OUTPUT + _PLOT,
    "approach": _PROBE + (
        Param("n_modes", int, 1, unit="", help="retained modes"),
    ) + _TIP + (
        Param("a0_nm", float, 0.165, unit="nm", help="contact distance"),
        Param("z0_nm", float, 1.0, unit="nm", help="rest tip-sample distance"),
        Param("t0", float, 1e-5, unit="s", help="gate switching time"),
        Param("z_far_nm", float, 100.0, unit="nm", help="disengaged distance"),
        Param("speed", float, 1e-5, unit="m/s", help="approach speed (metadata)"),
        Param("quality", float, unit="", help="modal quality factor (omit for undamped)"),
        Param("dt", float, unit="s", help="step (default: fundamental period / 256)"),
        Param("t_start", float, unit="s", help="start time (default -10*t0)"),
        Param("t_end", float, unit="s", help="end time (default 30*t0)"),
        Param("store_every", int, 1, unit="", help="keep every k-th step"),
        Param("q0", float, 0.0, unit="m", help="initial fundamental coordinate"),
        Param("v0", float, 0.0, unit="m/s", help="initial fundamental velocity"),
        Param("drive_amp", float, unit="N", help="harmonic drive amplitude"),
        Param("drive_omega", float, unit="rad/s", help="harmonic drive frequency"),
        Param("drive_phase", float, 0.0, unit="rad", help="harmonic drive phase"),
        Param("summary", str, unit="path", help="write the JSON run summary here (stdout otherwise)"),
    ) + _OUTPUT + _PLOT,
    "omega-map": (
        Param("z0_min_nm", float, 0.0825, unit="nm", help="z0 axis minimum"),
        Param("z0_max_nm", float, 3.3, unit="nm", help="z0 axis maximum"),
        Param("z0_count", int, 50, unit="", help="z0 axis samples"),
        Param("z0_scale", str, "linear", unit="", help="'linear' or 'log'"),
        Param("omega1_min", float, unit="rad/s", help="omega1 axis minimum"),
        Param("omega1_max", float, unit="rad/s", help="omega1 axis maximum"),
        Param("omega1_min_hz", float, unit="Hz", help="omega1 axis minimum, cyclic"),
        Param("omega1_max_hz", float, unit="Hz", help="omega1 axis maximum, cyclic"),
        Param("omega1_count", int, 40, unit="", help="omega1 axis samples"),
        Param("omega1_scale", str, "linear", unit="", help="'linear' or 'log'"),
        Param("mass", float, 3e-11, unit="kg", help="modal mass"),
    ) + _TIP + _OUTPUT + _PLOT,
}


def _coerce(param: Param, raw, command: str):
    unit = f" ({param.unit})" if param.unit else ""
    if param.kind is float:
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            raise ValidationError(
                f"parameter '{param.name}' of '{command}' expects a number{unit}", module=_MOD
            )
        return float(raw)
    if param.kind is int:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise ValidationError(
                f"parameter '{param.name}' of '{command}' expects an integer{unit}", module=_MOD
            )
        return int(raw)
    if not isinstance(raw, str):
        raise ValidationError(
            f"parameter '{param.name}' of '{command}' expects a string{unit}", module=_MOD
        )
    return raw


def load_config(path: str | None) -> dict:
    """Read a JSON config file; a 'squeeze'-style report feeds back via its
    embedded 'inputs' block."""
    if path is None:
        return {}
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as err:
            raise ValidationError(f"config file is not valid JSON: {err}", module=_MOD) from None
    if not isinstance(data, dict):
        raise ValidationError("config root must be a JSON object", module=_MOD)
    if isinstance(data.get("inputs"), dict):
        inputs = dict(data["inputs"])
        if "command" in data:
            inputs.setdefault("command", data["command"])
        return inputs
    return data


def merge_parameters(command: str, config: dict, flags: dict) -> RunConfig:
    """Layer defaults, config file, and explicit flags; validate keys."""
    spec = COMMANDS[command]
    known = {p.name: p for p in spec}
    values = {p.name: p.default for p in spec}
    for key, raw in config.items():
        if key == "command":
            if raw != command:
                raise ValidationError(
                    f"config is for command '{raw}', not '{command}'", module=_MOD
                )
            continue
        if key not in known:
            raise ValidationError(
                f"unknown config key '{key}' for command '{command}'", module=_MOD
            )
        values[key] = _coerce(known[key], raw, command)
    for key, raw in flags.items():
        if raw is not None:
            values[key] = raw
    for p in spec:
        if p.required and values[p.name] is None:
            raise ValidationError(
                f"missing required parameter '{p.name}' for command '{command}'", module=_MOD
            )
    return RunConfig(command=command, parameters=values)


def _resolve_pair(values: dict, rad_key: str, hz_key: str, fallback: float) -> float:
    rad = values.get(rad_key)
    hz = values.get(hz_key)
    if rad is not None and hz is not None:
        raise ValidationError(
            f"give either --{rad_key.replace('_', '-')} (rad/s) or "
            f"--{hz_key.replace('_', '-')} (Hz), not both",
            module=_MOD,
        )
    if hz is not None:
        return angular_from_cyclic(hz)
    if rad is not None:
        return float(rad)
    return fallback


def _deliver(values: dict, natural_format: str, text: str, plot_fn=None) -> None:
    fmt = values.get("format")
    out = values.get("out")
    if fmt not in (None, natural_format, "svg"):
        raise ValidationError(
            f"format '{fmt}' not supported here (use '{natural_format}' or 'svg')",
            module=_MOD,
        )
    if fmt == "svg":
        if plot_fn is None:
            raise ValidationError("this command has no figure output", module=_MOD)
        if out is None:
            raise ValidationError("--format svg requires --out", module=_MOD)
        plot_fn(out)
    elif out:
        write_text_atomic(out, text)
    else:
        sys.stdout.write(text)
    plot_path = values.get("plot")
    if plot_path:
        if plot_fn is None:
            raise ValidationError("this command has no figure output", module=_MOD)
        plot_fn(plot_path)


def _cmd_force(values: dict) -> None:
    params = ForceParams(
        hamaker=values["hamaker"],
        tip_radius=values["radius"],
        a0=values["a0_nm"] * NM,
        e_tip=values["e_tip"],
        e_sample=values["e_sample"],
        nu_tip=values["nu_tip"],
        nu_sample=values["nu_sample"],
        blend_halfwidth=values["blend"],
    )
    if values["samples"] < 2:
        raise ValidationError("samples must be >= 2", module=_MOD)
    d = np.linspace(values["d_min_nm"] * NM, values["d_max_nm"] * NM, values["samples"])
    gamma = [force_static(params, float(x)) for x in d]
    inputs = {k: values[k] for k in (
        "hamaker", "radius", "a0_nm", "e_tip", "e_sample", "nu_tip", "nu_sample",
        "blend", "d_min_nm", "d_max_nm", "samples")}
    text = csv_text(["d_m", "gamma_N"], zip(d.tolist(), gamma), meta_block(inputs))

    def plot_fn(path):
        from .plotting import plot_force_curve
        plot_force_curve(d, gamma, params.a0, path)

    _deliver(values, "csv", text, plot_fn)


def _cmd_modes(values: dict) -> None:
    probe = ProbeSpec(
        length=values["length"],
        width=values["width"],
        thickness=values["thickness"],
        density=values["density"],
        youngs_modulus=values["young"],
    )
    modes = compute_modes(probe, values["n_modes"], tip_mass=values["tip_mass"])
    rows = [
        (n + 1, modes.lambdas[n], modes.gammas[n], modes.omegas[n])
        for n in range(modes.n_modes)
    ]
    inputs = {k: values[k] for k in (
        "length", "width", "thickness", "density", "young", "n_modes", "tip_mass")}
    text = csv_text(["n", "lambda_n", "gamma_n", "omega_rad_s"], rows, meta_block(inputs))

    if values["shape_samples"] > 0 and values["shape_out"]:
        xs = np.linspace(0.0, probe.length, values["shape_samples"])
        shape_rows = []
        columns = [mode_shape(probe, modes, n + 1, xs) for n in range(modes.n_modes)]
        for i, x in enumerate(xs):
            shape_rows.append([float(x)] + [float(col[i]) for col in columns])
        header = ["x_m"] + [f"X{n + 1}" for n in range(modes.n_modes)]
        write_text_atomic(values["shape_out"], csv_text(header, shape_rows, meta_block(inputs)))

    def plot_fn(path):
        from .plotting import plot_mode_shapes
        plot_mode_shapes(probe, modes, path)

    _deliver(values, "csv", text, plot_fn)


def _cmd_squeeze(values: dict) -> None:
    omega1 = _resolve_pair(values, "omega1", "omega1_hz", DEFAULT_OMEGA1)
    osc = EffectiveOscillator(
        mass=values["mass"],
        omega1=omega1,
        z0=values["z0_nm"] * NM,
        alpha=values["hamaker"] * values["radius"] / 6.0,
    )
    red = reduce(osc)
    sens_z = sensitivity_dqbar_dz0(osc)
    sens_a = sensitivity_dqbar_dalpha(osc)
    inputs = {
        "mass": values["mass"],
        "omega1": omega1,
        "z0_nm": values["z0_nm"],
        "hamaker": values["hamaker"],
        "radius": values["radius"],
    }
    payload = {
        "command": "squeeze",
        "inputs": inputs,
        "results": {
            "omega_eff": red.omega,
            "q_bar": red.q_bar,
            "r": red.r,
            "r_tilde": red.r_tilde,
            "zeta": red.zeta,
            "z_crit": osc.z_crit,
            "dqbar_dz0": sens_z,
            "dqbar_dalpha_fd": sens_a.finite_difference,
            "dqbar_dalpha_printed": sens_a.printed_form,
            "dqbar_dalpha_ratio": sens_a.magnitude_ratio,
        },
        "meta": {"version": __version__},
    }
    _deliver(values, "json", json_text(payload))


def _resolve_r(values: dict, omega1: float) -> float:
    if values.get("r") is not None and values.get("z0_nm") is not None:
        raise ValidationError("give either --r or --z0-nm, not both", module=_MOD)
    if values.get("r") is not None:
        return float(values["r"])
    if values.get("z0_nm") is not None:
        osc = EffectiveOscillator(
            mass=values["mass"],
            omega1=omega1,
            z0=values["z0_nm"] * NM,
            alpha=values["hamaker"] * values["radius"] / 6.0,
        )
        return reduce(osc).r
    return 0.0


def _chi_values(values: dict) -> np.ndarray:
    if values.get("chi") is not None:
        if values["chi"] < 0.0:
            raise ValidationError("chi must be non-negative", module=_MOD)
        return np.array([values["chi"]])
    axis = AxisSpec("chi", values["chi_min"], values["chi_max"],
                    values["chi_count"], values["chi_scale"])
    return axis.values()


_TRACE_HEADER = ["chi", "dX1_free", "dX2_free", "dX1_squeezed", "dX2_squeezed", "product"]


def _trace_rows(trace) -> list:
    return [
        (
            float(trace.chi[i]),
            float(trace.dx1_free[i]),
            float(trace.dx2_free[i]),
            float(trace.dx1_squeezed[i]),
            float(trace.dx2_squeezed[i]),
            float(trace.product[i]),
        )
        for i in range(trace.chi.size)
    ]


def _run_trace_like(values: dict, plane_plot: bool) -> None:
    omega1 = _resolve_pair(values, "omega1", "omega1_hz", DEFAULT_OMEGA1)
    env = ThermalEnvironment(temperature=values["temp"], omega1=omega1)
    r = _resolve_r(values, omega1)
    chis = _chi_values(values)
    trace = uncertainty_trace(chis, env, r)
    inputs = {
        "temp": values["temp"],
        "omega1": omega1,
        "r": r,
        "chi_min": float(chis[0]),
        "chi_max": float(chis[-1]),
        "chi_count": int(chis.size),
    }
    text = csv_text(_TRACE_HEADER, _trace_rows(trace), meta_block(inputs))

    def plot_fn(path):
        from .plotting import plot_quadratures_vs_chi, plot_uncertainty_trace
        if plane_plot:
            plot_uncertainty_trace(trace, path)
        else:
            plot_quadratures_vs_chi(trace, path)

    _deliver(values, "csv", text, plot_fn)


def _cmd_quadratures(values: dict) -> None:
    _run_trace_like(values, plane_plot=False)


def _cmd_trace(values: dict) -> None:
    _run_trace_like(values, plane_plot=True)


def _cmd_approach(values: dict) -> None:
    probe = ProbeSpec(
        length=values["length"],
        width=values["width"],
        thickness=values["thickness"],
        density=values["density"],
        youngs_modulus=values["young"],
    )
    modes = compute_modes(probe, values["n_modes"])
    params = ForceParams(
        hamaker=values["hamaker"],
        tip_radius=values["radius"],
        a0=values["a0_nm"] * NM,
    )
    protocol = ApproachProtocol(
        t0=values["t0"],
        z0=values["z0_nm"] * NM,
        z_far=values["z_far_nm"] * NM,
        speed=values["speed"],
    )
    period = 2.0 * math.pi / modes.omegas[0]
    dt = values["dt"] if values["dt"] is not None else period / 256.0
    t_start = values["t_start"] if values["t_start"] is not None else -10.0 * values["t0"]
    t_end = values["t_end"] if values["t_end"] is not None else 30.0 * values["t0"]
    drive = None
    if values["drive_amp"] is not None:
        if values["drive_omega"] is None:
            raise ValidationError("--drive-amp requires --drive-omega", module=_MOD)
        drive = DriveSpec(amplitude=values["drive_amp"], omega=values["drive_omega"],
                          phase=values["drive_phase"])
    initial = None
    if values["q0"] != 0.0 or values["v0"] != 0.0:
        initial = tuple(
            [(values["q0"], values["v0"])] + [(0.0, 0.0)] * (values["n_modes"] - 1)
        )
    config = DynamicsConfig(
        dt=dt,
        t_start=t_start,
        t_end=t_end,
        n_modes=values["n_modes"],
        quality_factor=values["quality"],
        drive=drive,
        initial=initial,
        store_every=values["store_every"],
    )
    traj = integrate(probe, modes, config, force=params, protocol=protocol)

    inputs = {k: values[k] for k in (
        "length", "width", "thickness", "density", "young", "n_modes",
        "hamaker", "radius", "a0_nm", "z0_nm", "t0", "z_far_nm", "speed",
        "store_every", "q0", "v0")}
    inputs.update({"dt": dt, "t_start": t_start, "t_end": t_end,
                   "quality": values["quality"]})
    n = values["n_modes"]
    header = ["t"] + [f"q{i + 1}" for i in range(n)] + ["w_tip", "gap", "energy"]
    rows = []
    for i in range(traj.times.size):
        row = [float(traj.times[i])]
        row += [float(traj.modal_coords[i, j]) for j in range(n)]
        row += [float(traj.tip_deflection[i]), float(traj.gap[i]), float(traj.energy[i])]
        rows.append(row)
    text = csv_text(header, rows, meta_block(inputs))

    try:
        omega_fit = ringdown_frequency(traj)
    except InsufficientDataError:
        omega_fit = None
    tail = max(1, traj.times.size // 4)
    summary = {
        "command": "approach",
        "inputs": inputs,
        "results": {
            "snap_in": bool(traj.snap_in),
            "ringdown_omega": omega_fit,
            "late_mean_tip": float(np.mean(traj.tip_deflection[-tail:])),
            "energy_drift": traj.diagnostics.get("energy_drift"),
            "stored_steps": int(traj.times.size),
        },
        "meta": {"version": __version__},
    }

    def plot_fn(path):
        from .plotting import plot_trajectory
        plot_trajectory(traj, path)

    _deliver(values, "csv", text, plot_fn)
    summary_text = json_text(summary)
    if values["summary"]:
        write_text_atomic(values["summary"], summary_text)
    else:
        sys.stdout.write(summary_text)


def _cmd_omega_map(values: dict) -> None:
    omega_min = _resolve_pair(values, "omega1_min", "omega1_min_hz", DEFAULT_OMEGA1_MIN)
    omega_max = _resolve_pair(values, "omega1_max", "omega1_max_hz", DEFAULT_OMEGA1_MAX)
    x_axis = AxisSpec("z0", values["z0_min_nm"] * NM, values["z0_max_nm"] * NM,
                      values["z0_count"], values["z0_scale"])
    y_axis = AxisSpec("omega1", omega_min, omega_max,
                      values["omega1_count"], values["omega1_scale"])
    alpha = values["hamaker"] * values["radius"] / 6.0
    grid = SweepGrid(x_axis=x_axis, y_axis=y_axis,
                     fixed={"mass": values["mass"], "alpha": alpha})
    result = omega_map(grid)

    z0s = x_axis.values()
    omega1s = y_axis.values()
    rows = []
    for j in range(y_axis.count):
        for i in range(x_axis.count):
            masked = bool(result.mask[j, i])
            rows.append(
                (
                    float(omega1s[j]),
                    float(z0s[i]),
                    None if masked else float(result.values[j, i]),
                    int(masked),
                )
            )
    inputs = {
        "z0_min_nm": values["z0_min_nm"],
        "z0_max_nm": values["z0_max_nm"],
        "z0_count": values["z0_count"],
        "z0_scale": values["z0_scale"],
        "omega1_min": omega_min,
        "omega1_max": omega_max,
        "omega1_count": values["omega1_count"],
        "omega1_scale": values["omega1_scale"],
        "mass": values["mass"],
        "alpha": alpha,
    }
    text = csv_text(["omega1_rad_s", "z0_m", "Omega_rad_s", "masked"], rows,
                    meta_block(inputs))

    def plot_fn(path):
        from .plotting import plot_omega_map
        plot_omega_map(result, path)

    _deliver(values, "csv", text, plot_fn)


_DISPATCH = {
    "force": _cmd_force,
    "modes": _cmd_modes,
    "squeeze": _cmd_squeeze,
    "quadratures": _cmd_quadratures,
    "trace": _cmd_trace,
    "approach": _cmd_approach,
    "omega-map": _cmd_omega_map,
}

_COMMAND_HELP = {
    "force": "static force-distance curve (CSV, optional figure)",
    "modes": "beam eigenvalues and frequencies (CSV, optional shapes/figure)",
    "squeeze": "effective-oscillator reduction report (JSON)",
    "quadratures": "quadrature uncertainties over a coupling sweep (CSV)",
    "trace": "free vs squeezed uncertainty trace (CSV, optional figure)",
    "approach": "time-domain approach trajectory (CSV + JSON summary)",
    "omega-map": "softened frequency over a (z0, omega1) grid (CSV, optional figure)",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="afmsqueeze",
        description="Cantilever probe mechanics and surface-induced squeezing.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for command, spec in COMMANDS.items():
        cp = sub.add_parser(command, help=_COMMAND_HELP[command])
        cp.add_argument("--config", help="JSON config file (flags override it)")
        for p in spec:
            kind = p.kind if p.kind in (float, int) else str
            unit = f" [{p.unit}]" if p.unit else ""
            default = "" if p.default is None else f" (default {p.default})"
            cp.add_argument(
                "--" + p.name.replace("_", "-"),
                type=kind,
                default=None,
                help=(p.help or p.name) + unit + default,
            )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        spec = COMMANDS[args.command]
        flags = {p.name: getattr(args, p.name) for p in spec}
        run = merge_parameters(args.command, config, flags)
        _DISPATCH[run.command](run.parameters)
        return 0
    except PhysicsError as err:
        _report(err)
        return 3
    except AfmSqueezeError as err:
        _report(err)
        return 2
    except OSError as err:
        print(f"error: io: {err}", file=sys.stderr)
        return 4


def _report(err: AfmSqueezeError) -> None:
    module = err.module or "afmsqueeze"
    print(f"error: {module}: {err}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
