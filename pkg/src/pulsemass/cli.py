"""Command-line front end.

One JSON config document (file or stdin) describes a run; --set overrides
individual keys.  Scalar results go to stdout as JSON, grids and sweeps to
CSV.  All library computation is Gaussian-CGS; in --units si mode every
numeric input is converted exactly once at this boundary.  Warnings go to
stderr, never into data files.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import analytic, density, experiment, kinematics, spectral
from .constants import C
from .spectral import GaussianPulseParams, QuadratureError
from .units import convert_units

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

_DENSITY_HEADER = ["x", "y", "z", "t", "Ex", "Ey", "Ez", "Hx", "Hy", "Hz"]

# SI unit assumed per quantity kind when --units si is active
_SI_UNIT = {"energy": "J", "length": "m", "time": "s",
            "field": "V/m", "magnetic_field": "T"}


class ConfigError(ValueError):
    pass


def _fmt(x: float) -> str:
    """Fixed 17-significant-digit scientific notation for all data output."""
    return f"{x:.16e}"


def _json_dumps(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(f'{pad}  {json.dumps(k)}: {_json_dumps(v, indent + 1)}'
                           for k, v in obj.items())
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{pad}  {_json_dumps(v, indent + 1)}" for v in obj)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, int):
        return str(obj)
    if obj is None:
        return "null"
    return json.dumps(obj)


def _load_config(args) -> dict:
    cfg: dict = {}
    if args.config:
        try:
            if args.config == "-":
                cfg = json.load(sys.stdin)
            else:
                with open(args.config) as fh:
                    cfg = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON config: {exc}") from exc
        if not isinstance(cfg, dict):
            raise ConfigError("config must be a JSON object")
    for item in args.set or []:
        key, sep, raw = item.partition("=")
        if not sep:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        try:
            cfg[key] = json.loads(raw)
        except json.JSONDecodeError:
            cfg[key] = raw
    return cfg


def _num(cfg: dict, key: str, kind: str | None, units: str, *,
         required: bool = True, default: float | None = None) -> float | None:
    if key not in cfg:
        if required:
            raise ConfigError(f"missing config key {key!r}")
        return default
    try:
        value = float(cfg[key])
    except (TypeError, ValueError):
        raise ConfigError(f"config key {key!r} must be a number") from None
    if units == "si" and kind is not None:
        value = convert_units(value, kind, _SI_UNIT[kind], _cgs_unit(kind))
    return value


def _cgs_unit(kind: str) -> str:
    return {"energy": "erg", "length": "cm", "time": "s",
            "field": "statvolt/cm", "magnetic_field": "G"}[kind]


def _pulse_params(cfg: dict, units: str) -> GaussianPulseParams:
    tau = _num(cfg, "tau", "time", units)
    w = _num(cfg, "w", "length", units)
    if "omega0" in cfg:
        omega0 = _num(cfg, "omega0", None, units)
    elif "lambda" in cfg:
        omega0 = 2.0 * math.pi * C / _num(cfg, "lambda", "length", units)
    else:
        raise ConfigError("pulse needs 'omega0' or 'lambda'")
    if "e0" in cfg:
        return GaussianPulseParams(_num(cfg, "e0", "field", units), tau, w, omega0)
    if "energy" in cfg:
        return GaussianPulseParams.from_energy(
            _num(cfg, "energy", "energy", units), tau, w, omega0)
    raise ConfigError("pulse needs 'e0' or 'energy'")


def _validity_note(params: GaussianPulseParams) -> None:
    rw, rt = spectral.validity_ratio(params)
    if max(rw, rt) > 0.05:
        print(f"warning: paraxial validity marginal (lambda/w = {rw:.3g}, "
              f"lambda/ctau = {rt:.3g})", file=sys.stderr)


def _emit_json(payload: dict, out_path: str | None) -> None:
    text = _json_dumps(payload) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_csv(header: list[str], rows: list[list[str]], out_path: str | None) -> None:
    lines = [",".join(header)] + [",".join(r) for r in rows]
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _photon_modes(cfg: dict, units: str) -> kinematics.PhotonEnsemble:
    photons = cfg.get("photons")
    if not isinstance(photons, list) or not photons:
        raise ConfigError("'photons' must be a non-empty list")
    modes = []
    for i, ph in enumerate(photons):
        if not isinstance(ph, dict):
            raise ConfigError(f"photon {i} must be an object")
        if "omega" in ph:
            omega = _num(ph, "omega", None, units)
        elif "lambda" in ph:
            omega = 2.0 * math.pi * C / _num(ph, "lambda", "length", units)
        else:
            raise ConfigError(f"photon {i} needs 'omega' or 'lambda'")
        theta = math.radians(_num(ph, "theta_deg", None, units))
        phi = math.radians(_num(ph, "phi_deg", None, units,
                                required=False, default=0.0))
        weight = _num(ph, "weight", None, units, required=False, default=1.0)
        modes.append(kinematics.PhotonMode.from_angles(omega, theta, phi, weight))
    return kinematics.PhotonEnsemble(tuple(modes))


def cmd_mass_discrete(cfg: dict, args) -> None:
    ensemble = _photon_modes(cfg, args.units)
    p = kinematics.total_four_momentum(ensemble)
    mass = kinematics.invariant_mass(p)
    v = kinematics.ensemble_velocity(p)
    try:
        beta_rest = kinematics.rest_frame(p).beta
    except ValueError:
        beta_rest = None
    _emit_json({
        "schema_version": SCHEMA_VERSION,
        "command": "mass-discrete",
        "mass_g": mass,
        "velocity_cm_s": v,
        "energy_erg": p.e_over_c * C,
        "pz_g_cm_s": p.pz,
        "beta_rest": beta_rest,
    }, args.out)


def cmd_mass_pulse(cfg: dict, args) -> None:
    params = _pulse_params(cfg, args.units)
    _validity_note(params)
    summary = analytic.summarize(params)
    rw, rt = spectral.validity_ratio(params)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "mass-pulse",
        "energy_erg": summary.energy,
        "photon_count": summary.photon_count,
        "mass_g": summary.mass,
        "speed_deficit_cm_s": summary.speed_deficit,
        "rest_energy_erg": summary.rest_energy,
        "wavelength_cm": summary.wavelength,
        "lambda_over_w": rw,
        "lambda_over_ctau": rt,
    }
    if args.oracle:
        dens = spectral.gaussian_spectral_density(params)
        m_quad = spectral.pulse_mass_quadrature(dens)
        payload["mass_quadrature_g"] = m_quad
        payload["oracle_rel_deviation"] = abs(m_quad - summary.mass) / m_quad
    _emit_json(payload, args.out)


def cmd_speed(cfg: dict, args) -> None:
    params = _pulse_params(cfg, args.units)
    _validity_note(params)
    summary = analytic.summarize(params)
    _emit_json({
        "schema_version": SCHEMA_VERSION,
        "command": "speed",
        "v_cm_s": C - summary.speed_deficit,
        "c_minus_v_cm_s": summary.speed_deficit,
        "c_minus_v_over_c": summary.speed_deficit / C,
    }, args.out)


def _experiment_config(cfg: dict, units: str) -> experiment.ExperimentConfig:
    source_cfg = cfg.get("source")
    if not isinstance(source_cfg, dict):
        raise ConfigError("'source' must be an object with the pulse parameters")
    return experiment.ExperimentConfig(
        w_half=_num(cfg, "w_half", "length", units),
        f=_num(cfg, "f", "length", units),
        source=_pulse_params(source_cfg, units),
    )


def cmd_delay(cfg: dict, args) -> None:
    config = _experiment_config(cfg, args.units)
    report = experiment.channel_delay(config)
    gain = experiment.gain_over_intrinsic(config)
    if gain < 1.0:
        print("note: intrinsic diffraction dominates (L_D/f < 1)", file=sys.stderr)
    _emit_json({
        "schema_version": SCHEMA_VERSION,
        "command": "delay",
        "v_channel_cm_s": report.v_channel,
        "v_over_c": report.v_channel / C,
        "delta_l_cm": report.delta_l,
        "delta_l_mm": report.delta_l * 10.0,
        "separated": report.separated,
        "m_fdr_g": report.m_fdr,
        "f_over_ld": report.f_over_ld,
        "gain_over_intrinsic": gain,
    }, args.out)


def cmd_density(cfg: dict, args) -> None:
    path = cfg.get("input")
    if not isinstance(path, str):
        raise ConfigError("'input' must be a CSV file path")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ConfigError("empty density CSV") from None
        if header != _DENSITY_HEADER:
            raise ConfigError(
                f"density CSV header must be {','.join(_DENSITY_HEADER)}")
        raw_rows = [row for row in reader if row]
    rows = []
    for i, row in enumerate(raw_rows):
        if len(row) != len(_DENSITY_HEADER):
            raise ConfigError(f"row {i}: expected {len(_DENSITY_HEADER)} columns")
        try:
            e = tuple(float(x) for x in row[4:7])
            h = tuple(float(x) for x in row[7:10])
        except ValueError:
            raise ConfigError(f"row {i}: non-numeric field component") from None
        if args.units == "si":
            e = tuple(convert_units(x, "field", "V/m", "statvolt/cm") for x in e)
            h = tuple(convert_units(x, "magnetic_field", "T", "G") for x in h)
        mu = density.mass_density(density.FieldSample(e, h))
        rows.append(row + [_fmt(mu)])
    _emit_csv(_DENSITY_HEADER + ["mu"], rows, args.out)


def cmd_sweep(cfg: dict, args) -> None:
    param = cfg.get("parameter")
    values = cfg.get("values")
    if not isinstance(values, list) or not values:
        raise ConfigError("'values' must be a non-empty list")
    values = [_num({"v": v}, "v", "length", args.units) for v in values]
    if param == "w":
        pulse_cfg = cfg.get("pulse")
        if not isinstance(pulse_cfg, dict):
            raise ConfigError("'pulse' must be an object with the pulse parameters")
        base = _pulse_params(pulse_cfg, args.units)
        mode = cfg.get("mode", "fixed_E0")
        pairs = analytic.w_limit_scaling(base, mode, [v / base.w for v in values])
        rows = []
        for w, mass in pairs:
            if mode == "fixed_E0":
                energy = analytic.pulse_energy(
                    GaussianPulseParams(base.e0, base.tau, w, base.omega0))
            else:
                energy = analytic.pulse_energy(base)
            c_minus_v = C * (mass * C * C) ** 2 / (2.0 * energy * energy)
            rows.append([_fmt(w), _fmt(mass), _fmt(c_minus_v)])
        _emit_csv(["w_cm", "mass_g", "c_minus_v_cm_s"], rows, args.out)
    elif param in ("w_half", "f"):
        delay_cfg = dict(cfg.get("delay") or {})
        if not delay_cfg:
            raise ConfigError("'delay' must hold the experiment configuration")
        rows = []
        for v in values:
            delay_cfg[param] = v if args.units == "cgs" else v / 100.0
            config = _experiment_config(delay_cfg, args.units)
            report = experiment.channel_delay(config)
            rows.append([_fmt(v), _fmt(report.v_channel / C), _fmt(report.delta_l)])
        _emit_csv([f"{param}_cm", "v_over_c", "delta_l_cm"], rows, args.out)
    else:
        raise ConfigError("'parameter' must be one of: w, w_half, f")


def cmd_field_profile(cfg: dict, args) -> None:
    params = _pulse_params(cfg, args.units)
    _validity_note(params)
    r_perp = _num(cfg, "r_perp", "length", args.units, required=False, default=0.0)
    z = _num(cfg, "z", "length", args.units, required=False, default=0.0)
    t_min = _num(cfg, "t_min", "time", args.units)
    t_max = _num(cfg, "t_max", "time", args.units)
    n_t = int(cfg.get("n_t", 101))
    if n_t < 2 or t_max <= t_min:
        raise ConfigError("need n_t >= 2 and t_max > t_min")
    times = np.linspace(t_min, t_max, n_t)
    values = spectral.field_profile(params, r_perp, z, times)
    rows = [[_fmt(t), _fmt(e)] for t, e in zip(times, values)]
    _emit_csv(["t_s", "e_statvolt_per_cm"], rows, args.out)


_COMMANDS = {
    "mass-discrete": cmd_mass_discrete,
    "mass-pulse": cmd_mass_pulse,
    "speed": cmd_speed,
    "delay": cmd_delay,
    "density": cmd_density,
    "sweep": cmd_sweep,
    "field-profile": cmd_field_profile,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pulsemass",
        description="Invariant mass, speed and focus delay of light pulses")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="JSON config file, or '-' for stdin")
        p.add_argument("--set", action="append", metavar="KEY=VALUE",
                       help="override a config key (value parsed as JSON)")
        p.add_argument("--units", choices=("si", "cgs"), default="cgs")
        p.add_argument("--oracle", action="store_true",
                       help="add the quadrature cross-check (mass-pulse)")
        p.add_argument("--out", help="write data output to this file")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _load_config(args)
        _COMMANDS[args.command](cfg, args)
    except QuadratureError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ConfigError, ValueError, KeyError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
