"""Command-line front end emitting deterministic CSV artifacts.

Subcommands: fields, amplitude-scan, ratios, asymmetry, angmom. Each
reads a flat ``key = value`` config file (all keys optional; built-in
defaults reproduce the reference field map and transition scans), takes
``--set key=value`` overrides, and writes one CSV whose comment header
echoes the fully resolved configuration plus the code version. Output
is byte-identical for identical config and build: floats use 12
significant digits, line endings are LF, and no timestamps are written.

Exit codes: 0 success, 2 configuration error, 3 quadrature
non-convergence, 4 output I/O failure.

Impact parameters and map coordinates are expressed in units of the
photon wavelength in all I/O and converted to Bohr radii internally.
"""

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .amplitude import AtomicState, amplitude, photon_energy_for
from .angmom import channel_weights, orbital_projection, spin_projection
from .beam import BeamParams, poynting_components
from .constants import omega_from_wavelength_nm, wavelength_au_from_omega
from .observables import a_lambda, f_twisted, r_twisted
from .quadrature import QuadratureConvergenceError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_QUADRATURE = 3
EXIT_IO = 4

THREADS_ENV = "VORTEX_XSEC_THREADS"


class ConfigError(Exception):
    """Invalid or inconsistent run configuration."""


_COMMON = {"theta_k": "0.2", "threads": "1"}

_DEFAULTS = {
    "fields": {
        **_COMMON,
        "wavelength_nm": "500",
        "m_gamma": "4",
        "helicity": "1",
        "grid_extent": "5.0",
        "grid_points": "201",
        "weight_2pirho": "false",
    },
    "amplitude-scan": {
        **_COMMON,
        "wavelength_nm": "97.2",
        "m_gamma": "3",
        "helicity": "1",
        "n_f": "4",
        "l_f": "1",
        "b_min": "0",
        "b_max": "4",
        "b_step": "0.02",
    },
    "ratios": {
        **_COMMON,
        "wavelength_nm": "97.2",
        "m_gamma": "3",
        "helicity": "1",
        "final_states": "4,1; 4,3",
    },
    "asymmetry": {
        **_COMMON,
        "wavelength_nm": "97.2",
        "n_f": "4",
        "l_f": "1",
        "m_bar": "2",
        "b_min": "0",
        "b_max": "4",
        "b_step": "0.02",
    },
    "angmom": {
        **_COMMON,
        "wavelength_nm": "97.2",
        "m_gamma": "4",
        "helicity": "1",
        "kappa_r": "1000",
    },
}

# wavelength_nm may be swapped for omega_hartree in any subcommand
_ENERGY_KEYS = ("wavelength_nm", "omega_hartree")


def _parse_config_text(text: str, origin: str) -> dict:
    cfg = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{origin}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"{origin}:{lineno}: empty key")
        if key in cfg:
            raise ConfigError(f"{origin}:{lineno}: duplicate key {key!r}")
        cfg[key] = value
    return cfg


def _read_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return _parse_config_text(text, path)


def _parse_sets(pairs) -> dict:
    cfg = {}
    for item in pairs:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        key, value = (part.strip() for part in item.split("=", 1))
        if not key:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        cfg[key] = value
    return cfg


def _resolve(subcommand: str, file_cfg: dict, sets: dict) -> dict:
    defaults = _DEFAULTS[subcommand]
    allowed = set(defaults) | set(_ENERGY_KEYS)
    user = dict(file_cfg)
    user.update(sets)
    for key in user:
        if key not in allowed:
            raise ConfigError(
                f"unknown key {key!r} for subcommand {subcommand!r} "
                f"(allowed: {', '.join(sorted(allowed))})"
            )
    if all(k in user for k in _ENERGY_KEYS):
        raise ConfigError("give exactly one of wavelength_nm or omega_hartree")
    merged = dict(defaults)
    if "omega_hartree" in user:
        merged.pop("wavelength_nm", None)
    merged.update(user)
    return merged


def _as_float(cfg: dict, key: str) -> float:
    try:
        value = float(cfg[key])
    except ValueError as exc:
        raise ConfigError(f"{key} must be a number, got {cfg[key]!r}") from exc
    if not math.isfinite(value):
        raise ConfigError(f"{key} must be finite")
    return value


def _as_int(cfg: dict, key: str) -> int:
    try:
        return int(cfg[key])
    except ValueError as exc:
        raise ConfigError(f"{key} must be an integer, got {cfg[key]!r}") from exc


def _as_bool(cfg: dict, key: str) -> bool:
    value = cfg[key].strip().lower()
    if value in ("true", "1", "yes", "on"):
        return True
    if value in ("false", "0", "no", "off"):
        return False
    raise ConfigError(f"{key} must be a boolean, got {cfg[key]!r}")


def _beam_from(cfg: dict) -> BeamParams:
    if "omega_hartree" in cfg:
        omega = _as_float(cfg, "omega_hartree")
        if omega <= 0.0:
            raise ConfigError("omega_hartree must be positive")
    else:
        wavelength = _as_float(cfg, "wavelength_nm")
        if wavelength <= 0.0:
            raise ConfigError("wavelength_nm must be positive")
        omega = omega_from_wavelength_nm(wavelength)
    try:
        return BeamParams(
            omega=omega,
            theta_k=_as_float(cfg, "theta_k"),
            m_gamma=_as_int(cfg, "m_gamma") if "m_gamma" in cfg else 0,
            lambda_hel=_as_int(cfg, "helicity") if "helicity" in cfg else 1,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _threads(cfg: dict) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is not None:
        try:
            count = int(raw)
        except ValueError as exc:
            raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    else:
        count = _as_int(cfg, "threads")
    if count < 1:
        raise ConfigError("thread count must be >= 1")
    return count


def _pmap(fn, items, threads: int):
    if threads <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _b_grid(cfg: dict):
    b_min = _as_float(cfg, "b_min")
    b_max = _as_float(cfg, "b_max")
    b_step = _as_float(cfg, "b_step")
    if b_step <= 0.0:
        raise ConfigError("b_step must be > 0")
    if b_min < 0.0 or b_max < b_min:
        raise ConfigError("need 0 <= b_min <= b_max")
    count = int(math.floor((b_max - b_min) / b_step + 1.0e-9)) + 1
    return [b_min + i * b_step for i in range(count)]


def _warn_if_off_resonance(beam: BeamParams, n_f: int) -> None:
    resonant = photon_energy_for(AtomicState(n_f, 0, 0))
    shift = abs(beam.omega - resonant) / resonant
    if shift > 0.01:
        print(
            f"note: configured photon energy {beam.omega:.6g} Ha is {shift:.1%} away "
            f"from the 1s -> n={n_f} resonance {resonant:.6g} Ha; matrix elements "
            "use the resonant energy",
            file=sys.stderr,
        )


def _echo(subcommand: str, merged: dict, derived: dict) -> dict:
    echo = {k: v for k, v in merged.items() if k != "threads"}
    for key, value in derived.items():
        echo[f"derived_{key}"] = _fmt(value)
    return echo


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if value == 0.0:
            value = 0.0  # canonicalize -0.0
        return f"{value:.12g}"
    return str(value)


def run_fields(cfg: dict):
    """Poynting-vector map on a square transverse grid at z = 0, t = 0."""
    beam = _beam_from(cfg)
    extent = _as_float(cfg, "grid_extent")
    points = _as_int(cfg, "grid_points")
    weight = _as_bool(cfg, "weight_2pirho")
    if extent <= 0.0:
        raise ConfigError("grid_extent must be > 0")
    if points < 2:
        raise ConfigError("grid_points must be >= 2")
    lam_au = wavelength_au_from_omega(beam.omega)
    coords = np.linspace(-extent, extent, points)
    gx, gy = np.meshgrid(coords, coords, indexing="xy")
    s_rho, s_phi, s_z, s_x, s_y = poynting_components(
        beam, 0.0, gx * lam_au, gy * lam_au, 0.0
    )
    if weight:
        factor = 2.0 * math.pi * np.hypot(gx, gy)
        s_rho, s_phi, s_z, s_x, s_y = (
            factor * s for s in (s_rho, s_phi, s_z, s_x, s_y)
        )
    rows = []
    for iy in range(points):
        for ix in range(points):
            rows.append(
                [
                    gx[iy, ix],
                    gy[iy, ix],
                    float(s_rho[iy, ix]),
                    float(s_phi[iy, ix]),
                    float(s_z[iy, ix]),
                    float(s_x[iy, ix]),
                    float(s_y[iy, ix]),
                ]
            )
    header = ["x", "y", "S_rho", "S_phi", "S_z", "S_x", "S_y"]
    derived = {"omega_hartree": beam.omega, "kappa_inv_bohr": beam.kappa}
    return header, rows, derived


def run_amplitude_scan(cfg: dict):
    """|M(b)| against impact parameter for every m_f of one final level."""
    beam = _beam_from(cfg)
    n_f = _as_int(cfg, "n_f")
    l_f = _as_int(cfg, "l_f")
    try:
        finals = [AtomicState(n_f, l_f, m) for m in range(-l_f, l_f + 1)]
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    _warn_if_off_resonance(beam, n_f)
    lam_au = wavelength_au_from_omega(beam.omega)
    b_values = _b_grid(cfg)
    threads = _threads(cfg)

    def one(b_over_lambda: float):
        b_au = b_over_lambda * lam_au
        return [
            [b_over_lambda, final.m, abs(amplitude(final, beam, b_au).value)]
            for final in finals
        ]

    rows = [row for chunk in _pmap(one, b_values, threads) for row in chunk]
    header = ["b_over_lambda", "m_f", "abs_M"]
    derived = {
        "omega_hartree": beam.omega,
        "resonant_omega_hartree": photon_energy_for(finals[0]),
    }
    return header, rows, derived


def run_ratios(cfg: dict):
    """f_twisted and r_twisted for each configured final level."""
    beam = _beam_from(cfg)
    states = []
    for chunk in cfg["final_states"].split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2:
            raise ConfigError(
                f"final_states entries must be 'n,l' pairs separated by ';', got {chunk!r}"
            )
        try:
            states.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ConfigError(f"bad final state {chunk!r}") from exc
    if not states:
        raise ConfigError("final_states is empty")
    rows = []
    for n_f, l_f in states:
        try:
            AtomicState(n_f, l_f, 0)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        _warn_if_off_resonance(beam, n_f)
        rows.append([n_f, l_f, f_twisted(n_f, l_f, beam), r_twisted(n_f, l_f, beam)])
    header = ["n_f", "l_f", "f_twisted", "r_twisted"]
    derived = {"omega_hartree": beam.omega}
    return header, rows, derived


def run_asymmetry(cfg: dict):
    """Helicity asymmetry A(b) for the configured level and m_bar budget."""
    n_f = _as_int(cfg, "n_f")
    l_f = _as_int(cfg, "l_f")
    m_bar = _as_int(cfg, "m_bar")
    try:
        AtomicState(n_f, l_f, 0)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    template_cfg = dict(cfg)
    template_cfg["m_gamma"] = str(m_bar)
    template_cfg["helicity"] = "1"
    beam = _beam_from(template_cfg)
    _warn_if_off_resonance(beam, n_f)
    lam_au = wavelength_au_from_omega(beam.omega)
    b_values = _b_grid(cfg)
    threads = _threads(cfg)

    def one(b_over_lambda: float):
        point = a_lambda(n_f, l_f, m_bar, beam, b_over_lambda * lam_au)
        return [b_over_lambda, point.value]

    rows = _pmap(one, b_values, threads)
    header = ["b_over_lambda", "A_lambda"]
    derived = {
        "omega_hartree": beam.omega,
        "resonant_omega_hartree": photon_energy_for(AtomicState(n_f, 0, 0)),
    }
    return header, rows, derived


def run_angmom(cfg: dict):
    """Angular-momentum budget plus numeric disk-averaged channel weights."""
    beam = _beam_from(cfg)
    kappa_r = _as_float(cfg, "kappa_r")
    if kappa_r <= 0.0:
        raise ConfigError("kappa_r must be > 0")
    if beam.kappa <= 0.0:
        raise ConfigError("angmom needs a finite pitch angle")
    spin = spin_projection(beam)
    orbital = orbital_projection(beam)
    w_co, w_counter, w_axial = channel_weights(beam, kappa_r / beam.kappa)
    rows = [
        [
            beam.m_gamma,
            beam.lambda_hel,
            beam.theta_k,
            spin,
            orbital,
            spin + orbital,
            w_co,
            w_counter,
            w_axial,
        ]
    ]
    header = [
        "m_gamma",
        "helicity",
        "theta_k",
        "spin",
        "orbital",
        "total",
        "w_cohelicity",
        "w_counterhelicity",
        "w_axial",
    ]
    derived = {"omega_hartree": beam.omega, "disk_radius_bohr": kappa_r / beam.kappa}
    return header, rows, derived


_RUNNERS = {
    "fields": run_fields,
    "amplitude-scan": run_amplitude_scan,
    "ratios": run_ratios,
    "asymmetry": run_asymmetry,
    "angmom": run_angmom,
}


def write_artifact(out: str, subcommand: str, echo: dict, header, rows) -> None:
    lines = [f"# vortex-xsec {__version__}", f"# subcommand = {subcommand}"]
    for key in sorted(echo):
        lines.append(f"# {key} = {echo[key]}")
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(cell) for cell in row))
    text = "\n".join(lines) + "\n"
    if out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vortex-xsec",
        description="Twisted-photon photoexcitation: field maps, amplitudes, "
        "cross-section ratios, helicity asymmetry, angular momentum.",
    )
    parser.add_argument("--version", action="version", version=f"vortex-xsec {__version__}")
    subs = parser.add_subparsers(dest="subcommand", required=True)
    for name, runner in _RUNNERS.items():
        sub = subs.add_parser(name, help=runner.__doc__)
        sub.add_argument("--config", help="flat key = value config file")
        sub.add_argument(
            "--out",
            help="output CSV path ('-' for stdout); default <subcommand>.csv",
        )
        sub.add_argument(
            "--set",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="override one config key (repeatable)",
        )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    subcommand = args.subcommand
    try:
        file_cfg = _read_config(args.config) if args.config else {}
        merged = _resolve(subcommand, file_cfg, _parse_sets(args.set))
        header, rows, derived = _RUNNERS[subcommand](merged)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except QuadratureConvergenceError as exc:
        print(f"error: quadrature did not converge: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    out = args.out if args.out else f"{subcommand}.csv"
    try:
        write_artifact(out, subcommand, _echo(subcommand, merged, derived), header, rows)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
