"""Batch command-line front end.

One JSON config document drives a run; the "command" key picks the
computation and must match the chosen subcommand. Results are written as
CSV tables (one file per table, derived from the output base name) or as a
single JSON document; without --out the JSON document goes to stdout.
Figures are opt-in via --figure and sit alongside the delimited output.

Exit codes: 0 success, 2 configuration or usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from importlib import resources

import jsonschema
import numpy as np

from . import figures
from .biphoton import (
    PATH_ENTANGLED,
    SEPARABLE,
    TwoPhotonInput,
    apply_beamsplitter,
    correlation,
    photon_density,
    rotation_comparison,
    suppression_report,
)
from .continuum import convergence_study
from .errors import NumericError, UsageError
from .lattice import (
    LatticeSpec,
    build_jx,
    exact_eigenvalues,
    physical_length,
    spectral_basis,
)
from .presets import PRESETS, preset_config
from .serialize import render_json, write_csv, write_json
from .transform import InputProfileSpec, continuous_frft_gaussian, make_input, propagate

__all__ = ["main", "run_config", "load_schema"]

_COMMANDS = ("lattice", "transform", "biphoton", "continuum")

_DEFAULT_Z = {"transform": [0.0, math.pi / 2], "biphoton": [math.pi / 2]}

_CONTINUUM_LEVELS = [0, 1, 2, 3, 4]
_CONTINUUM_SIZES = [21, 41, 81, 161]


def load_schema() -> dict:
    text = resources.files("dfrft").joinpath("schema/config.schema.json").read_text("utf-8")
    return json.loads(text)


def _validate_config(config: dict) -> None:
    schema = load_schema()
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(config), key=lambda e: list(e.absolute_path))
    if errors:
        lines = []
        for err in errors:
            where = "/".join(str(part) for part in err.absolute_path) or "<root>"
            lines.append(f"  at {where}: {err.message}")
        raise UsageError("config does not match the schema:\n" + "\n".join(lines))


def _lattice_spec(config: dict) -> LatticeSpec:
    lat = config["lattice"]
    return LatticeSpec(N=lat["N"], kappa0=lat.get("kappa0", 1.0))


def _z_values(config: dict, spec: LatticeSpec) -> list:
    if "z_cm" in config:
        return [spec.kappa0 * z for z in config["z_cm"]]
    return list(config.get("z_values", _DEFAULT_Z.get(config["command"], [])))


class RunResult:
    """Tables plus the JSON document and the data a figure needs."""

    def __init__(self, document: dict, tables: dict, figure_payload: dict):
        self.document = document
        self.tables = tables  # name -> (header, rows)
        self.figure_payload = figure_payload


def _run_lattice(config: dict) -> RunResult:
    spec = _lattice_spec(config)
    jx = build_jx(spec)
    basis = spectral_basis(spec)
    sites = spec.sites()
    eigs = exact_eigenvalues(spec)

    coupling_rows = [
        [i, float(sites[i]), float(sites[i + 1]), float(jx.offdiag[i])]
        for i in range(spec.N - 1)
    ]
    eigen_rows = [[i, float(sites[i]), float(eigs[i])] for i in range(spec.N)]
    vector_rows = [
        [qi, float(eigs[qi]), pi, float(sites[pi]), float(basis.vectors[pi, qi])]
        for qi in range(spec.N)
        for pi in range(spec.N)
    ]
    document = {
        "command": "lattice",
        "N": spec.N,
        "kappa0": spec.kappa0,
        "j": spec.j,
        "sites": [float(s) for s in sites],
        "couplings": [float(c) for c in jx.offdiag],
        "eigenvalues": [float(e) for e in eigs],
        "eigenvectors": [[float(v) for v in row] for row in basis.vectors],
    }
    tables = {
        "couplings": (["index", "site_a", "site_b", "value"], coupling_rows),
        "eigenvalues": (["index", "site", "eigenvalue"], eigen_rows),
        "eigenvectors": (["eigen_index", "eigenvalue", "site_index", "site", "value"], vector_rows),
    }
    payload = {"sites": sites, "couplings": jx.offdiag, "eigenvalues": eigs}
    return RunResult(document, tables, payload)


def _profile_from_payload(payload: dict) -> InputProfileSpec:
    amps = payload.get("amplitudes")
    if amps is not None:
        amps = [complex(re, im) for re, im in amps]
    return InputProfileSpec(
        kind=payload["kind"],
        center=payload.get("center", 0.0),
        width=payload.get("width"),
        phase_ramp=payload.get("phase_ramp", 0.0),
        amplitudes=amps,
    )


def _run_transform(config: dict) -> RunResult:
    spec = _lattice_spec(config)
    payload = config["payload"]
    profile = _profile_from_payload(payload)
    z_values = _z_values(config, spec)
    if not z_values:
        raise UsageError("transform runs need z_values or z_cm")
    want_overlay = bool(payload.get("overlay", False))
    if want_overlay and profile.kind != "gaussian":
        raise UsageError("the continuous overlay is only defined for gaussian inputs")

    basis = spectral_basis(spec)
    field = make_input(spec, profile)
    sites = spec.sites()

    field_rows = []
    overlay_rows = []
    z_records = []
    intensity_map = []
    overlay_final = None
    for zi, z in enumerate(z_values):
        out = propagate(field, basis, z)
        z_cm = physical_length(spec, z)
        intens = out.intensities()
        intensity_map.append(intens)
        rec = {
            "Z": z,
            "z_cm": z_cm,
            "re": [float(a.real) for a in out.amplitudes],
            "im": [float(a.imag) for a in out.amplitudes],
            "intensity": [float(v) for v in intens],
        }
        for pi in range(spec.N):
            field_rows.append(
                [zi, z, z_cm, pi, float(sites[pi]),
                 float(out.amplitudes[pi].real), float(out.amplitudes[pi].imag), float(intens[pi])]
            )
        if want_overlay:
            scale = payload.get("overlay_scale")
            if scale is None:
                scale = ((spec.N**2 - 1) / 4.0) ** 0.25
            x = sites / scale
            sigma = profile.width / (2 * math.sqrt(2 * math.log(2))) / scale
            shift = profile.center / scale
            prof = continuous_frft_gaussian(sigma, shift, z, x)
            prof = prof / np.linalg.norm(prof)
            rec["overlay"] = {
                "x": [float(v) for v in x],
                "re": [float(v.real) for v in prof],
                "im": [float(v.imag) for v in prof],
            }
            for pi in range(spec.N):
                overlay_rows.append(
                    [zi, z, pi, float(x[pi]),
                     float(prof[pi].real), float(prof[pi].imag), float(abs(prof[pi]))]
                )
            overlay_final = (x, np.abs(prof))
        z_records.append(rec)

    document = {
        "command": "transform",
        "N": spec.N,
        "kappa0": spec.kappa0,
        "sites": [float(s) for s in sites],
        "input": {
            "kind": profile.kind,
            "center": profile.center,
            "width": profile.width,
            "phase_ramp": profile.phase_ramp,
            "re": [float(a.real) for a in field.amplitudes],
            "im": [float(a.imag) for a in field.amplitudes],
        },
        "orders": z_records,
    }
    tables = {
        "fields": (
            ["z_index", "Z", "z_cm", "site_index", "site", "re", "im", "intensity"],
            field_rows,
        ),
    }
    if overlay_rows:
        tables["overlay"] = (
            ["z_index", "Z", "site_index", "x", "re", "im", "magnitude"],
            overlay_rows,
        )
    payload_fig = {
        "sites": sites,
        "z_values": z_values,
        "intensity_map": np.asarray(intensity_map),
        "overlay": overlay_final,
    }
    return RunResult(document, tables, payload_fig)


def _run_biphoton(config: dict) -> RunResult:
    spec = _lattice_spec(config)
    payload = config["payload"]
    z_values = _z_values(config, spec)
    if not z_values:
        raise UsageError("biphoton runs need z_values or z_cm")
    inp = TwoPhotonInput(kind=payload["kind"], sites=tuple(payload["sites"]))
    if payload.get("beamsplitter", False):
        inp = apply_beamsplitter(inp)
    basis = spectral_basis(spec)
    basis.site_index(inp.sites[0])
    basis.site_index(inp.sites[1])
    sites = spec.sites()

    # Parity class suppressed for the symmetric outermost preparation; the
    # report is informational for other site pairs.
    even_n = spec.N % 2 == 0
    if inp.kind == SEPARABLE:
        rule = "even_suppressed" if even_n else "odd_suppressed"
    else:
        rule = "odd_suppressed" if even_n else "even_suppressed"
    other = TwoPhotonInput(
        kind=PATH_ENTANGLED if inp.kind == SEPARABLE else SEPARABLE, sites=inp.sites
    )

    corr_rows = []
    dens_rows = []
    report_rows = []
    z_records = []
    last = None
    for zi, z in enumerate(z_values):
        gamma = correlation(basis, inp, z)
        dens = photon_density(basis, inp, z)
        sup = suppression_report(gamma, rule)
        gamma_other = correlation(basis, other, z)
        if inp.kind == SEPARABLE:
            rot = rotation_comparison(gamma, gamma_other)
        else:
            rot = rotation_comparison(gamma_other, gamma)
        z_cm = physical_length(spec, z)
        for ki in range(spec.N):
            for li in range(spec.N):
                corr_rows.append(
                    [zi, z, z_cm, ki, float(sites[ki]), li, float(sites[li]), float(gamma.gamma[ki, li])]
                )
        for ki in range(spec.N):
            dens_rows.append([zi, z, z_cm, ki, float(sites[ki]), float(dens.intensities[ki])])
        metrics = [
            ("kind", inp.kind),
            ("suppression_rule", sup.rule),
            ("max_suppressed", sup.max_suppressed),
            ("max_allowed", sup.max_allowed),
            ("suppression_ratio", sup.ratio),
            ("suppression_passed", sup.passed),
            ("rotation_distance", rot.distance),
            ("rotation_passed", rot.passed),
            ("coincidence_total", gamma.total),
            ("density_total", dens.total),
        ]
        for name, value in metrics:
            report_rows.append([zi, z, name, value])
        z_records.append(
            {
                "Z": z,
                "z_cm": z_cm,
                "gamma": [[float(v) for v in row] for row in gamma.gamma],
                "density": [float(v) for v in dens.intensities],
                "report": {name: value for name, value in metrics},
            }
        )
        last = (gamma, dens)

    document = {
        "command": "biphoton",
        "N": spec.N,
        "kappa0": spec.kappa0,
        "sites": [float(s) for s in sites],
        "input": {"kind": inp.kind, "sites": [float(s) for s in inp.sites]},
        "orders": z_records,
    }
    tables = {
        "correlation": (
            ["z_index", "Z", "z_cm", "k_index", "k", "l_index", "l", "value"],
            corr_rows,
        ),
        "density": (["z_index", "Z", "z_cm", "site_index", "site", "intensity"], dens_rows),
        "report": (["z_index", "Z", "metric", "value"], report_rows),
    }
    payload_fig = {
        "sites": sites,
        "gamma": last[0].gamma,
        "density": last[1].intensities,
    }
    return RunResult(document, tables, payload_fig)


def _run_continuum(config: dict) -> RunResult:
    payload = config.get("payload") or {}
    levels = payload.get("levels", _CONTINUUM_LEVELS)
    sizes = payload.get("N_values", _CONTINUUM_SIZES)
    table = convergence_study(levels, sizes)
    rows = [[n, lvl, overlap] for n, lvl, overlap in table.records()]
    document = {
        "command": "continuum",
        "levels": list(table.levels),
        "N_values": list(table.N_values),
        "overlaps": [[float(v) for v in row] for row in table.overlaps],
        "records": [{"N": n, "level": lvl, "overlap": o} for n, lvl, o in table.records()],
    }
    tables = {"overlaps": (["N", "level", "overlap"], rows)}
    payload_fig = {
        "levels": table.levels,
        "N_values": table.N_values,
        "overlaps": table.overlaps,
    }
    return RunResult(document, tables, payload_fig)


_RUNNERS = {
    "lattice": _run_lattice,
    "transform": _run_transform,
    "biphoton": _run_biphoton,
    "continuum": _run_continuum,
}


def run_config(config: dict) -> RunResult:
    """Validate a config document and execute it."""
    _validate_config(config)
    return _RUNNERS[config["command"]](config)


def _strip_extension(path: str) -> str:
    for ext in (".csv", ".json"):
        if path.endswith(ext):
            return path[: -len(ext)]
    return path


def _write_outputs(result: RunResult, out: str | None, fmt: str) -> list:
    if out is None:
        sys.stdout.write(render_json(result.document))
        return []
    base = _strip_extension(out)
    written = []
    if fmt == "json":
        path = base + ".json"
        write_json(path, result.document)
        written.append(path)
    else:
        for name, (header, rows) in result.tables.items():
            path = f"{base}.{name}.csv"
            write_csv(path, header, rows)
            written.append(path)
    return written


def _render_figure(command: str, result: RunResult, path: str) -> None:
    p = result.figure_payload
    if command == "lattice":
        figures.save_lattice_figure(p["sites"], p["couplings"], p["eigenvalues"], path)
    elif command == "transform":
        figures.save_transform_figure(
            p["sites"], p["z_values"], p["intensity_map"], path, overlay=p["overlay"]
        )
    elif command == "biphoton":
        figures.save_biphoton_figure(p["sites"], p["gamma"], p["density"], path)
    else:
        figures.save_continuum_figure(p["levels"], p["N_values"], p["overlaps"], path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfrft",
        description="Discrete fractional Fourier transforms on Jx-coupled lattices",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("lattice", "dump couplings, eigenvalues, and the eigenvector basis"),
        ("transform", "propagate a classical input field over a list of orders"),
        ("biphoton", "two-photon coincidence map and photon density"),
        ("continuum", "eigenvector overlaps with sampled oscillator modes"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--config", help="JSON config file (see schema/config.schema.json)")
        sp.add_argument("--preset", help=f"bundled config name ({', '.join(sorted(PRESETS))})")
        sp.add_argument("--out", help="output base path; tables become <base>.<table>.csv")
        sp.add_argument("--format", choices=["csv", "json"], help="output format (default csv)")
        sp.add_argument("--figure", help="also render a figure to this image path")
    return parser


def _load_config(args) -> dict:
    if args.preset and args.config:
        raise UsageError("give either --preset or --config, not both")
    if args.preset:
        if args.preset not in PRESETS:
            raise UsageError(
                f"unknown preset {args.preset!r}; available: {', '.join(sorted(PRESETS))}"
            )
        config = preset_config(args.preset)
    elif args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                config = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file is not valid JSON: {exc}") from exc
    else:
        raise UsageError("a run needs --config or --preset")
    if not isinstance(config, dict):
        raise UsageError("config document must be a JSON object")
    if config.get("command") != args.command:
        raise UsageError(
            f"config command {config.get('command')!r} does not match subcommand {args.command!r}"
        )
    return config


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args)
        output = dict(config.get("output") or {})
        out = args.out if args.out is not None else output.get("path")
        fmt = args.format if args.format is not None else output.get("format", "csv")
        result = run_config(config)
        written = _write_outputs(result, out, fmt)
        if args.figure:
            _render_figure(config["command"], result, args.figure)
            written.append(args.figure)
        for path in written:
            print(f"wrote {path}", file=sys.stderr)
        return 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # malformed input must never produce a traceback
        print(f"unexpected error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
