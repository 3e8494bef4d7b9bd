"""Bundled demo configurations.

Classical demos run on a 25-site lattice (wide enough that a 5-site
Gaussian shifted by six channels still fits with margin) with
kappa0 = 0.21/cm, putting the Fourier plane at 7.48 cm. The two-photon
demos use the 8-site lattice with kappa0 = 0.6/cm (Fourier plane 2.62 cm)
and the outermost site pair.

The phase ramp of figS1b (pi/8 per site) and the figS1b top-hat width are
configuration choices, not measured values; override them via a config
file if needed.
"""

from __future__ import annotations

import copy
import math

__all__ = ["PRESETS", "preset_config"]

_QUARTER_SCAN = [i * (math.pi / 2) / 32 for i in range(33)]

PRESETS: dict = {
    "fig2a": {
        "command": "transform",
        "lattice": {"N": 25, "kappa0": 0.21},
        "payload": {"kind": "gaussian", "center": 0.0, "width": 5.0, "phase_ramp": 0.0, "overlay": True},
        "z_values": list(_QUARTER_SCAN),
    },
    "fig2b": {
        "command": "transform",
        "lattice": {"N": 25, "kappa0": 0.21},
        "payload": {"kind": "gaussian", "center": 6.0, "width": 5.0, "phase_ramp": 0.0, "overlay": True},
        "z_values": list(_QUARTER_SCAN),
    },
    "figS1a": {
        "command": "transform",
        "lattice": {"N": 25, "kappa0": 0.21},
        "payload": {"kind": "tophat", "center": -10.5, "width": 4.0, "phase_ramp": 0.0},
        "z_values": list(_QUARTER_SCAN),
    },
    "figS1b": {
        "command": "transform",
        "lattice": {"N": 25, "kappa0": 0.21},
        "payload": {"kind": "tophat", "center": 0.0, "width": 7.0, "phase_ramp": math.pi / 8},
        "z_values": list(_QUARTER_SCAN),
    },
    "fig4a": {
        "command": "biphoton",
        "lattice": {"N": 8, "kappa0": 0.6},
        "payload": {"kind": "separable", "sites": [-3.5, 3.5]},
        "z_values": [math.pi / 2],
    },
    "fig4b": {
        "command": "biphoton",
        "lattice": {"N": 8, "kappa0": 0.6},
        "payload": {"kind": "separable", "sites": [-3.5, 3.5], "beamsplitter": True},
        "z_values": [math.pi / 2],
    },
    "oscillator": {
        "command": "continuum",
        "lattice": {"N": 161, "kappa0": 1.0},
        "payload": {"levels": [0, 1, 2, 3, 4], "N_values": [21, 41, 81, 161]},
    },
}


def preset_config(name: str) -> dict:
    """Deep copy of a named preset; raises KeyError for unknown names."""
    return copy.deepcopy(PRESETS[name])
