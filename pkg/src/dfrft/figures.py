"""Matplotlib rendering of run results to image files.

Figures are a reporting convenience layered on top of the delimited
outputs; the CSV/JSON files remain the canonical, byte-stable record.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = [
    "save_lattice_figure",
    "save_transform_figure",
    "save_biphoton_figure",
    "save_continuum_figure",
]

_DPI = 150


def save_lattice_figure(sites, couplings, eigenvalues, path) -> None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    mids = 0.5 * (np.asarray(sites)[:-1] + np.asarray(sites)[1:])
    ax1.stem(mids, couplings, basefmt=" ")
    ax1.set_xlabel("bond midpoint m")
    ax1.set_ylabel(r"coupling $c$ [$\kappa_0$]")
    ax1.set_title("nearest-neighbor couplings")
    ax2.plot(np.arange(len(eigenvalues)), eigenvalues, "o")
    ax2.set_xlabel("index")
    ax2.set_ylabel(r"eigenvalue $\beta$")
    ax2.set_title("equidistant ladder")
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def save_transform_figure(sites, z_values, intensity_map, path, overlay=None) -> None:
    """Propagation intensity map plus input/output cuts.

    overlay, when given, is (x_sites, magnitudes) of the continuous
    comparison profile at the final order.
    """
    sites = np.asarray(sites)
    z_values = np.asarray(z_values)
    intens = np.asarray(intensity_map)
    fig, (ax1, ax2) = plt.subplots(
        1, 2, figsize=(9, 3.8), gridspec_kw={"width_ratios": [1.3, 1]}
    )
    extent = [sites[0], sites[-1], z_values[0], z_values[-1]]
    im = ax1.imshow(intens, origin="lower", aspect="auto", extent=extent, cmap="inferno")
    fig.colorbar(im, ax=ax1, label=r"$|E_m|^2$")
    ax1.set_xlabel("site m")
    ax1.set_ylabel("order Z")
    ax1.set_title("intensity evolution")
    ax2.plot(sites, intens[0], "o-", ms=3, label=f"Z = {z_values[0]:.3g}")
    ax2.plot(sites, intens[-1], "s-", ms=3, label=f"Z = {z_values[-1]:.3g}")
    if overlay is not None:
        ox, om = overlay
        ax2.plot(ox, np.asarray(om) ** 2, "r--", lw=1, label="continuous")
    ax2.set_xlabel("site m")
    ax2.set_ylabel(r"$|E_m|^2$")
    ax2.set_title("input / output profiles")
    ax2.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def save_biphoton_figure(sites, gamma, density, path) -> None:
    sites = np.asarray(sites)
    fig, (ax1, ax2) = plt.subplots(
        1, 2, figsize=(8.5, 3.6), gridspec_kw={"width_ratios": [1.2, 1]}
    )
    step = 0.5 * (sites[1] - sites[0])
    extent = [sites[0] - step, sites[-1] + step, sites[0] - step, sites[-1] + step]
    im = ax1.imshow(np.asarray(gamma), origin="lower", extent=extent, cmap="viridis")
    fig.colorbar(im, ax=ax1, label=r"$\Gamma_{k,l}$")
    ax1.set_xlabel("site l")
    ax1.set_ylabel("site k")
    ax1.set_title("coincidence map")
    ax2.bar(sites, np.asarray(density), width=0.8)
    ax2.set_xlabel("site k")
    ax2.set_ylabel(r"$I_k$")
    ax2.set_title("photon density")
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def save_continuum_figure(levels, N_values, overlaps, path) -> None:
    fig, ax = plt.subplots(figsize=(5.5, 3.8))
    for li, lvl in enumerate(levels):
        ax.semilogy(N_values, 1.0 - np.asarray(overlaps)[li], "o-", label=f"level {lvl}")
    ax.set_xlabel("lattice size N")
    ax.set_ylabel("1 - overlap")
    ax.set_title("convergence to oscillator modes")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
