"""Large-lattice limit checks: eigenvectors against sampled oscillator modes.

On the metric grid x_m = m / gamma^(1/4) with gamma = (N^2 - 1)/4, the
central eigenvectors of the coupling matrix approach the harmonic-oscillator
eigenfunctions as N grows. Oscillator level n maps to ladder eigenvalue
beta = j - n, so the ground state sits at the top of the ladder. Overlaps
use plain discrete inner products: the grid is uniform, so quadrature
weights cancel under renormalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import UsageError
from .lattice import LatticeSpec, SpectralBasis, spectral_basis
from .specfun import hermite_gauss
from .transform import green_spectral

__all__ = [
    "ContinuumProbe",
    "ConvergenceTable",
    "continuum_overlap",
    "convergence_study",
    "eigenrelation_residual",
]


@dataclass(frozen=True)
class ContinuumProbe:
    """One (lattice size, oscillator level) comparison point."""

    N: int
    level: int

    def __post_init__(self):
        if self.N < 2:
            raise UsageError(f"lattice needs N >= 2 sites, got {self.N}")
        if not 0 <= self.level < self.N:
            raise UsageError(f"oscillator level must satisfy 0 <= level < N, got {self.level}")

    @property
    def scale(self) -> float:
        """Metric factor gamma^(1/4)."""
        return ((self.N**2 - 1) / 4.0) ** 0.25

    def grid(self) -> np.ndarray:
        """Sample positions x_m = m / gamma^(1/4) for m = -j..j."""
        j = (self.N - 1) / 2
        return (np.arange(self.N) - j) / self.scale


def continuum_overlap(probe: ContinuumProbe) -> float:
    """|<v, h>| between the numeric eigenvector for oscillator level n
    (ladder eigenvalue j - n) and the renormalized sampled oscillator mode."""
    basis = spectral_basis(LatticeSpec(probe.N))
    vec = basis.vectors[:, probe.N - 1 - probe.level]
    h = hermite_gauss(probe.level, probe.grid())
    h = h / np.linalg.norm(h)
    return abs(float(np.dot(vec, h)))


@dataclass(frozen=True)
class ConvergenceTable:
    """Overlap table indexed by (level, N)."""

    levels: tuple
    N_values: tuple
    overlaps: np.ndarray  # shape (len(levels), len(N_values))

    def records(self):
        """Rows (N, level, overlap), N-major, for serialization."""
        for ni, n in enumerate(self.N_values):
            for li, lvl in enumerate(self.levels):
                yield n, lvl, float(self.overlaps[li, ni])


def convergence_study(levels: Sequence[int], N_list: Sequence[int]) -> ConvergenceTable:
    """Overlap for every (level, N) pair; levels must fit the smallest lattice."""
    levels = tuple(int(v) for v in levels)
    N_list = tuple(int(v) for v in N_list)
    if not levels or not N_list:
        raise UsageError("convergence study needs at least one level and one lattice size")
    if max(levels) >= min(N_list):
        raise UsageError(
            f"level {max(levels)} does not fit the smallest lattice (N = {min(N_list)})"
        )
    table = np.empty((len(levels), len(N_list)))
    for li, lvl in enumerate(levels):
        for ni, n in enumerate(N_list):
            table[li, ni] = continuum_overlap(ContinuumProbe(N=n, level=lvl))
    table.flags.writeable = False
    return ConvergenceTable(levels=levels, N_values=N_list, overlaps=table)


def eigenrelation_residual(basis: SpectralBasis, m: float, Z: float) -> float:
    """||G(Z) u^(m) - exp(-i m Z) u^(m)||: eigenvectors of the coupling matrix
    are eigenvectors of every transform order."""
    mi = basis.site_index(m)
    u = basis.vectors[:, mi]
    g = green_spectral(basis, Z).entries
    return float(np.linalg.norm(g @ u - np.exp(-1j * m * Z) * u))
