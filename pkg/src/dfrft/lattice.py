"""Jx coupling matrices, exact spectra, and eigenvector bases.

Site bookkeeping: arrays use offsets i = 0..N-1 while the physical site
label is m = i - j with j = (N-1)/2, so labels are integers for odd N and
half-integers for even N. Eigenvalues are sorted ascending and the ladder
is exactly {-j, ..., j}; column i of a basis therefore holds the state with
eigenvalue i - j.

Eigenvector column signs follow the quarter-cycle phase convention: the
transfer matrix at Z = pi/2 equals (-i)^(q-p) u_p^(q) entrywise. This rule
is deterministic (the transfer matrix does not depend on column signs) and
it coincides with the signs the analytic closed form produces. A
"largest component positive" rule would flip some columns and break the
quarter-cycle phase identity, so it is not used here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import NumericError, UsageError
from .specfun import JacobiParams, jacobi, log_factorial

__all__ = [
    "LatticeSpec",
    "JxMatrix",
    "SpectralBasis",
    "build_jx",
    "exact_eigenvalues",
    "analytic_eigenvector",
    "numeric_basis",
    "spectral_basis",
    "physical_length",
]

_QUARTER_POS = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)  # i^k for k mod 4


def quarter_phase(k: int) -> complex:
    """(-i)^k, exact for integer k."""
    return _QUARTER_POS[(-k) % 4]


@dataclass(frozen=True)
class LatticeSpec:
    """Lattice size and coupling scale; the single source of truth for indexing.

    kappa0 is the physical coupling scale in 1/cm; the normalized transform
    order Z relates to propagation length z through Z = kappa0 * z.
    """

    N: int
    kappa0: float = 1.0

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise UsageError(f"lattice needs an integer site count N >= 2, got {self.N!r}")
        if not (self.kappa0 > 0 and math.isfinite(self.kappa0)):
            raise UsageError(f"coupling scale kappa0 must be positive and finite, got {self.kappa0!r}")

    @property
    def j(self) -> float:
        """Spin label (N-1)/2: integer for odd N, half-integer for even N."""
        return (self.N - 1) / 2

    def sites(self) -> np.ndarray:
        """Site labels m = -j..j in unit steps."""
        return np.arange(self.N) - self.j

    def site_index(self, m: float) -> int:
        """Array offset of site label m, validating that m lies on the lattice."""
        i = m + self.j
        k = round(i)
        if abs(i - k) > 1e-9 or not 0 <= k < self.N:
            raise UsageError(f"site {m} is not on the lattice (valid: {-self.j}..{self.j} in unit steps)")
        return k


@dataclass(frozen=True)
class JxMatrix:
    """Symmetric tridiagonal coupling matrix with zero diagonal, in units of kappa0."""

    dim: int
    offdiag: np.ndarray

    def to_dense(self) -> np.ndarray:
        return np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


@dataclass(frozen=True)
class SpectralBasis:
    """Exact eigenvalue ladder and orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.size

    @property
    def j(self) -> float:
        return (self.dim - 1) / 2

    def sites(self) -> np.ndarray:
        return np.arange(self.dim) - self.j

    def site_index(self, m: float) -> int:
        i = m + self.j
        k = round(i)
        if abs(i - k) > 1e-9 or not 0 <= k < self.dim:
            raise UsageError(f"site {m} is not on the lattice (valid: {-self.j}..{self.j} in unit steps)")
        return k

    def component(self, p: float, q: float) -> float:
        """u_p^(q): amplitude at site p of the eigenvector with eigenvalue q."""
        return float(self.vectors[self.site_index(p), self.site_index(q)])


def build_jx(spec: LatticeSpec) -> JxMatrix:
    """Couplings c_i = (1/2) sqrt(j(j+1) - m(m+1)) between sites m = i-j and m+1."""
    m = spec.sites()[:-1]
    off = 0.5 * np.sqrt(spec.j * (spec.j + 1) - m * (m + 1))
    off.flags.writeable = False
    return JxMatrix(dim=spec.N, offdiag=off)


def exact_eigenvalues(spec: LatticeSpec) -> np.ndarray:
    """The equidistant ladder {-j, -j+1, ..., j}, ascending."""
    return spec.sites()


def analytic_eigenvector(spec: LatticeSpec, m: float) -> np.ndarray:
    """Closed-form eigenvector for ladder eigenvalue m, normalized to unit norm.

    Component at site n combines a 2^n factor, a square-root factorial ratio
    (evaluated in log space so N of 64 and beyond stays finite), and a Jacobi
    polynomial at the origin whose parameters (m-n, -m-n) may be negative
    integers. The raw values already carry the quarter-cycle sign convention;
    no sign flip is applied.
    """
    spec.site_index(m)  # validates m is on the ladder
    j = spec.j
    lden = log_factorial(round(j + m)) + log_factorial(round(j - m))
    out = np.empty(spec.N)
    for i in range(spec.N):
        n = i - j
        lpref = 0.5 * (log_factorial(round(j + n)) + log_factorial(round(j - n)) - lden) + n * math.log(2.0)
        out[i] = math.exp(lpref) * jacobi(JacobiParams(round(j + n), m - n, -m - n), 0.0)
    out /= np.linalg.norm(out)
    out.flags.writeable = False
    return out


def numeric_basis(jx: JxMatrix) -> SpectralBasis:
    """Full orthonormal eigendecomposition of the coupling matrix.

    Uses the LAPACK symmetric tridiagonal solver, verifies the per-column
    residual, and fixes column signs with the quarter-cycle rule described in
    the module docstring.
    """
    N = jx.dim
    off = np.asarray(jx.offdiag, dtype=float)
    try:
        w, v = eigh_tridiagonal(np.zeros(N), off)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericError(
            f"tridiagonal eigensolver failed for N={N} "
            f"(couplings in [{off.min():.3e}, {off.max():.3e}]): {exc}"
        ) from exc

    dense = jx.to_dense()
    residual = np.max(np.linalg.norm(dense @ v - v * w, axis=0))
    if residual > 1e-10:
        raise NumericError(
            f"eigendecomposition residual {residual:.3e} exceeds 1e-10 for N={N} "
            f"(couplings in [{off.min():.3e}, {off.max():.3e}])"
        )

    # Quarter-cycle transfer matrix; independent of the solver's column signs.
    gq = (v * np.exp(-0.5j * math.pi * w)) @ v.T
    for qi in range(N):
        pi = int(np.argmax(np.abs(v[:, qi])))
        # u_p^(q) must equal i^(q-p) G_(p,q)(pi/2); both sides are +-|u| here.
        want = (_QUARTER_POS[(qi - pi) % 4] * gq[pi, qi]).real
        if want * v[pi, qi] < 0:
            v[:, qi] = -v[:, qi]

    w.flags.writeable = False
    v.flags.writeable = False
    return SpectralBasis(eigenvalues=w, vectors=v)


@lru_cache(maxsize=128)
def _basis_for_size(N: int) -> SpectralBasis:
    return numeric_basis(build_jx(LatticeSpec(N)))


def spectral_basis(spec: LatticeSpec) -> SpectralBasis:
    """Numeric eigenbasis for the lattice, cached by size (kappa0-independent)."""
    return _basis_for_size(spec.N)


def physical_length(spec: LatticeSpec, Z: float) -> float:
    """Propagation length z in cm reaching transform order Z: z = Z / kappa0."""
    return Z / spec.kappa0
