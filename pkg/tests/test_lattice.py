import math

import numpy as np
import pytest

from dfrft import (
    LatticeSpec,
    NumericError,
    UsageError,
    analytic_eigenvector,
    build_jx,
    exact_eigenvalues,
    numeric_basis,
    physical_length,
    spectral_basis,
)


class TestLatticeSpec:
    def test_j_and_sites(self):
        spec = LatticeSpec(8)
        assert spec.j == 3.5
        assert spec.sites()[0] == -3.5
        assert spec.sites()[-1] == 3.5

    def test_site_index_roundtrip(self):
        spec = LatticeSpec(9)
        for i, m in enumerate(spec.sites()):
            assert spec.site_index(float(m)) == i

    def test_invalid_inputs(self):
        with pytest.raises(UsageError):
            LatticeSpec(1)
        with pytest.raises(UsageError):
            LatticeSpec(8, kappa0=0.0)
        with pytest.raises(UsageError):
            LatticeSpec(8).site_index(0.0)  # not on the half-integer grid
        with pytest.raises(UsageError):
            LatticeSpec(8).site_index(4.5)


class TestBuildJx:
    def test_two_sites(self):
        assert build_jx(LatticeSpec(2)).offdiag == pytest.approx([0.5])

    def test_three_sites(self):
        off = build_jx(LatticeSpec(3)).offdiag
        assert off == pytest.approx([math.sqrt(2) / 2, math.sqrt(2) / 2], abs=1e-15)

    def test_eight_sites(self):
        off = build_jx(LatticeSpec(8)).offdiag
        assert off[0] == pytest.approx(0.5 * math.sqrt(7), rel=1e-15)
        assert off[3] == pytest.approx(2.0, rel=1e-15)

    @pytest.mark.parametrize("n", [2, 3, 4, 8, 9, 16, 33, 64])
    def test_mirror_symmetry(self, n):
        off = build_jx(LatticeSpec(n)).offdiag
        assert np.array_equal(off, off[::-1])

    def test_all_positive(self):
        off = build_jx(LatticeSpec(32)).offdiag
        assert np.all(off > 0)

    def test_to_dense(self):
        jx = build_jx(LatticeSpec(3))
        dense = jx.to_dense()
        assert dense == pytest.approx(dense.T)
        assert np.all(np.diag(dense) == 0)


class TestSpectrum:
    @pytest.mark.parametrize("n", [2, 3, 16])
    def test_exact_ladder(self, n):
        j = (n - 1) / 2
        assert exact_eigenvalues(LatticeSpec(n)) == pytest.approx(np.arange(n) - j)

    @pytest.mark.parametrize("n", range(2, 65))
    def test_numeric_matches_ladder(self, n):
        basis = numeric_basis(build_jx(LatticeSpec(n)))
        want = exact_eigenvalues(LatticeSpec(n))
        assert np.max(np.abs(basis.eigenvalues - want)) < 1e-9


class TestNumericBasis:
    def test_two_site_closed_form(self):
        basis = numeric_basis(build_jx(LatticeSpec(2)))
        s = 1 / math.sqrt(2)
        assert basis.eigenvalues == pytest.approx([-0.5, 0.5])
        assert basis.vectors[:, 0] == pytest.approx([s, -s])
        assert basis.vectors[:, 1] == pytest.approx([s, s])

    def test_three_site_middle_vector(self):
        basis = numeric_basis(build_jx(LatticeSpec(3)))
        mid = basis.vectors[:, 1]
        s = 1 / math.sqrt(2)
        assert np.abs(mid) == pytest.approx([s, 0.0, s], abs=1e-12)
        assert mid[0] * mid[2] < 0

    def test_orthonormality_32(self):
        basis = numeric_basis(build_jx(LatticeSpec(32)))
        defect = np.max(np.abs(basis.vectors.T @ basis.vectors - np.eye(32)))
        assert defect < 1e-10

    @pytest.mark.parametrize("n", [2, 3, 8, 17, 32])
    def test_residuals(self, n):
        jx = build_jx(LatticeSpec(n))
        basis = numeric_basis(jx)
        res = jx.to_dense() @ basis.vectors - basis.vectors * basis.eigenvalues
        assert np.max(np.linalg.norm(res, axis=0)) < 1e-10

    @pytest.mark.parametrize("n", [3, 8, 21])
    def test_mirror_parity_per_column(self, n):
        basis = numeric_basis(build_jx(LatticeSpec(n)))
        for q in range(n):
            col = basis.vectors[:, q]
            flipped = col[::-1]
            sign = 1.0 if np.dot(flipped, col) > 0 else -1.0
            assert np.max(np.abs(flipped - sign * col)) < 1e-10

    def test_component_accessor(self):
        basis = spectral_basis(LatticeSpec(8))
        assert basis.component(-3.5, 3.5) == basis.vectors[0, 7]


class TestAnalyticEigenvectors:
    def test_two_site(self):
        spec = LatticeSpec(2)
        s = 1 / math.sqrt(2)
        assert analytic_eigenvector(spec, 0.5) == pytest.approx([s, s], abs=1e-14)
        assert analytic_eigenvector(spec, -0.5) == pytest.approx([s, -s], abs=1e-14)

    def test_unit_norm(self):
        spec = LatticeSpec(9)
        for m in spec.sites():
            assert np.linalg.norm(analytic_eigenvector(spec, float(m))) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("n", [2, 3, 4, 8, 9, 16, 25, 32])
    def test_matches_numeric_columns(self, n):
        spec = LatticeSpec(n)
        basis = spectral_basis(spec)
        for qi, m in enumerate(spec.sites()):
            got = analytic_eigenvector(spec, float(m))
            assert np.max(np.abs(got - basis.vectors[:, qi])) < 1e-9

    def test_normalization_constant_is_unity(self):
        # the closed form as printed already yields unit-norm columns, so the
        # fitted per-column constant against the numeric basis is 1
        spec = LatticeSpec(16)
        basis = spectral_basis(spec)
        for qi, m in enumerate(spec.sites()):
            got = analytic_eigenvector(spec, float(m))
            scale = float(np.dot(got, basis.vectors[:, qi]))
            assert scale == pytest.approx(1.0, abs=1e-10)

    def test_invalid_ladder_index(self):
        with pytest.raises(UsageError):
            analytic_eigenvector(LatticeSpec(8), 0.0)


class TestPhysicalLength:
    def test_fourier_plane_lengths(self):
        assert physical_length(LatticeSpec(25, kappa0=0.21), math.pi / 2) == pytest.approx(7.48, abs=0.01)
        assert physical_length(LatticeSpec(8, kappa0=0.6), math.pi / 2) == pytest.approx(2.62, abs=0.01)

    def test_zero(self):
        assert physical_length(LatticeSpec(4, kappa0=1.0), 0.0) == 0.0


class TestCaching:
    def test_spectral_basis_cached_by_size(self):
        a = spectral_basis(LatticeSpec(12, kappa0=0.3))
        b = spectral_basis(LatticeSpec(12, kappa0=2.0))
        assert a is b

    def test_basis_arrays_read_only(self):
        basis = spectral_basis(LatticeSpec(6))
        with pytest.raises(ValueError):
            basis.vectors[0, 0] = 1.0
        with pytest.raises(ValueError):
            basis.eigenvalues[0] = 1.0
