import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from nbsloc.errors import DomainError
from nbsloc.quadrature import half_line_grid, suggested_cutoff
from nbsloc.states import (
    DiskPoint,
    HalfPlanePoint,
    LocalizationRadius,
    ModelParams,
    affine_coherent_state,
    bergman_basis,
    cayley_inverse,
    disk_kernel,
    disk_landau_level,
    halfplane_kernel,
    halfplane_landau_level,
    laguerre_function,
    max_landau_index,
    nb_pmf,
    nbs_expansion,
    nbs_wavefunction,
    photon_weight,
    principal_power,
)

disk_points = st.complex_numbers(max_magnitude=0.85, allow_nan=False, allow_infinity=False)


class TestDomainTypes:
    def test_model_params(self):
        ModelParams(1.5, 1)
        ModelParams(0.51, 0)
        with pytest.raises(DomainError):
            ModelParams(0.5, 0)
        with pytest.raises(DomainError) as err:
            ModelParams(1.5, 2)
        assert "floor(B - 1/2)" in str(err.value)
        with pytest.raises(DomainError):
            ModelParams(2.0, -1)

    def test_point_types(self):
        DiskPoint(0.5 + 0.2j)
        with pytest.raises(DomainError):
            DiskPoint(1.0 + 0.0j)
        HalfPlanePoint(0.3 + 1.0j)
        with pytest.raises(DomainError):
            HalfPlanePoint(0.3 - 1.0j)
        LocalizationRadius(0.6)
        for bad in (0.0, 1.0, 1.4):
            with pytest.raises(DomainError):
                LocalizationRadius(bad)

    def test_max_landau_index(self):
        assert max_landau_index(1.5) == 1
        assert max_landau_index(0.9) == 0
        assert max_landau_index(3.2) == 2


class TestAffineState:
    def test_direct_substitution(self):
        got = affine_coherent_state(0.0, 1.0, 1.0, 2.0)
        assert got == pytest.approx(math.sqrt(2.0) * math.exp(-1.0), abs=1e-12)

    @given(
        x=st.floats(-5.0, 5.0),
        y=st.floats(0.1, 4.0),
        B=st.floats(0.6, 3.0),
        xi=st.floats(0.05, 6.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_modulus_independent_of_x(self, x, y, B, xi):
        with_phase = abs(affine_coherent_state(x, y, B, xi))
        without = abs(affine_coherent_state(0.0, y, B, xi))
        assert with_phase == pytest.approx(without, rel=1e-12)

    def test_group_action_rescales_fiducial(self):
        # at x = 0 the label only rescales the argument of the fiducial vector
        B = 1.3
        for y in (0.5, 2.0):
            for xi in (0.7, 1.9):
                assert affine_coherent_state(0.0, y, B, xi / y) == pytest.approx(
                    affine_coherent_state(0.0, 1.0, B, xi), rel=1e-12
                )

    def test_domain(self):
        with pytest.raises(DomainError):
            affine_coherent_state(0.0, -1.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            affine_coherent_state(0.0, 1.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            affine_coherent_state(0.0, 1.0, 0.4, 1.0)


class TestCayley:
    def test_center(self):
        assert cayley_inverse(0.0 + 0.0j) == pytest.approx((0.0, 1.0))

    def test_derived_point(self):
        # |1 - i/2|^2 = 5/4
        x, y = cayley_inverse(0.5j)
        assert x == pytest.approx(-0.8, abs=1e-14)
        assert y == pytest.approx(0.6, abs=1e-14)

    def test_boundary_degeneration(self):
        _, y = cayley_inverse((1.0 - 1e-9) * cmath.exp(0.7j))
        assert 0.0 < y < 1e-8

    @given(z=disk_points)
    @settings(max_examples=150, deadline=None)
    def test_image_in_half_plane(self, z):
        _, y = cayley_inverse(z)
        assert y > 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            cayley_inverse(1.0 + 0.0j)


class TestNbsWavefunction:
    def test_center_equals_ground_laguerre(self):
        B = 1.25
        for xi in (0.3, 1.1, 2.4):
            want = math.sqrt(2.0 / math.gamma(2.0 * B)) * xi ** (2.0 * B - 0.5) * math.exp(-xi * xi / 2.0)
            assert nbs_wavefunction(0.0j, B, xi) == pytest.approx(want, rel=1e-13)
            assert laguerre_function(0, B, xi) == pytest.approx(want, rel=1e-13)

    def test_unit_norm(self):
        B = 1.25
        z = 0.3 + 0.4j
        grid = half_line_grid(500, suggested_cutoff(30, B))
        values = np.asarray([nbs_wavefunction(z, B, xi) for xi in grid.nodes])
        assert grid.integrate(np.abs(values) ** 2) == pytest.approx(1.0, abs=1e-10)

    def test_two_path_construction(self):
        # group route: modified affine state at the Cayley preimage; agrees with
        # the closed form after the unit-normalization constant sqrt(2B/Gamma(2B))
        rng = np.random.default_rng(31)
        for _ in range(10):
            z = complex(*rng.uniform(-0.5, 0.5, 2))
            B = rng.uniform(0.7, 2.5)
            xi = rng.uniform(0.2, 2.5)
            x, y = cayley_inverse(z)
            prefactor = ((1.0 - z.conjugate()) / (1.0 - z)) ** B
            normalize = math.sqrt(2.0 * B / math.gamma(2.0 * B))
            via_group = (
                normalize * math.sqrt(2.0 / xi) * prefactor
                * affine_coherent_state(x, y, B, xi * xi)
            )
            assert via_group == pytest.approx(nbs_wavefunction(z, B, xi), rel=1e-11)

    def test_overlap_closed_form(self):
        B = 1.1
        rng = np.random.default_rng(32)
        grid = half_line_grid(600, suggested_cutoff(40, B))
        for _ in range(4):
            z = complex(*rng.uniform(-0.55, 0.55, 2))
            w = complex(*rng.uniform(-0.55, 0.55, 2))
            vz = np.asarray([nbs_wavefunction(z, B, xi) for xi in grid.nodes])
            vw = np.asarray([nbs_wavefunction(w, B, xi) for xi in grid.nodes])
            got = grid.integrate(np.conjugate(vz) * vw)
            want = ((1.0 - abs(z) ** 2) * (1.0 - abs(w) ** 2)) ** B \
                * principal_power(1.0 - z.conjugate() * w, -2.0 * B)
            assert got == pytest.approx(want, abs=1e-10)


class TestBergmanBasis:
    def test_constant_element(self):
        assert bergman_basis(0, 1.5, 0.4 + 0.1j) == pytest.approx(math.sqrt(2.0), rel=1e-14)

    def test_first_element(self):
        got = bergman_basis(1, 1.0, 0.5 + 0.0j)
        assert got == pytest.approx(math.sqrt(2.0) * 0.5, rel=1e-13)

    def test_diagonal_sum_binomial(self):
        B, z = 1.5, 0.6
        total = sum(abs(bergman_basis(j, B, z)) ** 2 for j in range(130))
        want = (2.0 * B - 1.0) * (1.0 - z * z) ** (-2.0 * B)
        assert total == pytest.approx(want, rel=1e-12)


class TestLaguerreFunction:
    def test_orthonormal_small(self):
        for B in (0.8, 1.5, 3.0):
            grid = half_line_grid(400, suggested_cutoff(8, B))
            table = np.stack([laguerre_function(j, B, grid.nodes) for j in range(9)])
            gram = (table * grid.weights) @ table.T
            assert np.max(np.abs(gram - np.eye(9))) <= 1e-10

    def test_positive_near_origin(self):
        for j in range(6):
            assert laguerre_function(j, 1.2, 1e-3) > 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            laguerre_function(0, 1.2, 0.0)
        with pytest.raises(DomainError):
            laguerre_function(-1, 1.2, 1.0)


class TestNbsExpansion:
    def test_center_any_truncation(self):
        B, xi = 1.4, 0.9
        for J in (0, 3, 15):
            assert nbs_expansion(0.0j, B, xi, J) == pytest.approx(
                laguerre_function(0, B, xi), rel=1e-13
            )

    def test_converges_to_closed_form(self):
        z, B, xi = 0.5, 1.25, 1.7
        closed = nbs_wavefunction(z, B, xi)
        assert abs(nbs_expansion(z, B, xi, 80) - closed) <= 1e-8

    def test_uniform_convergence_on_window(self):
        z, B = 0.4 + 0.3j, 1.25
        worst = max(
            abs(nbs_expansion(z, B, xi, 90) - nbs_wavefunction(z, B, xi))
            for xi in np.linspace(0.2, 5.0, 25)
        )
        assert worst <= 1e-8

    def test_geometric_tail(self):
        z, B, xi = 0.5, 1.25, 1.7
        closed = nbs_wavefunction(z, B, xi)
        errs = [abs(nbs_expansion(z, B, xi, J) - closed) for J in range(20, 41, 5)]
        assert all(b < a for a, b in zip(errs, errs[1:]))


class TestHalfPlaneKernel:
    def test_diagonal(self):
        assert halfplane_kernel(1.0 + 2.0j, 1.0 + 2.0j, 1.3) == pytest.approx(1.0, abs=1e-14)

    @given(
        wr=st.floats(-3.0, 3.0), wi=st.floats(0.05, 3.0),
        zr=st.floats(-3.0, 3.0), zi=st.floats(0.05, 3.0),
        B=st.floats(0.6, 3.0),
    )
    @settings(max_examples=150, deadline=None)
    def test_hermitian_and_bounded(self, wr, wi, zr, zi, B):
        w = complex(wr, wi)
        zeta = complex(zr, zi)
        k = halfplane_kernel(w, zeta, B)
        assert k == pytest.approx(halfplane_kernel(zeta, w, B).conjugate(), rel=1e-10, abs=1e-12)
        assert abs(k) <= 1.0 + 1e-12
        if abs(w - zeta) > 1e-6:  # strict deficit must be representable
            assert abs(k) < 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            halfplane_kernel(1.0 - 0.1j, 1.0 + 1.0j, 1.0)


class TestDiskKernel:
    def test_lowest_level_form(self):
        B = 1.5
        params = ModelParams(B, 0)
        z, w = 0.3 + 0.2j, -0.1 + 0.4j
        want = math.pi * (2.0 * B - 1.0) * (1.0 - z * w.conjugate()) ** (-2.0 * B)
        assert disk_kernel(z, w, params) == pytest.approx(want, rel=1e-13)

    def test_hermitian(self):
        params = ModelParams(2.5, 1)
        rng = np.random.default_rng(33)
        for _ in range(10):
            z = complex(*rng.uniform(-0.6, 0.6, 2))
            w = complex(*rng.uniform(-0.6, 0.6, 2))
            assert disk_kernel(z, w, params) == pytest.approx(
                disk_kernel(w, z, params).conjugate(), rel=1e-12
            )

    def test_center_value_first_level(self):
        params = ModelParams(2.0, 1)
        got = disk_kernel(0.0j, 0.0j, params)
        assert got == pytest.approx(math.pi, rel=1e-13)


class TestNbPmf:
    def test_zero_count(self):
        assert nb_pmf(0, 1.5, 0.3) == pytest.approx(0.7 ** 3.0, rel=1e-14)

    def test_normalization(self):
        total = sum(nb_pmf(j, 1.5, 0.4) for j in range(300))
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_mean_identity(self):
        B, p = 1.25, 0.3
        mean = sum(j * nb_pmf(j, B, p) for j in range(400))
        assert mean == pytest.approx(2.0 * B * p / (1.0 - p), abs=1e-10)

    def test_against_product_oracle(self):
        for j in (0, 1, 7, 23):
            assert nb_pmf(j, 1.3, 0.45) == pytest.approx(
                oracles.nb_pmf_direct(j, 1.3, 0.45), rel=1e-12
            )

    def test_domain(self):
        with pytest.raises(DomainError):
            nb_pmf(0, 1.5, 1.0)
        with pytest.raises(DomainError):
            nb_pmf(-1, 1.5, 0.2)


class TestLandauLevels:
    def test_formulas(self):
        assert halfplane_landau_level(2.5, 0) == pytest.approx(2.5 * (1.0 - 2.5))
        assert halfplane_landau_level(2.5, 1) == pytest.approx(1.5 * (-0.5))
        assert disk_landau_level(2.5, 0) == 0.0
        assert disk_landau_level(2.5, 2) == pytest.approx(8.0 * (5.0 - 3.0))

    def test_admissibility(self):
        with pytest.raises(DomainError):
            halfplane_landau_level(1.2, 1)
        with pytest.raises(DomainError):
            disk_landau_level(1.2, 1)


class TestPhotonWeight:
    def test_large_index_stable(self):
        # stays finite via log-gamma even where Gamma itself overflows
        w = photon_weight(400, 2.0)
        assert math.isfinite(w) and w > 0.0

    def test_principal_power_cut(self):
        with pytest.raises(DomainError):
            principal_power(-1.0, 0.5)
