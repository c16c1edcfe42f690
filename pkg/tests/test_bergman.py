import math

import numpy as np
import pytest

from nbsloc.bergman import (
    BergmanFunction,
    KernelEvalMode,
    bargmann_inverse,
    bargmann_transform,
    kernel_closed,
    kernel_limit,
    kernel_series,
    transferred_apply,
)
from nbsloc.errors import (
    AccuracyError,
    ConvergenceError,
    DomainError,
    UnsupportedRepresentationError,
)
from nbsloc.locop import SpectralData, disk_eigenvalue, spectral_apply
from nbsloc.quadrature import disk_grid
from nbsloc.specfun import SeriesControl
from nbsloc.states import LocalizationRadius, bergman_basis, laguerre_function


class TestBergmanFunction:
    def test_requires_some_representation(self):
        with pytest.raises(DomainError):
            BergmanFunction(1.5)

    def test_coefficient_evaluation(self):
        f = BergmanFunction(1.5, coefficients=[1.0, 2.0])
        z = 0.3 + 0.1j
        want = bergman_basis(0, 1.5, z) + 2.0 * bergman_basis(1, 1.5, z)
        assert f(z) == pytest.approx(want, rel=1e-14)
        pts = np.array([0.1 + 0.0j, 0.2 - 0.3j])
        vals = f.values(pts)
        assert vals[1] == pytest.approx(f(pts[1]), rel=1e-14)

    def test_projection_recovers_coefficients(self):
        B = 1.25
        coeffs = np.array([0.5, -1.0 + 0.5j, 0.0, 2.0j])
        reference = BergmanFunction(B, coefficients=coeffs)
        pointwise = BergmanFunction(B, evaluator=reference)
        projected = pointwise.project(5)
        assert np.allclose(projected.coefficients[:4], coeffs, atol=1e-10)
        assert np.allclose(projected.coefficients[4:], 0.0, atol=1e-10)

    def test_analyticity_spot_check(self):
        analytic = BergmanFunction(1.5, evaluator=lambda z: z ** 3 / (1.0 - 0.5 * z))
        analytic.check_analytic()
        not_analytic = BergmanFunction(1.5, evaluator=lambda z: z.conjugate())
        with pytest.raises(DomainError):
            not_analytic.check_analytic()


class TestBargmannTransform:
    def test_basis_correspondence(self):
        B = 1.25
        z = 0.4 - 0.2j
        for k in range(5):
            coeffs = np.zeros(k + 1)
            coeffs[k] = 1.0
            assert bargmann_transform(coeffs, z, B) == pytest.approx(
                bergman_basis(k, B, z), rel=1e-14
            )

    def test_zero(self):
        assert bargmann_transform(np.zeros(3), 0.2j, 1.5) == 0.0

    def test_inverse_basis_correspondence(self):
        B = 1.25
        for k in (0, 2):
            coeffs = np.zeros(k + 1)
            coeffs[k] = 1.0
            F = BergmanFunction(B, coefficients=coeffs)
            for xi in (0.4, 1.3):
                assert bargmann_inverse(F, xi, k) == pytest.approx(
                    laguerre_function(k, B, xi), rel=1e-13
                )

    def test_round_trip_exact(self):
        B = 1.5
        rng = np.random.default_rng(9)
        coeffs = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        # transform then re-project is identity on coefficients by construction;
        # check the value route instead at a handful of points
        F = BergmanFunction(B, coefficients=coeffs)
        projected = BergmanFunction(B, evaluator=F).project(7)
        assert np.allclose(projected.coefficients, coeffs, atol=1e-9)

    def test_inverse_needs_coefficients(self):
        F = BergmanFunction(1.5, evaluator=lambda z: 1.0 + 0j)
        with pytest.raises(UnsupportedRepresentationError):
            bargmann_inverse(F, 1.0, 3)


class TestKernelSeries:
    def test_center_value(self):
        B, s = 1.5, 0.36
        got = kernel_series(0.0j, 0.37 + 0.1j, B, s)
        want = (2.0 * B - 1.0) * (1.0 - (1.0 - s) ** (2.0 * B - 1.0))
        assert got == pytest.approx(want, rel=1e-12)

    def test_hermitian(self):
        B, s = 1.25, 0.49
        z, w = 0.5 + 0.2j, -0.3 + 0.4j
        assert kernel_series(z, w, B, s) == pytest.approx(
            kernel_series(w, z, B, s).conjugate(), rel=1e-12
        )

    def test_series_exhaustion_raises(self):
        with pytest.raises(ConvergenceError):
            kernel_series(0.9, 0.9, 1.5, 0.5, SeriesControl(max_terms=3))


class TestKernelClosed:
    def test_center_unit_strength(self):
        got = kernel_closed(0.0j, 0.3 + 0.0j, 1.0, 0.25)
        assert got == pytest.approx(0.25, rel=1e-12)

    def test_center_general_strength(self):
        B, s = 1.25, 0.36
        got = kernel_closed(0.0j, 0.2 - 0.4j, B, s)
        want = (2.0 * B - 1.0) * (1.0 - (1.0 - s) ** (2.0 * B - 1.0))
        assert got == pytest.approx(want, rel=1e-10)

    def test_agreement_with_series(self):
        got = kernel_closed(0.5 + 0.0j, 0.3 + 0.4j, 1.25, 0.36)
        want = kernel_series(0.5 + 0.0j, 0.3 + 0.4j, 1.25, 0.36)
        assert abs(got - want) / abs(want) <= 1e-8

    def test_approaches_limit(self):
        B = 1.5
        z, w = 0.5, 0.6  # conj(z) w = 0.3
        lim = kernel_limit(z, w, B)
        gaps = [abs(kernel_closed(z, w, B, s) - lim) / abs(lim) for s in (0.9, 0.99, 0.999)]
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] <= 1e-2

    def test_domain(self):
        with pytest.raises(DomainError):
            kernel_closed(0.1, 0.1, 1.5, 1.0)


class TestKernelLimit:
    def test_center(self):
        assert kernel_limit(0.0j, 0.5j, 1.5) == pytest.approx(2.0, rel=1e-14)

    def test_diagonal_real_and_bounded_below(self):
        for z in (0.0j, 0.3 + 0.4j, -0.7j):
            val = kernel_limit(z, z, 1.25)
            assert abs(val.imag) <= 1e-12
            assert val.real >= 2.0 * 1.25 - 1.0

    def test_reproducing_property(self):
        for B in (1.0, 1.5):
            grid = disk_grid(64, 64, B)
            w = 0.4 + 0.25j
            kvals = np.asarray([kernel_limit(z, w, B) for z in grid.nodes])
            for k in range(6):
                cvals = np.asarray([bergman_basis(k, B, z) for z in grid.nodes])
                got = grid.weights @ (kvals * cvals) / math.pi
                assert got == pytest.approx(bergman_basis(k, B, w), abs=1e-7)


class TestKernelPositivity:
    def test_gram_psd(self):
        rng = np.random.default_rng(61)
        B, s = 1.25, 0.49
        pts = [complex(*rng.uniform(-0.5, 0.5, 2)) for _ in range(6)]
        mat = np.array([[kernel_series(zi, zj, B, s) for zj in pts] for zi in pts])
        assert np.max(np.abs(mat - mat.conj().T)) <= 1e-10
        eigs = np.linalg.eigvalsh(0.5 * (mat + mat.conj().T))
        assert float(np.min(eigs)) >= -1e-10


class TestTransferredApply:
    def test_eigen_action(self):
        B, R = 1.5, 0.6
        w = 0.3 + 0.2j
        for k in range(5):
            coeffs = np.zeros(k + 1, dtype=complex)
            coeffs[k] = 1.0
            got = transferred_apply(BergmanFunction(B, coeffs), w, B, R)
            want = disk_eigenvalue(k, B, R) * bergman_basis(k, B, w)
            assert abs(got - want) <= 1e-7

    def test_zero_function(self):
        got = transferred_apply(BergmanFunction(1.5, np.zeros(3)), 0.2j, 1.5, 0.6)
        assert abs(got) <= 1e-14

    def test_linearity(self):
        B, R = 1.25, 0.5
        w = -0.2 + 0.3j
        rng = np.random.default_rng(62)
        a = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        b = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        combined = transferred_apply(BergmanFunction(B, a + 2.0 * b), w, B, R)
        separate = (transferred_apply(BergmanFunction(B, a), w, B, R)
                    + 2.0 * transferred_apply(BergmanFunction(B, b), w, B, R))
        assert combined == pytest.approx(separate, rel=1e-9)

    def test_closed_form_mode(self):
        # terminating strength keeps the Appell evaluation cheap
        B, R = 1.5, 0.6
        w = 0.25 + 0.15j
        coeffs = np.array([0.0, 1.0], dtype=complex)
        got = transferred_apply(BergmanFunction(B, coeffs), w, B, R,
                                mode=KernelEvalMode("closed_form"),
                                n_r=24, n_theta=32)
        want = disk_eigenvalue(1, B, R) * bergman_basis(1, B, w)
        assert abs(got - want) <= 1e-7

    def test_insufficient_grid_detected(self):
        B, R = 1.5, 0.6
        with pytest.raises(AccuracyError):
            transferred_apply(
                BergmanFunction(B, np.array([0.0, 0.0, 0.0, 0.0, 1.0], dtype=complex)),
                0.5 + 0.3j, B, R, n_r=2, n_theta=3, refine_tol=1e-14,
            )


class TestIntertwining:
    def test_operator_orders_agree(self):
        B, R = 1.25, 0.6
        spec_data = SpectralData(B, LocalizationRadius(R))
        rng = np.random.default_rng(63)
        for _ in range(10):
            c = rng.standard_normal(6) + 1j * rng.standard_normal(6)
            w = complex(*rng.uniform(-0.45, 0.45, 2))
            direct = bargmann_transform(spectral_apply(c, spec_data), w, B)
            via_kernel = transferred_apply(BergmanFunction(B, coefficients=c), w, B, R)
            assert abs(direct - via_kernel) <= 1e-7 * max(1.0, abs(direct))
