"""Named verification checks certifying every identity the library relies on.

Each check is deterministic (fixed seeds, fixed grids), returns a
CheckResult with the worst measured error and its pinned tolerance, and
runs in at most a few seconds.  ``run_all`` executes the whole battery;
the CLI command ``verify`` reports it and exits nonzero on any failure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import bergman, locop, quadrature, specfun, states
from .errors import DomainError
from .specfun import SeriesControl
from .states import ModelParams

__all__ = ["CheckResult", "run_all", "run_check", "check_names"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_error: float
    tolerance: float
    detail: str = ""


def _result(name: str, max_error: float, tolerance: float, detail: str = "",
            passed: bool | None = None) -> CheckResult:
    ok = (max_error <= tolerance) if passed is None else passed
    return CheckResult(name, bool(ok), float(max_error), float(tolerance), detail)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _random_disk_point(rng: np.random.Generator, radius: float) -> complex:
    r = radius * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return r * cmath.exp(1j * theta)


def _state_values(z: complex, B: float, xi: np.ndarray) -> np.ndarray:
    """Vectorized disk-state wavefunction over a xi grid."""
    base = (1.0 - abs(z) ** 2) / (1.0 - z) ** 2
    amp = math.sqrt(2.0 / math.exp(math.lgamma(2.0 * B))) * xi ** (2.0 * B - 0.5)
    return amp * base ** B * np.exp(-0.5 * ((1.0 + z) / (1.0 - z)) * xi * xi)


# --------------------------------------------------------------------------
# special functions


def check_incbeta_reflection() -> CheckResult:
    """I_x(a,b) + I_{1-x}(b,a) = 1."""
    rng = _rng(101)
    worst = 0.0
    for _ in range(200):
        x = rng.uniform(0.0, 1.0)
        a = rng.uniform(0.05, 20.0)
        b = rng.uniform(0.05, 20.0)
        err = abs(specfun.reg_inc_beta(x, a, b) + specfun.reg_inc_beta(1.0 - x, b, a) - 1.0)
        worst = max(worst, err)
    return _result("incbeta_reflection", worst, 1e-12)


def check_laguerre_generating_function() -> CheckResult:
    """Partial sums of t^j L_j^(alpha)(x) against (1-t)^(-alpha-1) exp(-t x/(1-t))."""
    worst = 0.0
    for alpha in (-0.5, 0.0, 1.5, 3.0):
        for x in (0.5, 2.0):
            for t in (0.1, 0.4):
                partial = sum(t ** j * specfun.laguerre(j, alpha, x) for j in range(61))
                closed = (1.0 - t) ** (-alpha - 1.0) * math.exp(-t * x / (1.0 - t))
                worst = max(worst, abs(partial - closed) / abs(closed))
    return _result("laguerre_generating_function", worst, 1e-9)


def check_gauss_theorem() -> CheckResult:
    """Value at z = 1 and the monotone approach along the real axis."""
    worst = 0.0
    for B in (0.75, 1.0, 1.5, 2.5, 4.0):
        got = specfun.gauss_2f1(2.0 - 2.0 * B, 1.0, 2.0, 1.0).value.real
        worst = max(worst, abs(got - 1.0 / (2.0 * B - 1.0)))
    B = 1.25
    at_one = specfun.gauss_2f1(2.0 - 2.0 * B, 1.0, 2.0, 1.0).value.real
    gaps = []
    for k in range(2, 6):
        val = specfun.gauss_2f1(2.0 - 2.0 * B, 1.0, 2.0, 1.0 - 10.0 ** (-k)).value.real
        gaps.append(abs(val - at_one))
    monotone = all(gaps[i + 1] < gaps[i] for i in range(len(gaps) - 1))
    return _result("gauss_theorem", worst, 1e-10,
                   detail=f"approach gaps {['%.3e' % g for g in gaps]}",
                   passed=(worst <= 1e-10) and monotone)


def check_appell_reductions() -> CheckResult:
    """Diagonal reduction, both Euler-type transformations, and index symmetry."""
    rng = _rng(202)
    worst = 0.0
    exact_symmetry = True
    for _ in range(20):
        a = rng.uniform(-2.0, 2.0)
        b1 = rng.uniform(-2.0, 2.0)
        b2 = rng.uniform(-2.0, 2.0)
        c = rng.uniform(1.0, 4.0)
        z = rng.uniform(-0.45, 0.45)
        lhs = specfun.appell_f1(a, b1, b2, c, z, z).value
        rhs = specfun.gauss_2f1(a, b1 + b2, c, z).value
        worst = max(worst, abs(lhs - rhs) / max(abs(rhs), 1e-30))

        u = rng.uniform(-0.3, 0.3)
        v = rng.uniform(-0.3, 0.3)
        lhs = specfun.appell_f1(a, b1, b2, c, u, v).value
        pfaff = (1.0 - u) ** (-b1) * (1.0 - v) ** (-b2) * specfun.appell_f1(
            c - a, b1, b2, c, u / (u - 1.0), v / (v - 1.0)).value
        worst = max(worst, abs(lhs - pfaff) / max(abs(lhs), 1e-30))
        euler = (1.0 - u) ** (c - a - b1) * (1.0 - v) ** (-b2) * specfun.appell_f1(
            c - a, c - b1 - b2, b2, c, u, (u - v) / (1.0 - v)).value
        worst = max(worst, abs(lhs - euler) / max(abs(lhs), 1e-30))

        swapped = specfun.appell_f1(a, b2, b1, c, v, u).value
        exact_symmetry = exact_symmetry and (swapped == lhs)
    return _result("appell_f1_reductions", worst, 1e-9,
                   detail=f"index symmetry bit-exact: {exact_symmetry}",
                   passed=(worst <= 1e-9) and exact_symmetry)


# --------------------------------------------------------------------------
# quadrature


def check_radial_rule() -> CheckResult:
    """Weighted moments against Beta values, plus error decay under doubling."""
    worst = 0.0
    for B in (0.75, 1.0, 1.5, 3.0):
        grid = quadrature.radial_jacobi_grid(40, B)
        for j in range(0, 20, 3):
            got = float(grid.integrate(grid.nodes ** j))
            want = math.exp(specfun.log_beta(j + 1.0, 2.0 * B - 1.0))
            worst = max(worst, abs(got - want) / want)
    smooth = lambda r: np.cos(3.0 * r) * np.exp(r)
    exact = float(quadrature.radial_jacobi_grid(200, 1.25).integrate(smooth))
    err_n = abs(float(quadrature.radial_jacobi_grid(6, 1.25).integrate(smooth)) - exact)
    err_2n = abs(float(quadrature.radial_jacobi_grid(12, 1.25).integrate(smooth)) - exact)
    return _result("radial_rule_beta_integrals", worst, 1e-13,
                   detail=f"doubling err {err_n:.2e} -> {err_2n:.2e}",
                   passed=(worst <= 1e-13) and (err_2n < err_n))


def check_disk_rule_delta() -> CheckResult:
    """Angular orthogonality: the quantized constant symbol is the identity matrix."""
    B = 1.5
    grid = quadrature.disk_grid(48, 64, B)
    worst = 0.0
    for j in range(13):
        for k in range(13):
            got = locop.quantization_matrix_element(lambda z: 1.0, j, k, B, grid)
            want = 1.0 if j == k else 0.0
            worst = max(worst, abs(got - want))
    return _result("disk_rule_delta_structure", worst, 1e-12)


def check_oscillator_residual() -> CheckResult:
    """Finite-difference eigen-residual of the Laguerre functions."""
    worst = 0.0
    for B, js in ((1.5, range(6)), (0.8, (0, 3))):
        for j in js:
            worst = max(worst, quadrature.hamiltonian_residual(j, B))
    return _result("oscillator_eigen_residual", worst, 1e-3)


# --------------------------------------------------------------------------
# states


def check_laguerre_orthonormality() -> CheckResult:
    """Gram matrix of the first 21 Laguerre functions, three strengths."""
    worst = 0.0
    for B in (0.8, 1.5, 3.0):
        grid = quadrature.half_line_grid(500, quadrature.suggested_cutoff(20, B))
        table = np.stack([states.laguerre_function(j, B, grid.nodes) for j in range(21)])
        gram = (table * grid.weights) @ table.T
        worst = max(worst, float(np.max(np.abs(gram - np.eye(21)))))
    return _result("laguerre_orthonormality", worst, 1e-8)


def check_state_normalization() -> CheckResult:
    """Unit norms and the closed-form pairwise overlap of the disk states."""
    worst = 0.0
    rng = _rng(303)
    for B in (0.8, 1.25, 2.0):
        grid = quadrature.half_line_grid(600, quadrature.suggested_cutoff(40, B))
        for _ in range(4):
            z = _random_disk_point(rng, 0.7)
            w = _random_disk_point(rng, 0.7)
            vz = _state_values(z, B, grid.nodes)
            vw = _state_values(w, B, grid.nodes)
            norm = float(grid.integrate(np.abs(vz) ** 2).real)
            worst = max(worst, abs(norm - 1.0))
            overlap = complex(grid.integrate(np.conjugate(vz) * vw))
            want = ((1.0 - abs(z) ** 2) * (1.0 - abs(w) ** 2)) ** B \
                * states.principal_power(1.0 - z.conjugate() * w, -2.0 * B)
            worst = max(worst, abs(overlap - want))
    return _result("state_normalization_overlap", worst, 1e-10)


def check_state_quadrature_coefficients() -> CheckResult:
    """Half-line quadrature route to the number-state coefficients."""
    B = 1.25
    z = 0.4 + 0.2j
    grid = quadrature.half_line_grid(400, quadrature.suggested_cutoff(10, B))
    vz = _state_values(z, B, grid.nodes)
    rescale = (1.0 - abs(z) ** 2) ** (-B) * math.sqrt(2.0 * B - 1.0)
    worst = 0.0
    for k in range(7):
        got = complex(grid.integrate(states.laguerre_function(k, B, grid.nodes) * vz)) * rescale
        worst = max(worst, abs(got - states.bergman_basis(k, B, z)))
    return _result("state_quadrature_coefficients", worst, 1e-8)


def check_resolution_of_identity() -> CheckResult:
    """Frame property of the disk states over the invariant measure."""
    B = 1.25
    rng = _rng(404)
    cf = rng.standard_normal(7) + 1j * rng.standard_normal(7)
    cg = rng.standard_normal(7) + 1j * rng.standard_normal(7)
    grid = quadrature.disk_grid(48, 32, B)
    rho = np.abs(grid.nodes) ** 2
    basis = np.stack([[states.bergman_basis(j, B, z) for z in grid.nodes] for j in range(7)])
    f_side = (1.0 - rho) ** B / math.sqrt(2.0 * B - 1.0) * (np.conjugate(cf) @ basis)
    g_side = (1.0 - rho) ** B / math.sqrt(2.0 * B - 1.0) * (cg @ np.conjugate(basis))
    measure = (2.0 * B - 1.0) / (math.pi * (1.0 - rho) ** (2.0 * B))
    got = complex(grid.weights @ (f_side * g_side * measure))
    want = complex(np.conjugate(cf) @ cg)
    return _result("resolution_of_identity", abs(got - want) / abs(want), 1e-8)


def check_expansion_convergence() -> CheckResult:
    """Truncated number-state expansion converges to the closed form."""
    B, z, xi = 1.25, 0.5, 1.7
    closed = states.nbs_wavefunction(z, B, xi)
    err80 = abs(states.nbs_expansion(z, B, xi, 80) - closed)
    errs = [abs(states.nbs_expansion(z, B, xi, J) - closed) for J in range(20, 45, 4)]
    monotone = all(errs[i + 1] < errs[i] for i in range(len(errs) - 1))
    return _result("expansion_convergence", err80, 1e-8,
                   detail=f"tail envelope decreasing: {monotone}",
                   passed=(err80 <= 1e-8) and monotone)


def check_halfplane_kernel() -> CheckResult:
    """Hermitian symmetry, unit diagonal, and strict boundedness."""
    rng = _rng(505)
    worst = 0.0
    bounded = True
    for B in (0.8, 1.5, 3.0):
        for _ in range(25):
            w = complex(rng.uniform(-3, 3), rng.uniform(0.1, 3))
            zeta = complex(rng.uniform(-3, 3), rng.uniform(0.1, 3))
            k_wz = states.halfplane_kernel(w, zeta, B)
            k_zw = states.halfplane_kernel(zeta, w, B)
            worst = max(worst, abs(k_wz - k_zw.conjugate()))
            worst = max(worst, abs(states.halfplane_kernel(w, w, B) - 1.0))
            bounded = bounded and abs(k_wz) <= 1.0 + 1e-14 and (w == zeta or abs(k_wz) < 1.0)
    return _result("halfplane_kernel_bounds", worst, 1e-12,
                   detail=f"modulus bounded by one: {bounded}",
                   passed=(worst <= 1e-12) and bounded)


# --------------------------------------------------------------------------
# localization operator


def check_spectrum() -> CheckResult:
    """Bounds, strict decrease, the B = 1 closed form, and the oscillator function."""
    worst_b1 = 0.0
    ordered = True
    in_range = True
    for B in (0.8, 1.0, 1.5, 3.0):
        for R in (0.3, 0.6, 0.9):
            lam = [locop.disk_eigenvalue(j, B, R) for j in range(51)]
            in_range = in_range and all(0.0 <= v <= 1.0 for v in lam)
            ordered = ordered and all(lam[j + 1] < lam[j] for j in range(50))
    for j in range(21):
        worst_b1 = max(worst_b1, abs(locop.disk_eigenvalue(j, 1.0, 0.5) - 0.25 ** (j + 1)))
    exact_fn = all(
        locop.as_function_of_hamiltonian(j + 1, 1.5, 0.7) == locop.disk_eigenvalue(j, 1.5, 0.7)
        for j in range(31)
    )
    return _result("spectrum_bounds_monotone", worst_b1, 1e-12,
                   detail=f"monotone: {ordered}, in [0,1]: {in_range}, H-function exact: {exact_fn}",
                   passed=(worst_b1 <= 1e-12) and ordered and in_range and exact_fn)


def check_eigenvalue_norm_identity() -> CheckResult:
    """Eigenvalues as squared norms of basis elements over the subdisk.

    Two-dimensional quadrature over |z| < R (radial rule mapped to [0, R^2]
    with the weight in the integrand, times the angular rule).
    """
    B, R = 1.25, 0.6
    rho, w_rho = quadrature.mapped_legendre(160, 0.0, R * R)
    theta = quadrature.angular_grid(32)
    z = np.sqrt(rho)[:, None] * np.exp(1j * theta.nodes)[None, :]
    wts = 0.5 * (w_rho * (1.0 - rho) ** (2.0 * B - 2.0))[:, None] * theta.weights[None, :]
    worst = 0.0
    for j in range(9):
        basis_vals = np.asarray([[states.bergman_basis(j, B, p) for p in row] for row in z])
        norm_sq = float(np.sum(wts * np.abs(basis_vals) ** 2) / math.pi)
        worst = max(worst, abs(norm_sq - locop.disk_eigenvalue(j, B, R)))
    return _result("eigenvalue_norm_identity", worst, 1e-8)


def check_matrix_elements() -> CheckResult:
    """Radial symbols quantize to diagonal matrices matching the eigenvalue rule."""
    B = 1.25
    grid = quadrature.disk_grid(48, 48, B)
    symbol = lambda z: 1.0 / (1.0 + abs(z) ** 2)
    radial = locop.RadialSymbol(lambda r: 1.0 / (1.0 + r), bound=1.0)
    worst = 0.0
    for j in range(9):
        for k in range(9):
            got = locop.quantization_matrix_element(symbol, j, k, B, grid)
            want = locop.radial_eigenvalue(radial, j, B) if j == k else 0.0
            worst = max(worst, abs(got - want))
    return _result("matrix_elements_radial_diagonal", worst, 1e-10)


def check_densities() -> CheckResult:
    """Level densities normalize and reduce to the Beta density at m = 0."""
    worst = 0.0
    for B, m in ((1.5, 0), (2.5, 1), (3.0, 2)):
        params = ModelParams(B, m)
        # Gauss nodes are strictly interior, so the [0, 1] endpoints are safe
        nodes, wts = quadrature.mapped_legendre(400, 0.0, 1.0)
        for j in (0, 1, 4):
            mass = float(wts @ locop.landau_density(j, params, nodes))
            worst = max(worst, abs(mass - 1.0))
    rho = np.linspace(0.0, 0.99, 100)
    reduction = np.max(np.abs(
        locop.landau_density(3, ModelParams(1.5, 0), rho) - locop.beta_density(3, 1.5, rho)
    ))
    worst = max(worst, float(reduction))
    return _result("probabilistic_densities", worst, 1e-9)


def mc_comparison_draws(rng: np.random.Generator, count: int) -> list[tuple[int, float, float]]:
    """(j, B, R) draws whose exact eigenvalue stays away from 0 and 1.

    Near-degenerate probabilities make the binomial sigma scale meaningless
    at any fixed sample size, so those corners are resampled.
    """
    draws = []
    while len(draws) < count:
        j = int(rng.integers(0, 8))
        B = float(rng.uniform(0.8, 3.0))
        R = float(rng.uniform(0.3, 0.9))
        if 1e-3 <= locop.disk_eigenvalue(j, B, R) <= 1.0 - 1e-3:
            draws.append((j, B, R))
    return draws


def check_mc_spectrum() -> CheckResult:
    """Monte-Carlo route agrees with the closed form at the 4-sigma level."""
    n = 250_000
    worst_sigmas = 0.0
    for i, (j, B, R) in enumerate(mc_comparison_draws(_rng(606), 4)):
        est, _ = locop.mc_eigenvalue(j, ModelParams(B), R, n, seed=900 + i)
        exact = locop.disk_eigenvalue(j, B, R)
        sigma = math.sqrt(exact * (1.0 - exact) / n)
        worst_sigmas = max(worst_sigmas, abs(est - exact) / sigma)
    est_n, se_n = locop.mc_eigenvalue(2, ModelParams(1.25), 0.6, 100_000, seed=77)
    est_4n, se_4n = locop.mc_eigenvalue(2, ModelParams(1.25), 0.6, 400_000, seed=77)
    rate_ok = abs(se_4n / se_n - 0.5) < 0.05
    return _result("mc_spectrum", worst_sigmas, 4.0,
                   detail=f"std-error ratio at 4x samples: {se_4n / se_n:.3f}",
                   passed=(worst_sigmas <= 4.0) and rate_ok)


def check_leakage() -> CheckResult:
    """Photon-counting estimate dominates the localized overlap on random states."""
    B, R, z0 = 1.25, 0.6, 0.5 + 0.3j
    bound = locop.leakage_bound(z0, B, R)
    rng = _rng(707)
    margin_ok = True
    for _ in range(50):
        c = rng.standard_normal(10) + 1j * rng.standard_normal(10)
        c /= np.linalg.norm(c)
        lhs = locop.localized_overlap(z0, B, R, c)
        margin_ok = margin_ok and lhs <= bound * (1.0 + 1e-12)
    closed0 = abs(locop.leakage_bound(0.0, 1.5, 0.5) - (1.0 - (1.0 - 0.25) ** 2.0))
    mass = sum(states.nb_pmf(j, 1.5, 0.4) for j in range(400))
    mean = sum(j * states.nb_pmf(j, 1.25, 0.3) for j in range(400))
    worst = max(closed0, abs(mass - 1.0), abs(mean - 2.0 * 1.25 * 0.3 / 0.7))
    return _result("leakage_inequality", worst, 1e-10,
                   detail=f"bound dominates all draws: {margin_ok}",
                   passed=(worst <= 1e-10) and margin_ok)


# --------------------------------------------------------------------------
# Bergman transfer


def check_kernel_equivalence() -> CheckResult:
    """Eigenvalue series against the Appell closed form across the parameter grid."""
    rng = _rng(808)
    worst = 0.0
    for B in (0.75, 1.0, 1.5, 2.5):
        for s in (0.09, 0.36, 0.81):
            for _ in range(4):
                z = _random_disk_point(rng, 0.8)
                w = _random_disk_point(rng, 0.8)
                series = bergman.kernel_series(z, w, B, s)
                closed = bergman.kernel_closed(z, w, B, s)
                worst = max(worst, abs(series - closed) / abs(series))
    return _result("kernel_series_closed_equivalence", worst, 1e-8)


def check_kernel_limit() -> CheckResult:
    """Monotone approach of the closed form to the reproducing kernel."""
    B, z, w = 1.5, 0.5, 0.6
    lim = bergman.kernel_limit(z, w, B)
    gaps = [abs(bergman.kernel_closed(z, w, B, s) - lim) / abs(lim) for s in (0.9, 0.99, 0.999)]
    monotone = gaps[0] > gaps[1] > gaps[2]
    return _result("kernel_limit_monotone", gaps[-1], 1e-2,
                   detail=f"gaps {['%.3e' % g for g in gaps]}",
                   passed=(gaps[-1] <= 1e-2) and monotone)


def check_kernel_positivity() -> CheckResult:
    """The kernel matrix at random points is Hermitian positive semidefinite."""
    rng = _rng(909)
    B, s = 1.25, 0.49
    pts = [_random_disk_point(rng, 0.7) for _ in range(6)]
    mat = np.array([[bergman.kernel_series(zi, zj, B, s) for zj in pts] for zi in pts])
    herm = float(np.max(np.abs(mat - mat.conj().T)))
    eigmin = float(np.min(np.linalg.eigvalsh(0.5 * (mat + mat.conj().T))))
    return _result("kernel_positivity", max(herm, max(0.0, -eigmin)), 1e-10,
                   detail=f"min eigenvalue {eigmin:.3e}")


def check_reproducing_property() -> CheckResult:
    """Disk quadrature against the limit kernel reproduces the basis elements."""
    worst = 0.0
    for B in (1.0, 1.5):
        grid = quadrature.disk_grid(64, 64, B)
        w = 0.4 + 0.25j
        kvals = np.asarray([bergman.kernel_limit(z, w, B) for z in grid.nodes])
        for k in range(6):
            cvals = np.asarray([states.bergman_basis(k, B, z) for z in grid.nodes])
            got = complex(grid.weights @ (kvals * cvals) / math.pi)
            worst = max(worst, abs(got - states.bergman_basis(k, B, w)))
    return _result("reproducing_property", worst, 1e-7)


def check_transfer_spectral_action() -> CheckResult:
    """The transferred operator multiplies each basis element by its eigenvalue."""
    B, R = 1.5, 0.6
    w = 0.3 + 0.2j
    worst = 0.0
    for k in range(5):
        coeffs = np.zeros(k + 1, dtype=complex)
        coeffs[k] = 1.0
        got = bergman.transferred_apply(bergman.BergmanFunction(B, coeffs), w, B, R)
        want = locop.disk_eigenvalue(k, B, R) * states.bergman_basis(k, B, w)
        worst = max(worst, abs(got - want))
    return _result("transfer_spectral_action", worst, 1e-7)


def check_intertwining() -> CheckResult:
    """Transform, localize, invert: both operator orders agree."""
    B, R = 1.25, 0.6
    spec_data = locop.SpectralData(B, states.LocalizationRadius(R))
    rng = _rng(111)
    worst = 0.0
    for _ in range(10):
        c = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        w = _random_disk_point(rng, 0.6)
        direct = bergman.bargmann_transform(locop.spectral_apply(c, spec_data), w, B)
        transferred = bergman.transferred_apply(
            bergman.BergmanFunction(B, coefficients=c), w, B, R)
        worst = max(worst, abs(direct - transferred) / max(abs(direct), 1e-12))
    return _result("intertwining", worst, 1e-7)


_CHECKS = {
    "incbeta_reflection": check_incbeta_reflection,
    "laguerre_generating_function": check_laguerre_generating_function,
    "gauss_theorem": check_gauss_theorem,
    "appell_f1_reductions": check_appell_reductions,
    "radial_rule_beta_integrals": check_radial_rule,
    "disk_rule_delta_structure": check_disk_rule_delta,
    "oscillator_eigen_residual": check_oscillator_residual,
    "laguerre_orthonormality": check_laguerre_orthonormality,
    "state_normalization_overlap": check_state_normalization,
    "state_quadrature_coefficients": check_state_quadrature_coefficients,
    "resolution_of_identity": check_resolution_of_identity,
    "expansion_convergence": check_expansion_convergence,
    "halfplane_kernel_bounds": check_halfplane_kernel,
    "spectrum_bounds_monotone": check_spectrum,
    "eigenvalue_norm_identity": check_eigenvalue_norm_identity,
    "matrix_elements_radial_diagonal": check_matrix_elements,
    "probabilistic_densities": check_densities,
    "mc_spectrum": check_mc_spectrum,
    "leakage_inequality": check_leakage,
    "kernel_series_closed_equivalence": check_kernel_equivalence,
    "kernel_limit_monotone": check_kernel_limit,
    "kernel_positivity": check_kernel_positivity,
    "reproducing_property": check_reproducing_property,
    "transfer_spectral_action": check_transfer_spectral_action,
    "intertwining": check_intertwining,
}


def check_names() -> list[str]:
    return list(_CHECKS)


def run_check(name: str) -> CheckResult:
    if name not in _CHECKS:
        raise DomainError(f"unknown check {name!r}; known: {', '.join(_CHECKS)}")
    return _CHECKS[name]()


def run_all() -> list[CheckResult]:
    return [fn() for fn in _CHECKS.values()]
