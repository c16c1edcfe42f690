"""Transfer of the localization operator to the weighted Bergman space.

The coherent-state transform sends the j-th Laguerre function to the j-th
orthonormal monomial of the weighted Bergman space, so conjugating the
localization operator by it yields an integral operator whose kernel has
three equivalent descriptions implemented here: the eigenvalue series,
a closed form through the first Appell double series, and the s -> 1
limit, which is the reproducing kernel of the space itself.

Kernels are parameterized by the Beta upper limit s in (0, 1); the
operator that localizes on the disk of radius R corresponds to s = R^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    AccuracyError,
    ConvergenceError,
    DomainError,
    UnsupportedRepresentationError,
)
from .quadrature import QuadratureGrid, disk_grid
from .specfun import SeriesControl, appell_f1, reg_inc_beta
from .states import as_disk, as_radius, bergman_basis, laguerre_function, photon_weight, principal_power

__all__ = [
    "BergmanFunction",
    "KernelEvalMode",
    "bargmann_transform",
    "bargmann_inverse",
    "kernel_series",
    "kernel_series_coefficients",
    "kernel_closed",
    "kernel_limit",
    "transferred_apply",
]


@dataclass(frozen=True)
class KernelEvalMode:
    """How ``transferred_apply`` evaluates the kernel on the grid."""

    mode: str = "series"
    ctl: SeriesControl = SeriesControl()

    def __post_init__(self):
        if self.mode not in ("series", "closed_form"):
            raise DomainError(f"mode must be 'series' or 'closed_form', got {self.mode!r}")


@dataclass
class BergmanFunction:
    """Element of the weighted Bergman space.

    Either a finite coefficient vector against the orthonormal monomial
    basis, or a pointwise analytic evaluator on the disk (or both, when a
    projection has been attached).  Analyticity of an evaluator can be
    spot-checked with ``check_analytic``.
    """

    B: float
    coefficients: np.ndarray | None = None
    evaluator: Callable[[complex], complex] | None = None

    def __post_init__(self):
        if self.coefficients is None and self.evaluator is None:
            raise DomainError("provide coefficients or an evaluator")
        if self.coefficients is not None:
            self.coefficients = np.asarray(self.coefficients, dtype=complex)
        if not 2.0 * self.B > 1.0:
            raise DomainError(f"requires 2B > 1, got B={self.B}")

    def __call__(self, z) -> complex:
        z = as_disk(z)
        if self.coefficients is not None:
            total = 0.0 + 0.0j
            for j, a in enumerate(self.coefficients):
                if a != 0.0:
                    total += a * bergman_basis(j, self.B, z)
            return total
        return self.evaluator(z)

    def values(self, points: np.ndarray) -> np.ndarray:
        """Evaluate on an array of disk points (vectorized for coefficients)."""
        if self.coefficients is not None:
            out = np.zeros(points.shape, dtype=complex)
            power = np.ones(points.shape, dtype=complex)
            for j, a in enumerate(self.coefficients):
                if a != 0.0:
                    out += a * math.sqrt((2.0 * self.B - 1.0) * photon_weight(j, self.B)) * power
                power = power * points
            return out
        return np.asarray([self.evaluator(p) for p in points], dtype=complex)

    def coefficients_or_raise(self) -> np.ndarray:
        if self.coefficients is None:
            raise UnsupportedRepresentationError(
                "coefficient representation required; use project() first"
            )
        return self.coefficients

    def project(self, j_max: int, grid: QuadratureGrid | None = None) -> "BergmanFunction":
        """Disk-quadrature projection onto the first j_max + 1 basis elements."""
        if grid is None:
            grid = disk_grid(64, 128, self.B)
        vals = self.values(grid.nodes)
        coeffs = np.empty(j_max + 1, dtype=complex)
        for j in range(j_max + 1):
            basis_vals = np.asarray([bergman_basis(j, self.B, z) for z in grid.nodes])
            coeffs[j] = grid.weights @ (np.conjugate(basis_vals) * vals) / math.pi
        return BergmanFunction(self.B, coefficients=coeffs, evaluator=self.evaluator)

    def check_analytic(self, n_points: int = 5, step: float = 1e-4,
                       tol: float = 1e-6, seed: int = 20260808) -> None:
        """Cauchy-Riemann finite-difference spot check at random interior points."""
        rng = np.random.Generator(np.random.PCG64(seed))
        for _ in range(n_points):
            r = 0.7 * math.sqrt(rng.random())
            theta = 2.0 * math.pi * rng.random()
            z = r * complex(math.cos(theta), math.sin(theta))
            dx = (self(z + step) - self(z - step)) / (2.0 * step)
            dy = (self(z + 1j * step) - self(z - 1j * step)) / (2.0 * step)
            scale = max(1.0, abs(dx), abs(dy))
            if abs(dx + 1j * dy) > tol * scale:
                raise DomainError(
                    f"Cauchy-Riemann residual {abs(dx + 1j * dy):.3e} at z={z:.4f}; not analytic"
                )


def bargmann_transform(coeffs, z, B: float) -> complex:
    """Coherent-state (second Bargmann) transform of f = sum c_j laguerre_j.

    Linear coefficient map: sends the j-th Laguerre function to the j-th
    Bergman basis element, so the value is sum_j c_j basis_j(z).
    """
    z = as_disk(z)
    total = 0.0 + 0.0j
    for j, c in enumerate(np.asarray(coeffs, dtype=complex)):
        if c != 0.0:
            total += c * bergman_basis(j, B, z)
    return total


def bargmann_inverse(F: BergmanFunction, xi: float, J: int | None = None) -> complex:
    """Inverse transform back to the half-line, truncated at index J.

    Exact two-sided inverse of ``bargmann_transform`` on coefficient
    vectors; requires the coefficient representation.
    """
    coeffs = F.coefficients_or_raise()
    top = coeffs.size - 1 if J is None else min(J, coeffs.size - 1)
    total = 0.0 + 0.0j
    for j in range(top + 1):
        if coeffs[j] != 0.0:
            total += coeffs[j] * laguerre_function(j, F.B, xi)
    return total


def kernel_series_coefficients(B: float, s: float, x_max: float,
                               ctl: SeriesControl = SeriesControl()) -> np.ndarray:
    """Coefficients c_k of the kernel series sum_k c_k (conj(z) w)^k.

    c_k = I_s(k+1, 2B-1) (2B-1) Gamma(2B+k)/(k! Gamma(2B)).  Truncated when
    the geometric tail bound on the remaining |coefficient| terms at radius
    ``x_max`` (the largest |conj(z) w| to be evaluated) falls below
    ctl.rel_tol of the accumulated coefficient envelope; the
    incomplete-Beta factors are at most one, so they only help the bound.
    """
    if not 0.0 < s < 1.0:
        raise DomainError(f"needs 0 < s < 1, got s={s}")
    if not 0.0 <= x_max < 1.0:
        raise DomainError(f"needs 0 <= x_max < 1, got {x_max}")
    two_b = 2.0 * B
    coeffs = []
    g = 1.0  # Gamma(2B+k) / (k! Gamma(2B))
    partial = 0.0
    for k in range(ctl.max_terms):
        lam = reg_inc_beta(s, k + 1.0, two_b - 1.0)
        coeffs.append((two_b - 1.0) * lam * g)
        partial += abs(coeffs[-1]) * x_max ** k
        g_next = g * (two_b + k) / (k + 1.0)
        ratio = x_max * (two_b + k + 1.0) / (k + 2.0)
        if ratio < 1.0:
            tail = (two_b - 1.0) * g_next * x_max ** (k + 1) / (1.0 - ratio)
            if tail <= max(ctl.rel_tol * partial, ctl.abs_tol):
                return np.asarray(coeffs)
        g = g_next
    raise ConvergenceError(
        f"kernel series needs more than {ctl.max_terms} terms at x_max={x_max}",
        terms_used=ctl.max_terms,
    )


def kernel_series(z, w, B: float, s: float, ctl: SeriesControl = SeriesControl()) -> complex:
    """Kernel of the transferred operator as its eigenvalue series.

    sum_k I_s(k+1, 2B-1) conj(basis_k(z)) basis_k(w); Hermitian in (z, w).
    """
    z = as_disk(z)
    w = as_disk(w)
    x = z.conjugate() * w
    coeffs = kernel_series_coefficients(B, s, abs(x), ctl)
    total = 0.0 + 0.0j
    power = 1.0 + 0.0j
    for c in coeffs:
        total += c * power
        power *= x
    return total


def kernel_closed(z, w, B: float, s: float, ctl: SeriesControl = SeriesControl()) -> complex:
    """Closed form of the kernel through the first Appell double series.

    (2B-1)^2 s (1 - s conj(z) w)^(-2B)
      F1(2-2B, 1-2B, 2B; 2; s, s (1 - conj(z) w) / (1 - s conj(z) w)).
    Agrees with ``kernel_series`` for all admissible arguments.
    """
    z = as_disk(z)
    w = as_disk(w)
    if not 0.0 < s < 1.0:
        raise DomainError(f"needs 0 < s < 1, got s={s}")
    x = z.conjugate() * w
    base = 1.0 - s * x
    second = s * (1.0 - x) / base
    f1 = appell_f1(2.0 - 2.0 * B, 1.0 - 2.0 * B, 2.0 * B, 2.0, s, second, ctl)
    return (2.0 * B - 1.0) ** 2 * s * principal_power(base, -2.0 * B) * f1.value


def kernel_limit(z, w, B: float) -> complex:
    """s -> 1 limit of the kernel: the reproducing kernel (2B-1)(1 - conj(z) w)^(-2B)."""
    z = as_disk(z)
    w = as_disk(w)
    return (2.0 * B - 1.0) * principal_power(1.0 - z.conjugate() * w, -2.0 * B)


def _kernel_column(points: np.ndarray, w: complex, B: float, s: float,
                   mode: KernelEvalMode) -> np.ndarray:
    """Kernel values P(z_i, w) for all grid points z_i at a fixed target w."""
    if mode.mode == "series":
        x = np.conjugate(points) * w
        coeffs = kernel_series_coefficients(B, s, float(np.max(np.abs(x))), mode.ctl)
        out = np.zeros(points.shape, dtype=complex)
        power = np.ones(points.shape, dtype=complex)
        for c in coeffs:
            out += c * power
            power = power * x
        return out
    return np.asarray([kernel_closed(z, w, B, s, mode.ctl) for z in points])


def transferred_apply(F: BergmanFunction, w, B: float, R,
                      mode: KernelEvalMode = KernelEvalMode(),
                      n_r: int = 64, n_theta: int = 128,
                      refine_tol: float = 1e-8) -> complex:
    """Apply the transferred localization operator to F at the point w.

    (1/pi) int_D P_s(z, w) F(z) (1 - |z|^2)^(2B-2) dA(z) with s = R^2, by
    disk quadrature.  The result is recomputed on a doubled grid; if the
    two values disagree beyond ``refine_tol`` (relatively) an AccuracyError
    is raised, otherwise the refined value is returned.  On the basis
    elements this reproduces the eigenvalue action.
    """
    w = as_disk(w)
    R = as_radius(R)
    s = R * R

    def evaluate(nr: int, nt: int) -> complex:
        grid = disk_grid(nr, nt, B)
        kernel_vals = _kernel_column(grid.nodes, w, B, s, mode)
        fvals = F.values(grid.nodes)
        return complex(grid.weights @ (kernel_vals * fvals) / math.pi)

    coarse = evaluate(n_r, n_theta)
    fine = evaluate(2 * n_r, 2 * n_theta)
    scale = max(abs(fine), 1e-30)
    if abs(fine - coarse) > refine_tol * max(scale, 1.0):
        raise AccuracyError(
            f"disk quadrature not converged: refinement moved the value by "
            f"{abs(fine - coarse):.3e} (tol {refine_tol:.1e})"
        )
    return fine
