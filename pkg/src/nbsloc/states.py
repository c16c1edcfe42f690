"""Coherent states on the half-plane and the unit disk.

The two families are linked by the inverse Cayley transform: affine
coherent states live over the upper half-plane, their disk-labeled
version (the negative binomial states, NBS) over the unit disk.  The
module provides both wavefunction routes, the orthonormal monomial basis
of the weighted Bergman space, the Laguerre functions they pair with,
the reproducing kernels of the lowest and higher hyperbolic Landau
levels, and the negative binomial photon-count law.

All complex powers are principal branch; every base occurring here stays
off the negative real axis for points strictly inside the domains, which
is asserted at runtime.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError
from .specfun import gamma_ratio, jacobi, laguerre, log_gamma

__all__ = [
    "ModelParams",
    "DiskPoint",
    "HalfPlanePoint",
    "LocalizationRadius",
    "affine_coherent_state",
    "cayley_inverse",
    "nbs_wavefunction",
    "bergman_basis",
    "laguerre_function",
    "nbs_expansion",
    "halfplane_kernel",
    "disk_kernel",
    "nb_pmf",
    "photon_weight",
    "halfplane_landau_level",
    "disk_landau_level",
    "max_landau_index",
    "principal_power",
]


def max_landau_index(B: float) -> int:
    """Largest admissible level index, floor(B - 1/2)."""
    return math.floor(B - 0.5)


@dataclass(frozen=True)
class ModelParams:
    """Strength parameter B (with 2B > 1) and level index m, 0 <= m <= floor(B - 1/2)."""

    B: float
    m: int = 0

    def __post_init__(self):
        if not 2.0 * self.B > 1.0:
            raise DomainError(f"requires 2B > 1, got B={self.B}")
        if self.m < 0 or self.m != int(self.m):
            raise DomainError(f"level index must be a nonnegative integer, got m={self.m}")
        if self.m > max_landau_index(self.B):
            raise DomainError(
                f"inadmissible level: m={self.m} violates m <= floor(B - 1/2) = "
                f"{max_landau_index(self.B)} for B={self.B}"
            )


@dataclass(frozen=True)
class DiskPoint:
    """Phase-space label strictly inside the unit disk."""

    z: complex

    def __post_init__(self):
        if not abs(self.z) < 1.0:
            raise DomainError(f"disk point needs |z| < 1, got |z|={abs(self.z)}")


@dataclass(frozen=True)
class HalfPlanePoint:
    """Point strictly inside the upper half-plane."""

    w: complex

    def __post_init__(self):
        if not self.w.imag > 0.0:
            raise DomainError(f"half-plane point needs Im w > 0, got Im w={self.w.imag}")


@dataclass(frozen=True)
class LocalizationRadius:
    """Radius of the localization disk, 0 < R < 1."""

    R: float

    def __post_init__(self):
        if not 0.0 < self.R < 1.0:
            raise DomainError(f"localization radius needs 0 < R < 1, got R={self.R}")


def as_disk(z) -> complex:
    """Accept a DiskPoint or a bare complex number; validate |z| < 1."""
    if isinstance(z, DiskPoint):
        return z.z
    z = complex(z)
    if not abs(z) < 1.0:
        raise DomainError(f"disk point needs |z| < 1, got |z|={abs(z)}")
    return z


def as_halfplane(w) -> complex:
    if isinstance(w, HalfPlanePoint):
        return w.w
    w = complex(w)
    if not w.imag > 0.0:
        raise DomainError(f"half-plane point needs Im w > 0, got Im w={w.imag}")
    return w


def as_radius(R) -> float:
    if isinstance(R, LocalizationRadius):
        return R.R
    R = float(R)
    if not 0.0 < R < 1.0:
        raise DomainError(f"localization radius needs 0 < R < 1, got R={R}")
    return R


def principal_power(base, exponent: float) -> complex:
    """base ** exponent on the principal branch, rejecting the branch cut."""
    b = complex(base)
    if b.imag == 0.0 and b.real <= 0.0:
        raise DomainError(f"principal power undefined on the cut, base={b}")
    return b ** exponent


def affine_coherent_state(x: float, y: float, B: float, xi: float) -> complex:
    """Wavefunction of the affine coherent state labelled by (x, y), at xi > 0.

    (2B)^(-1/2) (xi y)^B exp(-xi (y - i x) / 2); the modulus is independent
    of x, which only contributes a phase.
    """
    if not y > 0.0:
        raise DomainError(f"affine label needs y > 0, got {y}")
    if not xi > 0.0:
        raise DomainError(f"needs xi > 0, got {xi}")
    if not 2.0 * B > 1.0:
        raise DomainError(f"requires 2B > 1, got B={B}")
    return (xi * y) ** B / math.sqrt(2.0 * B) * cmath.exp(-0.5 * xi * (y - 1j * x))


def cayley_inverse(z) -> tuple[float, float]:
    """Inverse Cayley transform: disk point -> (x, y) with y > 0.

    (-2 Im z / |1-z|^2, (1 - |z|^2) / |1-z|^2); the image degenerates to the
    boundary y = 0 as |z| -> 1.
    """
    z = as_disk(z)
    denom = abs(1.0 - z) ** 2
    return (-2.0 * z.imag / denom, (1.0 - abs(z) ** 2) / denom)


def nbs_wavefunction(z, B: float, xi: float) -> complex:
    """Unit-norm negative binomial state on the half-line, evaluated at xi > 0.

    sqrt(2 / Gamma(2B)) xi^(2B - 1/2) ((1 - |z|^2)/(1 - z)^2)^B
      exp(-((1 + z)/(1 - z)) xi^2 / 2).
    """
    z = as_disk(z)
    if not xi > 0.0:
        raise DomainError(f"needs xi > 0, got {xi}")
    if not 2.0 * B > 1.0:
        raise DomainError(f"requires 2B > 1, got B={B}")
    base = (1.0 - abs(z) ** 2) / (1.0 - z) ** 2
    amp = math.sqrt(2.0 / math.exp(log_gamma(2.0 * B))) * xi ** (2.0 * B - 0.5)
    return amp * principal_power(base, B) * cmath.exp(-0.5 * ((1.0 + z) / (1.0 - z)) * xi * xi)


def photon_weight(j: int, B: float) -> float:
    """Gamma(2B + j) / (j! Gamma(2B)), the negative binomial coefficient."""
    if j < 0:
        raise DomainError(f"needs j >= 0, got {j}")
    w = math.exp(log_gamma(2.0 * B + j) - log_gamma(j + 1.0) - log_gamma(2.0 * B))
    eps = specfun.gamma_ratio_perturbation()
    return w * (1.0 + eps) if eps else w


def bergman_basis(j: int, B: float, z) -> complex:
    """j-th element of the orthonormal monomial basis of the weighted Bergman space.

    sqrt(2B - 1) sqrt(Gamma(2B + j)/(j! Gamma(2B))) z^j, orthonormal for the
    inner product (1/pi) int conj(f) g (1 - |z|^2)^(2B - 2) dA.
    """
    z = as_disk(z)
    return math.sqrt((2.0 * B - 1.0) * photon_weight(j, B)) * z ** j


def laguerre_function(j: int, B: float, xi):
    """Orthonormal Laguerre function on the half-line; ``xi`` may be an ndarray.

    (2 j! / Gamma(2B + j))^(1/2) xi^(2B - 1/2) exp(-xi^2/2) L_j^(2B-1)(xi^2).
    """
    if j < 0:
        raise DomainError(f"needs j >= 0, got {j}")
    if not 2.0 * B > 1.0:
        raise DomainError(f"requires 2B > 1, got B={B}")
    xi_arr = np.asarray(xi, dtype=float)
    if np.any(xi_arr <= 0.0):
        raise DomainError("Laguerre functions are defined for xi > 0")
    norm = math.sqrt(2.0 * gamma_ratio(j + 1.0, 2.0 * B + j))
    vals = norm * xi_arr ** (2.0 * B - 0.5) * np.exp(-0.5 * xi_arr * xi_arr) * laguerre(j, 2.0 * B - 1.0, xi_arr * xi_arr)
    return vals if isinstance(xi, np.ndarray) else float(vals)


def nbs_expansion(z, B: float, xi: float, J: int) -> complex:
    """Number-state expansion of the NBS truncated at index J.

    (1 - |z|^2)^B (2B - 1)^(-1/2) sum_{j <= J} basis_j(z) laguerre_j(xi);
    converges to ``nbs_wavefunction`` as J grows, with geometric tail |z|^J.
    """
    z = as_disk(z)
    if J < 0:
        raise DomainError(f"needs J >= 0, got {J}")
    pref = (1.0 - abs(z) ** 2) ** B / math.sqrt(2.0 * B - 1.0)
    total = 0.0 + 0.0j
    for j in range(J + 1):
        total += bergman_basis(j, B, z) * laguerre_function(j, B, xi)
    return pref * total


def halfplane_kernel(w, zeta, B: float) -> complex:
    """Reproducing kernel of the lowest-level eigenspace over the half-plane.

    (|w - conj(zeta)|^2 / (4 Im w Im zeta))^(-B) ((zeta - conj(w))/(w - conj(zeta)))^B.
    Hermitian, bounded by one in modulus, equal to one exactly on the diagonal.
    """
    w = as_halfplane(w)
    zeta = as_halfplane(zeta)
    scale = abs(w - zeta.conjugate()) ** 2 / (4.0 * w.imag * zeta.imag)
    phase = (zeta - w.conjugate()) / (w - zeta.conjugate())
    return scale ** (-B) * principal_power(phase, B)


def disk_kernel(z, w, params: ModelParams) -> complex:
    """Reproducing kernel of the level-m eigenspace on the weighted disk.

    pi (2B - 2m - 1) (1 - z conj(w))^(-2B)
      (|1 - z conj(w)|^2 / ((1 - |z|^2)(1 - |w|^2)))^m
      P_m^(0, 2(B - m) - 1)(2 (1 - |z|^2)(1 - |w|^2) / |1 - z conj(w)|^2 - 1).
    """
    z = as_disk(z)
    w = as_disk(w)
    B, m = params.B, params.m
    cross = 1.0 - z * w.conjugate()
    ratio = abs(cross) ** 2 / ((1.0 - abs(z) ** 2) * (1.0 - abs(w) ** 2))
    arg = 2.0 / ratio - 1.0
    poly = jacobi(m, 0.0, 2.0 * (B - m) - 1.0, arg)
    return math.pi * (2.0 * B - 2.0 * m - 1.0) * principal_power(cross, -2.0 * B) * ratio ** m * poly


def nb_pmf(j: int, B: float, p: float) -> float:
    """Negative binomial photon-count law: Gamma(2B+j)/(j! Gamma(2B)) p^j (1-p)^(2B)."""
    if j < 0:
        raise DomainError(f"needs j >= 0, got {j}")
    if not 0.0 <= p < 1.0:
        raise DomainError(f"needs 0 <= p < 1, got p={p}")
    return photon_weight(j, B) * p ** j * (1.0 - p) ** (2.0 * B)


def halfplane_landau_level(B: float, m: int) -> float:
    """m-th discrete level of the weighted half-plane Laplacian: (B - m)(1 - B + m)."""
    ModelParams(B, m)  # admissibility check
    return (B - m) * (1.0 - B + m)


def disk_landau_level(B: float, m: int) -> float:
    """m-th discrete level of the weighted disk Laplacian: 4 m (2B - m - 1)."""
    ModelParams(B, m)
    return 4.0 * m * (2.0 * B - m - 1.0)
