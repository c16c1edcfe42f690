"""Spectral data of the phase-space localization operator.

Quantizing a radial symbol F(|z|^2) against the negative binomial states
produces an operator that is diagonal in the Laguerre-function basis; its
eigenvalues are Beta-weighted averages of F.  For the indicator of the
disk of radius R they reduce to the regularized incomplete Beta function
I_{R^2}(j + 1, 2B - 1), which is simultaneously the CDF of a Beta random
variable (giving Monte-Carlo cross-checks) and a function of the
pseudo-harmonic oscillator through its eigenvalue j + 1.  The module also
carries the generalized level-m densities and eigenvalues, and the
photon-counting bound on the operator's content outside the disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError, UnsupportedLevelError
from .quadrature import disk_grid, mapped_legendre, radial_jacobi_grid
from .specfun import log_beta, log_gamma, reg_inc_beta, sample_beta
from .states import (
    LocalizationRadius,
    ModelParams,
    as_disk,
    as_radius,
    jacobi,
    nb_pmf,
    photon_weight,
)

__all__ = [
    "SpectralData",
    "RadialSymbol",
    "radial_eigenvalue",
    "disk_eigenvalue",
    "spectral_apply",
    "as_function_of_hamiltonian",
    "beta_density",
    "landau_density",
    "landau_eigenvalue",
    "mc_eigenvalue",
    "leakage_bound",
    "localized_overlap",
    "quantization_matrix_element",
]


def disk_eigenvalue(j: int, B: float, R) -> float:
    """Eigenvalue of the disk-indicator localization operator: I_{R^2}(j+1, 2B-1)."""
    if j < 0:
        raise DomainError(f"needs j >= 0, got {j}")
    R = as_radius(R)
    return reg_inc_beta(R * R, j + 1.0, 2.0 * B - 1.0)


@dataclass
class SpectralData:
    """Lazily filled eigenvalue table of the localization operator.

    Entries are computed on first access and cached; the fill is idempotent,
    so concurrent first access is harmless.  All eigenvalues lie in [0, 1]
    and, for m = 0, decrease strictly in j.
    """

    B: float
    R: LocalizationRadius
    m: int = 0
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        ModelParams(self.B, self.m)
        if not isinstance(self.R, LocalizationRadius):
            self.R = LocalizationRadius(float(self.R))

    def eigenvalue(self, j: int) -> float:
        if j not in self._cache:
            if self.m == 0:
                self._cache[j] = disk_eigenvalue(j, self.B, self.R)
            else:
                self._cache[j] = landau_eigenvalue(j, ModelParams(self.B, self.m), self.R)
        return self._cache[j]

    def table(self, j_max: int) -> list[tuple[int, float]]:
        return [(j, self.eigenvalue(j)) for j in range(j_max + 1)]

    @property
    def eigenvalues(self) -> tuple[tuple[int, float], ...]:
        return tuple(sorted(self._cache.items()))


@dataclass(frozen=True)
class RadialSymbol:
    """Bounded radial classical observable rho = |z|^2 -> F(rho)."""

    func: Callable[[float], float]
    bound: float

    def __post_init__(self):
        if not (math.isfinite(self.bound) and self.bound >= 0.0):
            raise DomainError(f"symbol bound must be finite and nonnegative, got {self.bound}")


def radial_eigenvalue(F: RadialSymbol, j: int, B: float, n_nodes: int = 160) -> float:
    """Eigenvalue of the quantized radial symbol F.

    (1 / B(j+1, 2B-1)) int_0^1 rho^j (1 - rho)^(2B-2) F(rho) drho, by the
    weighted radial rule.  Discontinuous symbols converge slowly here; the
    disk indicator has the exact closed form ``disk_eigenvalue``.
    """
    if j < 0:
        raise DomainError(f"needs j >= 0, got {j}")
    grid = radial_jacobi_grid(n_nodes, B)
    fvals = np.asarray([F.func(r) for r in grid.nodes], dtype=float)
    if np.any(np.abs(fvals) > F.bound * (1.0 + 1e-12) + 1e-300):
        raise DomainError("symbol exceeds its declared bound on the integration nodes")
    integral = grid.weights @ (grid.nodes ** j * fvals)
    return float(integral * math.exp(-log_beta(j + 1.0, 2.0 * B - 1.0)))


def spectral_apply(coeffs, spectrum: SpectralData) -> np.ndarray:
    """Apply the localization operator to Laguerre-basis coefficients.

    Component-wise multiplication by the eigenvalue table, extended on
    demand.  The operator is not a projection: applying twice multiplies by
    the squared eigenvalues.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    lam = np.array([spectrum.eigenvalue(j) for j in range(coeffs.size)])
    return lam * coeffs


def as_function_of_hamiltonian(n: int, B: float, R) -> float:
    """Spectral function expressing the operator through oscillator eigenvalues.

    n -> I_{R^2}(n, 2B - 1) for n >= 1; evaluated at n = j + 1 it equals
    ``disk_eigenvalue(j, B, R)`` exactly (same code path).
    """
    if n < 1:
        raise DomainError(f"oscillator eigenvalues start at 1, got n={n}")
    R = as_radius(R)
    return reg_inc_beta(R * R, float(n), 2.0 * B - 1.0)


def beta_density(j: int, B: float, rho):
    """Density of the Beta(j+1, 2B-1) law behind the eigenvalues.

    Gamma(2B+j) / (Gamma(2B-1) j!) (1 - rho)^(2B-2) rho^j on [0, 1);
    ``rho`` may be an ndarray.
    """
    if j < 0:
        raise DomainError(f"needs j >= 0, got {j}")
    rho_arr = np.asarray(rho, dtype=float)
    if np.any(rho_arr < 0.0) or np.any(rho_arr >= 1.0):
        raise DomainError("density defined on 0 <= rho < 1")
    norm = (2.0 * B - 1.0) * photon_weight(j, B)
    vals = norm * (1.0 - rho_arr) ** (2.0 * B - 2.0) * rho_arr ** j
    return vals if isinstance(rho, np.ndarray) else float(vals)


def landau_density(j: int, params: ModelParams, rho):
    """Level-m generalization of ``beta_density``; reduces to it at m = 0.

    (2B-2m-1) ((m^j)! / (mvj)!) (Gamma(2B-2m+mvj)/Gamma(2B-2m+m^j))
      (1-rho)^(2B-2m-2) rho^|m-j| [P_{m^j}^(|m-j|, 2(B-m)-1)(1 - 2 rho)]^2
    with m^j = min(m, j), mvj = max(m, j).  Needs m < B - 1/2 strictly,
    otherwise the weight is not normalizable.
    """
    if j < 0:
        raise DomainError(f"needs j >= 0, got {j}")
    B, m = params.B, params.m
    if not 2.0 * (B - m) - 1.0 > 0.0:
        raise DomainError(
            f"level density degenerates at m = B - 1/2: need m < B - 1/2, got B={B}, m={m}"
        )
    rho_arr = np.asarray(rho, dtype=float)
    if np.any(rho_arr < 0.0) or np.any(rho_arr >= 1.0):
        raise DomainError("density defined on 0 <= rho < 1")
    lo, hi = min(m, j), max(m, j)
    ln_norm = (
        math.log(2.0 * B - 2.0 * m - 1.0)
        + log_gamma(lo + 1.0) - log_gamma(hi + 1.0)
        + log_gamma(2.0 * B - 2.0 * m + hi) - log_gamma(2.0 * B - 2.0 * m + lo)
    )
    poly = jacobi(lo, float(abs(m - j)), 2.0 * (B - m) - 1.0, 1.0 - 2.0 * rho_arr)
    vals = math.exp(ln_norm) * (1.0 - rho_arr) ** (2.0 * B - 2.0 * m - 2.0) * rho_arr ** abs(m - j) * poly * poly
    return vals if isinstance(rho, np.ndarray) else float(vals)


def landau_eigenvalue(j: int, params: ModelParams, R, n_nodes: int = 320) -> float:
    """Level-m eigenvalue: mass of the level-m density on [0, R^2].

    Gauss-Legendre on [0, R^2]; the weight factor is smooth there because
    its singularity sits at rho = 1, outside the interval.
    """
    R = as_radius(R)
    nodes, weights = mapped_legendre(n_nodes, 0.0, R * R)
    return float(weights @ landau_density(j, params, nodes))


def mc_eigenvalue(j: int, params: ModelParams, R, n_samples: int, seed: int) -> tuple[float, float]:
    """Monte-Carlo estimate of the eigenvalue as Pr(Y <= R^2), Y ~ Beta(j+1, 2B-1).

    Returns (estimate, standard error).  Only the lowest level has a Beta
    sampling route; higher levels are certified by quadrature instead.
    """
    if params.m != 0:
        raise UnsupportedLevelError(
            f"sampling route exists only for m = 0, got m={params.m}; use landau_eigenvalue"
        )
    if n_samples < 100:
        raise DomainError(f"needs n_samples >= 100, got {n_samples}")
    R = as_radius(R)
    draws = sample_beta(j + 1.0, 2.0 * params.B - 1.0, n_samples, seed)
    estimate = float(np.mean(draws <= R * R))
    std_error = math.sqrt(estimate * (1.0 - estimate) / n_samples)
    return estimate, std_error


def leakage_bound(z0, B: float, R, tail_tol: float = 1e-14, max_terms: int = 200_000) -> float:
    """Photon-counting bound on the operator's content at a coherence point.

    sqrt(sum_j I_{R^2}(j+1, 2B-1)^2 pmf(j)) with the negative binomial law
    at p = |z0|^2.  Terms are added until the pmf mass reaches 1 - tail_tol
    and the current pmf value drops below tail_tol; since every I-factor is
    at most one, the truncation error is at most tail_tol.
    """
    z0 = as_disk(z0)
    R = as_radius(R)
    p = abs(z0) ** 2
    pmf = (1.0 - p) ** (2.0 * B)
    cumulative = 0.0
    acc = 0.0
    for j in range(max_terms):
        lam = reg_inc_beta(R * R, j + 1.0, 2.0 * B - 1.0)
        acc += lam * lam * pmf
        cumulative += pmf
        if cumulative >= 1.0 - tail_tol and pmf < tail_tol:
            return math.sqrt(acc)
        pmf *= (2.0 * B + j) / (j + 1.0) * p
    raise ConvergenceError(
        f"photon-count tail not exhausted after {max_terms} terms at p={p}",
        terms_used=max_terms,
    )


def localized_overlap(z0, B: float, R, coeffs) -> float:
    """|<state at z0, localized f>| for f given by Laguerre-basis coefficients.

    Closed form |sum_j lambda_j (1-|z0|^2)^B sqrt(Gamma(2B+j)/(j! Gamma(2B)))
    conj(z0)^j c_j|; bounded by ``leakage_bound`` times the norm of f.
    """
    z0 = as_disk(z0)
    R = as_radius(R)
    coeffs = np.asarray(coeffs, dtype=complex)
    pref = (1.0 - abs(z0) ** 2) ** B
    total = 0.0 + 0.0j
    for j, c in enumerate(coeffs):
        if c == 0.0:
            continue
        lam = reg_inc_beta(R * R, j + 1.0, 2.0 * B - 1.0)
        total += lam * math.sqrt(photon_weight(j, B)) * z0.conjugate() ** j * c
    return abs(pref * total)


def quantization_matrix_element(F, j: int, k: int, B: float, grid=None) -> complex:
    """Matrix element of the quantized (not necessarily radial) symbol F.

    (pi Gamma(2B-1))^(-1) sqrt(Gamma(2B+j) Gamma(2B+k) / (j! k!))
      int_D conj(z)^j z^k (1-|z|^2)^(2B-2) F(z) dA(z)
    by disk quadrature.  For radial F the off-diagonal entries vanish and
    the diagonal reproduces ``radial_eigenvalue``.
    """
    if j < 0 or k < 0:
        raise DomainError("matrix element indices must be nonnegative")
    if grid is None:
        grid = disk_grid(64, 128, B)
    z = grid.nodes
    fvals = np.asarray([F(p) for p in z], dtype=complex)
    integral = grid.weights @ (np.conjugate(z) ** j * z ** k * fvals)
    ln_pref = 0.5 * (
        log_gamma(2.0 * B + j) - log_gamma(j + 1.0)
        + log_gamma(2.0 * B + k) - log_gamma(k + 1.0)
    ) - log_gamma(2.0 * B - 1.0)
    return math.exp(ln_pref) / math.pi * integral
