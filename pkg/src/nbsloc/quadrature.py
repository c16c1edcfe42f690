"""Deterministic integration grids.

Three families cover every integral in the package:

  * ``half_line_grid``   -- Gauss-Legendre mapped to [0, cutoff] for inner
    products of Laguerre functions (their Gaussian decay makes a truncated
    interval certifiably accurate once the cutoff is large enough);
  * ``radial_jacobi_grid`` -- Gauss-Jacobi on [0, 1] with the endpoint weight
    (1 - rho)^(2B - 2) absorbed into the weights, built by Golub-Welsch so
    that B in (1/2, 1) (an integrable singularity) needs no special casing;
  * ``disk_grid``        -- the tensor product of the radial rule with a
    uniform (spectrally accurate) angular rule for weighted disk integrals.

Grids are immutable after construction and integration is a dot product,
so everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

GRID_KINDS = ("half_line", "radial_jacobi", "angular", "disk_tensor")


@dataclass(frozen=True)
class QuadratureGrid:
    """Nodes and strictly positive weights for one integration rule.

    For the one-dimensional kinds ``nodes`` is a float array strictly inside
    the open integration domain; for ``disk_tensor`` it is a complex array of
    points strictly inside the unit disk and the weights absorb both the
    radial weight function and the angular step.
    """

    nodes: np.ndarray
    weights: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in GRID_KINDS:
            raise DomainError(f"unknown grid kind {self.kind!r}")
        if self.nodes.shape != self.weights.shape:
            raise DomainError("nodes and weights must have matching shapes")
        if not np.all(self.weights > 0.0):
            raise DomainError("quadrature weights must be strictly positive")

    def integrate(self, f) -> complex:
        """Apply the rule to a callable or to precomputed node values."""
        values = f(self.nodes) if callable(f) else np.asarray(f)
        return self.weights @ values


def mapped_legendre(n: int, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped to [lo, hi]."""
    if n < 2:
        raise DomainError(f"need at least 2 nodes, got {n}")
    if not hi > lo:
        raise DomainError(f"empty interval [{lo}, {hi}]")
    x, w = np.polynomial.legendre.leggauss(n)
    half = 0.5 * (hi - lo)
    return lo + half * (x + 1.0), half * w


def suggested_cutoff(max_degree: int, B: float) -> float:
    """Truncation point beyond which Laguerre functions up to ``max_degree`` decay below 1e-16."""
    return math.sqrt(2.0 * (4.0 * max_degree + 8.0 * B)) + 10.0


def half_line_grid(n: int, cutoff: float) -> QuadratureGrid:
    """Gauss-Legendre rule on [0, cutoff] for half-line inner products."""
    if cutoff <= 0.0:
        raise DomainError(f"cutoff must be positive, got {cutoff}")
    nodes, weights = mapped_legendre(n, 0.0, cutoff)
    return QuadratureGrid(nodes, weights, "half_line")


def gauss_jacobi(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^alpha (1+x)^beta.

    Golub-Welsch: eigen-decompose the symmetric tridiagonal matrix of
    three-term recurrence coefficients; nodes are the eigenvalues and the
    weights come from the first eigenvector components.  Exact for
    polynomials of degree <= 2n - 1.
    """
    if n < 2:
        raise DomainError(f"need at least 2 nodes, got {n}")
    if not (alpha > -1.0 and beta > -1.0):
        raise DomainError(f"Jacobi weight needs alpha, beta > -1, got {alpha}, {beta}")
    ab = alpha + beta
    i = np.arange(n, dtype=float)
    diag = np.empty(n)
    diag[0] = (beta - alpha) / (ab + 2.0)
    with np.errstate(invalid="ignore"):
        ii = i[1:]
        diag[1:] = (beta * beta - alpha * alpha) / ((2.0 * ii + ab) * (2.0 * ii + ab + 2.0))
    off = np.empty(n - 1)
    off[0] = math.sqrt(4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) ** 2 * (ab + 3.0)))
    if n > 2:
        k = np.arange(2.0, n)
        s = 2.0 * k + ab
        off[1:] = np.sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s * s - 1.0)))
    jac = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    nodes, vecs = np.linalg.eigh(jac)
    log_mu0 = (ab + 1.0) * math.log(2.0) + math.lgamma(alpha + 1.0) + math.lgamma(beta + 1.0) - math.lgamma(ab + 2.0)
    weights = math.exp(log_mu0) * vecs[0, :] ** 2
    return nodes, weights


def radial_jacobi_grid(n: int, B: float) -> QuadratureGrid:
    """Rule for integrals over rho in [0, 1] against the weight (1 - rho)^(2B - 2).

    The weight is absorbed: ``grid.integrate(f)`` returns
    int_0^1 f(rho) (1-rho)^(2B-2) drho, exactly for polynomial f of degree
    <= 2n - 1.  Requires B > 1/2; on (1/2, 1) the endpoint singularity is
    integrable and handled by the Jacobi weight itself.
    """
    if not B > 0.5:
        raise DomainError(f"radial weight integrable only for B > 1/2, got B={B}")
    return _jacobi_grid_01(n, 2.0 * B - 2.0)


def _jacobi_grid_01(n: int, exponent: float) -> QuadratureGrid:
    """Gauss-Jacobi rule on [0, 1] for the weight (1 - rho)^exponent."""
    x, w = gauss_jacobi(n, exponent, 0.0)
    rho = 0.5 * (x + 1.0)
    scaled = w * 0.5 ** (exponent + 1.0)
    return QuadratureGrid(rho, scaled, "radial_jacobi")


def angular_grid(n: int) -> QuadratureGrid:
    """Uniform midpoint rule on (0, 2 pi); spectrally accurate for trigonometric integrands."""
    if n < 2:
        raise DomainError(f"need at least 2 angular nodes, got {n}")
    theta = 2.0 * math.pi * (np.arange(n) + 0.5) / n
    weights = np.full(n, 2.0 * math.pi / n)
    return QuadratureGrid(theta, weights, "angular")


def disk_grid(n_r: int, n_theta: int, B: float) -> QuadratureGrid:
    """Tensor rule for int_D f(z) (1 - |z|^2)^(2B - 2) dA(z).

    dA is the plane Lebesgue measure; in polar squared-radius coordinates it
    contributes the factor 1/2 drho dtheta that is folded into the weights.
    """
    radial = radial_jacobi_grid(n_r, B)
    angular = angular_grid(n_theta)
    r = np.sqrt(radial.nodes)
    z = r[:, None] * np.exp(1j * angular.nodes)[None, :]
    w = 0.5 * radial.weights[:, None] * angular.weights[None, :]
    return QuadratureGrid(z.ravel(), w.ravel(), "disk_tensor")


def fd_eigen_residual(values: np.ndarray, xs: np.ndarray, B: float, eigenvalue: float) -> float:
    """Relative L2 residual of (H - eigenvalue) applied to sampled values.

    H is the pseudo-harmonic oscillator
        H = (1/4) (-d^2/dx^2 + x^2 + ((2B-1)^2 - 1/4) / x^2) + (1 - B),
    normalized so that its Laguerre eigenfunctions carry eigenvalues j + 1.
    The second derivative is the central difference on the uniform grid xs.
    Identically zero input has residual zero by convention.
    """
    h = xs[1] - xs[0]
    second = (values[2:] - 2.0 * values[1:-1] + values[:-2]) / (h * h)
    x_in = xs[1:-1]
    v_in = values[1:-1]
    strength = (2.0 * B - 1.0) ** 2 - 0.25
    applied = 0.25 * (-second + x_in * x_in * v_in + strength * v_in / (x_in * x_in)) + (1.0 - B) * v_in
    target = eigenvalue * v_in
    denom = np.linalg.norm(target)
    if denom == 0.0:
        return float(np.linalg.norm(applied - target))
    return float(np.linalg.norm(applied - target) / denom)


def hamiltonian_residual(j: int, B: float, grid_step: float = 1e-3,
                         window: tuple[float, float] = (0.5, 8.0)) -> float:
    """Finite-difference check that the j-th Laguerre function has eigenvalue j + 1.

    Returns the relative L2 residual over ``window``, which must stay away
    from the x = 0 singularity of the potential.
    """
    from .states import laguerre_function

    lo, hi = window
    if lo <= 0.0:
        raise DomainError(f"window must avoid the origin, got {window}")
    if not hi > lo:
        raise DomainError(f"empty window {window}")
    if grid_step > 1e-3:
        raise DomainError(f"grid_step must be <= 1e-3 for a trustworthy residual, got {grid_step}")
    count = int(round((hi - lo) / grid_step)) + 1
    xs = lo + grid_step * np.arange(count)
    values = laguerre_function(j, B, xs)
    return fd_eigen_residual(values, xs, B, float(j + 1))
