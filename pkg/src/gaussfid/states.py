"""Gaussian states in covariance-matrix form.

A Gaussian state of n modes is the pair (cov, mean): the 2n x 2n real
symmetric covariance matrix of the quadratures and the 2n-vector of
quadrature means, both in the interleaved layout (x1, p1, ..., xn, pn).

With hbar = 1 and x = (a + a^dag)/sqrt(2), p = -i(a - a^dag)/sqrt(2),
the vacuum covariance is I/2 and a coherent amplitude alpha displaces
the means by sqrt(2) * (Re alpha, Im alpha).  Physicality is the matrix
inequality cov + (i/2) Omega >= 0, and the characteristic function is

    chi(eps) = exp(-1/2 eps cov eps^T + i mean . eps).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import UnphysicalStateError
from .phase_space import (
    HERMITIAN_TOL,
    PSD_TOL,
    QuadratureOrdering,
    is_psd,
    reorder_vector,
    symplectic_form,
)

# slack on purity <= 1 and on det(2 cov) >= 1, absorbing constructor round-off
PURITY_TOL = 1e-9


@dataclass(frozen=True)
class GaussianState:
    """Covariance matrix and mean vector of an n-mode Gaussian state."""

    cov: np.ndarray
    mean: np.ndarray
    n: int = field(init=False)

    def __post_init__(self):
        cov = np.array(self.cov, dtype=float)
        mean = np.array(self.mean, dtype=float)
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1] or cov.shape[0] % 2 != 0:
            raise ValueError(f"covariance must be square of even dimension, got {cov.shape}")
        n = cov.shape[0] // 2
        if mean.shape != (2 * n,):
            raise ValueError(f"mean has shape {mean.shape}, expected ({2 * n},)")
        if np.abs(cov - cov.T).max() > HERMITIAN_TOL:
            raise UnphysicalStateError("covariance matrix is not symmetric")
        if not is_psd(cov + 0.5j * symplectic_form(n), tol=PSD_TOL):
            raise UnphysicalStateError("covariance violates cov + (i/2) Omega >= 0")
        det2cov = float(np.linalg.det(2.0 * cov))
        if not det2cov >= 1.0 - PURITY_TOL:
            raise UnphysicalStateError(f"det(2 cov) = {det2cov:.6g} < 1 is below the pure-state floor")
        cov.flags.writeable = False
        mean.flags.writeable = False
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "n", n)


def vacuum(n: int) -> GaussianState:
    """n-mode vacuum: cov = I/2, zero means."""
    if n < 1:
        raise ValueError(f"mode count must be >= 1, got {n}")
    return GaussianState(0.5 * np.eye(2 * n), np.zeros(2 * n))


def coherent(alphas) -> GaussianState:
    """Product coherent state with one complex amplitude per mode.

    The covariance stays at vacuum; mode k picks up quadrature means
    (sqrt(2) Re alpha_k, sqrt(2) Im alpha_k).
    """
    alphas = np.atleast_1d(np.asarray(alphas, dtype=complex))
    if alphas.ndim != 1 or alphas.size == 0:
        raise ValueError("expected a non-empty list of complex amplitudes")
    n = alphas.size
    mean = np.empty(2 * n)
    mean[0::2] = np.sqrt(2.0) * alphas.real
    mean[1::2] = np.sqrt(2.0) * alphas.imag
    return GaussianState(0.5 * np.eye(2 * n), mean)


def squeezed_vacuum(r: float) -> GaussianState:
    """Single-mode squeezed vacuum: cov = diag(e^{-2r}, e^{2r}) / 2."""
    if not np.isfinite(r):
        raise ValueError("squeeze parameter must be finite")
    return GaussianState(0.5 * np.diag([np.exp(-2.0 * r), np.exp(2.0 * r)]), np.zeros(2))


def two_mode_squeezed(r: float) -> GaussianState:
    """Two-mode squeezed vacuum with squeeze parameter r.

    In the interleaved layout the covariance is

        1/2 * [[ c, 0, -s, 0],
               [ 0, c,  0, s],
               [-s, 0,  c, 0],
               [ 0, s,  0, c]],   c = cosh 2r, s = sinh 2r,

    which reduces to the two-mode vacuum at r = 0 and stays pure for all r.
    """
    if not np.isfinite(r):
        raise ValueError("squeeze parameter must be finite")
    c = np.cosh(2.0 * r)
    s = np.sinh(2.0 * r)
    cov = 0.5 * np.array(
        [
            [c, 0.0, -s, 0.0],
            [0.0, c, 0.0, s],
            [-s, 0.0, c, 0.0],
            [0.0, s, 0.0, c],
        ]
    )
    return GaussianState(cov, np.zeros(4))


def purity(state: GaussianState) -> float:
    """Purity 1 / sqrt(det(2 cov)); 1 for pure states."""
    det2cov = float(np.linalg.det(2.0 * state.cov))
    if det2cov <= 0.0:
        raise UnphysicalStateError("covariance has non-positive determinant")
    return float(1.0 / np.sqrt(det2cov))


def char_function(
    state: GaussianState,
    eps,
    ordering: QuadratureOrdering = QuadratureOrdering.INTERLEAVED,
) -> complex:
    """Characteristic function exp(-1/2 eps cov eps^T + i mean . eps)."""
    eps = np.asarray(eps, dtype=float)
    if eps.shape != (2 * state.n,):
        raise ValueError(f"eps has shape {eps.shape}, expected ({2 * state.n},)")
    if ordering != QuadratureOrdering.INTERLEAVED:
        eps = reorder_vector(eps, ordering, QuadratureOrdering.INTERLEAVED)
    return complex(np.exp(-0.5 * eps @ state.cov @ eps + 1j * (state.mean @ eps)))
