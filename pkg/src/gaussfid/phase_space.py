"""Real linear algebra on 2n-dimensional phase space.

Conventions used throughout the package:

* n modes live on a 2n-dimensional real phase space with hbar = 1.
* Quadratures are stored interleaved, R = (x1, p1, ..., xn, pn); the
  block layout (x1, ..., xn, p1, ..., pn) is supported at conversion
  boundaries only.
* The symplectic form is Omega = direct sum of n copies of
  [[0, 1], [-1, 0]] in the interleaved layout.
"""

from __future__ import annotations

from enum import Enum

import numpy as np
from scipy.linalg import solve_triangular

from .errors import SingularMatrixError

# max elementwise |M - M^H| accepted as (anti)symmetric / Hermitian
HERMITIAN_TOL = 1e-10

# a Hermitian matrix counts as PSD when min eig >= -PSD_TOL * max(1, spectral norm)
PSD_TOL = 1e-9


class QuadratureOrdering(Enum):
    """Layout of quadratures inside vectors and matrices."""

    INTERLEAVED = "interleaved"  # (x1, p1, ..., xn, pn)
    BLOCK = "block"              # (x1, ..., xn, p1, ..., pn)


def symplectic_form(n: int) -> np.ndarray:
    """Return the 2n x 2n symplectic form in the interleaved layout."""
    if n < 1:
        raise ValueError(f"mode count must be >= 1, got {n}")
    omega = np.zeros((2 * n, 2 * n))
    for k in range(n):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


def _ordering_permutation(dim: int, src: QuadratureOrdering, dst: QuadratureOrdering) -> np.ndarray:
    """Index array p such that v_dst = v_src[p]."""
    n = dim // 2
    if src == dst:
        return np.arange(dim)
    if dst == QuadratureOrdering.BLOCK:
        # block position k takes interleaved position 2k (x) or 2(k-n)+1 (p)
        return np.concatenate([np.arange(0, dim, 2), np.arange(1, dim, 2)])
    return np.argsort(np.concatenate([np.arange(0, dim, 2), np.arange(1, dim, 2)]))


def reorder(mat: np.ndarray, src: QuadratureOrdering, dst: QuadratureOrdering) -> np.ndarray:
    """Permute a 2n x 2n matrix from one quadrature layout to the other.

    Applying the inverse reordering returns the input bit-exactly.
    """
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] % 2 != 0:
        raise ValueError(f"expected a square matrix of even dimension, got shape {mat.shape}")
    perm = _ordering_permutation(mat.shape[0], src, dst)
    return mat[np.ix_(perm, perm)]


def reorder_vector(vec: np.ndarray, src: QuadratureOrdering, dst: QuadratureOrdering) -> np.ndarray:
    """Permute a 2n-component phase-space vector between quadrature layouts."""
    vec = np.asarray(vec)
    if vec.ndim != 1 or vec.shape[0] % 2 != 0:
        raise ValueError(f"expected a vector of even length, got shape {vec.shape}")
    return vec[_ordering_permutation(vec.shape[0], src, dst)]


def min_eig_hermitian(mat: np.ndarray) -> float:
    """Smallest eigenvalue of a (possibly complex) Hermitian matrix."""
    mat = np.asarray(mat)
    dev = np.abs(mat - mat.conj().T).max()
    if dev > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    return float(np.linalg.eigvalsh(mat)[0])


def is_psd(mat: np.ndarray, tol: float = PSD_TOL) -> bool:
    """PSD test for a Hermitian matrix, tolerant of round-off on the boundary."""
    evals = np.linalg.eigvalsh(np.asarray(mat))
    scale = max(1.0, float(np.abs(evals).max()))
    return float(evals[0]) >= -tol * scale


def _cholesky_spd(mat: np.ndarray, what: str) -> np.ndarray:
    mat = np.asarray(mat, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    if np.abs(mat - mat.T).max() > HERMITIAN_TOL:
        raise SingularMatrixError(f"{what}: matrix is not symmetric")
    try:
        return np.linalg.cholesky(mat)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(f"{what}: matrix is not positive definite") from exc


def spd_solve(mat: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """Solve M w = v for symmetric positive definite M.

    Uses a Cholesky factorization plus one step of iterative refinement,
    which keeps the relative residual near machine precision for the
    well-conditioned matrices this package produces.
    """
    vec = np.asarray(vec, dtype=float)
    chol = _cholesky_spd(mat, "spd_solve")
    mat = np.asarray(mat, dtype=float)
    if vec.shape != (mat.shape[0],):
        raise ValueError(f"vector shape {vec.shape} does not match matrix {mat.shape}")

    def solve(rhs: np.ndarray) -> np.ndarray:
        y = solve_triangular(chol, rhs, lower=True)
        return solve_triangular(chol.T, y, lower=False)

    w = solve(vec)
    w += solve(vec - mat @ w)
    return w


def sqrt_det(mat: np.ndarray) -> float:
    """sqrt(det M) for symmetric positive definite M, via Cholesky."""
    chol = _cholesky_spd(mat, "sqrt_det")
    return float(np.prod(np.diagonal(chol)))
