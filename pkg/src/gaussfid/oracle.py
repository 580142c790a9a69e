"""Numerical cross-checks of the closed-form channel fidelity.

Two independent routes:

* quad_fidelity integrates the phase-space overlap integral

      (2 pi)^{-n} integral exp(-1/2 eps M eps^T + i b . eps) d^{2n} eps,
      M = T cov T^t + cov + N,   b = mean T^t - mean,

  with a midpoint rule on a uniform grid over [-L, L]^{2n}.  The
  integrand is a smooth rapidly decaying Gaussian, so the rule converges
  spectrally once the box captures the mass.

* mc_fidelity averages over the classical displacement noise of a
  transform = I channel.  Displacing a pure state (cov, mean) by d keeps
  the overlap at exp(-1/4 d cov^{-1} d^t), so

      F = E_{d ~ Normal(0, N)} [ exp(-1/2 d (2 cov)^{-1} d^t) ],

  whose expectation evaluates to sqrt(det(2 cov)) / sqrt(det(2 cov + N)),
  the closed form for pure inputs.  Sampling is chunked with one RNG
  stream per chunk derived from (seed, chunk index), and the chunk sums
  are reduced in a fixed order, so the estimate is reproducible
  regardless of how chunks would be scheduled across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import solve_triangular

from .channels import GaussianChannel
from .errors import MixedStateError
from .fidelity import PURE_INPUT_TOL
from .phase_space import is_psd
from .states import GaussianState, purity

MAX_GRID_POINTS = 10**8
MIN_MC_SAMPLES = 10**4

# fixed chunk layout; part of the deterministic-output contract
MC_CHUNK = 1 << 15


@dataclass(frozen=True)
class QuadratureGrid:
    """Uniform midpoint grid over [-half_width, half_width] per axis."""

    half_width: float
    points_per_axis: int

    def __post_init__(self):
        if not self.half_width > 0.0:
            raise ValueError(f"half_width must be > 0, got {self.half_width}")
        if self.points_per_axis < 16:
            raise ValueError(f"points_per_axis must be >= 16, got {self.points_per_axis}")


@dataclass(frozen=True)
class McConfig:
    """Sample count and root seed of the Monte-Carlo estimator."""

    samples: int
    seed: int

    def __post_init__(self):
        if self.samples < MIN_MC_SAMPLES:
            raise ValueError(f"samples must be >= {MIN_MC_SAMPLES}, got {self.samples}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


class McEstimate(NamedTuple):
    estimate: float
    std_error: float


def _require_pure(state: GaussianState):
    p = purity(state)
    if p < 1.0 - PURE_INPUT_TOL:
        raise MixedStateError(f"input purity {p:.8f} is below the pure-state threshold")


def quad_fidelity(channel: GaussianChannel, state: GaussianState, grid: QuadratureGrid) -> float:
    """Midpoint-rule evaluation of the fidelity integral.

    Supports n <= 2 (the grid has m^{2n} points) and refuses grids above
    10^8 points.  Converges to channel_fidelity(...).value as the box and
    the resolution grow.
    """
    if channel.n != state.n:
        raise ValueError(f"channel acts on {channel.n} modes, state has {state.n}")
    if state.n > 2:
        raise ValueError(f"quadrature oracle supports at most 2 modes, got {state.n}")
    _require_pure(state)
    dim = 2 * state.n
    m = grid.points_per_axis
    if m**dim > MAX_GRID_POINTS:
        raise ValueError(f"grid of {m}^{dim} points exceeds the {MAX_GRID_POINTS:.0e} limit")

    t = channel.transform
    quad_mat = t @ state.cov @ t.T + state.cov + channel.noise
    shift = state.mean @ t.T - state.mean

    step = 2.0 * grid.half_width / m
    nodes = -grid.half_width + step * (np.arange(m) + 0.5)

    # fix the first coordinate and vectorize over the remaining dim-1 axes
    mesh = np.meshgrid(*([nodes] * (dim - 1)), indexing="ij")
    rest = np.stack([g.ravel() for g in mesh], axis=1)
    points = np.empty((rest.shape[0], dim))
    points[:, 1:] = rest

    partial = np.empty(m)
    for i, first in enumerate(nodes):
        points[:, 0] = first
        quad = np.einsum("pi,ij,pj->p", points, quad_mat, points)
        integrand = np.exp(-0.5 * quad)
        if np.any(shift):
            integrand *= np.cos(points @ shift)
        partial[i] = integrand.sum()
    return float(np.sum(partial) * step**dim / (2.0 * np.pi) ** state.n)


def _noise_factor(noise: np.ndarray) -> np.ndarray:
    """S with S S^t = noise, tolerant of rank deficiency."""
    evals, evecs = np.linalg.eigh(noise)
    return evecs * np.sqrt(np.clip(evals, 0.0, None))


def mc_fidelity(channel: GaussianChannel, state: GaussianState, config: McConfig) -> McEstimate:
    """Monte-Carlo fidelity of a transform = I channel on a pure input.

    Returns the sample mean of exp(-1/2 d (2 cov)^{-1} d^t) over
    displacements d ~ Normal(0, noise), together with the standard error
    of the mean.  Output is bit-reproducible for a fixed (samples, seed).
    """
    if channel.n != state.n:
        raise ValueError(f"channel acts on {channel.n} modes, state has {state.n}")
    dim = 2 * state.n
    if not np.array_equal(channel.transform, np.eye(dim)):
        raise ValueError("Monte-Carlo oracle requires transform = I exactly")
    if not is_psd(channel.noise):
        raise ValueError("noise covariance is not positive semidefinite")
    _require_pure(state)

    factor = _noise_factor(0.5 * (channel.noise + channel.noise.T))
    chol = np.linalg.cholesky(2.0 * state.cov)

    starts = range(0, config.samples, MC_CHUNK)
    sums = np.empty(len(starts))
    sq_sums = np.empty(len(starts))
    for idx, start in enumerate(starts):
        count = min(MC_CHUNK, config.samples - start)
        rng = np.random.default_rng(np.random.SeedSequence([config.seed, idx]))
        disp = rng.standard_normal((count, dim)) @ factor.T
        y = solve_triangular(chol, disp.T, lower=True)
        weights = np.exp(-0.5 * np.einsum("ip,ip->p", y, y))
        sums[idx] = weights.sum()
        sq_sums[idx] = (weights**2).sum()

    total = float(np.sum(sums))
    total_sq = float(np.sum(sq_sums))
    mean = total / config.samples
    var = max(total_sq - config.samples * mean**2, 0.0) / (config.samples - 1)
    return McEstimate(estimate=mean, std_error=float(np.sqrt(var / config.samples)))
