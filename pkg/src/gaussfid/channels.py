"""Gaussian channels as (transform, noise) matrix pairs.

A Gaussian channel on n modes is defined by a 2n x 2n real matrix pair
(T, N) acting on covariance matrix and means as

    cov  ->  T cov T^t + N,        mean  ->  mean T^t,

equivalently on characteristic functions as
chi(eps) -> chi(eps T) * exp(-1/2 eps N eps^T).  N is the covariance of
the added noise and must be symmetric PSD; the stronger complete
positivity condition N + (i/2)(Omega - T Omega T^t) >= 0 is reported by
:func:`validate` but not enforced at construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .phase_space import HERMITIAN_TOL, PSD_TOL, is_psd, symplectic_form
from .states import GaussianState


@dataclass(frozen=True)
class GaussianChannel:
    """Linear transform and additive-noise covariance of a Gaussian map."""

    transform: np.ndarray
    noise: np.ndarray
    n: int = field(init=False)

    def __post_init__(self):
        transform = np.array(self.transform, dtype=float)
        noise = np.array(self.noise, dtype=float)
        if (
            transform.ndim != 2
            or transform.shape[0] != transform.shape[1]
            or transform.shape[0] % 2 != 0
        ):
            raise ValueError(f"transform must be square of even dimension, got {transform.shape}")
        if noise.shape != transform.shape:
            raise ValueError(f"noise shape {noise.shape} does not match transform {transform.shape}")
        # deliberately no positivity check here: validate() must be able to
        # report on bad pairs; the family constructors reject them instead
        transform.flags.writeable = False
        noise.flags.writeable = False
        object.__setattr__(self, "transform", transform)
        object.__setattr__(self, "noise", noise)
        object.__setattr__(self, "n", transform.shape[0] // 2)


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of the two channel checks run by :func:`validate`."""

    noise_ok: bool       # noise covariance symmetric and PSD
    cp_ok: bool          # complete positivity of the (transform, noise) pair
    noise_min_eig: float
    cp_min_eig: float


def apply(channel: GaussianChannel, state: GaussianState) -> GaussianState:
    """Send a state through a channel."""
    if channel.n != state.n:
        raise ValueError(f"channel acts on {channel.n} modes, state has {state.n}")
    t = channel.transform
    return GaussianState(t @ state.cov @ t.T + channel.noise, state.mean @ t.T)


def compose(second: GaussianChannel, first: GaussianChannel) -> GaussianChannel:
    """Channel equal to `first` followed by `second`.

    apply(compose(second, first), s) == apply(second, apply(first, s))
    holds exactly, which fixes the composite pair to
    (T2 T1, T2 N1 T2^t + N2).
    """
    if second.n != first.n:
        raise ValueError(f"cannot compose channels on {first.n} and {second.n} modes")
    t1, t2 = first.transform, second.transform
    return GaussianChannel(t2 @ t1, t2 @ first.noise @ t2.T + second.noise)


def identity_channel(n: int) -> GaussianChannel:
    """Channel that leaves every n-mode state unchanged."""
    if n < 1:
        raise ValueError(f"mode count must be >= 1, got {n}")
    return GaussianChannel(np.eye(2 * n), np.zeros((2 * n, 2 * n)))


def amplifier(eta: float) -> GaussianChannel:
    """Single-mode amplification channel with gain eta >= 1.

    transform = sqrt(eta) I, noise = (eta - 1) I; eta = 1 is the identity.
    """
    if eta < 1.0:
        raise ValueError(f"amplifier gain must be >= 1, got {eta}; use attenuator() for loss")
    return GaussianChannel(np.sqrt(eta) * np.eye(2), (eta - 1.0) * np.eye(2))


def attenuator(eta: float) -> GaussianChannel:
    """Single-mode lossy channel with transmissivity eta in [0, 1].

    transform = sqrt(eta) I, noise = (1 - eta)/2 I; preserves the vacuum
    and is completely positive for the whole parameter range.
    """
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"transmissivity must lie in [0, 1], got {eta}")
    return GaussianChannel(np.sqrt(eta) * np.eye(2), 0.5 * (1.0 - eta) * np.eye(2))


def classical_noise(noise) -> GaussianChannel:
    """Channel adding classical Gaussian displacement noise: transform = I."""
    noise = np.asarray(noise, dtype=float)
    if noise.ndim != 2 or noise.shape[0] != noise.shape[1] or noise.shape[0] % 2 != 0:
        raise ValueError(f"noise must be square of even dimension, got {noise.shape}")
    if np.abs(noise - noise.T).max() > HERMITIAN_TOL:
        raise ValueError("noise covariance is not symmetric")
    if not is_psd(noise, tol=PSD_TOL):
        raise ValueError("noise covariance is not positive semidefinite")
    return GaussianChannel(np.eye(noise.shape[0]), noise)


def memory_noise_cov(variance: float, correlation: float) -> np.ndarray:
    """Noise covariance of the two-use correlated (memory) channel.

    variance is the per-use noise variance; correlation in [0, 1] couples
    the two uses, with the x quadratures anti-correlated and the p
    quadratures correlated:

        [[ v, 0, -cv, 0],
         [ 0, v,  0, cv],
         [-cv, 0, v, 0],
         [ 0, cv, 0, v]],   cv = correlation * variance.

    Eigenvalues are variance * (1 +- correlation), so the matrix is PSD on
    the whole parameter domain and rank-deficient at correlation = 1.
    """
    if variance < 0.0:
        raise ValueError(f"noise variance must be >= 0, got {variance}")
    if not 0.0 <= correlation <= 1.0:
        raise ValueError(f"correlation must lie in [0, 1], got {correlation}")
    v = float(variance)
    cv = float(correlation) * v
    return np.array(
        [
            [v, 0.0, -cv, 0.0],
            [0.0, v, 0.0, cv],
            [-cv, 0.0, v, 0.0],
            [0.0, cv, 0.0, v],
        ]
    )


def memory_channel(variance: float, correlation: float) -> GaussianChannel:
    """Two-use classical-noise channel with correlated noise between uses.

    correlation = 0 gives two independent uses, correlation = 1 a fully
    correlated (full-memory) noise; variance = 0 is the identity.
    """
    return GaussianChannel(np.eye(4), memory_noise_cov(variance, correlation))


def validate(channel: GaussianChannel) -> ValidityReport:
    """Report the noise-positivity and complete-positivity checks.

    The first check (symmetric PSD noise) is what `GaussianChannel`
    itself enforces and is the weaker condition; the second is the full
    complete positivity of the map,
    noise + (i/2)(Omega - T Omega T^t) >= 0.  Both come back with the
    offending minimum eigenvalue so callers can gauge the margin.
    """
    noise, t = channel.noise, channel.transform
    omega = symplectic_form(channel.n)
    sym_dev = float(np.abs(noise - noise.T).max())
    noise_sym = 0.5 * (noise + noise.T)
    noise_eigs = np.linalg.eigvalsh(noise_sym)
    noise_min = float(noise_eigs[0])
    noise_scale = max(1.0, float(np.abs(noise_eigs).max()))
    cp_eigs = np.linalg.eigvalsh(noise_sym + 0.5j * (omega - t @ omega @ t.T))
    cp_min = float(cp_eigs[0])
    cp_scale = max(1.0, float(np.abs(cp_eigs).max()))
    return ValidityReport(
        noise_ok=sym_dev <= HERMITIAN_TOL and noise_min >= -PSD_TOL * noise_scale,
        cp_ok=cp_min >= -PSD_TOL * cp_scale,
        noise_min_eig=noise_min,
        cp_min_eig=cp_min,
    )
