"""Input-output fidelity of Gaussian channels with pure Gaussian inputs.

For a pure input (cov, mean) sent through a channel (T, N), the overlap
Tr(rho_in rho_out) has the closed form

    F = 1 / sqrt(det(T cov T^t + cov + N))
        * exp(-(mean T^t - mean) [2(T cov T^t + cov + N)]^{-1} (mean T^t - mean)^t),

a determinant factor times a displacement factor.  Channels with T = I
make the displacement factor exactly 1, so added classical noise yields
a fidelity independent of the input amplitude.  This module also carries
the scalar reference expressions for the built-in channel families.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import GaussianChannel, apply
from .errors import MixedStateError
from .phase_space import spd_solve, sqrt_det
from .states import GaussianState, purity

# inputs must be pure to this tolerance for the closed form to apply
PURE_INPUT_TOL = 1e-6


@dataclass(frozen=True)
class FidelityResult:
    """Fidelity split into its determinant and displacement factors."""

    value: float
    det_factor: float
    disp_factor: float
    matrix_condition: float  # condition number of T cov T^t + cov + N


def overlap(s1: GaussianState, s2: GaussianState) -> float:
    """Trace overlap Tr(rho1 rho2) of two Gaussian states.

    Equal to
    exp(-1/2 (m1 - m2) (cov1 + cov2)^{-1} (m1 - m2)^t) / sqrt(det(cov1 + cov2))
    and symmetric in its arguments.  For pure states this is the squared
    state overlap |<psi1|psi2>|^2.
    """
    if s1.n != s2.n:
        raise ValueError(f"mode counts differ: {s1.n} vs {s2.n}")
    total = s1.cov + s2.cov
    dm = s1.mean - s2.mean
    value = 1.0 / sqrt_det(total)
    if np.any(dm):
        value *= float(np.exp(-0.5 * (dm @ spd_solve(total, dm))))
    return value


def channel_fidelity(channel: GaussianChannel, state: GaussianState) -> FidelityResult:
    """Closed-form fidelity between a pure input and the channel output.

    Raises MixedStateError unless purity(state) >= 1 - 1e-6; the formula
    is the input-output overlap only for pure inputs.
    """
    if channel.n != state.n:
        raise ValueError(f"channel acts on {channel.n} modes, state has {state.n}")
    p = purity(state)
    if p < 1.0 - PURE_INPUT_TOL:
        raise MixedStateError(f"input purity {p:.8f} is below the pure-state threshold")
    t = channel.transform
    total = t @ state.cov @ t.T + state.cov + channel.noise
    det_factor = 1.0 / sqrt_det(total)
    dm = state.mean @ t.T - state.mean
    if np.any(dm):
        disp_factor = float(np.exp(-(dm @ spd_solve(2.0 * total, dm))))
    else:
        disp_factor = 1.0
    return FidelityResult(
        value=det_factor * disp_factor,
        det_factor=det_factor,
        disp_factor=disp_factor,
        matrix_condition=float(np.linalg.cond(total)),
    )


def closed_form_memory(variance: float, correlation: float) -> float:
    """Reference fidelity of the correlated-noise channel on coherent input.

        F = 1 / ((variance + 1)^2 - variance^2 correlation^2)

    Increasing in the correlation, decreasing in the variance.
    """
    if variance < 0.0:
        raise ValueError(f"noise variance must be >= 0, got {variance}")
    if not 0.0 <= correlation <= 1.0:
        raise ValueError(f"correlation must lie in [0, 1], got {correlation}")
    return 1.0 / ((variance + 1.0) ** 2 - (variance * correlation) ** 2)


def memory_bounds(variance: float) -> tuple[float, float]:
    """(min, max) over the correlation of the coherent-input fidelity.

    The fidelity grows with the correlation, so the uncorrelated endpoint
    1/(variance + 1)^2 is the floor and the fully correlated endpoint
    1/(2 variance + 1) the ceiling.
    """
    if variance < 0.0:
        raise ValueError(f"noise variance must be >= 0, got {variance}")
    return 1.0 / (variance + 1.0) ** 2, 1.0 / (2.0 * variance + 1.0)


def closed_form_entangled(variance: float, correlation: float, r: float) -> float:
    """Reference fidelity of the correlated-noise channel on a two-mode
    squeezed vacuum input with squeeze parameter r:

        F = 1 / (1 + v^2 + 2 v cosh 2r - c^2 v^2 - 2 c v sinh 2r)

    with v = variance and c = correlation.  At r = 0 this collapses to
    closed_form_memory.
    """
    if variance < 0.0:
        raise ValueError(f"noise variance must be >= 0, got {variance}")
    if not 0.0 <= correlation <= 1.0:
        raise ValueError(f"correlation must lie in [0, 1], got {correlation}")
    if not np.isfinite(r):
        raise ValueError("squeeze parameter must be finite")
    v, c = float(variance), float(correlation)
    return 1.0 / (
        1.0
        + v**2
        + 2.0 * v * np.cosh(2.0 * r)
        - (c * v) ** 2
        - 2.0 * c * v * np.sinh(2.0 * r)
    )


def amplifier_max_fidelity(eta: float) -> float:
    """Best fidelity of the gain-eta amplifier over pure single-mode inputs.

    The optimum 2 / (3 eta - 1) is attained by the vacuum (cov = I/2);
    squeezing the input only lowers the fidelity.
    """
    if eta < 1.0:
        raise ValueError(f"amplifier gain must be >= 1, got {eta}")
    return 2.0 / (3.0 * eta - 1.0)


def fidelity_vs_overlap_gap(channel: GaussianChannel, state: GaussianState) -> float:
    """Relative gap between the closed form and overlap(state, apply(channel, state)).

    The two routes are algebraically identical; this helper exists for
    cross-checking the numerics.
    """
    f = channel_fidelity(channel, state).value
    o = overlap(state, apply(channel, state))
    return abs(f - o) / max(abs(o), np.finfo(float).tiny)
