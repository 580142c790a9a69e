"""Input-output fidelity of bosonic Gaussian channels.

States are (covariance, mean) pairs, channels are (transform, noise)
matrix pairs, and the central quantity is the closed-form overlap
between a pure input and the channel output, cross-checkable against a
phase-space quadrature oracle and a Monte-Carlo displacement-noise
oracle.
"""

from .channels import (
    GaussianChannel,
    ValidityReport,
    amplifier,
    apply,
    attenuator,
    classical_noise,
    compose,
    identity_channel,
    memory_channel,
    memory_noise_cov,
    validate,
)
from .errors import MixedStateError, SingularMatrixError, UnphysicalStateError
from .fidelity import (
    FidelityResult,
    amplifier_max_fidelity,
    channel_fidelity,
    closed_form_entangled,
    closed_form_memory,
    memory_bounds,
    overlap,
)
from .oracle import McConfig, McEstimate, QuadratureGrid, mc_fidelity, quad_fidelity
from .phase_space import (
    QuadratureOrdering,
    min_eig_hermitian,
    reorder,
    reorder_vector,
    spd_solve,
    sqrt_det,
    symplectic_form,
)
from .states import (
    GaussianState,
    char_function,
    coherent,
    purity,
    squeezed_vacuum,
    two_mode_squeezed,
    vacuum,
)

__version__ = "0.1.0"

__all__ = [
    "GaussianChannel",
    "GaussianState",
    "FidelityResult",
    "McConfig",
    "McEstimate",
    "MixedStateError",
    "QuadratureGrid",
    "QuadratureOrdering",
    "SingularMatrixError",
    "UnphysicalStateError",
    "ValidityReport",
    "amplifier",
    "amplifier_max_fidelity",
    "apply",
    "attenuator",
    "channel_fidelity",
    "char_function",
    "classical_noise",
    "closed_form_entangled",
    "closed_form_memory",
    "coherent",
    "compose",
    "identity_channel",
    "mc_fidelity",
    "memory_bounds",
    "memory_channel",
    "memory_noise_cov",
    "min_eig_hermitian",
    "overlap",
    "purity",
    "quad_fidelity",
    "reorder",
    "reorder_vector",
    "spd_solve",
    "sqrt_det",
    "squeezed_vacuum",
    "symplectic_form",
    "two_mode_squeezed",
    "vacuum",
    "validate",
]
