"""Dict-based channel and state specs used by config files and the CLI.

State spec:
    {"type": "vacuum" | "coherent" | "tmsv" | "squeezed",
     "n": int,                  # vacuum only, default 1
     "alphas": [[re, im], ...], # coherent
     "r": float}                # tmsv / squeezed

Channel spec:
    {"type": "amplifier" | "attenuator" | "classical_noise" | "memory"
             | "identity" | "custom",
     "eta": float,              # amplifier / attenuator
     "N": float, "x": float,    # memory (variance, correlation)
     "G": [[...], ...],         # classical_noise, custom
     "A": [[...], ...],         # custom
     "n": int}                  # identity only, default 1

Matrices are row-major nested arrays of reals.
"""

from __future__ import annotations

import numpy as np

from . import channels, states

# per-family numeric parameters a sweep may override
STATE_SWEEPABLE = {
    "vacuum": frozenset(),
    "coherent": frozenset(),
    "tmsv": frozenset({"r"}),
    "squeezed": frozenset({"r"}),
}
CHANNEL_SWEEPABLE = {
    "amplifier": frozenset({"eta"}),
    "attenuator": frozenset({"eta"}),
    "classical_noise": frozenset(),
    "memory": frozenset({"N", "x"}),
    "identity": frozenset(),
    "custom": frozenset(),
}

_STATE_KEYS = {
    "vacuum": {"n"},
    "coherent": {"alphas"},
    "tmsv": {"r"},
    "squeezed": {"r"},
}
_CHANNEL_KEYS = {
    "amplifier": {"eta"},
    "attenuator": {"eta"},
    "classical_noise": {"G"},
    "memory": {"N", "x"},
    "identity": {"n"},
    "custom": {"A", "G"},
}


def _check_keys(spec: dict, allowed: set, what: str):
    extra = set(spec) - allowed - {"type"}
    if extra:
        raise ValueError(f"unexpected {what} spec keys: {sorted(extra)}")


def _get(spec: dict, key: str, what: str):
    if key not in spec:
        raise ValueError(f"{what} spec of type '{spec['type']}' requires '{key}'")
    return spec[key]


def state_from_spec(spec: dict) -> states.GaussianState:
    """Build a GaussianState from its dict spec."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise ValueError("state spec must be an object with a 'type' key")
    kind = spec["type"]
    if kind not in _STATE_KEYS:
        raise ValueError(f"unknown state type '{kind}' (expected one of {sorted(_STATE_KEYS)})")
    _check_keys(spec, _STATE_KEYS[kind], "state")
    if kind == "vacuum":
        return states.vacuum(int(spec.get("n", 1)))
    if kind == "coherent":
        pairs = np.asarray(_get(spec, "alphas", "state"), dtype=float)
        if pairs.ndim != 2 or pairs.shape[1] != 2 or pairs.shape[0] == 0:
            raise ValueError("'alphas' must be a non-empty list of [re, im] pairs")
        return states.coherent(pairs[:, 0] + 1j * pairs[:, 1])
    if kind == "tmsv":
        return states.two_mode_squeezed(float(_get(spec, "r", "state")))
    return states.squeezed_vacuum(float(_get(spec, "r", "state")))


def channel_from_spec(spec: dict) -> channels.GaussianChannel:
    """Build a GaussianChannel from its dict spec."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise ValueError("channel spec must be an object with a 'type' key")
    kind = spec["type"]
    if kind not in _CHANNEL_KEYS:
        raise ValueError(f"unknown channel type '{kind}' (expected one of {sorted(_CHANNEL_KEYS)})")
    _check_keys(spec, _CHANNEL_KEYS[kind], "channel")
    if kind == "amplifier":
        return channels.amplifier(float(_get(spec, "eta", "channel")))
    if kind == "attenuator":
        return channels.attenuator(float(_get(spec, "eta", "channel")))
    if kind == "classical_noise":
        return channels.classical_noise(np.asarray(_get(spec, "G", "channel"), dtype=float))
    if kind == "memory":
        return channels.memory_channel(
            float(_get(spec, "N", "channel")), float(_get(spec, "x", "channel"))
        )
    if kind == "identity":
        return channels.identity_channel(int(spec.get("n", 1)))
    a = np.asarray(_get(spec, "A", "channel"), dtype=float)
    g = np.asarray(_get(spec, "G", "channel"), dtype=float)
    return channels.GaussianChannel(a, g)


def sweepable_names(channel_spec: dict, state_spec: dict) -> frozenset:
    """Parameter names a sweep may vary for the given spec pair."""
    names = frozenset()
    if isinstance(channel_spec, dict):
        names |= CHANNEL_SWEEPABLE.get(channel_spec.get("type"), frozenset())
    if isinstance(state_spec, dict):
        names |= STATE_SWEEPABLE.get(state_spec.get("type"), frozenset())
    return names
