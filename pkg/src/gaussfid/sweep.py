"""Deterministic parameter sweeps over channel/state families.

A sweep config is a single JSON object:

    {"channel": {...channel spec...},
     "state":   {...state spec...},
     "sweep":   [{"name": "N", "values": [0, 0.5, 1]},
                 {"name": "x", "start": 0.0, "stop": 1.0, "count": 5}],
     "oracle":  {"method": "mc", "samples": 1000000, "seed": 42}        # optional
                | {"method": "quad", "half_width": 8.0, "points": 201}}

Rows run over the cartesian product of the swept values with the last
declared parameter varying fastest.  Per-row Monte-Carlo seeds are
derived from the root seed and the row index with a splitmix64-style
mix, so the output is byte-identical for any worker count.
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .config import (
    CHANNEL_SWEEPABLE,
    STATE_SWEEPABLE,
    channel_from_spec,
    state_from_spec,
)
from .fidelity import channel_fidelity
from .oracle import McConfig, QuadratureGrid, mc_fidelity, quad_fidelity

MAX_ROWS = 10**6

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix_seed(root_seed: int, index: int) -> int:
    """splitmix64 finalizer of root_seed + index * golden ratio."""
    z = (root_seed + index * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class SweepParameter:
    name: str
    values: tuple[float, ...]


@dataclass(frozen=True)
class SweepSpec:
    channel_spec: dict
    state_spec: dict
    parameters: tuple[SweepParameter, ...]
    oracle: dict | None  # validated oracle settings, or None

    @property
    def row_count(self) -> int:
        count = 1
        for p in self.parameters:
            count *= len(p.values)
        return count

    @property
    def columns(self) -> list[str]:
        cols = [p.name for p in self.parameters]
        cols += ["fidelity", "det_factor", "disp_factor"]
        if self.oracle is not None:
            cols += ["oracle", "oracle_err"]
        return cols


def _parse_values(entry: dict) -> tuple[float, ...]:
    if "values" in entry:
        values = tuple(float(v) for v in entry["values"])
        if not values:
            raise ValueError(f"swept parameter '{entry.get('name')}' has no values")
        return values
    if {"start", "stop", "count"} <= set(entry):
        count = int(entry["count"])
        if count < 1:
            raise ValueError("grid 'count' must be >= 1")
        return tuple(np.linspace(float(entry["start"]), float(entry["stop"]), count).tolist())
    raise ValueError("swept parameter needs 'values' or 'start'/'stop'/'count'")


def _parse_oracle(entry: dict) -> dict:
    if not isinstance(entry, dict) or "method" not in entry:
        raise ValueError("oracle settings must be an object with a 'method' key")
    method = entry["method"]
    if method == "mc":
        cfg = {
            "method": "mc",
            "samples": int(entry.get("samples", 10**5)),
            "seed": int(entry.get("seed", 0)),
        }
        McConfig(cfg["samples"], cfg["seed"])  # validate bounds
        return cfg
    if method == "quad":
        cfg = {
            "method": "quad",
            "half_width": float(entry.get("half_width", 8.0)),
            "points": int(entry.get("points", 201)),
        }
        QuadratureGrid(cfg["half_width"], cfg["points"])  # validate bounds
        return cfg
    raise ValueError(f"unknown oracle method '{method}' (expected 'mc' or 'quad')")


def parse_sweep_spec(doc: dict) -> SweepSpec:
    """Validate a sweep config document."""
    if not isinstance(doc, dict):
        raise ValueError("sweep config must be a JSON object")
    unknown = set(doc) - {"channel", "state", "sweep", "oracle"}
    if unknown:
        raise ValueError(f"unexpected sweep config keys: {sorted(unknown)}")
    channel_spec = doc.get("channel")
    state_spec = doc.get("state")
    if not isinstance(channel_spec, dict) or not isinstance(state_spec, dict):
        raise ValueError("sweep config requires 'channel' and 'state' objects")

    params = []
    for entry in doc.get("sweep", []):
        if not isinstance(entry, dict) or "name" not in entry:
            raise ValueError("each sweep entry must be an object with a 'name'")
        params.append(SweepParameter(str(entry["name"]), _parse_values(entry)))
    names = [p.name for p in params]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate swept parameter names: {names}")

    channel_ok = CHANNEL_SWEEPABLE.get(channel_spec.get("type"), frozenset())
    state_ok = STATE_SWEEPABLE.get(state_spec.get("type"), frozenset())
    for name in names:
        if name not in channel_ok and name not in state_ok:
            raise ValueError(
                f"parameter '{name}' is not sweepable for channel "
                f"'{channel_spec.get('type')}' / state '{state_spec.get('type')}'"
            )

    spec = SweepSpec(
        channel_spec=channel_spec,
        state_spec=state_spec,
        parameters=tuple(params),
        oracle=_parse_oracle(doc["oracle"]) if "oracle" in doc else None,
    )
    if spec.row_count > MAX_ROWS:
        raise ValueError(f"sweep of {spec.row_count} rows exceeds the {MAX_ROWS} limit")
    # fail early on an unbuildable base point
    _build(spec, {})
    return spec


def _build(spec: SweepSpec, overrides: dict):
    channel_spec = dict(spec.channel_spec)
    state_spec = dict(spec.state_spec)
    channel_ok = CHANNEL_SWEEPABLE.get(channel_spec.get("type"), frozenset())
    for name, value in overrides.items():
        if name in channel_ok:
            channel_spec[name] = value
        else:
            state_spec[name] = value
    return channel_from_spec(channel_spec), state_from_spec(state_spec)


def _evaluate_row(spec: SweepSpec, index: int, combo: tuple) -> list[float]:
    overrides = {p.name: v for p, v in zip(spec.parameters, combo)}
    channel, state = _build(spec, overrides)
    result = channel_fidelity(channel, state)
    row = list(combo) + [result.value, result.det_factor, result.disp_factor]
    if spec.oracle is not None:
        cfg = spec.oracle
        if cfg["method"] == "mc":
            est = mc_fidelity(channel, state, McConfig(cfg["samples"], mix_seed(cfg["seed"], index)))
            row += [est.estimate, est.std_error]
        else:
            est = quad_fidelity(channel, state, QuadratureGrid(cfg["half_width"], cfg["points"]))
            row += [est, abs(est - result.value)]
    return row


def thread_count(requested: int | None = None) -> int:
    """Worker count: GF_THREADS env var wins, then the argument, then cores."""
    env = os.environ.get("GF_THREADS")
    if env is not None:
        count = int(env)
    elif requested is not None:
        count = requested
    else:
        count = os.cpu_count() or 1
    if count < 1:
        raise ValueError(f"thread count must be >= 1, got {count}")
    return count


def run_sweep(spec: SweepSpec, threads: int | None = None) -> list[list[float]]:
    """Evaluate all rows, ordered with the last parameter varying fastest."""
    combos = list(itertools.product(*(p.values for p in spec.parameters)))
    workers = thread_count(threads)
    if workers == 1 or len(combos) <= 1:
        return [_evaluate_row(spec, i, c) for i, c in enumerate(combos)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate_row, itertools.repeat(spec), range(len(combos)), combos))


def write_rows(rows: list[list[float]], columns: list[str], path: str, fmt: str):
    """Write rows as CSV or JSON; floats keep shortest round-trip form."""
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(repr(float(v)) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = json.dumps(
            [{c: float(v) for c, v in zip(columns, row)} for row in rows], indent=1
        ) + "\n"
    else:
        raise ValueError(f"unknown output format '{fmt}' (expected 'csv' or 'json')")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def read_csv(path: str) -> tuple[list[str], list[list[float]]]:
    """Inverse of write_rows(fmt='csv')."""
    with open(path, encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line]
    columns = lines[0].split(",")
    return columns, [[float(v) for v in line.split(",")] for line in lines[1:]]
