"""Command-line front end.

Subcommands:

* ``fidelity`` — closed-form fidelity of a channel/state pair.
* ``validate`` — noise-positivity and complete-positivity report.
* ``oracle``   — compare the closed form against a numerical oracle.
* ``sweep``    — evaluate a parameter grid into a CSV/JSON table.

Channel and state are given either inline (``--channel memory --N 1.0
--x 0.5 --state coherent --alphas 0,0,0,0``) or as a JSON config file
(``--config path``) holding ``{"channel": {...}, "state": {...}}``.

Exit codes: 0 success, 2 bad config/arguments or unsupported
combination, 3 mixed-state input, 4 output write failure, 5 channel
failed validation, 6 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from .channels import validate
from .config import channel_from_spec, state_from_spec
from .errors import MixedStateError
from .fidelity import channel_fidelity
from .oracle import McConfig, QuadratureGrid, mc_fidelity, quad_fidelity
from .sweep import parse_sweep_spec, run_sweep, write_rows


def _fmt(value: float) -> str:
    return repr(float(value))


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read config file: {exc}") from exc


def _add_channel_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--channel", metavar="TYPE", help="channel family name")
    parser.add_argument("--eta", type=float, help="amplifier / attenuator parameter")
    parser.add_argument("--N", type=float, help="memory channel noise variance")
    parser.add_argument("--x", type=float, help="memory channel correlation")
    parser.add_argument("--A", metavar="JSON", help="custom channel transform matrix")
    parser.add_argument("--G", metavar="JSON", help="noise covariance matrix")
    parser.add_argument("--channel-n", type=int, help="mode count for the identity channel")


def _add_state_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--state", metavar="TYPE", help="state family name")
    parser.add_argument("--alphas", metavar="RE,IM,...", help="coherent amplitudes, flat list")
    parser.add_argument("--r", type=float, help="squeeze parameter")
    parser.add_argument("--state-n", type=int, help="mode count for the vacuum state")


def _channel_spec_from_flags(args) -> dict:
    if args.channel is None:
        raise ValueError("no channel given: use --config or --channel")
    spec = {"type": args.channel}
    if args.eta is not None:
        spec["eta"] = args.eta
    if args.N is not None:
        spec["N"] = args.N
    if args.x is not None:
        spec["x"] = args.x
    if args.A is not None:
        spec["A"] = json.loads(args.A)
    if args.G is not None:
        spec["G"] = json.loads(args.G)
    if args.channel_n is not None:
        spec["n"] = args.channel_n
    return spec


def _state_spec_from_flags(args) -> dict:
    if args.state is None:
        raise ValueError("no state given: use --config or --state")
    spec = {"type": args.state}
    if args.alphas is not None:
        flat = [float(v) for v in args.alphas.split(",")]
        if len(flat) % 2 != 0:
            raise ValueError("--alphas needs an even number of values (re,im pairs)")
        spec["alphas"] = [[flat[i], flat[i + 1]] for i in range(0, len(flat), 2)]
    if args.r is not None:
        spec["r"] = args.r
    if args.state_n is not None:
        spec["n"] = args.state_n
    return spec


def _specs_from_args(args, need_state: bool = True) -> tuple[dict, dict | None]:
    if args.config is not None:
        if args.channel is not None or getattr(args, "state", None) is not None:
            raise ValueError("give either --config or inline flags, not both")
        doc = _load_json(args.config)
        if not isinstance(doc, dict):
            raise ValueError("config file must hold a JSON object")
        channel_spec = doc.get("channel", doc if "type" in doc else None)
        if channel_spec is None:
            raise ValueError("config file has no 'channel' spec")
        state_spec = doc.get("state")
        if need_state and state_spec is None:
            raise ValueError("config file has no 'state' spec")
        return channel_spec, state_spec
    channel_spec = _channel_spec_from_flags(args)
    state_spec = _state_spec_from_flags(args) if need_state else None
    return channel_spec, state_spec


def _warn_cp(channel):
    report = validate(channel)
    if not report.cp_ok:
        print(
            "warning: channel fails the complete-positivity check "
            f"(min eigenvalue {report.cp_min_eig:.6g})",
            file=sys.stderr,
        )


def cmd_fidelity(args) -> int:
    channel_spec, state_spec = _specs_from_args(args)
    channel = channel_from_spec(channel_spec)
    state = state_from_spec(state_spec)
    _warn_cp(channel)
    result = channel_fidelity(channel, state)
    print(f"fidelity: {_fmt(result.value)}")
    print(f"det_factor: {_fmt(result.det_factor)}")
    print(f"disp_factor: {_fmt(result.disp_factor)}")
    return 0


def cmd_validate(args) -> int:
    channel_spec, _ = _specs_from_args(args, need_state=False)
    report = validate(channel_from_spec(channel_spec))
    print(f"noise_ok: {'true' if report.noise_ok else 'false'}")
    print(f"cp_ok: {'true' if report.cp_ok else 'false'}")
    print(f"noise_min_eig: {_fmt(report.noise_min_eig)}")
    print(f"cp_min_eig: {_fmt(report.cp_min_eig)}")
    if report.noise_ok and not report.cp_ok:
        print("warning: channel is not completely positive", file=sys.stderr)
    return 0 if report.noise_ok else 5


def cmd_oracle(args) -> int:
    channel_spec, state_spec = _specs_from_args(args)
    channel = channel_from_spec(channel_spec)
    state = state_from_spec(state_spec)
    analytic = channel_fidelity(channel, state).value
    if args.method == "mc":
        estimate, std_error = mc_fidelity(channel, state, McConfig(args.samples, args.seed))
        diff = abs(estimate - analytic)
        ok = diff <= 4.0 * std_error
    else:
        estimate = quad_fidelity(channel, state, QuadratureGrid(args.half_width, args.points))
        std_error = None
        diff = abs(estimate - analytic)
        ok = diff <= args.tol
    print(f"analytic: {_fmt(analytic)}")
    print(f"estimate: {_fmt(estimate)}")
    print(f"difference: {_fmt(diff)}")
    if std_error is not None:
        print(f"std_error: {_fmt(std_error)}")
    if not ok:
        print("oracle and closed form disagree beyond the threshold", file=sys.stderr)
        return 6
    return 0


def cmd_sweep(args) -> int:
    spec = parse_sweep_spec(_load_json(args.config))
    rows = run_sweep(spec, threads=args.parallelism)
    columns = spec.columns
    write_rows(rows, columns, args.out, args.format)
    fid = columns.index("fidelity")
    values = [row[fid] for row in rows]
    print(f"rows: {len(rows)}  fidelity_min: {_fmt(min(values))}  fidelity_max: {_fmt(max(values))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussfid",
        description="Input-output fidelity of bosonic Gaussian channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fid = sub.add_parser("fidelity", help="closed-form channel fidelity")
    p_fid.add_argument("--config", help="JSON file with channel and state specs")
    _add_channel_flags(p_fid)
    _add_state_flags(p_fid)
    p_fid.set_defaults(func=cmd_fidelity)

    p_val = sub.add_parser("validate", help="channel validity report")
    p_val.add_argument("--config", help="JSON file with the channel spec")
    _add_channel_flags(p_val)
    p_val.set_defaults(func=cmd_validate, state=None)

    p_orc = sub.add_parser("oracle", help="numerical cross-check of the closed form")
    p_orc.add_argument("--config", help="JSON file with channel and state specs")
    _add_channel_flags(p_orc)
    _add_state_flags(p_orc)
    p_orc.add_argument("--method", choices=("mc", "quad"), required=True)
    p_orc.add_argument("--samples", type=int, default=10**6, help="mc sample count")
    p_orc.add_argument("--seed", type=int, default=0, help="mc root seed")
    p_orc.add_argument("--half-width", type=float, default=8.0, help="quad box half width")
    p_orc.add_argument("--points", type=int, default=201, help="quad points per axis")
    p_orc.add_argument("--tol", type=float, default=1e-6, help="quad agreement threshold")
    p_orc.set_defaults(func=cmd_oracle)

    p_swp = sub.add_parser("sweep", help="parameter sweep into a CSV/JSON table")
    p_swp.add_argument("--config", required=True, help="JSON sweep config")
    p_swp.add_argument("--out", required=True, help="output file path")
    p_swp.add_argument("--format", choices=("csv", "json"), default="csv")
    p_swp.add_argument(
        "--parallelism", type=int, default=None, help="worker threads (GF_THREADS overrides)"
    )
    p_swp.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MixedStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
