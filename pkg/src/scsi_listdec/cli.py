"""Command-line entry point: ``scsi-listdec <command> [flags]``.

Exit codes: 0 success, 1 usage or I/O error, 2 infeasible design,
3 decode failure.  Any flag may instead come from a ``--config`` file of
``key=value`` lines (``#`` starts a comment); flags on the command line win.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .crc import CRC12, CrcSpec
from .designer import CorrelationModel, binomial_tail_threshold, design
from .errors import NoFeasibleCode, ScsiError
from .finite_field import field_new
from .gs_decoder import gs_radius
from .published_tables import build_rows, render, to_record
from .rs_code import RsCode
from .scsi_codec import (
    decode_wire,
    encode_wire,
    measured_rate,
    pack_symbols,
    scsi_decode,
    scsi_decode_progressive,
    scsi_encode,
    unpack_symbols,
)
from .sim_harness import run_trials

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_DECODE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _hex(text: str) -> int:
    try:
        return int(text, 0) if text.lower().startswith("0x") else int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex number: {text!r}") from None


def _code_flags(p, modulus: bool = False):
    p.add_argument("--m", type=int, help="symbol width in bits (field GF(2^m))")
    if modulus:
        p.add_argument("--modulus", type=_hex, help="primitive polynomial, hex (default per m)")
    p.add_argument("--n", type=int, help="code length")
    p.add_argument("--k", type=int, help="code dimension")
    p.add_argument("--b", type=int, default=1, help="first consecutive root exponent")


def _crc_flags(p):
    p.add_argument("--crc-gen", type=_hex, default=CRC12, help="CRC generator, hex (default 0x180F)")
    p.add_argument("--crc-bits", type=int, help="CRC width; checked against the generator degree")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scsi-listdec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    d = sub.add_parser("design", help="choose a code for a correlation model")
    d.add_argument("--q", type=int)
    d.add_argument("--n", type=int)
    d.add_argument("--p", type=float)
    d.add_argument("--eps", type=float)
    d.add_argument("--crc-bits", type=int, default=12)
    d.add_argument("--json", type=Path, help="write the design record here")

    e = sub.add_parser("encode", help="compress a source block to syndrome plus CRC")
    _code_flags(e)
    _crc_flags(e)
    e.add_argument("--input", type=Path, help="n symbols, packed m bits each, MSB first")
    e.add_argument("--output", type=Path, help="wire-format message file")

    de = sub.add_parser("decode", help="recover a source block from a message and side information")
    de.add_argument("--input", type=Path, help="wire-format message file")
    de.add_argument("--side-info", type=Path, help="n symbols of side information")
    de.add_argument("--output", type=Path, help="recovered source block")
    de.add_argument("--tau", type=int, help="decoding radius (default: GS radius of the code)")
    de.add_argument("--multiplicity", type=int)
    de.add_argument("--progressive", action="store_true")
    de.add_argument("--max-multiplicity", type=int)

    s = sub.add_parser("simulate", help="Monte Carlo run on the q-ary symmetric model")
    _code_flags(s, modulus=True)
    _crc_flags(s)
    s.add_argument("--p", type=float)
    s.add_argument("--eps", type=float, help="set tau to T_eps when --tau is absent")
    s.add_argument("--tau", type=int)
    s.add_argument("--multiplicity", type=int)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--progressive", action="store_true")
    s.add_argument("--max-multiplicity", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--output", type=Path, help="text report file")
    s.add_argument("--json", type=Path, help="JSON report file")

    t = sub.add_parser("paper-tables", help="recompute the worked design examples")
    t.add_argument("--json", type=Path)

    for p in (d, e, de, s, t):
        p.add_argument("--config", type=Path, help="key=value file supplying any flag")
    return parser


def _read_config(path: Path) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def _apply_config(parser, args, argv):
    """Fill flags absent from the command line with values from ``--config``."""
    if args.config is None:
        return args
    try:
        entries = _read_config(args.config)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    subparser = parser._subparsers._group_actions[0].choices[args.command]
    actions = {a.dest: a for a in subparser._actions if a.dest not in ("help", "config")}
    given = {a.dest for a in actions.values() for opt in a.option_strings
             for tok in argv if tok == opt or tok.startswith(opt + "=")}
    for key, value in entries.items():
        if key not in actions:
            raise UsageError(f"{args.config}: '{key}' is not a parameter of {args.command}")
        if key in given:
            continue
        action = actions[key]
        if isinstance(action, argparse._StoreTrueAction):
            if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                raise UsageError(f"{args.config}: '{key}' needs a boolean")
            setattr(args, key, value.lower() in ("true", "1", "yes"))
        else:
            try:
                setattr(args, key, action.type(value) if action.type else value)
            except (ValueError, argparse.ArgumentTypeError) as exc:
                raise UsageError(f"{args.config}: bad value for '{key}': {exc}") from None
    return args


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"{args.command}: missing {flags}")


def _crc(args) -> CrcSpec:
    try:
        spec = CrcSpec(args.crc_gen)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.crc_bits is not None and args.crc_bits != spec.rho:
        raise UsageError(f"--crc-bits {args.crc_bits} disagrees with generator degree {spec.rho}")
    return spec


def _code(args, modulus=None) -> RsCode:
    _need(args, "m", "n", "k")
    try:
        return RsCode(field_new(args.m, modulus), args.n, args.k, args.b)
    except (ValueError, ScsiError) as exc:
        raise UsageError(f"invalid code parameters: {exc}") from None


def _read_word(path: Path, n: int, m: int) -> np.ndarray:
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return unpack_symbols(data, n, m)
    except ScsiError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write(path: Path, data: bytes | str):
    try:
        if isinstance(data, str):
            path.write_text(data)
        else:
            path.write_bytes(data)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


# -- commands ---------------------------------------------------------------


def cmd_design(args) -> int:
    if args.eps is not None and not 0 < args.eps < 1:
        raise UsageError(f"--eps must lie in (0, 1), got {args.eps}")
    _need(args, "q", "n", "p", "eps")
    if args.q < 2 or args.q & (args.q - 1):
        raise UsageError(f"--q must be a power of two, got {args.q}")
    if args.crc_bits < 0:
        raise UsageError("--crc-bits must be nonnegative")
    try:
        model = CorrelationModel(args.q, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        res = design(args.n, model, args.eps, args.crc_bits)
    except NoFeasibleCode as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    print(f"family: {res.family}")
    print(f"T_eps: {res.t_eps}")
    print(f"code: ({res.n},{res.k})  d_min: {res.d_min}  tau: {res.tau}")
    print(f"rate: {res.rate_no_crc} = {float(res.rate_no_crc):.4f}")
    print(f"rate with {res.rho} CRC bits: {res.rate_with_crc} = {float(res.rate_with_crc):.4f}")
    print(f"log_q expected list size: {res.expected_log_list:.3f}")
    if res.unique_k:
        print(f"unique decoding: ({res.n},{res.unique_k})  d_min: {res.unique_d_min}  "
              f"rate: {res.unique_rate} = {float(res.unique_rate):.4f}")
    else:
        print("unique decoding: infeasible (needs d_min > n)")
    for note in res.notes:
        print(f"note: {note}")
    if args.json:
        _write(args.json, json.dumps(res.to_record(), sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def cmd_encode(args) -> int:
    _need(args, "input", "output")
    code = _code(args)
    spec = _crc(args)
    x = _read_word(args.input, code.n, code.field.m)
    if np.any(x >= code.field.q):
        raise UsageError("input symbol out of range")
    msg = scsi_encode(code, spec, x)
    wire = encode_wire(code, spec, msg)
    _write(args.output, wire)
    rate = measured_rate(code, spec)
    print(f"payload bits: {msg.payload_bits(code.field.m, spec.rho)}")
    print(f"file bytes: {len(wire)}")
    print(f"rate: {rate} = {float(rate):.4f}")
    return EXIT_OK


def cmd_decode(args) -> int:
    _need(args, "input", "side_info", "output")
    try:
        wire = decode_wire(args.input.read_bytes())
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    except (ScsiError, ValueError) as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    try:
        code = wire.code()
    except (ValueError, ScsiError) as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    y = _read_word(args.side_info, code.n, code.field.m)
    tau = gs_radius(code.n, code.k) if args.tau is None else args.tau
    if not 0 <= tau <= gs_radius(code.n, code.k):
        raise UsageError(f"--tau must lie in [0, {gs_radius(code.n, code.k)}]")
    if args.progressive:
        out = scsi_decode_progressive(code, wire.crc_spec, wire.message, y, tau, args.max_multiplicity)
    else:
        out = scsi_decode(code, wire.crc_spec, wire.message, y, tau, args.multiplicity)
    print(f"status: {out.status.value}")
    print(f"radius: {out.radius}  multiplicity: {out.multiplicity}")
    print(f"list size: {out.list_size}")
    if not out.ok:
        if out.ambiguous_set:
            print(f"crc matches: {len(out.ambiguous_set)}")
        return EXIT_DECODE
    _write(args.output, pack_symbols(out.recovered, code.field.m))
    return EXIT_OK


def cmd_simulate(args) -> int:
    _need(args, "p")
    code = _code(args, args.modulus)
    spec = _crc(args)
    try:
        model = CorrelationModel(code.field.q, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    limit = gs_radius(code.n, code.k)
    if args.tau is not None:
        tau = args.tau
    elif args.eps is not None:
        if not 0 < args.eps < 1:
            raise UsageError(f"--eps must lie in (0, 1), got {args.eps}")
        tau = min(binomial_tail_threshold(code.n, args.p, args.eps), limit)
    else:
        tau = limit
    if not 0 <= tau <= limit:
        raise UsageError(f"--tau must lie in [0, {limit}]")
    report = run_trials(
        code, spec, model, tau,
        multiplicity=args.multiplicity,
        trials=args.trials,
        seed=args.seed,
        progressive=args.progressive,
        max_multiplicity=args.max_multiplicity,
        workers=args.workers,
    )
    text = report.to_text()
    sys.stdout.write(text)
    if args.output:
        _write(args.output, text)
    if args.json:
        _write(args.json, report.to_json())
    return EXIT_OK


def cmd_published_tables(args) -> int:
    rows = build_rows()
    sys.stdout.write(render(rows))
    if args.json:
        _write(args.json, json.dumps(to_record(rows), indent=2) + "\n")
    return EXIT_OK


COMMANDS = {
    "design": cmd_design,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "simulate": cmd_simulate,
    "paper-tables": cmd_published_tables,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        args = _apply_config(parser, args, argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
