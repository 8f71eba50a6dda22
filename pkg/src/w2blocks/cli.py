"""``w2blocks`` command line: partition invariants, block matrices and the verification sweep.

Exit codes: 0 success, 1 verification or internal failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .abacus import Partition, conjugate, e_core_and_weight, is_e_regular, relative_sign
from .alvis_curtis import ac_matrix
from .blocks import BlockId, classify, enumerate_block, mullineux
from .checks import ALL_CHECKS, SweepConfig, run_sweep
from .decomp import (
    cartan_matrix,
    decomposition_matrix,
    decomposition_matrix_v,
    ext_quiver,
    inverse_decomposition_matrix,
    weyl_layers,
)
from .errors import InternalError, InvalidArgument, VerificationFailure, W2BlocksError
from .pairs import chain_to_rouquier, find_pairs
from .serialize import FORMATS, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str) -> Partition:
    return Partition.parse(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidArgument(f"expected comma-separated integers, got {text!r}") from None


def _block(args, lam: Partition | None = None) -> BlockId:
    if args.core is None:
        if lam is None:
            raise InvalidArgument("--core is required")
        core = e_core_and_weight(lam, args.e)[0]
    else:
        core = _partition(args.core)
    block = BlockId(args.e, core, args.weight)
    if lam is not None and not block.contains(lam):
        raise InvalidArgument(f"{list(lam)} is not in block {block}")
    return block


# ---------------------------------------------------------------- partition


def _label_json(lam, block):
    out = classify(lam, block).to_json()
    if out["colour"] is None:
        del out["colour"]
    return out


def cmd_partition(args):
    lam = _partition(args.partition)
    verb = args.verb
    if verb == "conjugate":
        return list(conjugate(lam))
    if args.e is None:
        raise InvalidArgument(f"partition {verb} needs --e")
    if verb == "core":
        core, w = e_core_and_weight(lam, args.e)
        return {"core": list(core), "weight": w}
    if verb == "weight":
        return e_core_and_weight(lam, args.e)[1]
    if verb == "sign":
        return relative_sign(lam, args.e)
    block = _block(args, lam)
    if verb == "label":
        return _label_json(lam, block)
    if not is_e_regular(lam, args.e):
        raise InvalidArgument(f"{list(lam)} is not {args.e}-regular")
    return list(mullineux(lam, block))


# ---------------------------------------------------------------- block


def cmd_block(args):
    B = _block(args)
    verb = args.verb
    if verb == "enumerate":
        return [list(lam) for lam in enumerate_block(B)]
    if verb == "dmatrix":
        return decomposition_matrix(B, args.p)
    if verb == "dmatrix-v":
        return decomposition_matrix_v(B)
    if verb == "inverse":
        return inverse_decomposition_matrix(B, args.p)
    if verb == "cartan":
        return cartan_matrix(B, args.p)
    if verb == "ac":
        return ac_matrix(B)
    if verb == "ext-quiver":
        return ext_quiver(B)
    if verb == "layers":
        return [{"partition": list(lam),
                 "layers": {str(k): [list(m) for m in v] for k, v in weyl_layers(lam, B).items()}}
                for lam in enumerate_block(B)]
    if verb == "pairs":
        return [P.to_json() for P in find_pairs(B, all_frames=args.all_frames)]
    if verb == "chain":
        return [P.to_json() for P in chain_to_rouquier(B)]
    raise InvalidArgument(f"unknown block verb {verb!r}")


# ---------------------------------------------------------------- verify


def _sweep_config(args) -> SweepConfig:
    data = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidArgument(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(data, dict):
            raise InvalidArgument("config file must hold a JSON object")
    if args.e_range:
        data["e_range"] = _int_list(args.e_range)
    if args.max_core is not None:
        data["max_core_size"] = args.max_core
    if args.p_values:
        data["p_values"] = _int_list(args.p_values)
    if args.checks:
        data["checks"] = [c.strip() for c in args.checks.split(",") if c.strip()]
    return SweepConfig.from_json(data)


def cmd_verify(args):
    cfg = _sweep_config(args)
    report = run_sweep(cfg)
    doc = report.to_json(timing=args.timing, details=args.details)
    if cfg.output_dir:
        out = Path(cfg.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(json.dumps(doc, indent=2) + "\n")
    return report, doc


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="w2blocks", description="Weight-2 blocks of symmetric groups and Hecke algebras.")
    nouns = p.add_subparsers(dest="noun", required=True)

    def common(sp, need_partition=False):
        sp.add_argument("--e", type=int)
        sp.add_argument("--core", help='comma-separated parts, "" for the empty core')
        sp.add_argument("--weight", type=int, default=2)
        sp.add_argument("--p", type=int, default=0)
        sp.add_argument("--format", choices=FORMATS, default="json")
        sp.add_argument("--out", help="write output here instead of stdout")
        if need_partition:
            sp.add_argument("partition", help='partition literal such as "3,1"')

    part = nouns.add_parser("partition")
    part.add_argument("verb", choices=["core", "weight", "sign", "conjugate", "label", "mullineux"])
    common(part, need_partition=True)

    blk = nouns.add_parser("block")
    blk.add_argument("verb", choices=["enumerate", "dmatrix", "dmatrix-v", "inverse", "cartan", "ac",
                                      "ext-quiver", "layers", "pairs", "chain"])
    common(blk)
    blk.add_argument("--all-frames", action="store_true", help="pairs: search every bead framing")

    ver = nouns.add_parser("verify")
    ver.add_argument("--config", help="JSON file with SweepConfig fields")
    ver.add_argument("--checks", help=f"comma-separated subset of: {', '.join(ALL_CHECKS)}")
    ver.add_argument("--e-range", help="comma-separated e values")
    ver.add_argument("--max-core", type=int)
    ver.add_argument("--p-values", help="comma-separated characteristics (0 or odd primes)")
    ver.add_argument("--format", choices=("json", "text"), default="json")
    ver.add_argument("--timing", action="store_true", help="include per-check seconds")
    ver.add_argument("--details", action="store_true", help="include every unit result")
    ver.add_argument("--out")
    return p


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _verify_text(doc) -> str:
    lines = []
    for c in doc["checks"]:
        status = "PASS" if c["failed"] == 0 else "FAIL"
        line = f"{status} {c['check']}: {c['passed']} passed, {c['failed']} failed"
        if c["first_failure"]:
            line += f"; first: {json.dumps(c['first_failure'], separators=(',', ':'))}"
        lines.append(line)
    lines.append(f"{doc['blocks']} blocks, {'ok' if doc['ok'] else 'FAILED'}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.noun == "verify":
            report, doc = cmd_verify(args)
            text = _verify_text(doc) if args.format == "text" else json.dumps(doc, indent=2) + "\n"
            _emit(text, args.out)
            return EXIT_OK if report.ok else EXIT_FAIL
        if args.noun == "block" and args.e is None:
            raise InvalidArgument("block commands need --e")
        obj = cmd_partition(args) if args.noun == "partition" else cmd_block(args)
        if args.noun == "partition" and args.verb == "core" and args.format == "text":
            text = f"{obj['core']} weight {obj['weight']}\n"
        else:
            text = render(obj, args.format)
        _emit(text, args.out)
        return EXIT_OK
    except UsageError as exc:
        print(f"w2blocks: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VerificationFailure, InternalError) as exc:
        print(f"w2blocks: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (W2BlocksError, OSError) as exc:
        print(f"w2blocks: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
