"""Command-line front end.

Exit codes: 0 exists/holds/found/all agree, 1 the negative outcome,
2 bad input or flags, 3 an engine invariant failed.
"""

import argparse
import asyncio
import contextlib
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from .config import Config
from .core import check_exact, check_weak, make_instance, make_partition
from .engine import certificate_document, decide
from .errors import EngineDefect, InputError
from .oracle import (
    batch_requests,
    default_bounds,
    enumerate_mode,
    run_differential_batch,
    write_disagreement_dump,
)
from .schemas.types import (
    FuzzInstanceResult,
    FuzzRequest,
    FuzzSummary,
    Instance,
    InstanceDocument,
    PairVerification,
    SearchBounds,
)

logger = logging.getLogger(__name__)

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_DEFECT = 0, 1, 2, 3


def load_instance(path: str) -> Instance:
    doc = InstanceDocument.model_validate_json(Path(path).read_bytes())
    return make_instance(doc.a, doc.b, doc.c, doc.d)


def parse_g(text: str) -> List[int]:
    """Accept "3,2" or "[3,2]"."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(",") if p.strip()]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def _emit(model) -> None:
    print(model.model_dump_json())


def cmd_check(args: argparse.Namespace) -> int:
    cert = decide(load_instance(args.input), args.mode)
    _emit(certificate_document(cert, emit_witness=args.emit_witness, trace=args.trace))
    return EXIT_YES if cert.exists else EXIT_NO


def cmd_verify(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    g = make_partition(args.g, "g")
    check = check_exact if args.mode == "exact" else check_weak
    verification = PairVerification(
        against_d_a=check(g, inst.d, inst.a),
        against_c_b=check(g, inst.c, inst.b),
    )
    _emit(verification)
    return EXIT_YES if verification.both_hold else EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    bounds = default_bounds(inst)
    if args.lo is not None or args.hi is not None:
        bounds = SearchBounds(
            lo=bounds.lo if args.lo is None else args.lo,
            hi=bounds.hi if args.hi is None else args.hi,
            max_candidates=bounds.max_candidates,
        )
    outcome = enumerate_mode(inst, args.mode, bounds)
    _emit(outcome)
    return EXIT_YES if outcome.found is not None else EXIT_NO


def _run_temporal_sweep(request: FuzzRequest) -> List[FuzzInstanceResult]:
    from .client import start_fuzz_workflow

    # client banners must not mix with the JSON summary on stdout
    with contextlib.redirect_stdout(sys.stderr):
        return asyncio.run(start_fuzz_workflow(request))


def cmd_fuzz(args: argparse.Namespace) -> int:
    if args.instances < 0 or args.max_len < 1 or args.max_val <= args.min_val:
        raise InputError(
            "fuzz needs --instances >= 0, --max-len >= 1 and --max-val > --min-val"
        )
    request = FuzzRequest(
        instances=args.instances,
        max_len=args.max_len,
        min_val=args.min_val,
        max_val=args.max_val,
        seed=args.seed,
        batch_size=Config.FUZZ_BATCH_SIZE,
    )
    if args.temporal:
        results = _run_temporal_sweep(request)
    else:
        results = [
            r
            for batch in batch_requests(**request)
            for r in run_differential_batch(batch)
        ]

    dump = write_disagreement_dump(
        results, Path(args.dump_dir or Config.FUZZ_DUMP_DIR), args.seed
    )
    if dump:
        print(f"disagreements written to {dump}", file=sys.stderr)
    summary = FuzzSummary(
        instances=len(results),
        disagreements=sum(1 for r in results if not r["agree"]),
        hard_failures=sum(1 for r in results if r["hard_failure"]),
        dump=str(dump) if dump else None,
    )
    _emit(summary)
    return EXIT_YES if summary.disagreements == 0 else EXIT_NO


def cmd_worker(args: argparse.Namespace) -> int:
    from .worker import run_fuzz_worker

    asyncio.run(run_fuzz_worker())
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-majorization",
        description="Decide whether one partition is majorized by two (d, a) and (c, b) pairs at once.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def mode_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--mode", choices=["weak", "exact"], required=True)

    check = sub.add_parser("check", help="decide existence and print a certificate")
    mode_flag(check)
    check.add_argument("--input", required=True, help="instance JSON file")
    check.add_argument("--emit-witness", action="store_true")
    check.add_argument("--trace", action="store_true", help="include the classification trace")
    check.set_defaults(handler=cmd_check)

    verify = sub.add_parser("verify", help="check a supplied g against both pairs")
    verify.add_argument("--input", required=True)
    verify.add_argument("--g", required=True, type=parse_g)
    mode_flag(verify)
    verify.set_defaults(handler=cmd_verify)

    oracle = sub.add_parser("oracle", help="brute-force witness search")
    oracle.add_argument("--input", required=True)
    mode_flag(oracle)
    oracle.add_argument("--lo", type=int)
    oracle.add_argument("--hi", type=int)
    oracle.set_defaults(handler=cmd_oracle)

    fuzz = sub.add_parser("fuzz", help="engine versus oracle on random instances")
    fuzz.add_argument("--instances", type=int, required=True)
    fuzz.add_argument("--max-len", type=int, required=True)
    fuzz.add_argument("--max-val", type=int, required=True)
    fuzz.add_argument("--min-val", type=int, default=0)
    fuzz.add_argument("--seed", type=int, required=True)
    fuzz.add_argument("--dump-dir")
    fuzz.add_argument("--temporal", action="store_true", help="run batches on the Temporal worker")
    fuzz.set_defaults(handler=cmd_fuzz)

    worker = sub.add_parser("worker", help="run the Temporal fuzz worker")
    worker.set_defaults(handler=cmd_worker)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    Config.configure_logging()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_YES

    try:
        return args.handler(args)
    except (InputError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: cannot read input: {e}", file=sys.stderr)
        return EXIT_INPUT
    except EngineDefect as e:
        logger.error("engine defect: %s", e)
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_DEFECT


def main() -> None:
    sys.exit(run())
