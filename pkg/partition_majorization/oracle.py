"""Brute-force witness search and engine-versus-oracle differential checks."""

import logging
import random
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Callable, Iterable, List, Optional

from pydantic import TypeAdapter

from .config import Config
from .core import check_exact, check_weak, make_instance
from .engine import exists_exact, exists_weak
from .errors import PreconditionViolated
from .schemas.types import (
    AgreementReport,
    FuzzBatchRequest,
    FuzzInstanceResult,
    Instance,
    InstanceDocument,
    Mode,
    ModeAgreement,
    OracleOutcome,
    Partition,
    SearchBounds,
    Verdict,
)

logger = logging.getLogger(__name__)

Checker = Callable[[Partition, Partition, Partition], Verdict]


def default_bounds(inst: Instance, slack: Optional[int] = None) -> SearchBounds:
    """[min input value - slack, max input value + slack]."""
    slack = Config.ORACLE_WINDOW_SLACK if slack is None else slack
    values = [v for p in (inst.a, inst.b, inst.c, inst.d) for v in p.entries]
    return SearchBounds(
        lo=min(values) - slack,
        hi=max(values) + slack,
        max_candidates=Config.ORACLE_MAX_CANDIDATES,
    )


def _search(
    inst: Instance,
    bounds: SearchBounds,
    mode: Mode,
    checker: Checker,
    target_total: Optional[int] = None,
) -> OracleOutcome:
    # descending values in, lexicographically descending nonincreasing tuples out
    candidates = combinations_with_replacement(
        range(bounds.hi, bounds.lo - 1, -1), inst.m + inst.s
    )
    examined = 0
    for entries in candidates:
        if examined >= bounds.max_candidates:
            logger.info("%s search capped after %d candidates", mode, examined)
            return OracleOutcome(
                mode=mode, candidates_checked=examined, exhausted=False, bounds=bounds
            )
        examined += 1
        if target_total is not None and sum(entries) != target_total:
            continue
        g = Partition(entries=entries)
        if checker(g, inst.d, inst.a).holds and checker(g, inst.c, inst.b).holds:
            return OracleOutcome(
                mode=mode,
                found=g,
                candidates_checked=examined,
                exhausted=True,
                bounds=bounds,
            )
    return OracleOutcome(
        mode=mode, candidates_checked=examined, exhausted=True, bounds=bounds
    )


def enumerate_weak(inst: Instance, bounds: Optional[SearchBounds] = None) -> OracleOutcome:
    return _search(inst, bounds or default_bounds(inst), "weak", check_weak)


def enumerate_exact(
    inst: Instance, bounds: Optional[SearchBounds] = None, prune: bool = True
) -> OracleOutcome:
    """Exact search; ``prune`` skips candidates whose total is not sum(d) + sum(a)."""
    target = inst.d.total + inst.a.total if prune else None
    return _search(inst, bounds or default_bounds(inst), "exact", check_exact, target)


def enumerate_mode(
    inst: Instance, mode: Mode, bounds: Optional[SearchBounds] = None
) -> OracleOutcome:
    if mode == "exact":
        return enumerate_exact(inst, bounds)
    return enumerate_weak(inst, bounds)


def differential_check(
    inst: Instance, bounds: Optional[SearchBounds] = None
) -> AgreementReport:
    bounds = bounds or default_bounds(inst)
    agreements = {}
    for mode, engine, oracle in (
        ("weak", exists_weak, enumerate_weak),
        ("exact", exists_exact, enumerate_exact),
    ):
        cert = engine(inst)
        outcome = oracle(inst, bounds)
        agreements[mode] = ModeAgreement(
            mode=mode,
            engine_exists=cert.exists,
            oracle_found=outcome.found is not None,
            exhausted=outcome.exhausted,
        )
    report = AgreementReport(
        instance=InstanceDocument.from_instance(inst),
        weak=agreements["weak"],
        exact=agreements["exact"],
    )
    if not report.agree:
        logger.warning("engine and oracle disagree on %s", report.instance)
    return report


def _random_partition(rng: random.Random, length: int, lo: int, hi: int) -> List[int]:
    return sorted((rng.randint(lo, hi) for _ in range(length)), reverse=True)


def random_instance(
    rng: random.Random, max_len: int, min_val: int, max_val: int
) -> Instance:
    """A valid instance with every list no longer than max_len."""
    if max_len < 1:
        raise PreconditionViolated("max_len must be at least 1")
    if max_val <= min_val:
        raise PreconditionViolated("c and d need at least two distinct values")
    while True:
        m, n = rng.randint(1, max_len), rng.randint(1, max_len)
        s = rng.randint(max(0, n - m), max_len)
        k = m + s - n
        if k > max_len:
            continue
        c = _random_partition(rng, n, min_val, max_val)
        d = _random_partition(rng, m, min_val, max_val)
        if set(c) & set(d):
            continue
        return make_instance(
            _random_partition(rng, s, min_val, max_val),
            _random_partition(rng, k, min_val, max_val),
            c,
            d,
        )


def instance_rng(seed: int, index: int) -> random.Random:
    """Per-instance generator, so results do not depend on how a sweep is batched."""
    return random.Random(f"{seed}:{index}")


def run_differential_batch(request: FuzzBatchRequest) -> List[FuzzInstanceResult]:
    results = []
    for index in range(request["start_index"], request["start_index"] + request["count"]):
        inst = random_instance(
            instance_rng(request["seed"], index),
            request["max_len"],
            request["min_val"],
            request["max_val"],
        )
        report = differential_check(inst)
        results.append(
            FuzzInstanceResult(
                index=index,
                agree=report.agree,
                hard_failure=report.hard_failure,
                report=report.model_dump(mode="json"),
            )
        )
    return results


def batch_requests(
    instances: int,
    max_len: int,
    min_val: int,
    max_val: int,
    seed: int,
    batch_size: int,
) -> List[FuzzBatchRequest]:
    return [
        FuzzBatchRequest(
            seed=seed,
            start_index=start,
            count=min(batch_size, instances - start),
            max_len=max_len,
            min_val=min_val,
            max_val=max_val,
        )
        for start in range(0, instances, batch_size)
    ]


def write_disagreement_dump(
    results: Iterable[FuzzInstanceResult], dump_dir: Path, seed: int
) -> Optional[Path]:
    """Write every disagreeing report to a JSON file; None when all agree."""
    reports = [
        AgreementReport.model_validate(r["report"]) for r in results if not r["agree"]
    ]
    if not reports:
        return None
    dump_dir.mkdir(parents=True, exist_ok=True)
    path = dump_dir / f"disagreements-seed-{seed}.json"
    path.write_bytes(TypeAdapter(List[AgreementReport]).dump_json(reports, indent=2))
    logger.warning("%d disagreements written to %s", len(reports), path)
    return path
