import json
import random

import pytest
from pydantic import ValidationError

from partition_majorization.core import check_exact, check_weak, make_instance
from partition_majorization.errors import PreconditionViolated
from partition_majorization.oracle import (
    batch_requests,
    default_bounds,
    differential_check,
    enumerate_exact,
    enumerate_weak,
    instance_rng,
    random_instance,
    run_differential_batch,
    write_disagreement_dump,
)
from partition_majorization.schemas import FuzzBatchRequest, SearchBounds


def test_default_bounds(i1, i3):
    bounds = default_bounds(i1)
    assert (bounds.lo, bounds.hi) == (0, 4)
    bounds = default_bounds(i3)
    assert (bounds.lo, bounds.hi) == (-1, 6)


def test_search_bounds_validation():
    with pytest.raises(ValidationError):
        SearchBounds(lo=3, hi=1)
    with pytest.raises(ValidationError):
        SearchBounds(lo=0, hi=1, max_candidates=0)


def test_exact_search_i1(i1):
    outcome = enumerate_exact(i1)
    assert outcome.found.entries == (2, 2)
    assert outcome.exhausted


def test_weak_search_returns_lexicographically_greatest(i1):
    outcome = enumerate_weak(i1)
    assert outcome.found.entries == (3, 2)
    assert check_weak(outcome.found, i1.d, i1.a).holds
    assert check_weak(outcome.found, i1.c, i1.b).holds


def test_weak_search_i3_finds_nothing(i3):
    outcome = enumerate_weak(i3)
    assert outcome.found is None
    assert outcome.exhausted
    assert outcome.candidates_checked == 36


def test_exact_search_i2_finds_nothing(i2):
    outcome = enumerate_exact(i2)
    assert outcome.found is None
    assert outcome.exhausted


def test_no_a_or_b_search_finds_nothing():
    inst = make_instance(a=[], b=[], c=[1], d=[2])
    assert enumerate_weak(inst).found is None
    assert enumerate_exact(inst).found is None


def test_candidate_cap_is_reported(i3):
    outcome = enumerate_weak(i3, SearchBounds(lo=-1, hi=6, max_candidates=5))
    assert outcome.found is None
    assert not outcome.exhausted
    assert outcome.candidates_checked == 5


def test_pruning_does_not_change_the_outcome(exhaustive_instances):
    for inst in exhaustive_instances[::97]:
        pruned = enumerate_exact(inst, prune=True)
        full = enumerate_exact(inst, prune=False)
        assert pruned.found == full.found


def test_outcome_is_symmetric_under_swapping_pairs(exhaustive_instances):
    for inst in exhaustive_instances[::151]:
        swapped = make_instance(
            a=inst.b.entries, b=inst.a.entries, c=inst.d.entries, d=inst.c.entries
        )
        for search in (enumerate_weak, enumerate_exact):
            assert (search(inst).found is None) == (search(swapped).found is None)


def test_found_witnesses_reverify(exhaustive_instances):
    for inst in exhaustive_instances[::53]:
        outcome = enumerate_exact(inst)
        if outcome.found is not None:
            assert check_exact(outcome.found, inst.d, inst.a).holds
            assert check_exact(outcome.found, inst.c, inst.b).holds


@pytest.mark.parametrize(
    "fixture, weak, exact",
    [("i1", True, True), ("i2", True, False), ("i3", False, False)],
)
def test_differential_check_fixtures(fixture, weak, exact, request):
    report = differential_check(request.getfixturevalue(fixture))
    assert report.agree
    assert not report.hard_failure
    assert (report.weak.engine_exists, report.weak.oracle_found) == (weak, weak)
    assert (report.exact.engine_exists, report.exact.oracle_found) == (exact, exact)


def test_random_instance_respects_limits():
    rng = random.Random(5)
    for _ in range(200):
        inst = random_instance(rng, max_len=3, min_val=-2, max_val=4)
        for p in (inst.a, inst.b, inst.c, inst.d):
            assert len(p) <= 3
            assert all(-2 <= v <= 4 for v in p.entries)
        assert not set(inst.c.entries) & set(inst.d.entries)


def test_random_instance_is_reproducible():
    first = random_instance(instance_rng(11, 3), 4, 0, 5)
    again = random_instance(instance_rng(11, 3), 4, 0, 5)
    assert first == again


def test_random_instance_needs_two_values():
    with pytest.raises(PreconditionViolated):
        random_instance(random.Random(0), 2, 1, 1)


def test_batches_cover_the_sweep():
    batches = batch_requests(instances=7, max_len=2, min_val=0, max_val=3, seed=1, batch_size=3)
    assert [(b["start_index"], b["count"]) for b in batches] == [(0, 3), (3, 3), (6, 1)]


def test_results_do_not_depend_on_batching():
    whole = run_differential_batch(
        FuzzBatchRequest(seed=9, start_index=0, count=4, max_len=2, min_val=0, max_val=3)
    )
    split = [
        r
        for start in (0, 2)
        for r in run_differential_batch(
            FuzzBatchRequest(seed=9, start_index=start, count=2, max_len=2, min_val=0, max_val=3)
        )
    ]
    assert whole == split
    assert [r["index"] for r in whole] == [0, 1, 2, 3]
    assert all(r["agree"] for r in whole)


def test_disagreement_dump(tmp_path, i1):
    agreeing = {"index": 0, "agree": True, "hard_failure": False,
                "report": differential_check(i1).model_dump(mode="json")}
    assert write_disagreement_dump([agreeing], tmp_path, seed=3) is None

    disagreeing = dict(agreeing, agree=False, hard_failure=True)
    path = write_disagreement_dump([agreeing, disagreeing], tmp_path / "dumps", seed=3)
    assert path.name == "disagreements-seed-3.json"
    dumped = json.loads(path.read_text())
    assert len(dumped) == 1
    assert dumped[0]["instance"] == {"a": [1], "b": [2], "c": [2], "d": [3]}
