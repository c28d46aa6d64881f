import logging

from partition_majorization.core import make_instance
from partition_majorization.schemas import NEG_INF, POS_INF
from partition_majorization.sd import (
    bounded_supers,
    classify,
    derived_tables,
    gap_index,
    processing_schedule,
    rewritten_checks,
)


def test_schedule_is_ascending_with_ties_largest_index_first():
    inst = make_instance(a=[], b=[0], c=[1], d=[2, 2])
    assert processing_schedule(inst) == [("c", 1), ("d", 2), ("d", 1)]


def test_classify_i1(i1):
    sd = classify(i1)
    assert sd.S == (1,)
    assert sd.Delta == (1,)
    assert (sd.c_super, sd.d_super) == ((2,), (3,))

    first, second = sd.trace
    assert (first.origin, first.q, first.branch, first.membership) == (
        "c",
        2,
        "q-exceeds",
        "in-set",
    )
    assert (second.origin, second.q, second.branch, second.membership) == (
        "d",
        1,
        "part-b-failed",
        "in-set",
    )
    assert second.snapshot.window_size == 0
    assert (second.snapshot.inequality_lhs, second.snapshot.inequality_rhs) == (2, 3)


def test_classify_i2_matches_i1_sets(i2):
    sd = classify(i2)
    assert (sd.S, sd.Delta) == ((1,), (1,))


def test_classify_i3_window_acceptance(i3):
    sd = classify(i3)
    assert sd.S == ()
    assert sd.Delta == (1,)

    decision = sd.trace[-1]
    assert (decision.origin, decision.branch, decision.membership) == (
        "c",
        "part-a-accepted",
        "not-in-set",
    )
    snap = decision.snapshot
    assert (
        snap.window_count,
        snap.window_threshold,
        snap.window_size,
        snap.window_span,
        snap.window_position,
    ) == (1, 1, 1, 2, 2)


def test_d_side_window_acceptance():
    sd = classify(make_instance(a=[3], b=[3], c=[1], d=[2]))
    assert (sd.S, sd.Delta) == ((1,), ())
    assert sd.trace[-1].branch == "part-a-accepted"


def test_non_positive_q_is_logged(caplog):
    with caplog.at_level(logging.WARNING, logger="partition_majorization.sd"):
        sd = classify(make_instance(a=[], b=[], c=[1], d=[2]))
    assert sd.trace[-1].q == 0
    assert "non-positive q=0" in caplog.text


def test_tables_i1(i1):
    tables = derived_tables(i1, classify(i1))
    assert tables.m == (0, 0, 1)
    assert tables.t == (0, 1, 2)
    assert tables.z == (0, 1, 1)
    assert tables.w == (0, 0)
    assert tables.m_prime == (0, 0, 1)
    assert tables.t_prime == (0, 1, 2)
    assert tables.z_prime == (0, 0, 1)
    assert tables.w_prime == (0, 0)


def test_tables_i3(i3):
    tables = derived_tables(i3, classify(i3))
    assert (tables.m, tables.t, tables.z, tables.w) == ((0, 1), (1, 2), (0, 1), (0,))
    assert tables.m_prime == (0, 1, 1)
    assert tables.t_prime == (1, 1, 2)
    assert tables.z_prime == (0, 1, 1)
    assert tables.w_prime == (1, 0)


def test_bounded_supers_and_gap_index():
    assert bounded_supers((3,)) == [POS_INF, 3, NEG_INF]
    supers = (5, 3, 1)
    assert gap_index(6, supers) == 0
    assert gap_index(2, supers) == 2
    assert gap_index(0, supers) == 3


def test_rewritten_checks_agree_on_fixtures(i1, i2, i3):
    for inst in (i1, i2, i3):
        sd = classify(inst)
        checks = rewritten_checks(inst, sd, derived_tables(inst, sd))
        assert len(checks) == inst.m + inst.n
        assert all(check.agrees for check in checks)
