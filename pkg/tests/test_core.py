import pytest

from partition_majorization.core import (
    check_exact,
    check_weak,
    ext_value,
    make_instance,
    make_partition,
    merge_union,
    pivot_indices,
    range_sum,
    tail_bound_at_cut,
)
from partition_majorization.errors import (
    IndexOutOfBand,
    InfiniteValueError,
    LengthMismatch,
    MixedInfinities,
    NotNonincreasing,
    PreconditionViolated,
    ExtendedArithmeticError,
)
from partition_majorization.schemas import NEG_INF, POS_INF, ExtendedInt

from conftest import partitions_of


def P(*values):
    return make_partition(values)


def test_make_partition_rejects_ascent():
    with pytest.raises(NotNonincreasing) as info:
        make_partition([3, 1, 2], "d")
    assert info.value.index == 2
    assert "d is not nonincreasing at index 2" in str(info.value)


def test_make_partition_rejects_non_integers():
    with pytest.raises(PreconditionViolated):
        make_partition([2, 1.5])
    with pytest.raises(PreconditionViolated):
        make_partition([True])


def test_negative_entries_are_allowed():
    assert make_partition([0, -2, -2]).total == -4


def test_instance_length_balance():
    with pytest.raises(PreconditionViolated, match="differs"):
        make_instance(a=[1], b=[], c=[2], d=[3])


def test_instance_requires_disjoint_c_and_d():
    with pytest.raises(PreconditionViolated, match="c and d share value 2"):
        make_instance(a=[], b=[], c=[2], d=[2])


def test_instance_requires_nonempty_c_and_d():
    with pytest.raises(PreconditionViolated):
        make_instance(a=[1], b=[], c=[], d=[])


def test_sentinel_reads():
    p = P(4, 2)
    assert ext_value(p, 0) == POS_INF
    assert ext_value(p, 2) == ExtendedInt(2)
    assert ext_value(p, 3) == NEG_INF


def test_range_sum_conventions():
    p = P(4, 2)
    assert range_sum(p, 1, 2) == ExtendedInt(6)
    assert range_sum(p, 3, 2) == ExtendedInt(0)
    assert range_sum(p, 0, 2) == POS_INF
    assert range_sum(p, 2, 3) == NEG_INF
    with pytest.raises(MixedInfinities):
        range_sum(p, 0, 3)


def test_extended_arithmetic():
    assert POS_INF + 5 == POS_INF
    assert 3 - NEG_INF == POS_INF
    assert NEG_INF < ExtendedInt(-10**30) < POS_INF
    with pytest.raises(ExtendedArithmeticError):
        POS_INF + NEG_INF
    with pytest.raises(InfiniteValueError):
        NEG_INF.value


def test_extended_int_json_forms():
    assert POS_INF.to_json() == "+inf"
    assert ExtendedInt(7).to_json() == 7
    assert ExtendedInt(2**60).to_json() == str(2**60)
    assert ExtendedInt.coerce("-inf") == NEG_INF


def test_merge_union_puts_added_first_on_ties():
    merged = merge_union(P(3, 1), P(3))
    assert [(e.value, e.origin) for e in merged.entries] == [
        (3, "added"),
        (3, "base"),
        (1, "base"),
    ]
    assert merged.position_of("base", 1) == 2
    assert merged.values().entries == (3, 3, 1)


def test_merge_union_keeps_each_side_in_order():
    small = [P(*p) for length in range(4) for p in partitions_of(length, range(4))]
    for x in small:
        for y in small:
            merged = merge_union(x, y)
            assert merged.restricted("base") == x.entries
            assert merged.restricted("added") == y.entries
            assert len(merged) == len(x) + len(y)


def test_pivot_indices():
    assert pivot_indices(P(3), P(3, 2), 1) == [2]
    assert pivot_indices(P(2), P(3, 0), 1) == [1]
    with pytest.raises(LengthMismatch):
        pivot_indices(P(3), P(3, 2, 1), 1)


def test_check_exact_reports_prefix_bound():
    verdict = check_exact(P(3, 0), P(2), P(1))
    assert not verdict.holds
    v = verdict.first_violation
    assert (v.condition, v.index, v.lhs, v.rhs) == ("prefix-bound", 1, 3, 1)


def test_check_exact_holds():
    assert check_exact(P(2, 1), P(2), P(1)).holds
    assert check_exact(P(2, 2), P(3), P(1)).holds


def test_check_exact_without_a_forces_equality():
    assert check_exact(P(2, 1), P(2, 1), P()).holds
    assert not check_exact(P(2, 0), P(2, 1), P()).holds


def test_check_exact_without_a_holds_only_at_g_equal_d():
    for length in range(1, 4):
        candidates = [P(*p) for p in partitions_of(length, range(-1, 4))]
        for d in candidates:
            for g in candidates:
                assert check_exact(g, d, P()).holds == (g == d), (g, d)


def test_check_exact_total_comes_before_pivots():
    v = check_exact(P(4, 0), P(2), P(1)).first_violation
    assert (v.condition, v.index, v.lhs, v.rhs) == ("total-equal", 0, 4, 3)


def test_interlacing_is_checked_first():
    for check in (check_exact, check_weak):
        v = check(P(3, 3), P(2), P(1)).first_violation
        assert (v.condition, v.index, v.lhs, v.rhs) == ("interlacing", 1, 2, 3)


def test_check_weak():
    assert check_weak(P(3, 2), P(3), P(1)).holds
    v = check_weak(P(1, 1), P(2), P(1)).first_violation
    assert (v.condition, v.lhs, v.rhs) == ("total-at-least", 2, 3)
    v = check_weak(P(4, 2), P(3), P(3)).first_violation
    assert (v.condition, v.index, v.lhs, v.rhs) == ("tail-bound", 1, 2, 3)


def test_checkers_require_matching_lengths():
    with pytest.raises(LengthMismatch):
        check_weak(P(3), P(3), P(1))


def test_tail_bound_at_cut():
    assert tail_bound_at_cut(P(3, 2), P(3), P(1), u=2, j=0)
    assert tail_bound_at_cut(P(3, 2), P(3), P(1), u=3, j=1)
    with pytest.raises(IndexOutOfBand):
        tail_bound_at_cut(P(3, 2), P(3), P(1), u=3, j=0)
    with pytest.raises(IndexOutOfBand):
        tail_bound_at_cut(P(3, 2), P(3), P(1), u=1, j=2)
