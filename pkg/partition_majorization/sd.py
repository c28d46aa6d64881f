"""Inductive construction of the index sets S and Delta and their tables.

Elements of c and d are decided one at a time in ascending value order.
Deciding d_j only looks at elements decided before it; deciding c_j is the
same procedure with (d, a, Delta, e) and (c, b, S, e') swapped, so both
directions share one implementation parameterized by ``_Side``.
"""

import logging
from dataclasses import dataclass
from typing import List, Literal, Optional, Sequence, Tuple

from .core import merge_union, range_sum, validate_instance
from .errors import InternalInvariantViolated
from .schemas.types import (
    NEG_INF,
    POS_INF,
    DecisionTraceEntry,
    DerivedTables,
    ExtendedInt,
    Instance,
    MergedSequence,
    Partition,
    RewrittenCheck,
    SDResult,
    TraceSnapshot,
)

logger = logging.getLogger(__name__)

Origin = Literal["c", "d"]


@dataclass(frozen=True)
class _Side:
    """One direction of the classification.

    For d: ``own`` is d, ``other`` is c, ``extra`` is a and ``merged`` is e.
    """

    origin: Origin
    own: Partition
    other: Partition
    extra: Partition
    merged: MergedSequence


def processing_schedule(inst: Instance) -> List[Tuple[Origin, int]]:
    """Ascending value; equal values inside one list go largest index first."""
    items = [("d", j, v) for j, v in enumerate(inst.d.entries, start=1)]
    items += [("c", j, v) for j, v in enumerate(inst.c.entries, start=1)]
    items.sort(key=lambda item: (item[2], -item[1]))
    return [(origin, j) for origin, j, _ in items]


def _decide(
    side: _Side,
    own_in: Sequence[Optional[bool]],
    other_in: Sequence[Optional[bool]],
    j: int,
    step: int,
) -> DecisionTraceEntry:
    own, other, extra = side.own.entries, side.other.entries, side.extra.entries
    value = own[j - 1]
    limit = len(extra)

    if any(own_in[i] is None for i in range(j + 1, len(own) + 1)) or any(
        other_in[i] is None for i in range(1, len(other) + 1) if other[i - 1] < value
    ):
        raise InternalInvariantViolated(
            f"{side.origin}_{j} decided before a smaller element"
        )

    below = [
        i for i in range(1, len(other) + 1) if other_in[i] and other[i - 1] < value
    ]
    excluded_after = sum(1 for i in range(j + 1, len(own) + 1) if own_in[i] is False)
    q = limit - len(below) + excluded_after + 1

    def entry(branch, in_set: bool, **snapshot) -> DecisionTraceEntry:
        return DecisionTraceEntry(
            origin=side.origin,
            index=j,
            value=value,
            q=q,
            branch=branch,
            membership="in-set" if in_set else "not-in-set",
            snapshot=TraceSnapshot(
                step=step,
                set_below=len(below),
                excluded_after=excluded_after,
                **snapshot,
            ),
        )

    if q > limit:
        return entry("q-exceeds", True)

    if not below:
        raise InternalInvariantViolated(
            f"q={q} <= {limit} for {side.origin}_{j} with nothing below it in the set"
        )
    if q <= 0:
        logger.warning("non-positive q=%d reached at %s_%d", q, side.origin, j)

    pivot_index = min(below)
    pivot = other[pivot_index - 1]
    window_count = sum(1 for x in extra if x > pivot)
    window_threshold = (
        limit
        - sum(1 for i in range(pivot_index + 1, len(other) + 1) if other_in[i])
        + sum(
            1
            for i in range(1, len(own) + 1)
            if own_in[i] is False and own[i - 1] < pivot
        )
    )
    window_size = window_count - window_threshold + 1
    window_span = sum(1 for e in side.merged.entries if e.value > pivot)
    window_position = side.merged.position_of("base", j)
    window = dict(
        pivot_index=pivot_index,
        window_count=window_count,
        window_threshold=window_threshold,
        window_size=window_size,
        window_span=window_span,
        window_position=window_position,
    )

    if window_size >= 1 and window_span - window_size < window_position <= window_span:
        return entry("part-a-accepted", False, **window)

    lhs = ExtendedInt(sum(other[i - 1] for i in below))
    rhs = (
        ExtendedInt(
            sum(own[i - 1] for i in range(j + 1, len(own) + 1) if own_in[i] is False)
        )
        + value
        + range_sum(side.extra, q + 1, limit)
    )
    passed = lhs >= rhs
    return entry(
        "part-b-passed" if passed else "part-b-failed",
        not passed,
        inequality_lhs=lhs,
        inequality_rhs=rhs,
        **window,
    )


def classify(inst: Instance) -> SDResult:
    validate_instance(inst)
    sides = {
        "d": _Side("d", inst.d, inst.c, inst.a, merge_union(inst.d, inst.a)),
        "c": _Side("c", inst.c, inst.d, inst.b, merge_union(inst.c, inst.b)),
    }
    members: dict[str, List[Optional[bool]]] = {
        "c": [None] * (inst.n + 1),
        "d": [None] * (inst.m + 1),
    }

    trace = []
    for step, (origin, j) in enumerate(processing_schedule(inst), start=1):
        opposite = "c" if origin == "d" else "d"
        decision = _decide(sides[origin], members[origin], members[opposite], j, step)
        members[origin][j] = decision.membership == "in-set"
        trace.append(decision)
        logger.debug(
            "%s_%d=%d q=%d %s -> %s",
            origin, j, decision.value, decision.q, decision.branch, decision.membership,
        )

    S = tuple(i for i in range(1, inst.n + 1) if members["c"][i])
    Delta = tuple(i for i in range(1, inst.m + 1) if members["d"][i])
    return SDResult(
        S=S,
        Delta=Delta,
        trace=tuple(trace),
        c_super=tuple(inst.c.entries[i - 1] for i in S),
        d_super=tuple(inst.d.entries[i - 1] for i in Delta),
    )


def bounded_supers(supers: Sequence[int]) -> List[ExtendedInt]:
    """super^0 = +inf, super^1..super^h, super^{h+1} = -inf."""
    return [POS_INF] + [ExtendedInt(v) for v in supers] + [NEG_INF]


def gap_index(value: int, supers: Sequence[int]) -> int:
    """The l with super^l > value > super^{l+1}."""
    return sum(1 for v in supers if v > value)


def _tables(
    supers: Sequence[int],
    extra: Sequence[int],
    opposite: Sequence[int],
    excluded: Sequence[int],
) -> Tuple[Tuple[int, ...], ...]:
    top = len(supers)
    bounded = bounded_supers(supers)
    m = tuple(sum(1 for x in extra if bounded[j] < x) for j in range(top + 2))
    t = tuple(
        len(extra) - (top - j) + sum(1 for x in excluded if bounded[j] > x)
        for j in range(top + 2)
    )
    z = tuple(sum(1 for x in opposite if bounded[j] < x) for j in range(top + 2))
    w = tuple(
        sum(1 for x in excluded if bounded[y + 1] < x and bounded[y] > x)
        for y in range(top + 1)
    )
    return m, t, z, w


def derived_tables(inst: Instance, sd: SDResult) -> DerivedTables:
    delta, S = set(sd.Delta), set(sd.S)
    d_excluded = [v for i, v in enumerate(inst.d.entries, start=1) if i not in delta]
    c_excluded = [v for i, v in enumerate(inst.c.entries, start=1) if i not in S]
    m, t, z, w = _tables(sd.c_super, inst.a.entries, inst.d.entries, d_excluded)
    m_p, t_p, z_p, w_p = _tables(sd.d_super, inst.b.entries, inst.c.entries, c_excluded)
    return DerivedTables(
        m=m, t=t, z=z, w=w, m_prime=m_p, t_prime=t_p, z_prime=z_p, w_prime=w_p
    )


def rewritten_checks(
    inst: Instance, sd: SDResult, tables: DerivedTables
) -> List[RewrittenCheck]:
    """Recompute every recorded decision from the final tables.

    q, the window count test (m_{l+1} >= t_{l+1}) and the sum inequality are
    rebuilt with gap indices from the finished sets; disagreement with the
    values recorded during classification points at the incremental counting.
    """
    checks = []
    for entry in sd.trace:
        if entry.origin == "d":
            supers, own, extra = sd.c_super, inst.d, inst.a
            members, m_tab, t_tab = set(sd.Delta), tables.m, tables.t
        else:
            supers, own, extra = sd.d_super, inst.c, inst.b
            members, m_tab, t_tab = set(sd.S), tables.m_prime, tables.t_prime
        j = entry.index
        gap = gap_index(entry.value, supers)
        after = [
            own.entries[i - 1]
            for i in range(j + 1, len(own) + 1)
            if i not in members
        ]
        q = len(extra) - (len(supers) - gap) + len(after) + 1

        window_recorded = window_rewritten = None
        inequality_recorded = inequality_rewritten = None
        if entry.branch != "q-exceeds":
            snap = entry.snapshot
            window_recorded = snap.window_count >= snap.window_threshold
            window_rewritten = m_tab[gap + 1] >= t_tab[gap + 1]
        if entry.branch in ("part-b-passed", "part-b-failed"):
            inequality_recorded = entry.branch == "part-b-passed"
            inequality_rewritten = ExtendedInt(sum(supers[gap:])) >= (
                ExtendedInt(sum(after)) + entry.value + range_sum(extra, q + 1, len(extra))
            )
        checks.append(
            RewrittenCheck(
                origin=entry.origin,
                index=j,
                gap=gap,
                q_recorded=entry.q,
                q_rewritten=q,
                window_recorded=window_recorded,
                window_rewritten=window_rewritten,
                inequality_recorded=inequality_recorded,
                inequality_rewritten=inequality_rewritten,
            )
        )
    return checks
