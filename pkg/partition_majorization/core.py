"""Partition arithmetic, merged sequences and the two majorization checkers.

Indices are 1-based throughout. Reading a partition at an index below 1
gives +inf, past its end gives -inf, and a range with lo > hi sums to 0.
"""

from typing import Iterable, List

from .errors import (
    IndexOutOfBand,
    LengthMismatch,
    MixedInfinities,
    NotNonincreasing,
    PreconditionViolated,
)
from .schemas.types import (
    NEG_INF,
    POS_INF,
    ExtendedInt,
    Instance,
    MergedEntry,
    MergedSequence,
    Partition,
    Verdict,
    Violation,
)


def make_partition(values: Iterable[int], name: str = "sequence") -> Partition:
    """Build a Partition, rejecting non-integers and any ascent."""
    entries = tuple(values)
    for v in entries:
        if isinstance(v, bool) or not isinstance(v, int):
            raise PreconditionViolated(f"{name} entry {v!r} is not an integer")
    for i in range(len(entries) - 1):
        if entries[i] < entries[i + 1]:
            raise NotNonincreasing(i + 1, name)
    return Partition(entries=entries)


def validate_instance(inst: Instance) -> None:
    for name in ("a", "b", "c", "d"):
        make_partition(getattr(inst, name).entries, name)
    if inst.m < 1:
        raise PreconditionViolated("d must have at least one entry")
    if inst.n < 1:
        raise PreconditionViolated("c must have at least one entry")
    if inst.m + inst.s != inst.n + inst.k:
        raise PreconditionViolated(
            f"m + s = {inst.m + inst.s} differs from n + k = {inst.n + inst.k}"
        )
    shared = sorted(set(inst.c.entries) & set(inst.d.entries), reverse=True)
    if shared:
        raise PreconditionViolated(f"c and d share value {shared[0]}")


def make_instance(
    a: Iterable[int], b: Iterable[int], c: Iterable[int], d: Iterable[int]
) -> Instance:
    inst = Instance(
        a=make_partition(a, "a"),
        b=make_partition(b, "b"),
        c=make_partition(c, "c"),
        d=make_partition(d, "d"),
    )
    validate_instance(inst)
    return inst


def ext_value(p: Partition, i: int) -> ExtendedInt:
    if i <= 0:
        return POS_INF
    if i > len(p):
        return NEG_INF
    return ExtendedInt(p.entries[i - 1])


def range_sum(p: Partition, lo: int, hi: int) -> ExtendedInt:
    """Sum of ext_value(p, i) for lo <= i <= hi."""
    if lo > hi:
        return ExtendedInt(0)
    if lo <= 0 and hi > len(p):
        raise MixedInfinities(lo, hi, len(p))
    if lo <= 0:
        return POS_INF
    if hi > len(p):
        return NEG_INF
    return ExtendedInt(sum(p.entries[lo - 1 : hi]))


def merge_union(base: Partition, added: Partition) -> MergedSequence:
    """Nonincreasing merge; on equal values added-list entries come first."""
    tagged = [
        MergedEntry(value=v, origin="base", index=i)
        for i, v in enumerate(base.entries, start=1)
    ] + [
        MergedEntry(value=v, origin="added", index=i)
        for i, v in enumerate(added.entries, start=1)
    ]
    tagged.sort(key=lambda e: (-e.value, 0 if e.origin == "added" else 1, e.index))
    return MergedSequence(entries=tuple(tagged))


def pivot_indices(d: Partition, g: Partition, s: int) -> List[int]:
    """h_j = min{i : d_{i-j+1} < g_i} for j = 1..s.

    The sequence need not be monotone in j.
    """
    if len(g) != len(d) + s:
        raise LengthMismatch(f"|g| = {len(g)} but |d| + s = {len(d) + s}")
    m = len(d)
    pivots = []
    for j in range(1, s + 1):
        for i in range(1, len(g) + 1):
            shifted = i - j + 1
            if shifted <= 0:
                continue
            if shifted > m or d.entries[shifted - 1] < g.entries[i - 1]:
                pivots.append(i)
                break
        else:
            # unreachable: at i = m + j the d-side reads -inf
            raise LengthMismatch(f"no pivot for j={j}")
    return pivots


def _check_lengths(g: Partition, d: Partition, a: Partition) -> None:
    if len(g) != len(d) + len(a):
        raise LengthMismatch(
            f"|g| = {len(g)} but |d| + |a| = {len(d) + len(a)}"
        )


def _interlacing_violation(g: Partition, d: Partition, s: int) -> Violation | None:
    for i in range(1, len(d) + 1):
        if d.entries[i - 1] < g.entries[i + s - 1]:
            return Violation(
                condition="interlacing",
                index=i,
                lhs=ExtendedInt(d.entries[i - 1]),
                rhs=ExtendedInt(g.entries[i + s - 1]),
            )
    return None


def check_exact(g: Partition, d: Partition, a: Partition) -> Verdict:
    """g ≺′ (d, a): interlacing, equal totals, prefix bounds at the pivots."""
    _check_lengths(g, d, a)
    s = len(a)

    violation = _interlacing_violation(g, d, s)
    if violation:
        return Verdict(holds=False, first_violation=violation)

    if g.total != d.total + a.total:
        return Verdict(
            holds=False,
            first_violation=Violation(
                condition="total-equal",
                index=0,
                lhs=ExtendedInt(g.total),
                rhs=ExtendedInt(d.total + a.total),
            ),
        )

    for j, h in enumerate(pivot_indices(d, g, s), start=1):
        lhs = range_sum(g, 1, h) - range_sum(d, 1, h - j)
        rhs = range_sum(a, 1, j)
        if lhs > rhs:
            return Verdict(
                holds=False,
                first_violation=Violation(condition="prefix-bound", index=j, lhs=lhs, rhs=rhs),
            )
    return Verdict(holds=True)


def check_weak(g: Partition, d: Partition, a: Partition) -> Verdict:
    """g ≺″ (d, a): interlacing, total at least, tail bounds past the pivots."""
    _check_lengths(g, d, a)
    s, m, size = len(a), len(d), len(g)

    violation = _interlacing_violation(g, d, s)
    if violation:
        return Verdict(holds=False, first_violation=violation)

    if g.total < d.total + a.total:
        return Verdict(
            holds=False,
            first_violation=Violation(
                condition="total-at-least",
                index=0,
                lhs=ExtendedInt(g.total),
                rhs=ExtendedInt(d.total + a.total),
            ),
        )

    for j, h in enumerate(pivot_indices(d, g, s), start=1):
        lhs = range_sum(g, h + 1, size)
        rhs = range_sum(d, h - j + 1, m) + range_sum(a, j + 1, s)
        if lhs < rhs:
            return Verdict(
                holds=False,
                first_violation=Violation(condition="tail-bound", index=j, lhs=lhs, rhs=rhs),
            )
    return Verdict(holds=True)


def tail_bound_at_cut(g: Partition, d: Partition, a: Partition, u: int, j: int) -> bool:
    """Tail bound at an arbitrary cut u lying in the band (h_j, h_{j+1}]."""
    _check_lengths(g, d, a)
    s, m, size = len(a), len(d), len(g)
    if not 0 <= j <= s:
        raise IndexOutOfBand(f"j={j} outside 0..{s}")
    bands = [0] + pivot_indices(d, g, s) + [size + 1]
    if not bands[j] < u <= bands[j + 1]:
        raise IndexOutOfBand(f"u={u} outside ({bands[j]}, {bands[j + 1]}]")
    return range_sum(g, u, size) >= range_sum(d, u - j, m) + range_sum(a, j + 1, s)
