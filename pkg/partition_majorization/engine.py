"""Existence decisions, witness construction and homogenization.

Both decisions run one compiled LangGraph pipeline:

    classify -> derive_tables -> evaluate_conditions
        -> build_witness -> [homogenize] -> verify     (conditions hold)
        -> reject                                      (otherwise)
"""

import logging
from functools import lru_cache
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .core import (
    check_exact,
    check_weak,
    ext_value,
    make_partition,
    merge_union,
    range_sum,
)
from .errors import (
    InfeasibleHomogenization,
    InternalInvariantViolated,
    LengthMismatch,
    NegativeOmega,
    PreconditionViolated,
)
from .schemas.types import (
    Certificate,
    CertificateDocument,
    CertificateGraphState,
    ConditionReport,
    DerivedTables,
    ExtendedInt,
    HomogenizationRecord,
    Instance,
    Mode,
    PairVerification,
    Partition,
    SDResult,
    SumCheck,
    Violation,
)
from .sd import classify, derived_tables
from .utils.graph_builder import GraphBuilder, log_graph_execution

logger = logging.getLogger(__name__)


class BoundaryFacts(NamedTuple):
    """c^{h'} >= a_s and d^h >= b_k; ``None`` when that side has no supers."""

    c_side: Optional[bool]
    d_side: Optional[bool]


def _side_reports(
    side: str,
    supers: Sequence[int],
    own: Partition,
    members: Sequence[int],
    extra: Partition,
    merged: Partition,
    m: Sequence[int],
    t: Sequence[int],
    z: Sequence[int],
) -> List[ConditionReport]:
    excluded = set(range(1, len(own) + 1)) - set(members)
    reports = []
    for y in range(1, len(supers) + 1):
        triggered = t[y] <= m[y]
        lhs = range_sum(merged, z[y] + t[y], z[y] + m[y])
        rhs = (
            ExtendedInt(sum(supers[y - 1 :]))
            - sum(own.entries[i - 1] for i in excluded if i >= z[y] + 1)
            - range_sum(extra, m[y] + 1, len(extra))
        )
        reports.append(
            ConditionReport(
                side=side,
                index=y,
                triggered=triggered,
                lhs=lhs,
                rhs=rhs,
                satisfied=not triggered or lhs <= rhs,
            )
        )
    return reports


def condition_reports(
    inst: Instance, tables: DerivedTables, sd: SDResult
) -> List[ConditionReport]:
    """Every report of condition (i), y = 1..h', then of (ii), x = 1..h.

    Untriggered reports are kept with their sums evaluated and marked
    satisfied.
    """
    reports = _side_reports(
        "i",
        sd.c_super,
        inst.d,
        sd.Delta,
        inst.a,
        merge_union(inst.d, inst.a).values(),
        tables.m,
        tables.t,
        tables.z,
    )
    reports += _side_reports(
        "ii",
        sd.d_super,
        inst.c,
        sd.S,
        inst.b,
        merge_union(inst.c, inst.b).values(),
        tables.m_prime,
        tables.t_prime,
        tables.z_prime,
    )
    return reports


def sum_check(inst: Instance) -> SumCheck:
    lhs = inst.c.total + inst.b.total
    rhs = inst.d.total + inst.a.total
    return SumCheck(lhs=lhs, rhs=rhs, equal=lhs == rhs)


def boundary_facts(inst: Instance, sd: SDResult) -> BoundaryFacts:
    c_side = d_side = None
    if sd.h_prime:
        c_side = ExtendedInt(sd.c_super[-1]) >= ext_value(inst.a, inst.s)
    if sd.h:
        d_side = ExtendedInt(sd.d_super[-1]) >= ext_value(inst.b, inst.k)
    return BoundaryFacts(c_side=c_side, d_side=d_side)


def witness_bounds(g: Partition, sd: SDResult, tables: DerivedTables) -> List[Violation]:
    """Failures of c^i >= g_{z_i+t_i} and d^i >= g_{z'_i+t'_i}; empty when all hold."""
    failures = []
    for condition, supers, z, t in (
        ("c-bound", sd.c_super, tables.z, tables.t),
        ("d-bound", sd.d_super, tables.z_prime, tables.t_prime),
    ):
        for i, value in enumerate(supers, start=1):
            bound = ext_value(g, z[i] + t[i])
            if ExtendedInt(value) < bound:
                failures.append(
                    Violation(
                        condition=condition,
                        index=i,
                        lhs=ExtendedInt(value),
                        rhs=bound,
                    )
                )
    return failures


def _padding_value(inst: Instance) -> int:
    return max(p.entries[0] for p in (inst.a, inst.b, inst.c, inst.d) if len(p)) + 1


def _closed_form_mismatch(
    g: Sequence[int],
    pad: int,
    supers: Sequence[int],
    own: Partition,
    z: Sequence[int],
    t: Sequence[int],
) -> Optional[int]:
    """First position where g departs from its closed form, or None.

    Positions 1..t_0 hold the padding value, position z_x + t_x holds
    super^x and the positions strictly between consecutive anchors hold
    own_{j - t_x}.
    """
    for j in range(1, t[0] + 1):
        if g[j - 1] != pad:
            return j
    for x in range(1, len(supers) + 1):
        pos = z[x] + t[x]
        if not 1 <= pos <= len(g) or g[pos - 1] != supers[x - 1]:
            return pos
    for x in range(len(supers) + 1):
        for j in range(z[x] + t[x] + 1, z[x + 1] + t[x + 1]):
            idx = j - t[x]
            if not 1 <= idx <= len(own) or g[j - 1] != own.entries[idx - 1]:
                return j
    return None


def build_weak_witness(inst: Instance, sd: SDResult, tables: DerivedTables) -> Partition:
    """The padded union {c^x} + {d^x} + {M}*t_0 in nonincreasing order."""
    failed = [r for r in condition_reports(inst, tables, sd) if not r.satisfied]
    if failed:
        raise PreconditionViolated(
            f"condition ({failed[0].side}) fails at index {failed[0].index}"
        )

    t0 = tables.t[0]
    if t0 < 0 or tables.t_prime[0] != t0:
        raise InternalInvariantViolated(f"padding length t_0={t0} is invalid")

    pad = _padding_value(inst)
    g = sorted(list(sd.c_super) + list(sd.d_super) + [pad] * t0, reverse=True)

    for label, supers, own, z, t in (
        ("c", sd.c_super, inst.d, tables.z, tables.t),
        ("d", sd.d_super, inst.c, tables.z_prime, tables.t_prime),
    ):
        pos = _closed_form_mismatch(g, pad, supers, own, z, t)
        if pos is not None:
            raise InternalInvariantViolated(
                f"witness disagrees with its {label}-anchored closed form at {pos}"
            )

    delta, S = set(sd.Delta), set(sd.S)
    c_side = ExtendedInt(sum(sd.c_super)) >= (
        ExtendedInt(sum(v for i, v in enumerate(inst.d.entries, 1) if i not in delta))
        + range_sum(inst.a, t0 + 1, inst.s)
    )
    d_side = ExtendedInt(sum(sd.d_super)) >= (
        ExtendedInt(sum(v for i, v in enumerate(inst.c.entries, 1) if i not in S))
        + range_sum(inst.b, t0 + 1, inst.k)
    )
    if not (c_side and d_side):
        raise InternalInvariantViolated(
            "super sums fall below the excluded sums plus the tail of a or b"
        )

    if False in boundary_facts(inst, sd):
        raise InternalInvariantViolated("smallest super below the last a or b entry")

    return Partition(entries=tuple(g))


def lowering_hypotheses(
    gbar: Partition, g: Partition, f: int, d: Partition, a: Partition
) -> bool:
    """Hypotheses of the prefix-lowering step.

    g lies pointwise below gbar before f and agrees with it from f on. Its
    prefix starts no higher than gbar_{f-1}, its entries differ by at most
    one, and the total stays at least sum(d) + sum(a).
    """
    if len(g) != len(gbar) or not 2 <= f <= len(gbar) + 1:
        return False
    prefix = g.entries[: f - 1]
    return (
        all(g.entries[i] <= gbar.entries[i] for i in range(f - 1))
        and prefix[0] <= gbar.entries[f - 2]
        and g.entries[f - 1 :] == gbar.entries[f - 1 :]
        and max(prefix) - min(prefix) <= 1
        and g.total >= d.total + a.total
    )


def homogenize(
    gbar: Partition, d: Partition, a: Partition
) -> Tuple[Partition, HomogenizationRecord]:
    """Lower a weak witness to one with total sum(d) + sum(a).

    The surplus Omega is taken off the shortest prefix that can absorb it
    while staying at or above the first untouched entry; the prefix is
    replaced by its most even split. When no prefix qualifies the whole
    sequence is flattened.
    """
    size = len(gbar)
    if size != len(d) + len(a):
        raise LengthMismatch(f"|g| = {size} but |d| + |a| = {len(d) + len(a)}")
    omega = gbar.total - d.total - a.total
    if omega < 0:
        raise NegativeOmega(omega)
    if omega == 0:
        return gbar, HomogenizationRecord(
            omega=0, f=1, prefix_total=0, prefix=Partition(entries=())
        )

    entries = gbar.entries
    f = next(
        (
            i
            for i in range(1, size + 1)
            if sum(entries[:i]) - i * entries[i - 1] >= omega
        ),
        size + 1,
    )
    if f == 1:
        raise InfeasibleHomogenization(f"nothing to flatten for Omega={omega}")

    prefix_total = sum(entries[: f - 1]) - omega
    base, extra = divmod(prefix_total, f - 1)
    prefix = (base + 1,) * extra + (base,) * (f - 1 - extra)
    g = make_partition(prefix + entries[f - 1 :], "homogenized witness")

    if g.total != d.total + a.total:
        raise InternalInvariantViolated(
            f"homogenized total {g.total} differs from {d.total + a.total}"
        )
    if not lowering_hypotheses(gbar, g, f, d, a):
        raise InternalInvariantViolated(f"prefix-lowering hypotheses fail at f={f}")

    return g, HomogenizationRecord(
        omega=omega,
        f=f,
        prefix_total=prefix_total,
        prefix=Partition(entries=prefix),
    )


# Certificate pipeline nodes

def classify_node(state: CertificateGraphState) -> CertificateGraphState:
    sd = classify(state["instance"])
    log_graph_execution("Certificate", "Classified", f"S={sd.S} Delta={sd.Delta}")
    return {**state, "sd": sd}


def derive_tables_node(state: CertificateGraphState) -> CertificateGraphState:
    tables = derived_tables(state["instance"], state["sd"])
    log_graph_execution("Certificate", "Derived tables", f"t_0={tables.t[0]}")
    return {**state, "tables": tables}


def evaluate_conditions_node(state: CertificateGraphState) -> CertificateGraphState:
    inst = state["instance"]
    reports = condition_reports(inst, state["tables"], state["sd"])
    sums = sum_check(inst) if state["mode"] == "exact" else None
    holds = all(r.satisfied for r in reports) and (sums is None or sums.equal)
    failed = sum(1 for r in reports if not r.satisfied)
    log_graph_execution(
        "Certificate",
        "Evaluated conditions",
        f"{len(reports)} reports, {failed} failed, sums {'n/a' if sums is None else sums.equal}",
    )
    return {**state, "reports": reports, "sum_check": sums, "conditions_hold": holds}


def build_witness_node(state: CertificateGraphState) -> CertificateGraphState:
    gbar = build_weak_witness(state["instance"], state["sd"], state["tables"])
    log_graph_execution("Certificate", "Built weak witness", str(list(gbar.entries)))
    return {**state, "weak_witness": gbar, "witness": gbar}


def homogenize_node(state: CertificateGraphState) -> CertificateGraphState:
    inst = state["instance"]
    g, record = homogenize(state["weak_witness"], inst.d, inst.a)
    log_graph_execution("Certificate", "Homogenized", f"Omega={record.omega} f={record.f}")
    return {**state, "witness": g, "homogenization": record}


def verify_node(state: CertificateGraphState) -> CertificateGraphState:
    inst, g = state["instance"], state["witness"]
    check = check_exact if state["mode"] == "exact" else check_weak
    verification = PairVerification(
        against_d_a=check(g, inst.d, inst.a),
        against_c_b=check(g, inst.c, inst.b),
    )
    if not verification.both_hold:
        raise InternalInvariantViolated(
            f"{state['mode']} witness {list(g.entries)} fails verification"
        )
    log_graph_execution("Certificate", "Verified witness")
    return {**state, "verification": verification, "verdict": "exists"}


def reject_node(state: CertificateGraphState) -> CertificateGraphState:
    log_graph_execution("Certificate", "Rejected")
    return {**state, "witness": None, "verification": None, "verdict": "not-exists"}


def route_after_conditions(state: CertificateGraphState) -> str:
    return "build" if state["conditions_hold"] else "reject"


def route_after_witness(state: CertificateGraphState) -> str:
    return state["mode"]


@lru_cache(maxsize=1)
def certificate_graph():
    """Compiled once per process; invocations share no state."""
    builder = GraphBuilder(CertificateGraphState)
    builder.chain(
        [
            ("classify", classify_node),
            ("derive_tables", derive_tables_node),
            ("evaluate_conditions", evaluate_conditions_node),
        ]
    )
    builder.add_node("build_witness", build_witness_node)
    builder.add_node("homogenize", homogenize_node)
    builder.add_node("verify", verify_node)
    builder.add_node("reject", reject_node)
    builder.add_conditional_edge(
        "evaluate_conditions",
        route_after_conditions,
        {"build": "build_witness", "reject": "reject"},
    )
    builder.add_conditional_edge(
        "build_witness",
        route_after_witness,
        {"exact": "homogenize", "weak": "verify"},
    )
    builder.add_edge("homogenize", "verify")
    builder.add_edge("verify", None)
    builder.add_edge("reject", None)
    return builder.compile()


def _run(inst: Instance, mode: Mode) -> Certificate:
    final = certificate_graph().invoke(
        {
            "instance": inst,
            "mode": mode,
            "sum_check": None,
            "weak_witness": None,
            "witness": None,
            "homogenization": None,
            "verification": None,
        }
    )
    cert = Certificate(
        mode=mode,
        verdict=final["verdict"],
        sd=final["sd"],
        tables=final["tables"],
        reports=tuple(final["reports"]),
        sum_check=final.get("sum_check"),
        witness=final.get("witness"),
        weak_witness=final.get("weak_witness"),
        homogenization=final.get("homogenization"),
        witness_verification=final.get("verification"),
    )
    logger.info("%s decision: %s", mode, cert.verdict)
    return cert


def exists_weak(inst: Instance) -> Certificate:
    return _run(inst, "weak")


def exists_exact(inst: Instance) -> Certificate:
    return _run(inst, "exact")


def decide(inst: Instance, mode: Mode) -> Certificate:
    return exists_exact(inst) if mode == "exact" else exists_weak(inst)


def certificate_document(
    cert: Certificate, emit_witness: bool = False, trace: bool = False
) -> CertificateDocument:
    return CertificateDocument(
        mode=cert.mode,
        verdict=cert.verdict,
        S=cert.sd.S,
        Delta=cert.sd.Delta,
        tables=cert.tables,
        condition_reports=cert.reports,
        sum_check=cert.sum_check,
        witness=cert.witness if emit_witness else None,
        verification=cert.witness_verification,
        trace=cert.sd.trace if trace else None,
    )
