from __future__ import annotations

from functools import total_ordering
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, TypedDict

from pydantic import BaseModel, ConfigDict, PlainSerializer, model_serializer, model_validator
from pydantic_core import core_schema

from ..errors import ExtendedArithmeticError, InfiniteValueError

# Integers beyond this magnitude are written as strings in JSON documents.
JSON_SAFE_LIMIT = 2**53

Mode = Literal["weak", "exact"]
Origin = Literal["base", "added"]


def json_int(value: int) -> int | str:
    return value if abs(value) <= JSON_SAFE_LIMIT else str(value)


JsonInt = Annotated[int, PlainSerializer(json_int, return_type=int | str, when_used="json")]


@total_ordering
class ExtendedInt:
    """An integer, +inf or -inf.

    Finite values add exactly; adding +inf to -inf raises instead of
    producing a value.
    """

    __slots__ = ("_finite", "_sign")

    def __init__(self, value: int = 0, *, sign: int = 0):
        if sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {sign}")
        self._sign = sign
        self._finite = int(value) if sign == 0 else 0

    @classmethod
    def coerce(cls, value: Any) -> "ExtendedInt":
        if isinstance(value, ExtendedInt):
            return value
        if isinstance(value, bool):
            raise ValueError("booleans are not extended integers")
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, str):
            if value == "+inf":
                return POS_INF
            if value == "-inf":
                return NEG_INF
            try:
                return cls(int(value))
            except ValueError:
                raise ValueError(f"not an extended integer: {value!r}") from None
        raise ValueError(f"not an extended integer: {value!r}")

    @property
    def is_finite(self) -> bool:
        return self._sign == 0

    @property
    def value(self) -> int:
        if self._sign:
            raise InfiniteValueError(f"{self} has no finite value")
        return self._finite

    def __add__(self, other: Any) -> "ExtendedInt":
        try:
            other = ExtendedInt.coerce(other)
        except ValueError:
            return NotImplemented
        if self._sign == 0 and other._sign == 0:
            return ExtendedInt(self._finite + other._finite)
        if self._sign and other._sign and self._sign != other._sign:
            raise ExtendedArithmeticError("(+inf) + (-inf) is undefined")
        return POS_INF if (self._sign or other._sign) > 0 else NEG_INF

    __radd__ = __add__

    def __neg__(self) -> "ExtendedInt":
        if self._sign:
            return ExtendedInt(sign=-self._sign)
        return ExtendedInt(-self._finite)

    def __sub__(self, other: Any) -> "ExtendedInt":
        try:
            other = ExtendedInt.coerce(other)
        except ValueError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "ExtendedInt":
        return ExtendedInt.coerce(other) + (-self)

    def _key(self) -> Tuple[int, int]:
        return (self._sign, self._finite)

    def __eq__(self, other: object) -> bool:
        try:
            other = ExtendedInt.coerce(other)
        except ValueError:
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other: Any) -> bool:
        try:
            other = ExtendedInt.coerce(other)
        except ValueError:
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self) -> int:
        return hash(self._finite) if self._sign == 0 else hash(("inf", self._sign))

    def __repr__(self) -> str:
        if self._sign > 0:
            return "+inf"
        if self._sign < 0:
            return "-inf"
        return str(self._finite)

    __str__ = __repr__

    def to_json(self) -> int | str:
        return repr(self) if self._sign else json_int(self._finite)

    @classmethod
    def __get_pydantic_core_schema__(cls, source: Any, handler: Any) -> core_schema.CoreSchema:
        return core_schema.no_info_plain_validator_function(
            cls.coerce,
            serialization=core_schema.plain_serializer_function_ser_schema(
                lambda v: v.to_json()
            ),
        )


POS_INF = ExtendedInt(sign=1)
NEG_INF = ExtendedInt(sign=-1)


class Partition(BaseModel):
    """Finite nonincreasing integer sequence; serializes as a bare list.

    Build through ``core.make_partition`` to get the ordering check.
    """

    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _accept_sequence(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            return {"entries": tuple(data)}
        return data

    @model_serializer
    def _as_list(self) -> List[int | str]:
        return [json_int(v) for v in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)


class MergedEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: JsonInt
    origin: Origin
    index: int


class MergedSequence(BaseModel):
    """Tie-ordered union of a base and an added partition (u, e or e')."""

    model_config = ConfigDict(frozen=True)

    entries: Tuple[MergedEntry, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def values(self) -> Partition:
        return Partition(entries=tuple(e.value for e in self.entries))

    def position_of(self, origin: Origin, index: int) -> int:
        """1-based position of one occurrence."""
        for pos, entry in enumerate(self.entries, start=1):
            if entry.origin == origin and entry.index == index:
                return pos
        raise KeyError((origin, index))

    def restricted(self, origin: Origin) -> Tuple[int, ...]:
        return tuple(e.value for e in self.entries if e.origin == origin)


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    condition: str
    index: int
    lhs: ExtendedInt
    rhs: ExtendedInt


class Verdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    first_violation: Optional[Violation] = None


class Instance(BaseModel):
    """The quadruple (a, b, c, d); see ``core.validate_instance``."""

    model_config = ConfigDict(frozen=True)

    a: Partition
    b: Partition
    c: Partition
    d: Partition

    @property
    def s(self) -> int:
        return len(self.a)

    @property
    def k(self) -> int:
        return len(self.b)

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def m(self) -> int:
        return len(self.d)


class InstanceDocument(BaseModel):
    a: List[JsonInt]
    b: List[JsonInt]
    c: List[JsonInt]
    d: List[JsonInt]

    @classmethod
    def from_instance(cls, inst: Instance) -> "InstanceDocument":
        return cls(
            a=list(inst.a.entries),
            b=list(inst.b.entries),
            c=list(inst.c.entries),
            d=list(inst.d.entries),
        )


# Classification

Branch = Literal["q-exceeds", "part-a-accepted", "part-b-passed", "part-b-failed"]
Membership = Literal["in-set", "not-in-set"]


class TraceSnapshot(BaseModel):
    """Counts a decision was taken on, all over already-processed elements."""

    model_config = ConfigDict(frozen=True)

    step: int
    set_below: int
    excluded_after: int
    pivot_index: Optional[int] = None
    window_count: Optional[int] = None
    window_threshold: Optional[int] = None
    window_size: Optional[int] = None
    window_span: Optional[int] = None
    window_position: Optional[int] = None
    inequality_lhs: Optional[ExtendedInt] = None
    inequality_rhs: Optional[ExtendedInt] = None


class DecisionTraceEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    origin: Literal["c", "d"]
    index: int
    value: JsonInt
    q: JsonInt
    branch: Branch
    membership: Membership
    snapshot: TraceSnapshot


class SDResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    S: Tuple[int, ...]
    Delta: Tuple[int, ...]
    trace: Tuple[DecisionTraceEntry, ...]
    c_super: Tuple[int, ...]
    d_super: Tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.Delta)

    @property
    def h_prime(self) -> int:
        return len(self.S)


class DerivedTables(BaseModel):
    """Counting tables; m/t/z run over 0..h'+1 and w over 0..h' (primed: h)."""

    model_config = ConfigDict(frozen=True)

    m: Tuple[JsonInt, ...]
    t: Tuple[JsonInt, ...]
    z: Tuple[JsonInt, ...]
    w: Tuple[JsonInt, ...]
    m_prime: Tuple[JsonInt, ...]
    t_prime: Tuple[JsonInt, ...]
    z_prime: Tuple[JsonInt, ...]
    w_prime: Tuple[JsonInt, ...]


class RewrittenCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    origin: Literal["c", "d"]
    index: int
    gap: int
    q_recorded: int
    q_rewritten: int
    window_recorded: Optional[bool] = None
    window_rewritten: Optional[bool] = None
    inequality_recorded: Optional[bool] = None
    inequality_rewritten: Optional[bool] = None

    @property
    def agrees(self) -> bool:
        return (
            self.q_recorded == self.q_rewritten
            and self.window_recorded == self.window_rewritten
            and self.inequality_recorded == self.inequality_rewritten
        )


# Engine

class ConditionReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    side: Literal["i", "ii"]
    index: int
    triggered: bool
    lhs: ExtendedInt
    rhs: ExtendedInt
    satisfied: bool


class SumCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    lhs: JsonInt
    rhs: JsonInt
    equal: bool


class HomogenizationRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    omega: JsonInt
    f: int
    prefix_total: JsonInt
    prefix: Partition


class PairVerification(BaseModel):
    model_config = ConfigDict(frozen=True)

    against_d_a: Verdict
    against_c_b: Verdict

    @property
    def both_hold(self) -> bool:
        return self.against_d_a.holds and self.against_c_b.holds


class Certificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: Mode
    verdict: Literal["exists", "not-exists"]
    sd: SDResult
    tables: DerivedTables
    reports: Tuple[ConditionReport, ...]
    sum_check: Optional[SumCheck] = None
    witness: Optional[Partition] = None
    weak_witness: Optional[Partition] = None
    homogenization: Optional[HomogenizationRecord] = None
    witness_verification: Optional[PairVerification] = None

    @property
    def exists(self) -> bool:
        return self.verdict == "exists"


class CertificateDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: Mode
    verdict: Literal["exists", "not-exists"]
    S: Tuple[int, ...]
    Delta: Tuple[int, ...]
    tables: DerivedTables
    condition_reports: Tuple[ConditionReport, ...]
    sum_check: Optional[SumCheck] = None
    witness: Optional[Partition] = None
    verification: Optional[PairVerification] = None
    trace: Optional[Tuple[DecisionTraceEntry, ...]] = None


# Oracle

class SearchBounds(BaseModel):
    model_config = ConfigDict(frozen=True)

    lo: JsonInt
    hi: JsonInt
    max_candidates: int = 10_000_000

    @model_validator(mode="after")
    def _ordered(self) -> "SearchBounds":
        if self.lo > self.hi:
            raise ValueError(f"lo={self.lo} exceeds hi={self.hi}")
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be positive")
        return self


class OracleOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: Mode
    found: Optional[Partition] = None
    candidates_checked: int
    exhausted: bool
    bounds: SearchBounds


class ModeAgreement(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: Mode
    engine_exists: bool
    oracle_found: bool
    exhausted: bool

    @property
    def conclusive(self) -> bool:
        return self.oracle_found or self.exhausted

    @property
    def agree(self) -> bool:
        return not self.conclusive or self.engine_exists == self.oracle_found


class AgreementReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: InstanceDocument
    weak: ModeAgreement
    exact: ModeAgreement

    @property
    def agree(self) -> bool:
        return self.weak.agree and self.exact.agree

    @property
    def hard_failure(self) -> bool:
        return any(r.conclusive and not r.agree for r in (self.weak, self.exact))


class FuzzSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    instances: int
    disagreements: int
    hard_failures: int
    dump: Optional[str] = None


# LangGraph State schemas
class CertificateGraphState(TypedDict, total=False):
    instance: Instance
    mode: Mode
    sd: SDResult
    tables: DerivedTables
    reports: List[ConditionReport]
    sum_check: Optional[SumCheck]
    conditions_hold: bool
    weak_witness: Optional[Partition]
    witness: Optional[Partition]
    homogenization: Optional[HomogenizationRecord]
    verification: Optional[PairVerification]
    verdict: Literal["exists", "not-exists"]


# Temporal payload schemas
class FuzzRequest(TypedDict):
    instances: int
    max_len: int
    min_val: int
    max_val: int
    seed: int
    batch_size: int


class FuzzBatchRequest(TypedDict):
    seed: int
    start_index: int
    count: int
    max_len: int
    min_val: int
    max_val: int


class FuzzInstanceResult(TypedDict):
    index: int
    agree: bool
    hard_failure: bool
    report: Dict[str, Any]
