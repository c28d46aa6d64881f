"""Schemas and type definitions for the majorization engine"""

from .types import (
    NEG_INF,
    POS_INF,
    AgreementReport,
    Certificate,
    CertificateDocument,
    CertificateGraphState,
    ConditionReport,
    DecisionTraceEntry,
    DerivedTables,
    ExtendedInt,
    FuzzBatchRequest,
    FuzzInstanceResult,
    FuzzRequest,
    FuzzSummary,
    HomogenizationRecord,
    Instance,
    InstanceDocument,
    MergedEntry,
    MergedSequence,
    ModeAgreement,
    OracleOutcome,
    PairVerification,
    Partition,
    RewrittenCheck,
    SDResult,
    SearchBounds,
    SumCheck,
    TraceSnapshot,
    Verdict,
    Violation,
)

__all__ = [
    "NEG_INF",
    "POS_INF",
    "AgreementReport",
    "Certificate",
    "CertificateDocument",
    "CertificateGraphState",
    "ConditionReport",
    "DecisionTraceEntry",
    "DerivedTables",
    "ExtendedInt",
    "FuzzBatchRequest",
    "FuzzInstanceResult",
    "FuzzRequest",
    "FuzzSummary",
    "HomogenizationRecord",
    "Instance",
    "InstanceDocument",
    "MergedEntry",
    "MergedSequence",
    "ModeAgreement",
    "OracleOutcome",
    "PairVerification",
    "Partition",
    "RewrittenCheck",
    "SDResult",
    "SearchBounds",
    "SumCheck",
    "TraceSnapshot",
    "Verdict",
    "Violation",
]
