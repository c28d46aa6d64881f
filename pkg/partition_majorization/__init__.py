"""
Partition Majorization

Decides whether a single partition g can be (weakly) generalized-majorized
by two pairs (d, a) and (c, b) at the same time, and produces a checkable
certificate: the index sets S and Delta, their counting tables, the
condition reports, and on success a witness verified against both pairs.

Key Components:
- LangGraph: runs the certificate pipeline (classify, tables, conditions, witness)
- Temporal: distributes engine-versus-oracle fuzz sweeps over workers

Usage:
    # Decide an instance
    partition-majorization check --mode exact --input instance.json --emit-witness

    # Start worker, then run a distributed sweep
    python -m partition_majorization.worker
    partition-majorization fuzz --instances 10000 --max-len 5 --max-val 6 --seed 1 --temporal
"""

from .config import Config
from .core import check_exact, check_weak, make_instance, make_partition
from .engine import certificate_document, exists_exact, exists_weak
from .oracle import differential_check, enumerate_exact, enumerate_weak

__version__ = "0.1.0"
__all__ = [
    "Config",
    "check_exact",
    "check_weak",
    "make_instance",
    "make_partition",
    "certificate_document",
    "exists_exact",
    "exists_weak",
    "differential_check",
    "enumerate_exact",
    "enumerate_weak",
]
