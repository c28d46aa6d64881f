"""Utilities and helper functions for LangGraph integration"""

from .graph_builder import (
    GraphBuilder,
    log_graph_execution,
)

__all__ = [
    "GraphBuilder",
    "log_graph_execution",
]
