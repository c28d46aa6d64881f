import logging
from typing import Any, Callable, Dict, TypeVar

from langgraph.graph import END, StateGraph

StateType = TypeVar('StateType')
NodeFunction = Callable[[StateType], Dict[str, Any]]

logger = logging.getLogger("partition_majorization.graph")

class GraphBuilder:
    """Utility class for building LangGraph StateGraphs with common patterns"""

    def __init__(self, state_type: type):
        self.state_type = state_type
        self.graph = StateGraph(state_type)
        self.nodes: Dict[str, NodeFunction] = {}

    def add_node(self, name: str, func: NodeFunction) -> 'GraphBuilder':
        """Add a node to the graph"""
        self.nodes[name] = func
        self.graph.add_node(name, func)
        return self

    def add_edge(self, from_node: str, to_node: str) -> 'GraphBuilder':
        """Add an edge between nodes; ``None`` as target means END"""
        self.graph.add_edge(from_node, END if to_node is None else to_node)
        return self

    def add_conditional_edge(self, from_node: str, condition_func: Callable, node_mapping: Dict[str, str]) -> 'GraphBuilder':
        """Add a conditional edge"""
        self.graph.add_conditional_edges(from_node, condition_func, node_mapping)
        return self

    def set_entry_point(self, node_name: str) -> 'GraphBuilder':
        """Set the entry point of the graph"""
        self.graph.set_entry_point(node_name)
        return self

    def compile(self):
        """Compile and return the graph"""
        return self.graph.compile()

    def chain(self, nodes: list[tuple[str, NodeFunction]]) -> 'GraphBuilder':
        """Add nodes wired one after another; the first becomes the entry point
        if none is set yet. The last node is left open for the caller to route."""
        for name, func in nodes:
            self.add_node(name, func)
        if nodes and len(self.nodes) == len(nodes):
            self.set_entry_point(nodes[0][0])
        for i in range(len(nodes) - 1):
            self.add_edge(nodes[i][0], nodes[i + 1][0])
        return self


def log_graph_execution(phase: str, step: str, details: str = ""):
    """Helper function for consistent logging across graph executions"""
    logger.debug(f"[{phase} Graph] {step}{f': {details}' if details else ''}")
