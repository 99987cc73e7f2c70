# src/system/__init__.py
# System module package

from .cluster import ClusterState, Node, NodeState

__all__ = ['ClusterState', 'Node', 'NodeState']
