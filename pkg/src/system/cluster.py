# src/system/cluster.py
# System module: node inventory, allocation and utilisation accounting

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.errors import InternalConsistencyError, JobError

logger = logging.getLogger(__name__)


class NodeState(Enum):
    FREE = "free"
    BUSY = "busy"


@dataclass
class Node:
    node_id: int
    state: NodeState = NodeState.FREE
    running_job: int | None = None


class ClusterState:
    """Tracks each node's availability and accumulates busy node-seconds"""

    def __init__(self, total_nodes, name=""):
        if total_nodes < 1:
            raise InternalConsistencyError(f"cluster needs at least one node, got {total_nodes}")
        self.name = name
        self.nodes = [Node(i) for i in range(total_nodes)]
        self.busy_node_seconds = 0
        self.last_update = 0

        # Availability bitmap (True = free) mirrors Node.state for fast lookup
        self._free = np.ones(total_nodes, dtype=bool)
        self._holdings = {}

    @classmethod
    def from_config(cls, config):
        return cls(config.total_nodes, config.name)

    @property
    def total_nodes(self):
        return len(self.nodes)

    @property
    def free_count(self):
        return int(self._free.sum())

    @property
    def busy_count(self):
        return self.total_nodes - self.free_count

    def holding(self, job_id):
        return tuple(self._holdings.get(job_id, ()))

    def _accrue(self, now):
        if now < self.last_update:
            raise InternalConsistencyError(
                f"clock moved backward: {now} < {self.last_update}")
        self.busy_node_seconds += self.busy_count * (now - self.last_update)
        self.last_update = now

    def allocate(self, job_id, n, now):
        """Mark the n lowest-indexed free nodes busy; None when they are not available"""
        if n < 1:
            raise InternalConsistencyError(f"job {job_id} requested {n} nodes")
        if n > self.total_nodes:
            raise JobError(job_id, f"job {job_id} requests {n} nodes, "
                                   f"system has {self.total_nodes}")
        if job_id in self._holdings:
            raise InternalConsistencyError(f"job {job_id} already holds nodes")

        free_ids = np.flatnonzero(self._free)
        if len(free_ids) < n:
            return None

        self._accrue(now)
        chosen = [int(i) for i in free_ids[:n]]
        self._free[chosen] = False
        for i in chosen:
            node = self.nodes[i]
            node.state = NodeState.BUSY
            node.running_job = job_id
        self._holdings[job_id] = chosen
        return frozenset(chosen)

    def release(self, job_id, now):
        held = self._holdings.pop(job_id, None)
        if not held:
            raise InternalConsistencyError(f"release of job {job_id} which holds no nodes")

        self._accrue(now)
        self._free[held] = True
        for i in held:
            node = self.nodes[i]
            node.state = NodeState.FREE
            node.running_job = None
        return len(held)

    def utilization(self, makespan):
        if makespan <= 0:
            logger.warning("utilization undefined for makespan %s; reporting 0", makespan)
            return 0.0
        return self.busy_node_seconds / (self.total_nodes * makespan)
