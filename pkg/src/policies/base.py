# src/policies/base.py
# Scheduling policy plug-in interface

from abc import ABC, abstractmethod
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Reservation:
    """Upper bound on when a running job's nodes come back"""

    expected_end: int
    nodes: int
    job_id: int = 0


@dataclass(frozen=True)
class SystemSnapshot:
    free_count: int
    total_nodes: int
    reservations: tuple = field(default=())


@dataclass(frozen=True)
class ScheduleDecision:
    """Ordered job ids to start at the current invocation"""

    job_ids: tuple = ()

    def __post_init__(self):
        if len(set(self.job_ids)) != len(self.job_ids):
            raise ValueError(f"decision repeats a job: {self.job_ids}")

    def __iter__(self):
        return iter(self.job_ids)

    def __len__(self):
        return len(self.job_ids)


def is_prefix_feasible(decision, view, free_nodes):
    by_id = {job.job_id: job for job in view}
    remaining = free_nodes
    for job_id in decision:
        job = by_id.get(job_id)
        if job is None or job.requested_nodes > remaining:
            return False
        remaining -= job.requested_nodes
    return True


class SchedulingPolicy(ABC):
    """A plug-in decides which queued jobs start now; it never mutates simulator state"""

    name = "base"

    @abstractmethod
    def select(self, view, free_nodes, now, system=None):
        """Return a prefix-feasible ScheduleDecision for the current snapshot"""

    def start_episode(self):
        pass

    def finish(self, now):
        """Called once when the simulation has drained all events"""
