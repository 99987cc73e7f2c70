# src/policies/__init__.py
# Job scheduling module: policy interface and heuristics

from .base import (
    Reservation,
    SystemSnapshot,
    ScheduleDecision,
    SchedulingPolicy,
    is_prefix_feasible
)
from .heuristics import (
    fcfs_select,
    sjf_select,
    ljf_select,
    easy_backfill_select,
    shadow_start,
    FCFSPolicy,
    SJFPolicy,
    LJFPolicy,
    EasyBackfillPolicy
)

__all__ = [
    'Reservation',
    'SystemSnapshot',
    'ScheduleDecision',
    'SchedulingPolicy',
    'is_prefix_feasible',
    'fcfs_select',
    'sjf_select',
    'ljf_select',
    'easy_backfill_select',
    'shadow_start',
    'FCFSPolicy',
    'SJFPolicy',
    'LJFPolicy',
    'EasyBackfillPolicy'
]
