# src/policies/heuristics.py
# Classic heuristic policies: FCFS, SJF, LJF and EASY backfilling

from src.jobs.job_queue import QueueView
from src.policies.base import Reservation, ScheduleDecision, SchedulingPolicy


def _walk_until_blocked(jobs, free_nodes):
    started = []
    for job in jobs:
        if job.requested_nodes > free_nodes:
            break
        started.append(job.job_id)
        free_nodes -= job.requested_nodes
    return ScheduleDecision(tuple(started))


def _sjf_key(job):
    return (job.requested_time, job.submit_time, job.job_id)


def _ljf_key(job):
    return (-job.requested_time, job.submit_time, job.job_id)


def fcfs_select(view, free_nodes, now):
    """Strict FCFS: start in arrival order, stop at the first job that does not fit"""
    return _walk_until_blocked(view, free_nodes)


def sjf_select(view, free_nodes, now):
    if isinstance(view, QueueView):
        return _walk_until_blocked(view.shortest_first(), free_nodes)
    return _walk_until_blocked(sorted(view, key=_sjf_key), free_nodes)


def ljf_select(view, free_nodes, now):
    if isinstance(view, QueueView):
        return _walk_until_blocked(view.longest_first(), free_nodes)
    return _walk_until_blocked(sorted(view, key=_ljf_key), free_nodes)

def shadow_start(head_nodes, free_nodes, reservations, now):
    """Earliest time `head_nodes` are guaranteed free, plus the nodes left over then.

    Returns (shadow_time, extra_nodes), or None if the reservations never free enough.
    """
    if head_nodes <= free_nodes:
        return now, free_nodes - head_nodes
    available = free_nodes
    for res in sorted(reservations, key=lambda r: (r.expected_end, r.job_id)):
        available += res.nodes
        if available >= head_nodes:
            return max(now, res.expected_end), available - head_nodes
    return None


def easy_backfill_select(view, free_nodes, now, reservations):
    started = []
    reservations = list(reservations)
    jobs = iter(view)

    head = None
    for job in jobs:
        if job.requested_nodes > free_nodes:
            head = job
            break
        started.append(job.job_id)
        free_nodes -= job.requested_nodes
        reservations.append(Reservation(now + job.requested_time, job.requested_nodes, job.job_id))
    if head is None:
        return ScheduleDecision(tuple(started))

    shadow = shadow_start(head.requested_nodes, free_nodes, reservations, now)
    if shadow is None:
        return ScheduleDecision(tuple(started))
    shadow_time, extra_nodes = shadow

    # the rest of the queue, behind the blocked head
    for job in jobs:
        if free_nodes == 0:
            break
        if job.requested_nodes > free_nodes:
            continue
        ends_before_shadow = now + job.requested_time <= shadow_time
        if ends_before_shadow or job.requested_nodes <= extra_nodes:
            started.append(job.job_id)
            free_nodes -= job.requested_nodes
            if not ends_before_shadow:
                extra_nodes -= job.requested_nodes
    return ScheduleDecision(tuple(started))


class FCFSPolicy(SchedulingPolicy):
    name = "fcfs"

    def select(self, view, free_nodes, now, system=None):
        return fcfs_select(view, free_nodes, now)


class SJFPolicy(SchedulingPolicy):
    name = "sjf"

    def select(self, view, free_nodes, now, system=None):
        return sjf_select(view, free_nodes, now)


class LJFPolicy(SchedulingPolicy):
    name = "ljf"

    def select(self, view, free_nodes, now, system=None):
        return ljf_select(view, free_nodes, now)


class EasyBackfillPolicy(SchedulingPolicy):
    name = "easy"

    def select(self, view, free_nodes, now, system=None):
        reservations = system.reservations if system is not None else ()
        return easy_backfill_select(view, free_nodes, now, reservations)
