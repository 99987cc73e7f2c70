# src/jobs/job_queue.py
# Job & queue manager: waiting queue and job lifecycle

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import islice

from sortedcontainers import SortedKeyList

from src.errors import InternalConsistencyError, TraceError


class JobStatus(Enum):
    QUEUED = "queued"
    RUNNING = "running"
    FINISHED = "finished"


@dataclass(eq=False)
class Job:
    """One batch job: trace record plus mutable lifecycle state"""

    record: object
    status: JobStatus = JobStatus.QUEUED
    start_time: int | None = None
    end_time: int | None = None
    allocated_nodes: frozenset | None = None

    @property
    def job_id(self):
        return self.record.job_id

    @property
    def submit_time(self):
        return self.record.submit_time

    @property
    def requested_nodes(self):
        return self.record.requested_nodes

    @property
    def requested_time(self):
        return self.record.requested_time

    @property
    def actual_runtime(self):
        return self.record.actual_runtime

    @property
    def queue_key(self):
        return (self.record.submit_time, self.record.job_id)

    @property
    def wait_time(self):
        if self.start_time is None:
            return None
        return self.start_time - self.submit_time


def _arrival_key(job):
    return job.queue_key


def _walltime_key(job):
    return (job.requested_time, job.submit_time, job.job_id)


class QueueView(Sequence):
    """Read-only queued jobs in (submit_time, job_id) order.

    A view handed out by JobQueue reads the queue's own sorted lists and stays
    valid until the queue next changes; a view built from jobs owns its copy.
    """

    __slots__ = ("_arrival", "_walltime", "_excluded")

    def __init__(self, jobs=()):
        self._arrival = SortedKeyList(jobs, key=_arrival_key)
        self._walltime = None
        self._excluded = frozenset()

    @classmethod
    def over(cls, arrival, walltime=None, excluded=frozenset()):
        view = cls.__new__(cls)
        view._arrival = arrival
        view._walltime = walltime
        view._excluded = excluded
        return view

    def _visible(self, jobs):
        if not self._excluded:
            return iter(jobs)
        return (job for job in jobs if job.job_id not in self._excluded)

    def __iter__(self):
        return self._visible(self._arrival)

    def __len__(self):
        return len(self._arrival) - len(self._excluded)

    def __getitem__(self, index):
        if not self._excluded:
            return self._arrival[index]
        if isinstance(index, slice):
            if index.start is None and index.step is None and (index.stop or 0) >= 0:
                return list(islice(self, index.stop))
            return list(self)[index]
        if index < 0:
            return list(self)[index]
        try:
            return next(islice(self, index, None))
        except StopIteration:
            raise IndexError("queue view index out of range") from None

    def __repr__(self):
        return f"QueueView({[j.job_id for j in self]})"

    def _by_walltime(self):
        if self._walltime is None:
            self._walltime = SortedKeyList(self._arrival, key=_walltime_key)
        return self._walltime

    def shortest_first(self):
        """Jobs by (requested_time, submit_time, job_id)"""
        return self._visible(self._by_walltime())

    def longest_first(self):
        """Jobs by (-requested_time, submit_time, job_id)"""
        walltime = self._by_walltime()
        stop = len(walltime)
        while stop > 0:
            # one run of equal requested_time, kept in arrival order
            start = walltime.bisect_key_left((walltime[stop - 1].requested_time,))
            yield from self._visible(walltime.islice(start, stop))
            stop = start

    def without(self, job_ids):
        wanted = set(job_ids) - self._excluded
        found = set()
        if wanted:
            for job in self:
                if job.job_id in wanted:
                    found.add(job.job_id)
                    if found == wanted:
                        break
        return QueueView.over(self._arrival, self._walltime, self._excluded | found)


class JobQueue:
    """Holds waiting and running jobs and enforces queued -> running -> finished.

    Every job id ever seen is remembered so that a repeated id is caught even
    after the first job has finished; that set grows with the trace, the job
    records themselves do not.
    """

    def __init__(self):
        self._arrival = SortedKeyList(key=_arrival_key)
        self._walltime = SortedKeyList(key=_walltime_key)
        self._waiting = {}
        self._running = {}
        self._seen_ids = set()

        # Statistics
        self.enqueued_count = 0
        self.finished_count = 0
        self.discarded_count = 0

    def __len__(self):
        return len(self._waiting)

    @property
    def running_count(self):
        return len(self._running)

    def get(self, job_id):
        job = self._waiting.get(job_id) or self._running.get(job_id)
        if job is None:
            raise InternalConsistencyError(f"unknown job {job_id}")
        return job

    def is_queued(self, job_id):
        return job_id in self._waiting

    def _register_id(self, job_id):
        if job_id in self._seen_ids:
            raise TraceError(f"duplicate job id {job_id} in trace")
        self._seen_ids.add(job_id)

    def enqueue(self, job, now):
        if job.status is not JobStatus.QUEUED or job.start_time is not None:
            raise InternalConsistencyError(f"job {job.job_id} enqueued in state {job.status.value}")
        if now != job.submit_time:
            raise InternalConsistencyError(
                f"job {job.job_id} enqueued at {now}, submitted at {job.submit_time}")
        self._register_id(job.job_id)
        self._arrival.add(job)
        self._walltime.add(job)
        self._waiting[job.job_id] = job
        self.enqueued_count += 1

    def discard(self, record):
        """Account for a job that is never queued (it can never run)"""
        self._register_id(record.job_id)
        self.discarded_count += 1

    def view(self):
        return QueueView.over(self._arrival, self._walltime)

    def mark_started(self, job_id, start, nodes):
        job = self._waiting.get(job_id)
        if job is None:
            raise InternalConsistencyError(f"mark_started: job {job_id} is not queued")
        if start < job.submit_time:
            raise InternalConsistencyError(
                f"job {job_id} started at {start} before its submit time {job.submit_time}")

        self._arrival.remove(job)
        self._walltime.remove(job)
        del self._waiting[job_id]

        job.status = JobStatus.RUNNING
        job.start_time = start
        job.allocated_nodes = frozenset(nodes)
        self._running[job_id] = job
        return job.wait_time

    def mark_finished(self, job_id, end):
        job = self._running.get(job_id)
        if job is None:
            raise InternalConsistencyError(f"mark_finished: job {job_id} is not running")
        if end != job.start_time + job.actual_runtime:
            raise InternalConsistencyError(
                f"job {job_id} finished at {end}, expected {job.start_time + job.actual_runtime}")
        del self._running[job_id]
        job.status = JobStatus.FINISHED
        job.end_time = end
        self.finished_count += 1
        return job
