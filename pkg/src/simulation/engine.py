# src/simulation/engine.py
# Event-driven simulation core

import heapq
import logging
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from itertools import count

from config.settings import BSLD_THRESHOLD_SECONDS, DEFAULT_POLICY, DEFAULT_SEED
from src.errors import InternalConsistencyError, PolicyContractError
from src.jobs.job_queue import Job, JobQueue
from src.policies.base import Reservation, SystemSnapshot
from src.policies.heuristics import fcfs_select
from src.reporting.debug_log import DebugLog
from src.reporting.metrics import MetricsAccumulator
from src.reporting.results import append_finished_record

logger = logging.getLogger(__name__)


class EventKind(IntEnum):
    # rank order at equal timestamps
    END = 0
    SUBMIT = 1
    INVOKE = 2


@dataclass(frozen=True, order=True)
class Event:
    time: int
    kind: EventKind
    seq: int
    job_id: int | None = field(default=None, compare=False)


class Mode(Enum):
    HEURISTIC = "heuristic"
    RL_TRAIN = "rl-train"
    RL_INFER = "rl-infer"


@dataclass(frozen=True)
class EngineConfig:
    mode: Mode = Mode.HEURISTIC
    seed: int = DEFAULT_SEED
    policy: str = DEFAULT_POLICY
    bsld_threshold: int = BSLD_THRESHOLD_SECONDS
    keep_finished: bool = False


@dataclass
class SimulationSummary:
    metrics: object
    finished: list
    jobs_read: int
    invocations: int
    events_processed: int
    guard_starts: int
    peak_buffered: int
    end_time: int = 0


class SimulationEngine:
    """Advances the clock event by event and lets the policy start queued jobs"""

    def __init__(self, cluster, policy, cfg=None, results=None, system_info=None,
                 debug_log=None):
        self.cluster = cluster
        self.policy = policy
        self.cfg = cfg or EngineConfig()
        self.results = results
        self.system_info = system_info
        self.debug_log = debug_log or DebugLog()

        self.queue = JobQueue()
        self.now = 0
        self._events = []
        self._seq = count()
        self._pending_invokes = set()
        self._arrivals = {}
        self._reservations = {}
        self._trace = None

        self._metrics = MetricsAccumulator(self.cfg.bsld_threshold)
        self._finished_batch = []
        self._finished_batch_time = None
        self.finished = []

        # Statistics
        self.jobs_read = 0
        self.invocations = 0
        self.events_processed = 0
        self.guard_starts = 0

    # ========================================================================
    # Event queue
    # ========================================================================

    def _push(self, time, kind, job_id=None):
        heapq.heappush(self._events, Event(time, kind, next(self._seq), job_id))

    def _request_invoke(self, time):
        # at most one pending Invoke per timestamp
        if time not in self._pending_invokes:
            self._pending_invokes.add(time)
            self._push(time, EventKind.INVOKE)

    def _push_next_submit(self):
        record = next(self._trace, None)
        if record is None:
            return
        self._arrivals[record.job_id] = record
        self._push(record.submit_time, EventKind.SUBMIT, record.job_id)

    # ========================================================================
    # Main loop
    # ========================================================================

    def run(self, trace):
        if self._events:
            raise InternalConsistencyError("engine started with a non-empty event queue")
        self._trace = iter(trace)
        self.policy.start_episode()
        self._push_next_submit()

        while self._events:
            event = heapq.heappop(self._events)
            if event.time < self.now:
                raise InternalConsistencyError(
                    f"event queue corruption: popped t={event.time} after t={self.now}")
            if self._finished_batch and event.time > self._finished_batch_time:
                self._flush_finished()
            self.now = event.time
            self.events_processed += 1
            self.dispatch_event(event)

        self._flush_finished()
        self.policy.finish(self.now)
        return self._summarize(trace)

    def _summarize(self, trace):
        in_flight = len(self.queue) + self.queue.running_count
        if in_flight:
            raise InternalConsistencyError(f"{in_flight} jobs left unfinished after the last event")
        queue = self.queue
        if queue.enqueued_count != queue.finished_count:
            raise InternalConsistencyError(
                f"queued {queue.enqueued_count} jobs but finished {queue.finished_count}")
        accounted = queue.enqueued_count + queue.discarded_count
        if self.jobs_read != accounted:
            raise InternalConsistencyError(
                f"read {self.jobs_read} jobs but accounted for {accounted}")

        acc = self._metrics
        utilization = self.cluster.utilization(acc.makespan) if acc.count else 0.0
        metrics = acc.result(utilization, self.queue.discarded_count)
        self.debug_log.summary(
            "run finished: %d jobs, %d discarded, avg_wait=%.3f, makespan=%d, utilization=%.4f",
            metrics.finished_count, metrics.discarded_count, metrics.avg_wait,
            metrics.makespan, metrics.utilization, sim_time=self.now)
        return SimulationSummary(
            metrics=metrics,
            finished=self.finished,
            jobs_read=self.jobs_read,
            invocations=self.invocations,
            events_processed=self.events_processed,
            guard_starts=self.guard_starts,
            peak_buffered=getattr(trace, "peak_buffered", 0),
            end_time=self.now,
        )

    def _flush_finished(self):
        # jobs ending at the same instant go out in job_id order
        for job in sorted(self._finished_batch, key=lambda j: j.job_id):
            if self.results is not None:
                append_finished_record(self.results, job)
            self._metrics.add_job(job)
            if self.cfg.keep_finished:
                self.finished.append(job)
        self._finished_batch = []
        self._finished_batch_time = None

    # ========================================================================
    # Event handlers
    # ========================================================================

    def dispatch_event(self, event):
        if event.kind is EventKind.SUBMIT:
            self._on_submit(event)
        elif event.kind is EventKind.END:
            self._on_end(event)
        elif event.kind is EventKind.INVOKE:
            self._on_invoke(event)
        else:
            raise InternalConsistencyError(f"unknown event kind {event.kind}")

    def _on_submit(self, event):
        record = self._arrivals.pop(event.job_id, None)
        if record is None:
            raise InternalConsistencyError(f"submit event for unknown job {event.job_id}")
        self.jobs_read += 1
        self._push_next_submit()

        if record.requested_nodes > self.cluster.total_nodes:
            self.queue.discard(record)
            logger.warning("job %d requests %d nodes, system has %d; discarded",
                           record.job_id, record.requested_nodes, self.cluster.total_nodes)
            self.debug_log.warning("discard job %d: requests %d of %d nodes",
                                   record.job_id, record.requested_nodes,
                                   self.cluster.total_nodes, sim_time=self.now)
            return

        self.queue.enqueue(Job(record), self.now)
        self.debug_log.event("submit job %d (nodes=%d, walltime=%d)", record.job_id,
                             record.requested_nodes, record.requested_time, sim_time=self.now)
        self._request_invoke(self.now)

    def _on_end(self, event):
        if event.job_id is None:
            raise InternalConsistencyError("end event without a job")
        self.cluster.release(event.job_id, self.now)
        self._reservations.pop(event.job_id, None)
        job = self.queue.mark_finished(event.job_id, self.now)
        if self._finished_batch_time is None:
            self._finished_batch_time = self.now
        self._finished_batch.append(job)
        self.debug_log.event("end job %d (wait=%d)", job.job_id, job.wait_time, sim_time=self.now)
        self._request_invoke(self.now)

    def _on_invoke(self, event):
        self._pending_invokes.discard(self.now)
        self.invocations += 1

        view = self.queue.view()
        free = self.cluster.free_count
        system = SystemSnapshot(
            free_count=free,
            total_nodes=self.cluster.total_nodes,
            reservations=tuple(self._reservations.values()),
        )
        decision = self.policy.select(view, free, self.now, system)
        self.debug_log.decision("%s: queue=%d free=%d start=%s", self.policy.name,
                                len(view), free, list(decision), sim_time=self.now)
        started = self.apply_decision(decision, self.now)

        if self.cluster.busy_count == 0 and len(self.queue) and not self._events:
            # nothing left that could wake the scheduler again
            head = fcfs_select(self.queue.view(), self.cluster.free_count, self.now)
            self.guard_starts += 1
            self.debug_log.warning("idle cluster with %d queued jobs; starting %s",
                                   len(self.queue), list(head), sim_time=self.now)
            started += self.apply_decision(head, self.now)

        if self.system_info is not None:
            self.system_info.append(self.now, self.cluster.busy_count, self.cluster.free_count,
                                    len(self.queue), self.queue.running_count, started)

    # ========================================================================
    # Decisions
    # ========================================================================

    def apply_decision(self, decision, now):
        started = 0
        for job_id in decision:
            if not self.queue.is_queued(job_id):
                raise PolicyContractError(
                    f"{self.policy.name} started job {job_id}, which is not queued")
            job = self.queue.get(job_id)
            nodes = self.cluster.allocate(job_id, job.requested_nodes, now)
            if nodes is None:
                raise PolicyContractError(
                    f"{self.policy.name} started job {job_id} needing {job.requested_nodes} "
                    f"nodes with {self.cluster.free_count} free")
            self.queue.mark_started(job_id, now, nodes)
            self._reservations[job_id] = Reservation(
                now + job.requested_time, job.requested_nodes, job_id)
            self._push(now + job.actual_runtime, EventKind.END, job_id)
            self.debug_log.event("start job %d on %d nodes (wait=%d)", job_id,
                                 job.requested_nodes, job.wait_time, sim_time=now)
            started += 1
        return started
