# src/reporting/metrics.py
# Scheduling performance metrics

from dataclasses import asdict, dataclass

from config.settings import BSLD_THRESHOLD_SECONDS


@dataclass(frozen=True)
class Metrics:
    avg_wait: float = 0.0
    avg_bounded_slowdown: float = 0.0
    utilization: float = 0.0
    makespan: int = 0
    finished_count: int = 0
    discarded_count: int = 0

    def as_dict(self):
        return asdict(self)


def bounded_slowdown(wait, runtime, threshold=BSLD_THRESHOLD_SECONDS):
    return max(1.0, (wait + runtime) / max(runtime, threshold))


class MetricsAccumulator:
    """Running sums over finished jobs, fed in result-file order.

    The engine and the offline recomputation both go through this class so that
    floating point sums are evaluated in the same order and agree exactly.
    """

    def __init__(self, bsld_threshold=BSLD_THRESHOLD_SECONDS):
        self.bsld_threshold = bsld_threshold
        self.count = 0
        self.total_wait = 0
        self.total_bsld = 0.0
        self.busy_node_seconds = 0
        self.first_submit = None
        self.last_end = None

    def add(self, submit, start, end, runtime, nodes):
        wait = start - submit
        self.count += 1
        self.total_wait += wait
        self.total_bsld += bounded_slowdown(wait, runtime, self.bsld_threshold)
        self.busy_node_seconds += nodes * runtime
        self.first_submit = submit if self.first_submit is None else min(self.first_submit, submit)
        self.last_end = end if self.last_end is None else max(self.last_end, end)

    def add_job(self, job):
        self.add(job.submit_time, job.start_time, job.end_time,
                 job.actual_runtime, job.requested_nodes)

    @property
    def makespan(self):
        if self.count == 0:
            return 0
        return self.last_end - self.first_submit

    def result(self, utilization, discarded_count=0):
        if self.count == 0:
            return Metrics(discarded_count=discarded_count)
        return Metrics(
            avg_wait=self.total_wait / self.count,
            avg_bounded_slowdown=self.total_bsld / self.count,
            utilization=utilization,
            makespan=self.makespan,
            finished_count=self.count,
            discarded_count=discarded_count,
        )


def compute_metrics(finished, cluster, discarded_count=0, bsld_threshold=BSLD_THRESHOLD_SECONDS):
    acc = MetricsAccumulator(bsld_threshold)
    for job in finished:
        acc.add_job(job)
    if acc.count == 0:
        return acc.result(0.0, discarded_count)
    return acc.result(cluster.utilization(acc.makespan), discarded_count)


def metrics_from_records(records, total_nodes, discarded_count=0,
                         bsld_threshold=BSLD_THRESHOLD_SECONDS):
    """Recompute Metrics offline from parsed result-file records"""
    acc = MetricsAccumulator(bsld_threshold)
    for r in records:
        acc.add(r.submit_time, r.start_time, r.end_time, r.actual_runtime, r.requested_nodes)
    if acc.count == 0:
        return acc.result(0.0, discarded_count)
    makespan = acc.makespan
    utilization = acc.busy_node_seconds / (total_nodes * makespan) if makespan > 0 else 0.0
    return acc.result(utilization, discarded_count)
