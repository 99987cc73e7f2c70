# tests/conftest.py
# Shared fixtures: worked example, trace files, random traces, reference simulator

import numpy as np
import pytest

from src.policies.heuristics import FCFSPolicy
from src.reporting.debug_log import DebugLog
from src.simulation.engine import EngineConfig, SimulationEngine
from src.system.cluster import ClusterState
from src.trace.swf import JobRecord

# 4-node cluster; FCFS waits (0, 9, 8), makespan 15, utilization 0.6
WORKED_EXAMPLE = (
    JobRecord(job_id=1, submit_time=0, actual_runtime=10, requested_nodes=2, requested_time=10),
    JobRecord(job_id=2, submit_time=1, actual_runtime=5, requested_nodes=3, requested_time=5),
    JobRecord(job_id=3, submit_time=2, actual_runtime=1, requested_nodes=1, requested_time=1),
)
WORKED_EXAMPLE_NODES = 4


@pytest.fixture
def worked_example():
    return list(WORKED_EXAMPLE)


@pytest.fixture
def write_trace(tmp_path):
    def _write(records, name="trace.swf", extra_lines=()):
        path = tmp_path / name
        lines = ["; Version: 2.2", "; UnixStartTime: 0"]
        lines += [r.to_swf_line() for r in records]
        lines += list(extra_lines)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path
    return _write


@pytest.fixture
def write_nodes(tmp_path):
    def _write(total_nodes, name="nodes.swf", directive="MaxNodes"):
        path = tmp_path / name
        path.write_text(f"; Computer: test-cluster\n; {directive}: {total_nodes}\n", encoding="utf-8")
        return path
    return _write


def random_records(rng, max_jobs=10, max_nodes=8, max_runtime=20, total_nodes=None):
    """Small random trace: nondecreasing submits, walltime >= runtime"""
    total_nodes = total_nodes or max_nodes
    n_jobs = int(rng.integers(1, max_jobs + 1))
    submit = 0
    records = []
    for job_id in range(1, n_jobs + 1):
        submit += int(rng.integers(0, 6))
        runtime = int(rng.integers(0, max_runtime + 1))
        records.append(JobRecord(
            job_id=job_id,
            submit_time=submit,
            actual_runtime=runtime,
            requested_nodes=int(rng.integers(1, total_nodes + 1)),
            requested_time=max(1, runtime + int(rng.integers(0, 11))),
        ))
    return records


@pytest.fixture
def random_trace():
    return random_records


def run_engine(records, total_nodes, policy=None, **engine_kwargs):
    cluster = ClusterState(total_nodes)
    engine = SimulationEngine(cluster, policy or FCFSPolicy(),
                              EngineConfig(keep_finished=True), **engine_kwargs)
    summary = engine.run(records)
    return summary, engine


@pytest.fixture
def simulate():
    return run_engine


def reference_schedule(records, total_nodes, select):
    """Independent simulator that advances the clock one second at a time.

    Returns {job_id: (start, end)}.
    """
    arrivals = sorted(records, key=lambda r: (r.submit_time, r.job_id))
    queue, running, times = [], {}, {}
    free, t, i = total_nodes, 0, 0
    while i < len(arrivals) or queue or running:
        changed = True
        while changed:
            changed = False
            for job_id, (end, nodes) in list(running.items()):
                if end <= t:
                    free += nodes
                    del running[job_id]
                    changed = True
            while i < len(arrivals) and arrivals[i].submit_time <= t:
                queue.append(arrivals[i])
                i += 1
                changed = True
            for job_id in select(queue, free, t):
                job = next(r for r in queue if r.job_id == job_id)
                queue.remove(job)
                free -= job.requested_nodes
                running[job_id] = (t + job.actual_runtime, job.requested_nodes)
                times[job_id] = (t, t + job.actual_runtime)
                changed = True
        t += 1
    return times


@pytest.fixture
def reference_simulate():
    return reference_schedule


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def debug_log_factory(tmp_path):
    logs = []

    def _make(level, name="run.log"):
        log = DebugLog(tmp_path / name, level)
        logs.append(log)
        return log
    yield _make
    for log in logs:
        log.close()
