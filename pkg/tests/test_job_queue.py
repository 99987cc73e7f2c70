# tests/test_job_queue.py

import pytest

from src.errors import InternalConsistencyError, TraceError
from src.jobs import Job, JobQueue, JobStatus
from src.trace import JobRecord


def _job(job_id, submit, runtime=5, nodes=1, requested=None):
    return Job(JobRecord(job_id, submit, runtime, nodes, requested or max(1, runtime)))


def test_view_orders_by_submit_then_id():
    queue = JobQueue()
    for job in (_job(5, 0), _job(2, 0), _job(9, 3), _job(1, 3)):
        queue.enqueue(job, job.submit_time)
    assert [j.job_id for j in queue.view()] == [2, 5, 1, 9]


def test_enqueue_must_happen_at_submit_time():
    queue = JobQueue()
    with pytest.raises(InternalConsistencyError):
        queue.enqueue(_job(1, 4), 5)


def test_duplicate_ids_are_trace_errors():
    queue = JobQueue()
    queue.enqueue(_job(1, 0), 0)
    with pytest.raises(TraceError):
        queue.enqueue(_job(1, 2), 2)


def test_lifecycle_and_wait():
    queue = JobQueue()
    job = _job(3, 2, runtime=7)
    queue.enqueue(job, 2)
    assert queue.mark_started(3, 6, {0, 1}) == 4
    assert job.status is JobStatus.RUNNING
    assert len(queue) == 0 and queue.running_count == 1
    finished = queue.mark_finished(3, 13)
    assert finished.status is JobStatus.FINISHED
    assert finished.end_time == 13
    assert queue.finished_count == 1


def test_start_before_submit_rejected():
    queue = JobQueue()
    queue.enqueue(_job(1, 5), 5)
    with pytest.raises(InternalConsistencyError):
        queue.mark_started(1, 4, {0})


def test_finish_must_match_runtime():
    queue = JobQueue()
    queue.enqueue(_job(1, 0, runtime=5), 0)
    queue.mark_started(1, 0, {0})
    with pytest.raises(InternalConsistencyError):
        queue.mark_finished(1, 6)


def test_illegal_transitions():
    queue = JobQueue()
    queue.enqueue(_job(1, 0), 0)
    with pytest.raises(InternalConsistencyError):
        queue.mark_finished(1, 5)
    queue.mark_started(1, 0, {0})
    with pytest.raises(InternalConsistencyError):
        queue.mark_started(1, 0, {0})


def test_discard_counts_and_blocks_reuse():
    queue = JobQueue()
    queue.discard(JobRecord(4, 0, 1, 99, 1))
    assert queue.discarded_count == 1
    with pytest.raises(TraceError):
        queue.enqueue(_job(4, 0), 0)


def test_view_without():
    queue = JobQueue()
    for job in (_job(1, 0), _job(2, 1), _job(3, 2)):
        queue.enqueue(job, job.submit_time)
    assert [j.job_id for j in queue.view().without([2])] == [1, 3]


def test_duplicate_of_finished_job_is_still_rejected():
    queue = JobQueue()
    queue.enqueue(_job(1, 0, runtime=2), 0)
    queue.mark_started(1, 0, {0})
    queue.mark_finished(1, 2)
    with pytest.raises(TraceError):
        queue.enqueue(_job(1, 5), 5)


def _walltime_queue():
    queue = JobQueue()
    # (job_id, submit, requested_time)
    for job_id, submit, walltime in ((1, 0, 50), (2, 0, 10), (3, 1, 50), (4, 1, 10), (5, 2, 30)):
        queue.enqueue(_job(job_id, submit, runtime=walltime, requested=walltime), submit)
    return queue


def test_view_walltime_orderings():
    view = _walltime_queue().view()
    assert [j.job_id for j in view.shortest_first()] == [2, 4, 5, 1, 3]
    # equal walltimes keep arrival order in both directions
    assert [j.job_id for j in view.longest_first()] == [1, 3, 5, 2, 4]


def test_view_tracks_queue_without_rebuilding():
    queue = _walltime_queue()
    view = queue.view()
    queue.mark_started(2, 3, {0})
    assert len(view) == 4
    assert [j.job_id for j in view] == [1, 3, 4, 5]
    assert [j.job_id for j in view.shortest_first()] == [4, 5, 1, 3]


def test_view_without_indexes_remaining_jobs():
    view = _walltime_queue().view().without([2, 99])
    assert len(view) == 4
    assert [j.job_id for j in view[:2]] == [1, 3]
    assert view[1].job_id == 3
    assert view[-1].job_id == 5
    assert [j.job_id for j in view.longest_first()] == [1, 3, 5, 4]
    with pytest.raises(IndexError):
        view[4]
