# tests/test_cluster.py

import pytest

from src.errors import InternalConsistencyError, JobError
from src.system import ClusterState, NodeState


def test_allocates_lowest_indexed_nodes():
    cluster = ClusterState(8)
    assert cluster.allocate(1, 3, 0) == frozenset({0, 1, 2})
    assert cluster.allocate(2, 2, 0) == frozenset({3, 4})
    cluster.release(1, 5)
    assert cluster.allocate(3, 4, 5) == frozenset({0, 1, 2, 5})


def test_insufficient_nodes_leaves_state_untouched():
    cluster = ClusterState(4)
    cluster.allocate(1, 3, 0)
    assert cluster.allocate(2, 2, 3) is None
    assert cluster.free_count == 1
    assert cluster.last_update == 0


def test_oversize_request_is_a_job_error():
    cluster = ClusterState(4)
    with pytest.raises(JobError) as info:
        cluster.allocate(9, 5, 0)
    assert info.value.job_id == 9


def test_node_records_follow_allocation():
    cluster = ClusterState(3)
    cluster.allocate(7, 2, 0)
    assert [n.state for n in cluster.nodes] == [NodeState.BUSY, NodeState.BUSY, NodeState.FREE]
    assert cluster.nodes[1].running_job == 7
    assert cluster.holding(7) == (0, 1)
    assert cluster.release(7, 4) == 2
    assert all(n.state is NodeState.FREE for n in cluster.nodes)
    assert cluster.holding(7) == ()


def test_release_without_holding_fails():
    cluster = ClusterState(2)
    with pytest.raises(InternalConsistencyError):
        cluster.release(1, 0)


def test_double_allocation_for_same_job_fails():
    cluster = ClusterState(4)
    cluster.allocate(1, 1, 0)
    with pytest.raises(InternalConsistencyError):
        cluster.allocate(1, 1, 0)


def test_busy_node_seconds_accrue_between_changes():
    cluster = ClusterState(4)
    cluster.allocate(1, 2, 0)
    cluster.allocate(2, 1, 3)
    cluster.release(1, 10)
    cluster.release(2, 12)
    # 2 nodes x 3 s + 3 nodes x 7 s + 1 node x 2 s
    assert cluster.busy_node_seconds == 6 + 21 + 2
    assert cluster.utilization(12) == pytest.approx(29 / 48)


def test_clock_cannot_run_backward():
    cluster = ClusterState(4)
    cluster.allocate(1, 1, 10)
    with pytest.raises(InternalConsistencyError):
        cluster.release(1, 5)


def test_utilization_zero_makespan_reports_zero():
    assert ClusterState(4).utilization(0) == 0.0


def test_rejects_empty_cluster():
    with pytest.raises(InternalConsistencyError):
        ClusterState(0)
