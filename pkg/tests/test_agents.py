# tests/test_agents.py

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal
from scipy.stats import chisquare

from src.agents import (
    DQNAgent,
    Hyperparameters,
    PGAgent,
    ReplayBuffer,
    Transition,
    action_probabilities,
    compute_reward,
    decay_epsilon,
    encode_state,
    feasible_mask,
    returns_to_go
)
from src.errors import ValidationError
from src.jobs import Job, QueueView
from src.policies import SystemSnapshot
from src.trace import JobRecord

SMALL = Hyperparameters(window_K=3, hidden_sizes=(8,), batch_size=4, replay_capacity=16,
                        reward_scale=1.0)


def _view(*specs):
    """specs: (job_id, submit, nodes, requested_time)"""
    return QueueView(Job(JobRecord(i, s, t, n, t)) for i, s, n, t in specs)


def _transition(hp, rng, reward=0.0, done=False, action=None):
    return Transition(
        state=rng.uniform(-1, 1, hp.state_size),
        action=int(rng.integers(0, hp.action_count)) if action is None else action,
        reward=reward,
        next_state=rng.uniform(-1, 1, hp.state_size),
        done=done,
    )


# Hyperparameters

def test_state_and_action_sizes():
    hp = Hyperparameters(window_K=5, hidden_sizes=(64, 64))
    assert hp.state_size == 17
    assert hp.action_count == 6
    assert hp.layer_sizes() == (17, 64, 64, 6)


@pytest.mark.parametrize("field,value", [
    ("gamma", 1.0), ("gamma", -0.1), ("epsilon", 1.5), ("learning_rate", 0.0),
    ("batch_size", 0), ("window_K", 0), ("hidden_sizes", (8, 0)), ("episodes", 0),
    ("replay_capacity", 2), ("reward_scale", 0.0),
])
def test_validation_names_field(field, value):
    with pytest.raises(ValidationError) as info:
        SMALL.with_overrides(**{field: value}).validate()
    assert info.value.field == field
    assert info.value.exit_code == 2


def test_epsilon_decay_closed_form():
    hp = Hyperparameters(epsilon=1.0, epsilon_decay=0.9, epsilon_min=0.05)
    eps = hp.epsilon
    for n in range(1, 60):
        eps = decay_epsilon(hp, eps)
        assert eps == pytest.approx(max(0.05, 0.9 ** n))


# Encoding

def test_encode_state_layout():
    hp = Hyperparameters(window_K=2)
    view = _view((1, 0, 2, 7200), (2, 1800, 1, 3600), (3, 3600, 4, 60))
    state = encode_state(view, SystemSnapshot(free_count=2, total_nodes=4), hp, now=3600)
    assert_allclose(state, [1.0, 2.0, 0.5, 0.5, 1.0, 0.25, 0.5, 0.03])


def test_encode_state_pads_short_queue_with_zeros():
    hp = Hyperparameters(window_K=3)
    state = encode_state(_view((1, 0, 1, 10)), SystemSnapshot(4, 4), hp, now=0)
    assert_array_equal(state[3:9], np.zeros(6))
    assert state[9] == 1.0


def test_feasible_mask():
    view = _view((1, 0, 3, 10), (2, 0, 1, 10))
    assert_array_equal(feasible_mask(view, 2, 3), [False, True, False, True])
    assert_array_equal(feasible_mask(_view(), 0, 2), [False, False, True])


def test_reward_is_scaled_queue_wait():
    view = _view((1, 0, 1, 10), (2, 0, 1, 10))
    assert compute_reward(view, 3700, 100) == pytest.approx(-2 * 3600 / (3600 * 100))
    assert compute_reward(_view(), 50, 0) == 0.0


# DQN

def test_dqn_greedy_picks_masked_argmax():
    agent = DQNAgent(SMALL, seed=1)
    state = np.zeros(SMALL.state_size)
    agent.net.set_flat_parameters(np.zeros(agent.net.parameter_count))
    agent.net.biases[-1][:] = [5.0, 1.0, 3.0, 0.0]
    assert agent.dqn_act(state, np.array([True, True, True, True]), 0.0) == 0
    assert agent.dqn_act(state, np.array([False, True, True, True]), 0.0) == 2
    agent.net.biases[-1][:] = [1.0, 1.0, 1.0, 1.0]
    assert agent.dqn_act(state, np.array([False, True, True, True]), 0.0) == 1


def test_dqn_full_exploration_is_uniform_over_feasible():
    agent = DQNAgent(SMALL, seed=2)
    state = np.zeros(SMALL.state_size)
    mask = np.array([True, False, True, True])
    counts = np.zeros(4, dtype=int)
    for _ in range(12000):
        counts[agent.dqn_act(state, mask, 1.0)] += 1
    assert counts[1] == 0
    assert chisquare(counts[mask]).pvalue > 0.001


def test_dqn_actions_always_feasible():
    agent = DQNAgent(SMALL, seed=3)
    rng = np.random.default_rng(3)
    for _ in range(10000):
        mask = rng.random(SMALL.action_count) < 0.5
        mask[-1] = True
        action = agent.dqn_act(rng.normal(size=SMALL.state_size), mask, rng.random())
        assert mask[action]


def test_dqn_single_transition_loss():
    hp = SMALL.with_overrides(batch_size=1, gamma=0.5)
    agent = DQNAgent(hp, seed=4)
    rng = np.random.default_rng(4)
    t = _transition(hp, rng, reward=0.3, action=1)
    q = agent.net.forward(t.state)[1]
    target = 0.3 + 0.5 * agent.target_net.forward(t.next_state).max()
    assert agent.train_step([t]) == pytest.approx((q - target) ** 2, rel=1e-12)


def test_dqn_terminal_target_is_reward():
    hp = SMALL.with_overrides(batch_size=1, gamma=0.9)
    agent = DQNAgent(hp, seed=5)
    rng = np.random.default_rng(5)
    t = _transition(hp, rng, reward=-1.0, done=True, action=0)
    q = agent.net.forward(t.state)[0]
    assert agent.train_step([t]) == pytest.approx((q + 1.0) ** 2, rel=1e-12)


def test_dqn_bootstrap_ignores_infeasible_next_actions():
    hp = SMALL.with_overrides(batch_size=1, gamma=0.5)
    agent = DQNAgent(hp, seed=9)
    agent.net.set_flat_parameters(np.zeros(agent.net.parameter_count))
    agent.target_net.set_flat_parameters(np.zeros(agent.target_net.parameter_count))
    agent.target_net.biases[-1][:] = [9.0, -3.0, 4.0, -1.0]
    state = np.zeros(hp.state_size)
    t = Transition(state, 0, -2.0, state, False, next_mask=np.array([False, True, False, True]))
    # best feasible next value is the no-op at -1, not the masked 9
    assert agent.train_step([t]) == pytest.approx((-2.0 + 0.5 * -1.0) ** 2)


def test_dqn_scales_rewards_into_replay():
    hp = SMALL.with_overrides(reward_scale=250.0)
    agent = DQNAgent(hp, seed=10)
    state = np.zeros(hp.state_size)
    mask = np.array([True, False, False, True])
    agent.record(state, 0, -0.004, state, False, np.ones(hp.action_count, bool), mask)
    (stored,) = list(agent.replay)
    assert stored.reward == pytest.approx(-1.0)
    assert_array_equal(stored.next_mask, mask)


def test_dqn_zero_gamma_zero_reward_regresses_to_zero():
    hp = SMALL.with_overrides(gamma=0.0)
    agent = DQNAgent(hp, seed=6)
    rng = np.random.default_rng(6)
    batch = [_transition(hp, rng) for _ in range(hp.batch_size)]
    q = np.array([agent.net.forward(t.state)[t.action] for t in batch])
    assert agent.train_step(batch) == pytest.approx(np.mean(q ** 2), rel=1e-12)


def test_dqn_reduces_loss_on_fixed_batch():
    hp = SMALL.with_overrides(learning_rate=0.01, gamma=0.0)
    agent = DQNAgent(hp, seed=7)
    rng = np.random.default_rng(7)
    batch = [_transition(hp, rng, reward=1.0) for _ in range(hp.batch_size)]
    first = agent.train_step(batch)
    for _ in range(200):
        last = agent.train_step(batch)
    assert last < first


def test_dqn_target_sync_schedule():
    hp = SMALL.with_overrides(target_sync_every=3)
    agent = DQNAgent(hp, seed=8)
    rng = np.random.default_rng(8)
    batch = [_transition(hp, rng, reward=1.0) for _ in range(hp.batch_size)]
    agent.train_step(batch)
    agent.train_step(batch)
    assert not np.array_equal(agent.target_net.get_flat_parameters(),
                              agent.net.get_flat_parameters())
    agent.train_step(batch)
    assert_array_equal(agent.target_net.get_flat_parameters(), agent.net.get_flat_parameters())


def test_dqn_training_is_deterministic():
    def losses(seed):
        agent = DQNAgent(SMALL, seed=seed)
        rng = np.random.default_rng(99)
        out = []
        for _ in range(30):
            loss = agent.record(*_transition_args(SMALL, rng))
            if loss is not None:
                out.append(loss)
        return out
    assert losses(0) == losses(0)
    assert losses(0) != losses(1)


def _transition_args(hp, rng):
    t = _transition(hp, rng, reward=float(rng.normal()))
    return t.state, t.action, t.reward, t.next_state, t.done, np.ones(hp.action_count, bool)


# Policy gradient

def test_returns_to_go():
    assert_allclose(returns_to_go([0.0, 1.0], 0.5), [0.5, 1.0])
    assert_allclose(returns_to_go([1.0, 1.0, 1.0], 0.0), [1.0, 1.0, 1.0])


def test_masked_softmax_sums_to_one():
    rng = np.random.default_rng(12)
    for _ in range(1000):
        logits = rng.normal(scale=5.0, size=6)
        mask = rng.random(6) < 0.6
        mask[-1] = True
        probs = action_probabilities(logits, mask)
        assert abs(probs.sum() - 1.0) < 1e-12
        assert not probs[~mask].any()


def test_pg_zero_advantage_leaves_parameters_unchanged():
    agent = PGAgent(SMALL, seed=13)
    rng = np.random.default_rng(13)
    before = agent.net.get_flat_parameters()
    for _ in range(5):
        agent.record(*_zero_reward_step(SMALL, rng))
    assert agent.end_episode() == 0.0
    assert_array_equal(agent.net.get_flat_parameters(), before)


def _zero_reward_step(hp, rng):
    return (rng.uniform(-1, 1, hp.state_size), int(rng.integers(0, hp.action_count)), 0.0,
            None, False, np.ones(hp.action_count, bool))


def test_pg_update_raises_probability_of_rewarded_action():
    hp = SMALL.with_overrides(learning_rate=0.05, gamma=0.0)
    agent = PGAgent(hp, seed=14)
    state = np.full(hp.state_size, 0.5)
    mask = np.ones(hp.action_count, bool)
    before = action_probabilities(agent.net.forward(state), mask)[2]
    for _ in range(20):
        agent.pg_update([(state, 2, 1.0, mask), (state, 0, 0.0, mask)])
    assert action_probabilities(agent.net.forward(state), mask)[2] > before


def test_pg_samples_only_feasible_and_greedy_in_inference():
    agent = PGAgent(SMALL, seed=15)
    state = np.zeros(SMALL.state_size)
    mask = np.array([False, True, False, True])
    for _ in range(500):
        assert mask[agent.act(state, mask, explore=True)]
    agent.net.set_flat_parameters(np.zeros(agent.net.parameter_count))
    agent.net.biases[-1][:] = [9.0, 2.0, 9.0, 1.0]
    assert agent.act(state, mask, explore=False) == 1


# Replay buffer

def test_replay_buffer_evicts_oldest():
    buffer = ReplayBuffer(3, np.random.default_rng(0))
    for i in range(5):
        buffer.push(i)
    assert list(buffer) == [2, 3, 4]


def test_replay_sample_without_replacement():
    buffer = ReplayBuffer(10, np.random.default_rng(0))
    for i in range(10):
        buffer.push(i)
    batch = buffer.sample(10)
    assert sorted(batch) == list(range(10))
