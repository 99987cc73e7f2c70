# src/agents/rl_policy.py
# Scheduling policy plug-in driven by an RL agent

from dataclasses import replace

import numpy as np

from config.settings import QUEUE_LENGTH_CAP, WAIT_NORMALIZER_SECONDS
from src.agents.encoding import compute_reward, encode_state, feasible_mask
from src.errors import InternalConsistencyError
from src.policies.base import ScheduleDecision, SchedulingPolicy, SystemSnapshot


class RLSchedulingPolicy(SchedulingPolicy):
    """Picks jobs one at a time from the first K queued until the agent chooses no-op.

    In training mode every step becomes a transition for the agent; the reward of
    a step is only known at the next observation, so one step is kept pending.
    """

    def __init__(self, agent, training, debug_log=None,
                 tau=WAIT_NORMALIZER_SECONDS, queue_cap=QUEUE_LENGTH_CAP):
        self.agent = agent
        self.training = training
        self.debug_log = debug_log
        self.tau = tau
        self.queue_cap = queue_cap
        self.name = agent.algorithm
        self.start_episode()

    def start_episode(self):
        self._pending = None
        self._last_decision_time = None
        self.total_reward = 0.0
        self.steps = 0

    def _complete_pending(self, reward, next_state, next_mask, done, now):
        if self._pending is None:
            return
        state, action, mask = self._pending
        self._pending = None
        self.total_reward += reward
        if self.training:
            loss = self.agent.record(state, action, reward, next_state, done, mask, next_mask)
            if loss is not None and self.debug_log is not None:
                self.debug_log.rl("train step loss=%.6g", loss, sim_time=now)

    def select(self, view, free_nodes, now, system=None):
        if system is None:
            raise InternalConsistencyError("RL policies need the system snapshot")
        hp = self.agent.hp

        reward = 0.0
        if self._last_decision_time is not None:
            reward = compute_reward(view, now, self._last_decision_time, self.tau, self.queue_cap)

        chosen = []
        while True:
            snapshot = replace(system, free_count=free_nodes)
            state = encode_state(view, snapshot, hp, now, self.tau, self.queue_cap)
            mask = feasible_mask(view, free_nodes, hp.window_K)
            self._complete_pending(reward, state, mask, done=False, now=now)
            reward = 0.0

            action = self.agent.act(state, mask, explore=self.training)
            self._pending = (state, action, mask)
            self.steps += 1
            if self.debug_log is not None:
                self.debug_log.rl("%s action=%d feasible=%s epsilon=%.4f",
                                  self.name, action, np.flatnonzero(mask).tolist(),
                                  self.agent.epsilon, sim_time=now)
            if action == self.agent.no_op:
                break
            job = view[action]
            chosen.append(job.job_id)
            free_nodes -= job.requested_nodes
            view = view.without((job.job_id,))

        self._last_decision_time = now
        return ScheduleDecision(tuple(chosen))

    def finish(self, now):
        if self._pending is not None:
            state = self._pending[0]
            no_op_only = feasible_mask((), 0, self.agent.hp.window_K)
            self._complete_pending(0.0, np.zeros_like(state), no_op_only, done=True, now=now)


def rl_policy_select(agent, view, cluster, now, training=False):
    """One-shot selection against a cluster, outside any engine run"""
    system = SystemSnapshot(free_count=cluster.free_count, total_nodes=cluster.total_nodes)
    return RLSchedulingPolicy(agent, training).select(view, cluster.free_count, now, system)
