# src/agents/dqn_agent.py
# Deep Q-learning agent with experience replay and a target network

import numpy as np

from src.agents.base import RLAgent
from src.agents.replay_buffer import ReplayBuffer, Transition
from src.errors import DivergenceError


class DQNAgent(RLAgent):
    """Epsilon-greedy Q-learning over masked scheduling actions"""

    algorithm = "dqn"

    def __init__(self, hp, seed=0):
        super().__init__(hp, seed)
        self.target_net = self.net.clone()
        self.replay = ReplayBuffer(hp.replay_capacity, self.replay_rng)
        self.train_steps = 0
        self._episode_losses = []

    def act(self, state, mask, explore=True):
        return self.dqn_act(state, mask, self.epsilon if explore else 0.0)

    def dqn_act(self, state, mask, epsilon):
        feasible = np.flatnonzero(mask)
        if epsilon > 0 and self.act_rng.random() < epsilon:
            return int(self.act_rng.choice(feasible))
        q_values = self.net.forward(state)
        # argmax returns the lowest index on ties
        return int(np.argmax(np.where(mask, q_values, -np.inf)))

    def train_step(self, batch):
        """One SGD step on the mean squared TD error of `batch`"""
        states = np.stack([t.state for t in batch])
        actions = np.array([t.action for t in batch])
        rewards = np.array([t.reward for t in batch], dtype=np.float64)
        next_states = np.stack([t.next_state for t in batch])
        dones = np.array([t.done for t in batch], dtype=bool)

        next_masks = np.stack([np.ones(self.hp.action_count, dtype=bool) if t.next_mask is None
                               else t.next_mask for t in batch])
        # bootstrap only from actions the next state allows; the no-op always is
        next_q = np.where(next_masks, self.target_net.forward(next_states), -np.inf).max(axis=1)
        targets = rewards + np.where(dones, 0.0, self.hp.gamma * next_q)

        q_values = self.net.forward(states)
        rows = np.arange(len(batch))
        errors = q_values[rows, actions] - targets
        loss = float(np.mean(errors ** 2))
        if not np.isfinite(loss):
            raise DivergenceError(f"DQN loss became {loss} with {self.hp}")

        output_gradient = np.zeros_like(q_values)
        output_gradient[rows, actions] = 2.0 * errors / len(batch)
        self.net.apply_gradients(self.net.backward(output_gradient), self.hp.learning_rate)

        self.train_steps += 1
        if self.train_steps % self.hp.target_sync_every == 0:
            self.target_net.copy_from(self.net)
        return loss

    def record(self, state, action, reward, next_state, done, mask, next_mask=None):
        reward = self.hp.reward_scale * reward
        self.replay.push(Transition(state, action, reward, next_state, done, next_mask))
        if len(self.replay) < self.hp.batch_size:
            return None
        loss = self.train_step(self.replay.sample(self.hp.batch_size))
        self._episode_losses.append(loss)
        return loss

    def end_episode(self):
        losses, self._episode_losses = self._episode_losses, []
        return float(np.mean(losses)) if losses else 0.0

    def sync_target(self):
        self.target_net.copy_from(self.net)
