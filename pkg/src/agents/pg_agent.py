# src/agents/pg_agent.py
# REINFORCE policy-gradient agent with a mean-return baseline

import numpy as np
from scipy.special import log_softmax

from src.agents.base import RLAgent
from src.errors import DivergenceError


def masked_log_probabilities(logits, mask):
    return log_softmax(np.where(mask, logits, -np.inf), axis=-1)


def action_probabilities(logits, mask):
    """Softmax restricted to feasible actions (infeasible ones get 0)"""
    return np.exp(masked_log_probabilities(logits, mask))


def returns_to_go(rewards, gamma):
    returns = np.zeros(len(rewards))
    running = 0.0
    for t in reversed(range(len(rewards))):
        running = rewards[t] + gamma * running
        returns[t] = running
    return returns


class PGAgent(RLAgent):
    """Samples from a masked softmax policy and updates once per episode"""

    algorithm = "pg"

    def __init__(self, hp, seed=0):
        super().__init__(hp, seed)
        self.trajectory = []

    def act(self, state, mask, explore=True):
        logits = self.net.forward(state)
        if not explore:
            return int(np.argmax(np.where(mask, logits, -np.inf)))
        probs = action_probabilities(logits, mask)
        return int(self.act_rng.choice(len(probs), p=probs))

    def record(self, state, action, reward, next_state, done, mask, next_mask=None):
        self.trajectory.append((state, action, reward, mask))
        return None

    def pg_update(self, trajectory):
        """One gradient step on -sum log pi(a|s) * (G - mean G)"""
        states = np.stack([s for s, _, _, _ in trajectory])
        actions = np.array([a for _, a, _, _ in trajectory])
        rewards = np.array([r for _, _, r, _ in trajectory], dtype=np.float64)
        masks = np.stack([m for _, _, _, m in trajectory])

        returns = returns_to_go(rewards, self.hp.gamma)
        advantages = returns - returns.mean()

        logits = self.net.forward(states)
        log_probs = masked_log_probabilities(logits, masks)
        rows = np.arange(len(trajectory))
        loss = float(-np.sum(log_probs[rows, actions] * advantages))
        if not np.isfinite(loss):
            raise DivergenceError(f"policy-gradient loss became {loss} with {self.hp}")

        # d(-A log pi_a)/d logits = A * (pi - onehot(a))
        output_gradient = np.exp(log_probs) * advantages[:, np.newaxis]
        output_gradient[rows, actions] -= advantages
        self.net.apply_gradients(self.net.backward(output_gradient), self.hp.learning_rate)
        return loss

    def end_episode(self):
        trajectory, self.trajectory = self.trajectory, []
        if not trajectory:
            return 0.0
        return self.pg_update(trajectory)
