# src/agents/base.py
# Shared state of the RL scheduling agents

from abc import ABC, abstractmethod

import numpy as np

from src.agents.hyperparameters import decay_epsilon
from src.models.network import NeuralNet


class RLAgent(ABC):
    """Network, exploration state and seeded random streams of one agent"""

    algorithm = "base"

    def __init__(self, hp, seed=0):
        self.hp = hp.validate()
        self.seed = seed
        init_seq, act_seq, replay_seq = np.random.SeedSequence(seed).spawn(3)
        self.act_rng = np.random.default_rng(act_seq)
        self.replay_rng = np.random.default_rng(replay_seq)
        self.net = NeuralNet(hp.layer_sizes(), np.random.default_rng(init_seq))
        self.epsilon = hp.epsilon

    @property
    def no_op(self):
        return self.hp.window_K

    @abstractmethod
    def act(self, state, mask, explore=True):
        """Pick a feasible action index"""

    @abstractmethod
    def record(self, state, action, reward, next_state, done, mask, next_mask=None):
        """Learn from one completed step; returns a loss or None"""

    @abstractmethod
    def end_episode(self):
        """Close the episode and return its training loss"""

    def decay_epsilon(self):
        self.epsilon = decay_epsilon(self.hp, self.epsilon)
        return self.epsilon
