# src/agents/replay_buffer.py
# Experience replay for deep Q-learning

from collections import deque
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Transition:
    state: np.ndarray
    action: int
    reward: float
    next_state: np.ndarray
    done: bool
    next_mask: np.ndarray | None = None  # feasible actions in next_state; None means all


class ReplayBuffer:
    """Fixed-capacity ring; the oldest transition is evicted first"""

    def __init__(self, capacity, rng):
        self.capacity = capacity
        self._items = deque(maxlen=capacity)
        self._rng = rng

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def push(self, transition):
        self._items.append(transition)

    def sample(self, batch_size):
        """Uniform sample without replacement"""
        indices = self._rng.choice(len(self._items), size=batch_size, replace=False)
        return [self._items[i] for i in indices]
