# src/agents/hyperparameters.py
# Tunable training knobs for the RL scheduling agents

import re
from dataclasses import dataclass, fields, replace

from config.settings import (
    LEARNING_RATE,
    BATCH_SIZE,
    EPSILON,
    EPSILON_DECAY,
    EPSILON_MIN,
    GAMMA,
    WINDOW_K,
    HIDDEN_SIZES,
    REPLAY_CAPACITY,
    TARGET_SYNC_EVERY,
    REWARD_SCALE,
    EPISODES
)
from src.errors import ValidationError


@dataclass(frozen=True)
class Hyperparameters:
    learning_rate: float = LEARNING_RATE
    batch_size: int = BATCH_SIZE
    epsilon: float = EPSILON
    epsilon_decay: float = EPSILON_DECAY
    epsilon_min: float = EPSILON_MIN
    gamma: float = GAMMA
    window_K: int = WINDOW_K
    hidden_sizes: tuple = HIDDEN_SIZES
    replay_capacity: int = REPLAY_CAPACITY
    target_sync_every: int = TARGET_SYNC_EVERY
    reward_scale: float = REWARD_SCALE
    episodes: int = EPISODES

    @property
    def state_size(self):
        return 3 * self.window_K + 2

    @property
    def action_count(self):
        # one action per visible job plus the no-op
        return self.window_K + 1

    def layer_sizes(self):
        return (self.state_size, *self.hidden_sizes, self.action_count)

    def validate(self):
        checks = [
            ("learning_rate", self.learning_rate > 0, "must be > 0"),
            ("batch_size", self.batch_size >= 1, "must be >= 1"),
            ("epsilon", 0.0 <= self.epsilon <= 1.0, "must be in [0, 1]"),
            ("epsilon_decay", 0.0 < self.epsilon_decay <= 1.0, "must be in (0, 1]"),
            ("epsilon_min", 0.0 <= self.epsilon_min <= 1.0, "must be in [0, 1]"),
            ("gamma", 0.0 <= self.gamma < 1.0, "must be in [0, 1)"),
            ("window_K", self.window_K >= 1, "must be >= 1"),
            ("hidden_sizes", all(n >= 1 for n in self.hidden_sizes), "sizes must be >= 1"),
            ("replay_capacity", self.replay_capacity >= self.batch_size,
             "must be >= batch_size"),
            ("target_sync_every", self.target_sync_every >= 1, "must be >= 1"),
            ("reward_scale", self.reward_scale > 0, "must be > 0"),
            ("episodes", self.episodes >= 1, "must be >= 1"),
        ]
        for name, ok, message in checks:
            if not ok:
                raise ValidationError(name, f"{message}, got {getattr(self, name)!r}")
        return self

    def with_overrides(self, **overrides):
        return replace(self, **overrides)

    def items(self):
        """(name, text) pairs in declaration order"""
        return [(f.name, format_field(getattr(self, f.name))) for f in fields(self)]


FIELD_NAMES = tuple(f.name for f in fields(Hyperparameters))
_FIELD_TYPES = {
    "learning_rate": float,
    "batch_size": int,
    "epsilon": float,
    "epsilon_decay": float,
    "epsilon_min": float,
    "gamma": float,
    "window_K": int,
    "hidden_sizes": tuple,
    "replay_capacity": int,
    "target_sync_every": int,
    "reward_scale": float,
    "episodes": int,
}


def format_field(value):
    if isinstance(value, (tuple, list)):
        return " ".join(str(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def coerce_field(name, raw):
    """Convert a config-file or checkpoint string into the field's type"""
    kind = _FIELD_TYPES.get(name)
    if kind is None:
        raise ValidationError(name, "unknown hyperparameter")
    if not isinstance(raw, str):
        return tuple(raw) if kind is tuple else kind(raw)
    try:
        if kind is tuple:
            return tuple(int(tok) for tok in re.split(r"[\s,]+", raw.strip()) if tok)
        if kind is int:
            return int(raw)
        return float(raw)
    except ValueError as e:
        raise ValidationError(name, f"cannot parse {raw!r}") from e


def decay_epsilon(hp, epsilon):
    """One per-episode multiplicative decay step, floored at epsilon_min"""
    return max(hp.epsilon_min, epsilon * hp.epsilon_decay)
