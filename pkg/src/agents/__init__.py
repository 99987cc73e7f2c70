# src/agents/__init__.py
# Reinforcement-learning scheduling agents

from .hyperparameters import Hyperparameters, decay_epsilon
from .encoding import encode_state, feasible_mask, compute_reward
from .replay_buffer import ReplayBuffer, Transition
from .dqn_agent import DQNAgent
from .pg_agent import PGAgent, action_probabilities, returns_to_go
from .checkpoint import save_checkpoint, load_checkpoint
from .rl_policy import RLSchedulingPolicy, rl_policy_select

__all__ = [
    'Hyperparameters',
    'decay_epsilon',
    'encode_state',
    'feasible_mask',
    'compute_reward',
    'ReplayBuffer',
    'Transition',
    'DQNAgent',
    'PGAgent',
    'action_probabilities',
    'returns_to_go',
    'save_checkpoint',
    'load_checkpoint',
    'RLSchedulingPolicy',
    'rl_policy_select'
]
