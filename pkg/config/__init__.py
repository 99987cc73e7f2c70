# config/__init__.py
# Configuration package

from .settings import (
    DEFAULT_CONFIG_DIR,
    SIM_CONF_NAME,
    RL_CONF_NAME,
    DEFAULT_OUTPUT_DIR,
    RESULTS_DIR_NAME,
    DEBUG_DIR_NAME,
    CHECKPOINT_DIR_NAME,
    DEFAULT_POLICY,
    DEFAULT_DEBUG_LVL,
    DEFAULT_SEED,
    MAX_SEED,
    DEFAULT_IS_TRAINING,
    DEFAULT_TRACE_WINDOW,
    SWF_FIELD_COUNT,
    BSLD_THRESHOLD_SECONDS,
    WAIT_NORMALIZER_SECONDS,
    QUEUE_LENGTH_CAP,
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
    EPISODES,
    CHECKPOINT_VERSION,
    CHECKPOINT_MAGIC
)

__all__ = [
    'DEFAULT_CONFIG_DIR',
    'SIM_CONF_NAME',
    'RL_CONF_NAME',
    'DEFAULT_OUTPUT_DIR',
    'RESULTS_DIR_NAME',
    'DEBUG_DIR_NAME',
    'CHECKPOINT_DIR_NAME',
    'DEFAULT_POLICY',
    'DEFAULT_DEBUG_LVL',
    'DEFAULT_SEED',
    'MAX_SEED',
    'DEFAULT_IS_TRAINING',
    'DEFAULT_TRACE_WINDOW',
    'SWF_FIELD_COUNT',
    'BSLD_THRESHOLD_SECONDS',
    'WAIT_NORMALIZER_SECONDS',
    'QUEUE_LENGTH_CAP',
    'LEARNING_RATE',
    'BATCH_SIZE',
    'EPSILON',
    'EPSILON_DECAY',
    'EPSILON_MIN',
    'GAMMA',
    'WINDOW_K',
    'HIDDEN_SIZES',
    'REPLAY_CAPACITY',
    'TARGET_SYNC_EVERY',
    'REWARD_SCALE',
    'EPISODES',
    'CHECKPOINT_VERSION',
    'CHECKPOINT_MAGIC'
]
