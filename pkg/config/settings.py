# config/settings.py
# Configuration settings for the batch scheduling simulator

from pathlib import Path

# ============================================================================
# Directory Layout
# ============================================================================

DEFAULT_CONFIG_DIR = Path("Config")
SIM_CONF_NAME = "sim.conf"
RL_CONF_NAME = "rl.conf"

DEFAULT_OUTPUT_DIR = Path(".")
RESULTS_DIR_NAME = "Results"
DEBUG_DIR_NAME = "Debug"
CHECKPOINT_DIR_NAME = "Checkpoints"

# ============================================================================
# Simulation Defaults
# ============================================================================

DEFAULT_POLICY = "fcfs"
DEFAULT_DEBUG_LVL = 1
DEFAULT_SEED = 0
MAX_SEED = 2 ** 64 - 1  # seeds are unsigned 64-bit
DEFAULT_IS_TRAINING = 0

# Parsed-but-unconsumed trace records held in memory
DEFAULT_TRACE_WINDOW = 256

# SWF rows need at least this many whitespace separated fields
SWF_FIELD_COUNT = 18

# ============================================================================
# Metric Parameters
# ============================================================================

BSLD_THRESHOLD_SECONDS = 10  # bounded slowdown denominator floor

# ============================================================================
# RL State / Reward Normalisation (MUST MATCH training)
# ============================================================================

WAIT_NORMALIZER_SECONDS = 3600  # tau
QUEUE_LENGTH_CAP = 100          # Q

# ============================================================================
# Hyperparameter Defaults
# ============================================================================

LEARNING_RATE = 0.001
BATCH_SIZE = 32
EPSILON = 1.0
EPSILON_DECAY = 0.995   # multiplicative, once per episode
EPSILON_MIN = 0.05
GAMMA = 0.99            # discount factor
WINDOW_K = 5            # queued jobs visible to the agent
HIDDEN_SIZES = (64, 64)
REPLAY_CAPACITY = 10000
TARGET_SYNC_EVERY = 200
REWARD_SCALE = 1000.0    # DQN: multiplies rewards before they enter the replay buffer
EPISODES = 100

# ============================================================================
# Checkpoint Format
# ============================================================================

CHECKPOINT_VERSION = 2
CHECKPOINT_MAGIC = "# batchsim-agent-checkpoint"
