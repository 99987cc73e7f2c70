# src/agents/checkpoint.py
# Versioned text checkpoints of trained agents

import logging
from pathlib import Path

import numpy as np

from config.settings import CHECKPOINT_MAGIC, CHECKPOINT_VERSION, MAX_SEED
from src.agents.dqn_agent import DQNAgent
from src.agents.hyperparameters import FIELD_NAMES, Hyperparameters, coerce_field
from src.agents.pg_agent import PGAgent
from src.errors import CheckpointError, SimulationIOError, ValidationError

logger = logging.getLogger(__name__)

AGENT_CLASSES = {
    DQNAgent.algorithm: DQNAgent,
    PGAgent.algorithm: PGAgent,
}


def save_checkpoint(agent, path):
    """Header (version, layer dims, hyperparameters) then one parameter per line"""
    path = Path(path)
    flat = agent.net.get_flat_parameters()
    lines = [
        CHECKPOINT_MAGIC,
        f"version = {CHECKPOINT_VERSION}",
        f"algorithm = {agent.algorithm}",
        f"seed = {agent.seed}",
        f"layer_dims = {' '.join(str(n) for n in agent.net.layer_sizes)}",
        f"epsilon = {agent.epsilon!r}",
    ]
    lines += [f"hp.{name} = {text}" for name, text in agent.hp.items()]
    lines.append(f"parameters = {flat.size}")
    # repr() is the shortest text that round-trips a float exactly
    lines += [repr(float(v)) for v in flat]

    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fp:
            fp.write("\n".join(lines) + "\n")
    except OSError as e:
        raise SimulationIOError(f"cannot write checkpoint {path}: {e}") from e
    logger.info("Checkpoint saved to %s", path)


def _header_value(header, key, path):
    if key not in header:
        raise CheckpointError(f"{path}: missing '{key}' in checkpoint header")
    return header[key]


def load_checkpoint(path):
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as fp:
            lines = fp.read().splitlines()
    except OSError as e:
        raise CheckpointError(f"cannot read checkpoint {path}: {e}") from e

    if not lines or lines[0].strip() != CHECKPOINT_MAGIC:
        raise CheckpointError(f"{path}: not an agent checkpoint")

    header = {}
    body_start = None
    for i, line in enumerate(lines[1:], start=1):
        key, sep, value = line.partition("=")
        if not sep:
            raise CheckpointError(f"{path}:{i + 1}: malformed header line {line!r}")
        header[key.strip()] = value.strip()
        if key.strip() == "parameters":
            body_start = i + 1
            break
    if body_start is None:
        raise CheckpointError(f"{path}: truncated before parameter block")

    try:
        version = int(_header_value(header, "version", path))
    except ValueError as e:
        raise CheckpointError(f"{path}: unreadable version") from e
    if version != CHECKPOINT_VERSION:
        raise CheckpointError(
            f"{path}: checkpoint version {version}, this build reads version {CHECKPOINT_VERSION}")

    algorithm = _header_value(header, "algorithm", path)
    if algorithm not in AGENT_CLASSES:
        raise CheckpointError(f"{path}: unknown algorithm {algorithm!r}")

    try:
        hp_values = {name: coerce_field(name, _header_value(header, f"hp.{name}", path))
                     for name in FIELD_NAMES}
        hp = Hyperparameters(**hp_values).validate()
        layer_dims = tuple(int(n) for n in _header_value(header, "layer_dims", path).split())
        declared = int(_header_value(header, "parameters", path))
        epsilon = float(_header_value(header, "epsilon", path))
        seed = int(header.get("seed", "0"))
        if not 0 <= seed <= MAX_SEED:
            raise ValueError(f"seed {seed} out of range")
    except (ValueError, ValidationError) as e:
        raise CheckpointError(f"{path}: bad header value: {e}") from e

    if layer_dims != hp.layer_sizes():
        raise CheckpointError(
            f"{path}: layer dims {layer_dims} disagree with hyperparameters {hp.layer_sizes()}")
    expected = sum(a * b + b for a, b in zip(layer_dims[:-1], layer_dims[1:]))
    if declared != expected:
        raise CheckpointError(
            f"{path}: header declares {declared} parameters, layer dims need {expected}")

    body = [line for line in lines[body_start:] if line.strip()]
    if len(body) != expected:
        raise CheckpointError(
            f"{path}: body holds {len(body)} parameters, layer dims need {expected}")
    try:
        flat = np.array([float(v) for v in body])
    except ValueError as e:
        raise CheckpointError(f"{path}: non-numeric parameter: {e}") from e

    agent = AGENT_CLASSES[algorithm](hp, seed=seed)
    agent.net.set_flat_parameters(flat)
    if isinstance(agent, DQNAgent):
        agent.sync_target()
    agent.epsilon = epsilon
    return agent
