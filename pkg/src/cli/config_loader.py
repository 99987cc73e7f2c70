# src/cli/config_loader.py
# Config folder loading and field-wise precedence resolution

import configparser
import logging
from dataclasses import dataclass, field
from pathlib import Path

from config.settings import (
    DEFAULT_CONFIG_DIR,
    SIM_CONF_NAME,
    RL_CONF_NAME,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_POLICY,
    DEFAULT_DEBUG_LVL,
    DEFAULT_SEED,
    MAX_SEED,
    DEFAULT_IS_TRAINING,
    DEFAULT_TRACE_WINDOW,
    BSLD_THRESHOLD_SECONDS
)
from src.agents.hyperparameters import FIELD_NAMES, Hyperparameters, coerce_field
from src.errors import ConfigurationError, ValidationError
from src.policies.registry import POLICY_NAMES, is_rl_policy
from src.simulation.engine import Mode

logger = logging.getLogger(__name__)

SOURCE_CLI = "cli"
SOURCE_FILE = "file"
SOURCE_DEFAULT = "default"

# sim.conf keys -> (built-in default, converter)
SIM_FIELDS = {
    "policy": (DEFAULT_POLICY, str),
    "is_training": (DEFAULT_IS_TRAINING, int),
    "debug_lvl": (DEFAULT_DEBUG_LVL, int),
    "seed": (DEFAULT_SEED, int),
    "output_dir": (DEFAULT_OUTPUT_DIR, Path),
    "window": (DEFAULT_TRACE_WINDOW, int),
    "bsld_threshold": (BSLD_THRESHOLD_SECONDS, int),
    "checkpoint": (None, Path),
}


@dataclass(frozen=True)
class ResolvedConfig:
    trace_path: Path
    node_path: Path
    policy: str
    mode: Mode
    is_training: int
    debug_lvl: int
    seed: int
    output_dir: Path
    window: int
    bsld_threshold: int
    checkpoint: Path | None
    config_dir: Path
    hyperparameters: Hyperparameters
    sources: dict = field(default_factory=dict)
    warnings: tuple = ()

    @property
    def run_name(self):
        return f"{Path(self.trace_path).stem}_{self.policy}_s{self.seed}"

    def config_items(self):
        """(key, value, source) triples echoed into the summary file"""
        items = [
            ("trace_path", self.trace_path, SOURCE_CLI),
            ("node_path", self.node_path, SOURCE_CLI),
            ("mode", self.mode.value, self.sources.get("is_training", SOURCE_DEFAULT)),
        ]
        for name in SIM_FIELDS:
            items.append((name, getattr(self, name), self.sources[name]))
        for name, text in self.hyperparameters.items():
            items.append((name, text, self.sources[name]))
        return items


def _read_conf(path, allowed, warnings):
    if not path.exists():
        return {}
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",), interpolation=None)
    parser.optionxform = str  # keep window_K case
    try:
        text = path.read_text(encoding="utf-8")
        parser.read_string("[config]\n" + text, source=str(path))
    except (OSError, configparser.Error) as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}") from e

    values = {}
    for key, value in parser.items("config"):
        if key not in allowed:
            message = f"{path.name}: unknown key '{key}' ignored"
            logger.warning(message)
            warnings.append(message)
            continue
        values[key] = value
    return values


def load_config(config_dir=DEFAULT_CONFIG_DIR):
    """Flat key = value settings from sim.conf and rl.conf; missing files are empty"""
    config_dir = Path(config_dir)
    warnings = []
    values = {}
    if config_dir.is_dir():
        values.update(_read_conf(config_dir / SIM_CONF_NAME, SIM_FIELDS, warnings))
        values.update(_read_conf(config_dir / RL_CONF_NAME, FIELD_NAMES, warnings))
    return values, warnings


def _flag(name, source):
    return f"--{name}" if source == SOURCE_CLI else name


def _convert(name, raw, converter, source):
    if not isinstance(raw, str):
        return raw
    try:
        return converter(raw)
    except ValueError as e:
        raise ValidationError(_flag(name, source), f"cannot parse {raw!r}") from e


def resolve_config(cli, file_values, file_warnings=()):
    """Apply CLI > config file > default independently for every field"""
    sources = {}
    warnings = list(file_warnings)

    def pick(name, default, converter):
        if name in cli and cli[name] is not None:
            sources[name] = SOURCE_CLI
            return _convert(name, cli[name], converter, SOURCE_CLI)
        if name in file_values:
            sources[name] = SOURCE_FILE
            return _convert(name, file_values[name], converter, SOURCE_FILE)
        sources[name] = SOURCE_DEFAULT
        return default

    sim = {name: pick(name, default, converter) for name, (default, converter) in SIM_FIELDS.items()}

    hp_values = {}
    defaults = Hyperparameters()
    for name in FIELD_NAMES:
        value = pick(name, getattr(defaults, name), lambda raw, n=name: coerce_field(n, raw))
        hp_values[name] = tuple(value) if name == "hidden_sizes" else value
    hyperparameters = Hyperparameters(**hp_values)
    try:
        hyperparameters.validate()
    except ValidationError as e:
        raise ValidationError(_flag(e.field, sources[e.field]), str(e).split(": ", 1)[1]) from e

    policy = sim["policy"]
    if policy not in POLICY_NAMES:
        raise ValidationError(_flag("policy", sources["policy"]),
                              f"unknown policy {policy!r}; choose from {', '.join(POLICY_NAMES)}")
    if not 0 <= sim["seed"] <= MAX_SEED:
        raise ValidationError(_flag("seed", sources["seed"]), f"must be in 0..{MAX_SEED}")
    if sim["is_training"] not in (0, 1):
        raise ValidationError(_flag("is_training", sources["is_training"]), "must be 0 or 1")
    if not 1 <= sim["debug_lvl"] <= 5:
        raise ValidationError(_flag("debug_lvl", sources["debug_lvl"]), "must be in 1..5")
    if sim["window"] < 1:
        raise ValidationError(_flag("window", sources["window"]), "must be >= 1")
    if sim["bsld_threshold"] < 1:
        raise ValidationError(_flag("bsld_threshold", sources["bsld_threshold"]), "must be >= 1")

    if is_rl_policy(policy):
        mode = Mode.RL_TRAIN if sim["is_training"] == 1 else Mode.RL_INFER
        if mode is Mode.RL_INFER and sim["checkpoint"] is None:
            raise ValidationError("--checkpoint", f"inference with {policy} needs a trained checkpoint")
    else:
        mode = Mode.HEURISTIC
        if sources["is_training"] != SOURCE_DEFAULT:
            message = f"is_training ignored for heuristic policy {policy}"
            logger.warning(message)
            warnings.append(message)

    return ResolvedConfig(
        trace_path=Path(cli["trace_path"]),
        node_path=Path(cli["node_path"]),
        mode=mode,
        config_dir=Path(cli.get("config_dir") or DEFAULT_CONFIG_DIR),
        hyperparameters=hyperparameters,
        sources=sources,
        warnings=tuple(warnings),
        **sim,
    )
