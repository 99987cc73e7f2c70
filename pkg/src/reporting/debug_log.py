# src/reporting/debug_log.py
# Five-level debug log written to the Debug folder

import logging
from enum import IntEnum
from itertools import count
from pathlib import Path

from src.errors import SimulationIOError


class DebugLevel(IntEnum):
    SUMMARY = 1     # errors + run summary
    WARNING = 2
    DECISION = 3    # scheduler decisions
    EVENT = 4       # event lifecycle
    RL = 5          # losses, epsilon, chosen actions


def _logging_level(level):
    # Level 1 maps to 50 ... level 5 maps to 10
    return 60 - 10 * int(level)


_LEVEL_TAGS = {_logging_level(lvl): f"L{int(lvl)}:{lvl.name}" for lvl in DebugLevel}

_instance_ids = count()


class _StrictFileHandler(logging.FileHandler):

    def handleError(self, record):
        raise SimulationIOError(f"debug log write to {self.baseFilename} failed")


class _SimTimeFormatter(logging.Formatter):

    def format(self, record):
        sim_time = getattr(record, "sim_time", 0)
        tag = _LEVEL_TAGS.get(record.levelno, record.levelname)
        return f"[{sim_time:>10}] {tag:<12} {record.getMessage()}"


class DebugLog:
    """Leveled run log; a message at level L is written iff L <= debug_lvl"""

    def __init__(self, path=None, debug_lvl=DebugLevel.SUMMARY):
        self.debug_lvl = DebugLevel(debug_lvl)
        self.path = Path(path) if path is not None else None

        self._logger = logging.getLogger(f"batchsim.debug.{next(_instance_ids)}")
        self._logger.propagate = False
        self._logger.setLevel(_logging_level(self.debug_lvl))

        if self.path is None:
            self._handler = logging.NullHandler()
        else:
            try:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                self._handler = _StrictFileHandler(self.path, mode="w", encoding="utf-8")
            except OSError as e:
                raise SimulationIOError(f"cannot open debug log {self.path}: {e}") from e
            self._handler.setFormatter(_SimTimeFormatter())
        self._logger.addHandler(self._handler)

    def enabled(self, level):
        return int(level) <= self.debug_lvl

    def log(self, level, message, *args, sim_time=0):
        if self.enabled(level):
            self._logger.log(_logging_level(level), message, *args,
                             extra={"sim_time": sim_time})

    def summary(self, message, *args, sim_time=0):
        self.log(DebugLevel.SUMMARY, message, *args, sim_time=sim_time)

    def warning(self, message, *args, sim_time=0):
        self.log(DebugLevel.WARNING, message, *args, sim_time=sim_time)

    def decision(self, message, *args, sim_time=0):
        self.log(DebugLevel.DECISION, message, *args, sim_time=sim_time)

    def event(self, message, *args, sim_time=0):
        self.log(DebugLevel.EVENT, message, *args, sim_time=sim_time)

    def rl(self, message, *args, sim_time=0):
        self.log(DebugLevel.RL, message, *args, sim_time=sim_time)

    def close(self):
        self._handler.close()
        self._logger.removeHandler(self._handler)
