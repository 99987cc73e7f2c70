# src/simulation/__init__.py
# Simulation engine package

from .engine import (
    Event,
    EventKind,
    Mode,
    EngineConfig,
    SimulationEngine,
    SimulationSummary
)

__all__ = [
    'Event',
    'EventKind',
    'Mode',
    'EngineConfig',
    'SimulationEngine',
    'SimulationSummary'
]
