# src/workers/__init__.py
# Run orchestration package

from .orchestrator import SimulationWorker, orchestrate

__all__ = ['SimulationWorker', 'orchestrate']
