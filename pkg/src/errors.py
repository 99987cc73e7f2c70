# src/errors.py
# Exception hierarchy shared by every simulator component


class SimulationError(Exception):
    """Base class for fatal simulator errors"""

    exit_code = 1


class ConfigurationError(SimulationError):
    """Unreadable input file or invalid system description"""


class TraceError(SimulationError):
    """Job trace violates ordering or uniqueness"""


class JobError(SimulationError):
    """A job that can never run on the simulated system"""

    def __init__(self, job_id, message):
        super().__init__(message)
        self.job_id = job_id


class InternalConsistencyError(SimulationError):
    """Simulator state contradicts itself"""


class PolicyContractError(SimulationError):
    """A scheduling policy returned an infeasible decision"""


class DivergenceError(SimulationError):
    """Training produced a non-finite loss"""


class CheckpointError(SimulationError):
    """Checkpoint file missing, malformed or of another version"""


class SimulationIOError(SimulationError):
    """Writing results or logs failed"""


class ValidationError(SimulationError):
    """Command-line or configuration value out of range"""

    exit_code = 2

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
