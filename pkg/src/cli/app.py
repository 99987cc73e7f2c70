# src/cli/app.py
# Process entry point and exit-code contract

import sys

from src.cli.args import parse_args
from src.errors import SimulationError
from src.workers.orchestrator import orchestrate


def main(argv=None):
    """Run one simulation or training session; returns the process exit code"""
    try:
        cfg = parse_args(argv)
        return orchestrate(cfg)
    except SimulationError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
