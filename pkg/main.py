#!/usr/bin/env python3
# main.py
# Batch Scheduling Simulator - Main Entry Point
#
#   python main.py -j job_log.swf -n node_structure.swf --policy dqn --is_training 1

import sys

from src.cli.app import main


if __name__ == "__main__":
    sys.exit(main())
