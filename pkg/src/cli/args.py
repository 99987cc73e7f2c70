# src/cli/args.py
# Command-line argument parsing

import argparse

from config.settings import DEFAULT_CONFIG_DIR
from src.cli.config_loader import load_config, resolve_config
from src.policies.registry import POLICY_NAMES


def build_parser():
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Event-driven HPC batch scheduling simulator with RL scheduling agents",
        argument_default=argparse.SUPPRESS,
    )
    parser.add_argument("-j", "--job_trace", dest="trace_path", required=True,
                        help="job trace in Standard Workload Format")
    parser.add_argument("-n", "--node_struc", dest="node_path", required=True,
                        help="file describing the simulated system (MaxNodes / MaxProcs)")

    sim = parser.add_argument_group("simulation")
    sim.add_argument("--is_training", type=int, choices=(0, 1),
                     help="1 trains the RL agent, 0 runs inference from --checkpoint")
    sim.add_argument("--policy", choices=POLICY_NAMES)
    sim.add_argument("--debug_lvl", type=int, choices=range(1, 6), metavar="{1..5}")
    sim.add_argument("--seed", type=int)
    sim.add_argument("--output_dir")
    sim.add_argument("--config_dir", help=f"defaults to {DEFAULT_CONFIG_DIR}")
    sim.add_argument("--checkpoint", help="agent checkpoint to save (training) or load")
    sim.add_argument("--window", type=int, help="trace records buffered in memory")
    sim.add_argument("--bsld_threshold", type=int, help="bounded slowdown threshold (s)")

    hp = parser.add_argument_group("hyperparameters")
    hp.add_argument("--learning_rate", type=float)
    hp.add_argument("--batch_size", type=int)
    hp.add_argument("--epsilon", type=float)
    hp.add_argument("--epsilon_decay", type=float)
    hp.add_argument("--epsilon_min", type=float)
    hp.add_argument("--gamma", type=float)
    hp.add_argument("--window_K", type=int)
    hp.add_argument("--hidden_sizes", type=int, nargs="+")
    hp.add_argument("--replay_capacity", type=int)
    hp.add_argument("--target_sync_every", type=int)
    hp.add_argument("--reward_scale", type=float, help="DQN reward multiplier")
    hp.add_argument("--episodes", type=int)
    return parser


def parse_args(argv=None):
    """Parse argv and merge it with the Config folder; usage errors exit with code 2"""
    cli = vars(build_parser().parse_args(argv))
    file_values, warnings = load_config(cli.get("config_dir", DEFAULT_CONFIG_DIR))
    return resolve_config(cli, file_values, warnings)
