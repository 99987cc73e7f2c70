# src/policies/registry.py
# Policy lookup by name

from src.agents.dqn_agent import DQNAgent
from src.agents.pg_agent import PGAgent
from src.agents.rl_policy import RLSchedulingPolicy
from src.policies.heuristics import EasyBackfillPolicy, FCFSPolicy, LJFPolicy, SJFPolicy

HEURISTIC_POLICIES = {
    FCFSPolicy.name: FCFSPolicy,
    SJFPolicy.name: SJFPolicy,
    LJFPolicy.name: LJFPolicy,
    EasyBackfillPolicy.name: EasyBackfillPolicy,
}

RL_AGENTS = {
    DQNAgent.algorithm: DQNAgent,
    PGAgent.algorithm: PGAgent,
}

POLICY_NAMES = (*HEURISTIC_POLICIES, *RL_AGENTS)


def is_rl_policy(name):
    return name in RL_AGENTS


def create_heuristic(name):
    try:
        return HEURISTIC_POLICIES[name]()
    except KeyError:
        raise ValueError(f"unknown heuristic policy {name!r}; choose from {POLICY_NAMES}") from None


def create_agent(name, hp, seed):
    return RL_AGENTS[name](hp, seed=seed)


def create_rl_policy(agent, training, debug_log=None):
    return RLSchedulingPolicy(agent, training, debug_log=debug_log)
