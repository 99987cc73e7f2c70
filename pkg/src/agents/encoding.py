# src/agents/encoding.py
# Observation encoding, action masks and reward for the RL agents

import numpy as np

from config.settings import QUEUE_LENGTH_CAP, WAIT_NORMALIZER_SECONDS


def encode_state(view, cluster, hp, now,
                 tau=WAIT_NORMALIZER_SECONDS, queue_cap=QUEUE_LENGTH_CAP):
    """Top-K queued jobs (wait, walltime, size) followed by (free share, queue fill)"""
    k = hp.window_K
    total = cluster.total_nodes
    state = np.zeros(3 * k + 2)
    for i, job in enumerate(view[:k]):
        state[3 * i] = (now - job.submit_time) / tau
        state[3 * i + 1] = job.requested_time / tau
        state[3 * i + 2] = job.requested_nodes / total
    state[3 * k] = cluster.free_count / total
    state[3 * k + 1] = min(len(view), queue_cap) / queue_cap
    return state


def feasible_mask(view, free_nodes, window_k):
    """Boolean mask over K job slots plus the always-feasible no-op"""
    mask = np.zeros(window_k + 1, dtype=bool)
    for i, job in enumerate(view[:window_k]):
        mask[i] = job.requested_nodes <= free_nodes
    mask[window_k] = True
    return mask


def compute_reward(view, now, last_decision_time,
                   tau=WAIT_NORMALIZER_SECONDS, queue_cap=QUEUE_LENGTH_CAP):
    """Negative queue wait accrued since the last decision, normalised"""
    return -(len(view) * (now - last_decision_time)) / (tau * queue_cap)
