# src/workers/orchestrator.py
# Run orchestration: heuristic simulation, RL training over episodes, RL inference

from pathlib import Path

from config.settings import CHECKPOINT_DIR_NAME, DEBUG_DIR_NAME, RESULTS_DIR_NAME
from src.agents.checkpoint import load_checkpoint, save_checkpoint
from src.errors import ValidationError
from src.policies.registry import create_agent, create_heuristic, create_rl_policy
from src.reporting.debug_log import DebugLog
from src.reporting.results import (
    ResultsWriter,
    SystemInfoWriter,
    TrainingLogWriter,
    write_summary
)
from src.simulation.engine import EngineConfig, Mode, SimulationEngine
from src.system.cluster import ClusterState
from src.trace.stream import open_trace_stream
from src.trace.swf import parse_node_structure


class SimulationWorker:
    """Drives one configured run from input files to Results/Debug output"""

    def __init__(self, cfg):
        self.cfg = cfg
        self.run_name = cfg.run_name
        output_dir = Path(cfg.output_dir)
        self.results_dir = output_dir / RESULTS_DIR_NAME
        self.debug_dir = output_dir / DEBUG_DIR_NAME

        self.results_path = self.results_dir / f"{self.run_name}.rst"
        self.summary_path = self.results_dir / f"{self.run_name}.summary.txt"
        self.system_path = self.results_dir / f"{self.run_name}.sys"
        self.training_path = self.results_dir / f"{self.run_name}.train"
        self.debug_path = self.debug_dir / f"{self.run_name}.log"
        self.checkpoint_path = Path(cfg.checkpoint) if cfg.checkpoint else (
            output_dir / CHECKPOINT_DIR_NAME / f"{self.run_name}.ckpt")

        self.cluster_config = None
        self.debug_log = None
        self.summary = None

    def run(self):
        print("=" * 70)
        print(f"BATCH SCHEDULING SIMULATION - {self.run_name}")
        print("=" * 70)
        print(f"Trace: {self.cfg.trace_path}")
        print(f"Policy: {self.cfg.policy} ({self.cfg.mode.value})")
        print(f"Seed: {self.cfg.seed}    Debug level: {self.cfg.debug_lvl}")
        print("=" * 70)

        self.cluster_config = parse_node_structure(self.cfg.node_path)
        self.debug_log = DebugLog(self.debug_path, self.cfg.debug_lvl)
        try:
            for message in self.cfg.warnings:
                self.debug_log.warning(message)
            if self.cfg.mode is Mode.HEURISTIC:
                self.summary = self._simulate(create_heuristic(self.cfg.policy), write_results=True)
            elif self.cfg.mode is Mode.RL_TRAIN:
                self.summary = self._train()
            else:
                self.summary = self._infer()
            write_summary(self.summary_path, self.summary.metrics, self.cfg.config_items())
        finally:
            self.debug_log.close()

        self._print_statistics()
        return 0

    def _simulate(self, policy, write_results):
        cluster = ClusterState.from_config(self.cluster_config)
        engine_cfg = EngineConfig(mode=self.cfg.mode, seed=self.cfg.seed, policy=self.cfg.policy,
                                  bsld_threshold=self.cfg.bsld_threshold)
        results = ResultsWriter(self.results_path) if write_results else None
        system_info = SystemInfoWriter(self.system_path) if write_results else None
        try:
            with open_trace_stream(self.cfg.trace_path, self.cfg.window) as stream:
                engine = SimulationEngine(cluster, policy, engine_cfg, results=results,
                                          system_info=system_info, debug_log=self.debug_log)
                return engine.run(stream)
        finally:
            for sink in (results, system_info):
                if sink is not None:
                    sink.close()

    def _train(self):
        hp = self.cfg.hyperparameters
        agent = create_agent(self.cfg.policy, hp, self.cfg.seed)
        summary = None
        with TrainingLogWriter(self.training_path) as training_log:
            for episode in range(hp.episodes):
                policy = create_rl_policy(agent, training=True, debug_log=self.debug_log)
                summary = self._simulate(policy, write_results=episode == hp.episodes - 1)
                loss = agent.end_episode()
                metrics = summary.metrics
                self.debug_log.rl("episode %d total_reward=%.6g loss=%.6g epsilon=%.4f",
                                  episode, policy.total_reward, loss, agent.epsilon,
                                  sim_time=summary.end_time)
                training_log.append(episode, policy.total_reward, loss, agent.epsilon,
                                    metrics.avg_wait, metrics.makespan)
                agent.decay_epsilon()
        save_checkpoint(agent, self.checkpoint_path)
        self.debug_log.summary("checkpoint saved to %s", self.checkpoint_path,
                               sim_time=summary.end_time)
        return summary

    def _infer(self):
        agent = load_checkpoint(self.cfg.checkpoint)
        if agent.algorithm != self.cfg.policy:
            raise ValidationError(
                "--policy", f"checkpoint holds a {agent.algorithm} agent, not {self.cfg.policy}")
        agent.epsilon = 0.0
        policy = create_rl_policy(agent, training=False, debug_log=self.debug_log)
        return self._simulate(policy, write_results=True)

    def _print_statistics(self):
        metrics = self.summary.metrics
        print("\n" + "=" * 70)
        print("FINAL STATISTICS")
        print("=" * 70)
        print(f"Jobs Finished: {metrics.finished_count}")
        print(f"Jobs Discarded: {metrics.discarded_count}")
        print(f"Average Wait: {metrics.avg_wait:.3f} s")
        print(f"Average Bounded Slowdown: {metrics.avg_bounded_slowdown:.3f}")
        print(f"Utilization: {metrics.utilization * 100:.2f}%")
        print(f"Makespan: {metrics.makespan} s")
        print(f"Results: {self.results_path}")
        print("=" * 70)


def orchestrate(cfg):
    return SimulationWorker(cfg).run()
