# src/reporting/results.py
# Uniform result files: per-job records, system snapshots, training log, summary

from dataclasses import dataclass
from pathlib import Path

from src.errors import InternalConsistencyError, SimulationIOError

SEPARATOR = ";"

RESULT_COLUMNS = ("job_id", "submit", "start", "end",
                  "requested_nodes", "requested_time", "actual_runtime")


@dataclass(frozen=True)
class ResultRecord:
    job_id: int
    submit_time: int
    start_time: int
    end_time: int
    requested_nodes: int
    requested_time: int
    actual_runtime: int


def format_result_line(job):
    return SEPARATOR.join(str(v) for v in (
        job.job_id, job.submit_time, job.start_time, job.end_time,
        job.requested_nodes, job.requested_time, job.actual_runtime,
    ))


class LineSink:
    """Append-only UTF-8 text file, one record per line"""

    def __init__(self, path):
        self.path = Path(path)
        self.lines_written = 0
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._fp = open(self.path, "w", encoding="utf-8", newline="\n")
        except OSError as e:
            raise SimulationIOError(f"cannot open {self.path}: {e}") from e

    def write_line(self, text):
        try:
            self._fp.write(text + "\n")
        except (OSError, ValueError) as e:
            raise SimulationIOError(f"write to {self.path} failed: {e}") from e
        self.lines_written += 1

    def close(self):
        if not self._fp.closed:
            try:
                self._fp.close()
            except OSError as e:
                raise SimulationIOError(f"closing {self.path} failed: {e}") from e

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


class ResultsWriter(LineSink):
    """Streams finished jobs out in (end_time, job_id) order"""

    def __init__(self, path):
        super().__init__(path)
        self._last_key = None

    def append(self, job):
        if job.end_time is None or job.start_time is None:
            raise InternalConsistencyError(f"job {job.job_id} streamed out before it finished")
        key = (job.end_time, job.job_id)
        if self._last_key is not None and key < self._last_key:
            raise InternalConsistencyError(
                f"result for job {job.job_id} (end {job.end_time}) out of order")
        self._last_key = key
        self.write_line(format_result_line(job))


def append_finished_record(sink, job):
    sink.append(job)


class SystemInfoWriter(LineSink):

    def append(self, now, busy, free, queued, running, started):
        self.write_line(SEPARATOR.join(str(v) for v in (now, busy, free, queued, running, started)))


class TrainingLogWriter(LineSink):

    def append(self, episode, total_reward, loss, epsilon, avg_wait, makespan):
        self.write_line(SEPARATOR.join((
            str(episode), repr(float(total_reward)), repr(float(loss)),
            repr(float(epsilon)), repr(float(avg_wait)), str(makespan),
        )))


def read_results(path):
    """Parse a results file back into ResultRecords"""
    records = []
    with open(path, "r", encoding="utf-8") as fp:
        for line_no, line in enumerate(fp, 1):
            text = line.strip()
            if not text:
                continue
            parts = text.split(SEPARATOR)
            if len(parts) != len(RESULT_COLUMNS):
                raise InternalConsistencyError(f"{path}:{line_no} has {len(parts)} columns")
            records.append(ResultRecord(*(int(p) for p in parts)))
    return records


def write_summary(path, metrics, config_items=()):
    """key=value metric lines followed by the resolved configuration and its sources"""
    with LineSink(path) as sink:
        for key, value in metrics.as_dict().items():
            sink.write_line(f"{key}={value!r}")
        for key, value, source in config_items:
            sink.write_line(f"config.{key}={value}")
            sink.write_line(f"source.{key}={source}")
