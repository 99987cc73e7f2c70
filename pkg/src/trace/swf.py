# src/trace/swf.py
# Standard Workload Format (SWF) parsing

import logging
import re
from dataclasses import dataclass
from enum import Enum, IntEnum
from pathlib import Path

from config.settings import SWF_FIELD_COUNT
from src.errors import ConfigurationError

logger = logging.getLogger(__name__)


class SwfField(IntEnum):
    JOB_ID = 0
    SUBMITTED = 1
    WAIT_TIME = 2
    RUN_TIME = 3
    ALLOC_PROCS = 4
    AVG_CPU_USAGE = 5
    USED_MEM = 6
    REQ_PROCS = 7
    REQ_TIME = 8
    REQ_MEM = 9
    STATUS = 10
    USER_ID = 11
    GROUP_ID = 12
    EXECUTABLE = 13
    QUEUE_NUM = 14
    PART_NUM = 15
    PRECEDING_JOB = 16
    THINK_TIME = 17


class LineKind(Enum):
    RECORD = "record"
    COMMENT = "comment"
    MALFORMED = "malformed"


@dataclass(frozen=True)
class JobRecord:
    """Static trace fields of one batch job"""

    job_id: int
    submit_time: int
    actual_runtime: int
    requested_nodes: int
    requested_time: int

    def to_swf_line(self):
        """Serialize back into an 18-field SWF row (unused fields are -1)"""
        fields = [-1] * SWF_FIELD_COUNT
        fields[SwfField.JOB_ID] = self.job_id
        fields[SwfField.SUBMITTED] = self.submit_time
        fields[SwfField.RUN_TIME] = self.actual_runtime
        fields[SwfField.ALLOC_PROCS] = self.requested_nodes
        fields[SwfField.REQ_PROCS] = self.requested_nodes
        fields[SwfField.REQ_TIME] = self.requested_time
        return " ".join(str(f) for f in fields)


@dataclass(frozen=True)
class ClusterConfig:
    total_nodes: int
    name: str = ""


@dataclass(frozen=True)
class ParsedLine:
    kind: LineKind
    line_no: int
    record: JobRecord | None = None
    reason: str = ""


def _to_int(token):
    # Some archive traces carry decimals in integer columns
    return int(float(token))


def parse_swf_line(line, line_no):
    """Classify one SWF line as a job record, a header comment or malformed"""
    text = line.strip()
    if not text or text.startswith(";"):
        return ParsedLine(LineKind.COMMENT, line_no)

    tokens = text.split()
    if len(tokens) < SWF_FIELD_COUNT:
        return ParsedLine(LineKind.MALFORMED, line_no,
                          reason=f"expected {SWF_FIELD_COUNT} fields, got {len(tokens)}")
    try:
        fields = [_to_int(t) for t in tokens[:SWF_FIELD_COUNT]]
    except (ValueError, OverflowError):
        return ParsedLine(LineKind.MALFORMED, line_no, reason="non-numeric field")

    job_id = fields[SwfField.JOB_ID]
    submit = fields[SwfField.SUBMITTED]
    runtime = fields[SwfField.RUN_TIME]

    nodes = fields[SwfField.REQ_PROCS]
    if nodes <= 0:
        nodes = fields[SwfField.ALLOC_PROCS]

    requested_time = fields[SwfField.REQ_TIME]
    if requested_time <= 0:
        requested_time = runtime

    if runtime < 0 or nodes <= 0:
        return ParsedLine(LineKind.MALFORMED, line_no,
                          reason=f"job {job_id}: runtime or node count unresolvable")
    if job_id <= 0 or submit < 0:
        return ParsedLine(LineKind.MALFORMED, line_no,
                          reason=f"job {job_id}: invalid id or submit time")

    record = JobRecord(
        job_id=job_id,
        submit_time=submit,
        actual_runtime=runtime,
        requested_nodes=nodes,
        # zero-runtime jobs without an estimate still need a 1 s walltime
        requested_time=max(1, requested_time),
    )
    return ParsedLine(LineKind.RECORD, line_no, record=record)


_DIRECTIVE = re.compile(r"^;\s*(\w+)\s*:\s*(.*?)\s*$")


def parse_node_structure(path):
    """Read the simulated system size from SWF-style header directives"""
    path = Path(path)
    directives = {}
    try:
        with open(path, "r", encoding="utf-8", errors="replace") as fp:
            for line in fp:
                match = _DIRECTIVE.match(line.strip())
                if match:
                    directives.setdefault(match.group(1).lower(), match.group(2))
    except OSError as e:
        raise ConfigurationError(f"cannot read node structure file {path}: {e}") from e

    raw = directives.get("maxnodes", directives.get("maxprocs"))
    if raw is None:
        raise ConfigurationError(f"{path}: neither MaxNodes nor MaxProcs directive present")
    try:
        total_nodes = _to_int(raw)
    except (ValueError, OverflowError) as e:
        raise ConfigurationError(f"{path}: node count {raw!r} is not a number") from e
    if total_nodes <= 0:
        raise ConfigurationError(f"{path}: node count must be positive, got {total_nodes}")

    name = directives.get("computer", directives.get("installation", path.stem))
    return ClusterConfig(total_nodes=total_nodes, name=name)
