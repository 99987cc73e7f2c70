# src/reporting/__init__.py
# Logging module package: metrics, result files and debug log

from .metrics import (
    Metrics,
    MetricsAccumulator,
    bounded_slowdown,
    compute_metrics,
    metrics_from_records
)
from .results import (
    ResultRecord,
    ResultsWriter,
    SystemInfoWriter,
    TrainingLogWriter,
    append_finished_record,
    format_result_line,
    read_results,
    write_summary
)
from .debug_log import DebugLevel, DebugLog

__all__ = [
    'Metrics',
    'MetricsAccumulator',
    'bounded_slowdown',
    'compute_metrics',
    'metrics_from_records',
    'ResultRecord',
    'ResultsWriter',
    'SystemInfoWriter',
    'TrainingLogWriter',
    'append_finished_record',
    'format_result_line',
    'read_results',
    'write_summary',
    'DebugLevel',
    'DebugLog'
]
