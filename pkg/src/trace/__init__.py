# src/trace/__init__.py
# Job trace package

from .swf import (
    SwfField,
    LineKind,
    JobRecord,
    ClusterConfig,
    ParsedLine,
    parse_swf_line,
    parse_node_structure
)
from .stream import JobStream, open_trace_stream

__all__ = [
    'SwfField',
    'LineKind',
    'JobRecord',
    'ClusterConfig',
    'ParsedLine',
    'parse_swf_line',
    'parse_node_structure',
    'JobStream',
    'open_trace_stream'
]
