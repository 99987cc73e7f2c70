# src/trace/stream.py
# Bounded-memory job trace cursor

import logging
from collections import deque
from pathlib import Path

from src.errors import ConfigurationError, TraceError
from src.trace.swf import LineKind, parse_swf_line

logger = logging.getLogger(__name__)


class JobStream:
    """Yields JobRecords in submit order, holding at most `window` unconsumed records"""

    def __init__(self, path, window):
        if window < 1:
            raise ConfigurationError(f"trace window must be >= 1, got {window}")
        self.path = Path(path)
        self.window = window
        try:
            # undecodable bytes become U+FFFD and fail numeric parsing
            self._fp = open(self.path, "r", encoding="utf-8", errors="replace")
        except OSError as e:
            raise ConfigurationError(f"cannot read job trace {self.path}: {e}") from e

        self._buffer = deque()
        self._line_no = 0
        self._last_submit = None
        self._exhausted = False

        # Counters
        self.records_read = 0
        self.comment_lines = 0
        self.malformed_lines = 0
        self.peak_buffered = 0

    def _fill(self):
        while len(self._buffer) < self.window and not self._exhausted:
            line = self._fp.readline()
            if not line:
                self._exhausted = True
                self._fp.close()
                break
            self._line_no += 1
            parsed = parse_swf_line(line, self._line_no)

            if parsed.kind is LineKind.COMMENT:
                self.comment_lines += 1
                continue
            if parsed.kind is LineKind.MALFORMED:
                self.malformed_lines += 1
                logger.warning("%s:%d skipped malformed SWF line (%s)",
                               self.path.name, parsed.line_no, parsed.reason)
                continue

            record = parsed.record
            if self._last_submit is not None and record.submit_time < self._last_submit:
                self.close()
                raise TraceError(
                    f"{self.path.name}:{parsed.line_no} job {record.job_id} submitted at "
                    f"{record.submit_time}, before the preceding job ({self._last_submit})"
                )
            self._last_submit = record.submit_time
            self.records_read += 1
            self._buffer.append(record)
            self.peak_buffered = max(self.peak_buffered, len(self._buffer))

    def peek(self):
        """Next record without consuming it, or None at end of trace"""
        if not self._buffer:
            self._fill()
        return self._buffer[0] if self._buffer else None

    def __iter__(self):
        return self

    def __next__(self):
        if not self._buffer:
            self._fill()
        if not self._buffer:
            raise StopIteration
        return self._buffer.popleft()

    @property
    def buffered(self):
        return len(self._buffer)

    def close(self):
        self._exhausted = True
        if not self._fp.closed:
            self._fp.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def open_trace_stream(path, window):
    return JobStream(path, window)
