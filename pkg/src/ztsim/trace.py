"""Newline-delimited JSON output for simulation steps, solver results, and
metrics. Key order is fixed so identical inputs produce byte-identical files.
"""
from __future__ import annotations

import json

from .errors import TraceWriteError
from .sim import Metrics, StepRecord

TRACE_SCHEMA_VERSION = 1

STEP_KEYS = (
    "schema_version",
    "tick",
    "entity",
    "decision",
    "action",
    "evidence",
    "score_before",
    "score_after",
)


def step_record_to_dict(record: StepRecord) -> dict:
    return {
        "schema_version": TRACE_SCHEMA_VERSION,
        "tick": record.tick,
        "entity": record.entity_id,
        "decision": record.decision,
        "action": record.action,
        "evidence": record.evidence,
        "score_before": record.score_before,
        "score_after": record.score_after,
    }


def solver_record(kind, **payload) -> dict:
    out = {"schema_version": TRACE_SCHEMA_VERSION, "kind": kind}
    out.update(payload)
    return out


def emit_trace(records, sink) -> int:
    """Write one JSON object per line, UTF-8, fixed key order. Returns the
    record count; a sink failure raises TraceWriteError carrying the partial
    count."""
    written = 0
    for record in records:
        if isinstance(record, StepRecord):
            record = step_record_to_dict(record)
        try:
            sink.write(json.dumps(record, ensure_ascii=False) + "\n")
        except OSError as exc:
            raise TraceWriteError(written, exc) from exc
        written += 1
    return written


def metrics_to_dict(metrics: Metrics) -> dict:
    return {
        "schema_version": TRACE_SCHEMA_VERSION,
        "entities": {
            eid: {
                "time_to_detection": m.time_to_detection,
                "false_lockout": m.false_lockout,
                "final_score": m.final_score,
                "trajectory": list(m.trajectory),
            }
            for eid, m in metrics.per_entity.items()
        },
    }
