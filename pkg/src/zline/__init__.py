"""Traços em Z e a caracterização de midconvexidade por traços."""

from .traces import (
    TraceDecomposition,
    TraceRow,
    ZTrace,
    check_trace_equivalence,
    decompose_trace,
    is_order_convex_window,
    midconvex_via_traces,
    trace,
    trace_rows,
)

__all__ = [
    "TraceDecomposition",
    "TraceRow",
    "ZTrace",
    "check_trace_equivalence",
    "decompose_trace",
    "is_order_convex_window",
    "midconvex_via_traces",
    "trace",
    "trace_rows",
]
