"""Budget-constrained Steiner networks over three terminals."""

from ._core import (
    DegenerateGeometry,
    Network,
    NoConvergence,
    OutOfRange,
    Point,
    RootFindingFailure,
    TerminalTriangle,
    classify,
    oracle_solve,
    solve,
    steiner_point,
    sweep,
    thresholds,
)

__all__ = [
    "DegenerateGeometry",
    "Network",
    "NoConvergence",
    "OutOfRange",
    "Point",
    "RootFindingFailure",
    "TerminalTriangle",
    "classify",
    "oracle_solve",
    "solve",
    "steiner_point",
    "sweep",
    "thresholds",
]
