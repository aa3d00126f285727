"""Tournaments with prescribed score vectors: plain, loopy, Hankel and
combinatorially skew-Hankel classes."""

from .connectivity import (
    DifferenceDigraph,
    MovePath,
    find_path,
    path_hankel,
    path_loopy,
    path_plain,
    path_skew_hankel,
)
from .construct import (
    InfeasibleError,
    build,
    build_hankel,
    build_loopy,
    build_plain,
    build_skew_hankel,
    fold,
    hankel_sort,
    lift_loopy,
    skew_half_sort,
)
from .core import (
    BinaryMatrix,
    TournamentClass,
    format_matrix,
    is_member,
    member_classes,
    parse_matrix,
    score_vector,
)
from .feasibility import FeasibilityReport, exists
from .oracle import (
    ClassCensus,
    OracleRangeError,
    census,
    enumerate_class,
    members_by_score,
    feasibility_oracle,
    switch_graph,
    switch_graph_connected,
)
from .switches import Move, MoveError, apply_move, replay

__all__ = [
    "BinaryMatrix", "ClassCensus", "DifferenceDigraph", "FeasibilityReport", "InfeasibleError",
    "Move", "MoveError", "MovePath", "OracleRangeError", "TournamentClass",
    "apply_move", "build", "build_hankel", "build_loopy", "build_plain", "build_skew_hankel",
    "census", "enumerate_class", "members_by_score", "exists", "feasibility_oracle", "find_path", "fold",
    "format_matrix", "hankel_sort", "is_member", "lift_loopy", "member_classes", "parse_matrix",
    "path_hankel", "path_loopy", "path_plain", "path_skew_hankel", "replay", "score_vector",
    "skew_half_sort", "switch_graph", "switch_graph_connected",
]
