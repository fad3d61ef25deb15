"""Solvers, verifiers, and a play engine for two restricted Nim variants."""

from .kernel import (
    BoundFn,
    BoundSpecError,
    DynnimError,
    IllegalMoveError,
    MoveG1,
    MoveG2,
    RangeLimitError,
    TurnPosition,
    Verdict,
    WeightedPosition,
    apply_g1,
    apply_g2,
    eval_bound,
    moves_g1,
    moves_g2,
    total_weight,
)

__version__ = "0.1.0"

__all__ = [
    "BoundFn",
    "BoundSpecError",
    "DynnimError",
    "IllegalMoveError",
    "MoveG1",
    "MoveG2",
    "RangeLimitError",
    "TurnPosition",
    "Verdict",
    "WeightedPosition",
    "apply_g1",
    "apply_g2",
    "eval_bound",
    "moves_g1",
    "moves_g2",
    "total_weight",
    "__version__",
]
