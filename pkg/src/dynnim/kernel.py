"""Rules for two restricted single-pile Nim variants.

Game 1 (turn-bounded Nim): a single pile of identical stones.  On turn k
the mover removes between 1 and f(k) stones, where f is a positive,
non-decreasing bound function of the turn index.  A player who faces an
empty pile has no move and loses.

Game 2 (two-weight Nim): a single pile holding heavy stones (weight 2)
and light stones (weight 1).  A move removes any combination of stones
whose combined weight is at least 1 and at most half the pile's current
total weight, rounded down.  A player with no legal move loses; that
happens on the empty pile and on a lone heavy stone, whose half-weight
budget is too small to remove anything.

Positions, moves, and bound functions are immutable values and every
function here is pure, so everything can be shared freely across threads.
All counts, turn indices, and weights are capped below 2**62 so derived
sums stay inside machine-friendly range; violations raise
:class:`RangeLimitError` rather than silently wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

INT_CAP = 1 << 62


class DynnimError(Exception):
    """Base class for every error this package raises deliberately."""


class RangeLimitError(DynnimError, OverflowError):
    """A count, turn index, weight, or derived bound reached 2**62."""


class BoundSpecError(DynnimError, ValueError):
    """A bound-function description is malformed or breaks its invariants."""


class IllegalMoveError(DynnimError, ValueError):
    """A move that violates the rules.

    ``constraint`` names the specific rule that was broken, suitable for
    echoing back to an interactive caller.
    """

    def __init__(self, message: str, constraint: str):
        super().__init__(message)
        self.constraint = constraint


def _check_cap(value: int, what: str) -> int:
    if value >= INT_CAP:
        raise RangeLimitError(f"{what} {value} exceeds the 2**62 limit")
    return value


class Verdict(Enum):
    """Win/loss value of a position under normal play.

    P: the player who just moved wins; every move hands the opponent a
    winning position.  N: the player about to move wins; at least one
    move reaches a P-position.
    """

    P = "P"
    N = "N"

    def __str__(self) -> str:  # keeps CLI and CSV output compact
        return self.value


@dataclass(frozen=True)
class BoundFn:
    """Per-turn removal cap for game 1: positive and non-decreasing in k.

    Three shapes are supported, selected by ``kind``:

    * ``const``  params ``(c,)``        f(k) = c
    * ``affine`` params ``(a, b)``      f(k) = a*k + b
    * ``table``  params ``(v1..vm)``    f(k) = vk, last entry repeating
                                        for every turn past the table end

    The text form used by the CLI and the HTTP API is
    ``const:<c>`` | ``affine:<a>,<b>`` | ``table:<v1>,...,<vm>``.
    Descriptions that would make some f(k) non-positive, or make f
    decrease anywhere, are rejected at construction time.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        kind, params = self.kind, self.params
        if kind == "const":
            if len(params) != 1:
                raise BoundSpecError("const takes exactly one value")
            if params[0] < 1:
                raise BoundSpecError("const bound must be at least 1")
        elif kind == "affine":
            if len(params) != 2:
                raise BoundSpecError("affine takes exactly two values")
            a, b = params
            if a < 0:
                raise BoundSpecError("affine slope must be non-negative")
            if a + b < 1:
                raise BoundSpecError("affine bound must be at least 1 from turn 1 on")
        elif kind == "table":
            if not params:
                raise BoundSpecError("table needs at least one value")
            if any(v < 1 for v in params):
                raise BoundSpecError("table values must be at least 1")
            if any(b < a for a, b in zip(params, params[1:])):
                raise BoundSpecError("table values must be non-decreasing")
        else:
            raise BoundSpecError(f"unknown bound kind {kind!r}")
        for v in params:
            if abs(v) >= INT_CAP:
                raise RangeLimitError(f"bound parameter {v} exceeds the 2**62 limit")

    @classmethod
    def constant(cls, c: int) -> "BoundFn":
        return cls("const", (c,))

    @classmethod
    def affine(cls, a: int, b: int) -> "BoundFn":
        return cls("affine", (a, b))

    @classmethod
    def table(cls, values) -> "BoundFn":
        return cls("table", tuple(values))

    @classmethod
    def parse(cls, text: str) -> "BoundFn":
        """Parse the ``kind:params`` text form; round-trips with :meth:`spec`."""
        kind, sep, rest = text.strip().partition(":")
        if not sep:
            raise BoundSpecError(f"expected kind:params, got {text!r}")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise BoundSpecError(f"non-integer parameter in {text!r}") from None
        return cls(kind, params)

    def spec(self) -> str:
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"

    def __call__(self, k: int) -> int:
        if k < 1:
            raise ValueError("turn index must be at least 1")
        _check_cap(k, "turn index")
        if self.kind == "const":
            value = self.params[0]
        elif self.kind == "affine":
            a, b = self.params
            value = a * k + b
        else:
            value = self.params[min(k, len(self.params)) - 1]
        return _check_cap(value, f"bound value f({k})")


def eval_bound(f: BoundFn, k: int) -> int:
    """Value of the removal cap on turn k (k >= 1)."""
    return f(k)


@dataclass(frozen=True)
class TurnPosition:
    """Game 1 state: ``stones`` left, about to play turn ``turn``."""

    stones: int
    turn: int

    def __post_init__(self):
        if self.stones < 0:
            raise ValueError("stones must be non-negative")
        if self.turn < 1:
            raise ValueError("turn index must be at least 1")
        _check_cap(self.stones, "stones")
        _check_cap(self.turn, "turn index")


@dataclass(frozen=True)
class WeightedPosition:
    """Game 2 state: ``heavy`` stones of weight 2 and ``light`` of weight 1."""

    heavy: int
    light: int

    def __post_init__(self):
        if self.heavy < 0 or self.light < 0:
            raise ValueError("stone counts must be non-negative")
        _check_cap(2 * self.heavy + self.light, "total weight")

    @property
    def weight(self) -> int:
        return 2 * self.heavy + self.light


def total_weight(pos: WeightedPosition) -> int:
    return pos.weight


@dataclass(frozen=True)
class MoveG1:
    """Remove ``take`` stones on the current turn."""

    take: int

    def __post_init__(self):
        if self.take < 1:
            raise ValueError("take must be at least 1")
        _check_cap(self.take, "take")


@dataclass(frozen=True)
class MoveG2:
    """Remove ``take_heavy`` heavy and ``take_light`` light stones."""

    take_heavy: int
    take_light: int

    def __post_init__(self):
        if self.take_heavy < 0 or self.take_light < 0:
            raise ValueError("removal counts must be non-negative")
        if self.weight < 1:
            raise ValueError("a move must remove something")
        _check_cap(self.weight, "removal weight")

    @property
    def weight(self) -> int:
        return 2 * self.take_heavy + self.take_light


def apply_g1(pos: TurnPosition, f: BoundFn, move: MoveG1) -> TurnPosition:
    """Apply a game 1 move, or raise :class:`IllegalMoveError`."""
    cap = f(pos.turn)
    if move.take > pos.stones:
        raise IllegalMoveError(
            f"cannot take {move.take} from {pos.stones} stones",
            constraint=f"take <= stones ({pos.stones})",
        )
    if move.take > cap:
        raise IllegalMoveError(
            f"take {move.take} exceeds the turn-{pos.turn} cap {cap}",
            constraint=f"take <= f(turn) ({cap})",
        )
    return TurnPosition(pos.stones - move.take, pos.turn + 1)


def moves_g1(pos: TurnPosition, f: BoundFn) -> list[tuple[MoveG1, TurnPosition]]:
    """All legal game 1 moves with their resulting positions, take ascending."""
    limit = min(pos.stones, f(pos.turn))
    return [
        (MoveG1(t), TurnPosition(pos.stones - t, pos.turn + 1))
        for t in range(1, limit + 1)
    ]


def apply_g2(pos: WeightedPosition, move: MoveG2) -> WeightedPosition:
    """Apply a game 2 move, or raise :class:`IllegalMoveError`."""
    if move.take_heavy > pos.heavy:
        raise IllegalMoveError(
            f"cannot take {move.take_heavy} heavy from {pos.heavy}",
            constraint=f"take_heavy <= heavy ({pos.heavy})",
        )
    if move.take_light > pos.light:
        raise IllegalMoveError(
            f"cannot take {move.take_light} light from {pos.light}",
            constraint=f"take_light <= light ({pos.light})",
        )
    budget = pos.weight // 2
    if move.weight > budget:
        raise IllegalMoveError(
            f"removal weight {move.weight} exceeds half the pile weight ({budget})",
            constraint=f"removal weight <= floor(w/2) ({budget})",
        )
    return WeightedPosition(pos.heavy - move.take_heavy, pos.light - move.take_light)


def moves_g2(pos: WeightedPosition) -> list[tuple[MoveG2, WeightedPosition]]:
    """All legal game 2 moves with their results, ascending by (heavy, light)."""
    budget = pos.weight // 2
    out = []
    for t in range(0, min(pos.heavy, budget // 2) + 1):
        room = budget - 2 * t
        u_first = 1 if t == 0 else 0
        for u in range(u_first, min(pos.light, room) + 1):
            out.append((MoveG2(t, u), WeightedPosition(pos.heavy - t, pos.light - u)))
    return out


def has_moves_g2(pos: WeightedPosition) -> bool:
    # light stone + budget >= 1, or two heavies so the budget covers one
    return pos.weight >= 2 and (pos.light >= 1 or pos.heavy >= 2)
