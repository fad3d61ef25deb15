"""Move recommendation for both games.

From an N-position the strategist names a move that lands on a
P-position, together with that target and its certificate (block index
for game 1, family tag for game 2).  From a P-position every move loses
against perfect play, so it recommends a deterministic stalling
fallback: the smallest legal removal, which keeps the game going as long
as the rules allow.  Stuck positions get :class:`NoMove`.

Recommendations are pure functions of the position (plus the bound
function for game 1), so play is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_form import (
    PFamilyTag,
    _classify_xy,
    _pow2_exponent,
    block_bounds_g1,
    locate_g1,
)
from .kernel import (
    BoundFn,
    MoveG1,
    MoveG2,
    TurnPosition,
    Verdict,
    WeightedPosition,
    has_moves_g2,
)


@dataclass(frozen=True)
class Winning:
    """A move onto a P-position, with the target and its certificate."""

    move: MoveG1 | MoveG2
    target: TurnPosition | WeightedPosition
    witness: int | PFamilyTag


@dataclass(frozen=True)
class AllLosing:
    """No winning move exists; ``move`` is the stalling fallback."""

    move: MoveG1 | MoveG2


@dataclass(frozen=True)
class NoMove:
    """The mover is stuck and loses on the spot."""


Advice = Winning | AllLosing | NoMove


class StrategyError(RuntimeError):
    """Internal inconsistency: the tables promised a target that is absent."""


def advise_g1(pos: TurnPosition, f: BoundFn) -> Advice:
    x, k = pos.stones, pos.turn
    if x == 0:
        return NoMove()
    verdict, n = locate_g1(pos, f)
    if verdict is Verdict.P:
        return AllLosing(MoveG1(1))
    # x sits in the gap just before block n at turn k; after one removal
    # the same counts are covered by block n-1 at turn k+1
    target_block = block_bounds_g1(f, k + 1, n - 1)
    best = min(target_block.hi, x - 1)  # maximal target = minimal removal
    take = x - best
    if best < target_block.lo or take > f(k):
        raise StrategyError(
            f"no reachable block-{n - 1} target from {x} stones at turn {k}"
        )
    return Winning(MoveG1(take), TurnPosition(best, k + 1), n - 1)


def _family_rows(w: int) -> list[tuple[int, int, str, int]]:
    """(y_min, y_max, kind, n) for each family populating weight w."""
    rows = []
    m = _pow2_exponent(w + 2)
    if m is not None:
        rows.append((0, 0, "P1", m - 1))
    m = _pow2_exponent(w + 3)
    if m is not None and m - 1 >= 2:
        n = m - 1
        rows.append((1, 2 * n - 3, "P2", n))
    m = _pow2_exponent(w + 1)
    if m is not None:
        n = m - 1
        rows.append((2 * n + 1, w, "P3", n))
    return rows


def advise_g2(pos: WeightedPosition) -> Advice:
    x, y = pos.heavy, pos.light
    if not has_moves_g2(pos):
        return NoMove()
    w = pos.weight
    verdict, _ = _classify_xy(x, y)
    if verdict is Verdict.P:
        # smallest removal first: a light stone if any, else one heavy
        return AllLosing(MoveG2(0, 1) if y >= 1 else MoveG2(1, 0))
    # scan reachable weights from the top; prefer the heaviest target,
    # then the most heavy stones kept
    for w2 in range(w - 1, w - w // 2 - 1, -1):
        best = None
        for y_min, y_max, kind, n in _family_rows(w2):
            # target needs y2 <= y and x2 = (w2 - y2)/2 <= x; removals of
            # 1..floor(w/2) weight make every such pair reachable
            y2 = max(y_min, w2 - 2 * x)
            if y2 > min(y_max, y):
                continue
            x2 = (w2 - y2) // 2
            if best is None or x2 > best[0]:
                best = (x2, y2, kind, n)
        if best is None:
            continue
        x2, y2, kind, n = best
        if kind == "P1":
            tag = PFamilyTag("P1", n)
        elif kind == "P2":
            tag = PFamilyTag("P2", n, (y2 + 1) // 2)
        else:
            tag = PFamilyTag("P3", n, (y2 - 2 * n + 1) // 2)
        return Winning(MoveG2(x - x2, y - y2), WeightedPosition(x2, y2), tag)
    raise StrategyError(f"no winning target found from ({x}, {y})")
