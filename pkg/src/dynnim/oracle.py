"""Exhaustive reference solvers for both games.

These solvers are deliberately structure-free: verdicts come only from
walking the move graph backwards under normal play (a position is N
exactly when some successor is P, and P when every successor is N,
vacuously so for stuck positions).  They never consult the closed-form
classifiers, so the two can vouch for each other independently.

Both solvers memoize.  Memo entries are write-once: a verdict, once
stored, is never recomputed or overwritten, which makes repeated queries
deterministic and cheap.  Explicit bounds keep accidental huge inputs
from grinding; exceeding a bound raises :class:`OracleBoundError`.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Iterator

from .kernel import BoundFn, DynnimError, TurnPosition, Verdict, WeightedPosition

DEFAULT_G1_STONES = 10_000
DEFAULT_G2_WEIGHT = 1 << 12


class OracleBoundError(DynnimError):
    """A query went past the solver's configured search envelope."""


class OracleG1:
    """Backward-induction solver for game 1 under a fixed bound function.

    Verdicts are stored per turn as a row of booleans indexed by stone
    count, filled from the highest turn downward.  Row entries only ever
    get appended, never rewritten.
    """

    def __init__(self, f: BoundFn, max_stones: int = DEFAULT_G1_STONES):
        self._f = f
        self.max_stones = max_stones
        self._rows: dict[int, list[bool]] = {}

    def solve(self, pos: TurnPosition) -> Verdict:
        if pos.stones > self.max_stones:
            raise OracleBoundError(
                f"stones {pos.stones} exceeds oracle bound {self.max_stones}"
            )
        self._ensure(pos.stones, pos.turn)
        return Verdict.P if self._rows[pos.turn][pos.stones] else Verdict.N

    def is_p(self, stones: int, turn: int) -> bool:
        row = self._rows.get(turn)
        if row is None or len(row) <= stones:
            return self.solve(TurnPosition(stones, turn)) is Verdict.P
        return row[stones]

    def _ensure(self, stones: int, turn: int):
        # Row for turn kk needs entries 0..stones-(kk-turn); filling from
        # the top turn down guarantees the next row is ready when needed.
        f = self._f
        rows = self._rows
        for kk in range(turn + stones, turn - 1, -1):
            need = stones - (kk - turn) + 1
            row = rows.get(kk)
            if row is None:
                row = [True]  # zero stones: the mover is stuck
                rows[kk] = row
            if len(row) >= need:
                continue
            nxt = rows[kk + 1]
            cap = f(kk)
            for u in range(len(row), need):
                take = u if u < cap else cap
                # successors hold u-take .. u-1 stones on the next turn
                row.append(not any(nxt[u - take:u]))


def _successors_g2(x: int, y: int) -> list[tuple[int, int]]:
    budget = (2 * x + y) // 2
    out = []
    for t in range(0, min(x, budget // 2) + 1):
        room = budget - 2 * t
        for u in range((1 if t == 0 else 0), min(y, room) + 1):
            out.append((x - t, y - u))
    return out


class OracleG2:
    """Backward-induction solver for game 2.

    Two routes are provided and are expected to agree everywhere:

    * :meth:`solve` resolves one position by depth-first search over the
      literal successor list, with early exit once a P successor shows up.
    * :meth:`iter_sweep` resolves every position in ascending weight
      order.  It keeps, per already-swept weight, the sorted light-stone
      counts of its P-positions; a position is N exactly when one of the
      weights its moves can reach holds a P-position dominated
      componentwise, which a binary search per reachable weight detects.

    The sweep stores nothing per N-position, so its memory stays
    proportional to the P-count even at large weights.
    """

    def __init__(self, max_weight: int = DEFAULT_G2_WEIGHT):
        self.max_weight = max_weight
        self._memo: dict[tuple[int, int], Verdict] = {}

    def solve(self, pos: WeightedPosition) -> Verdict:
        if pos.weight > self.max_weight:
            raise OracleBoundError(
                f"weight {pos.weight} exceeds oracle bound {self.max_weight}"
            )
        memo = self._memo
        key = (pos.heavy, pos.light)
        if key in memo:
            return memo[key]
        # frame: [position, successor list, scan index]
        stack = [[key, _successors_g2(*key), 0]]
        while stack:
            frame = stack[-1]
            pkey, succs, i = frame
            if pkey in memo:
                stack.pop()
                continue
            child = None
            verdict = None
            while i < len(succs):
                got = memo.get(succs[i])
                if got is None:
                    child = succs[i]
                    break
                if got is Verdict.P:
                    verdict = Verdict.N
                    break
                i += 1
            frame[2] = i  # stay on the unresolved child; recheck it on return
            if child is not None:
                stack.append([child, _successors_g2(*child), 0])
                continue
            memo[pkey] = verdict if verdict is not None else Verdict.P
            stack.pop()
        return memo[key]

    def iter_sweep(self, max_weight: int) -> Iterator[tuple[int, int, Verdict]]:
        """Yield (heavy, light, verdict) for every position of weight
        0..max_weight, ordered by (weight, heavy)."""
        if max_weight > self.max_weight:
            raise OracleBoundError(
                f"weight {max_weight} exceeds oracle bound {self.max_weight}"
            )
        p_rows: dict[int, list[int]] = {}  # weight -> sorted light counts of P-positions
        row_weights: list[int] = []  # kept ascending; only weights owning a P-position
        for w in range(0, max_weight + 1):
            reach_lo = w - w // 2  # moves may not drop below this weight
            band = row_weights[bisect_left(row_weights, reach_lo):]
            new_p: list[int] = []
            for x in range(0, w // 2 + 1):
                y = w - 2 * x
                hit = False
                for w2 in band:
                    ys = p_rows[w2]
                    j = bisect_right(ys, y) - 1
                    # heavy count shrinks as light grows at fixed weight, so
                    # the largest y' <= y carries the smallest reachable x'
                    if j >= 0 and (w2 - ys[j]) // 2 <= x:
                        hit = True
                        break
                if hit:
                    yield (x, y, Verdict.N)
                else:
                    new_p.append(y)
                    yield (x, y, Verdict.P)
            if new_p:
                new_p.sort()
                p_rows[w] = new_p
                row_weights.append(w)

    def sweep(self, max_weight: int) -> dict[tuple[int, int], Verdict]:
        """Verdict map for every position of weight 0..max_weight; keys are
        (heavy, light) pairs, insertion-ordered by (weight, heavy)."""
        return {(x, y): v for x, y, v in self.iter_sweep(max_weight)}


def solve_g1(pos: TurnPosition, f: BoundFn, max_stones: int = DEFAULT_G1_STONES) -> Verdict:
    return OracleG1(f, max_stones).solve(pos)


def solve_g2(pos: WeightedPosition, max_weight: int = DEFAULT_G2_WEIGHT) -> Verdict:
    return OracleG2(max_weight).solve(pos)


def sweep_g2(max_weight: int, bound: int = DEFAULT_G2_WEIGHT) -> dict[tuple[int, int], Verdict]:
    return OracleG2(bound).sweep(max_weight)
