"""A walking tour of the turn-bounded game's P-position blocks.

One pile of stones.  On turn k the mover removes between 1 and f(k)
stones, where f is positive and never decreases; whoever cannot move
loses.  The losing (P) counts at each turn clump into consecutive
blocks, and the block edges are plain running sums of f.  This script
prints the blocks for a few bound shapes, shows how the picture shifts
as turns pass, and finishes with one advised game.

Run:  python3 demos/blocks_walkthrough.py
"""

import random

from dynnim.closed_form import block_bounds_g1, classify_g1, iter_blocks_g1
from dynnim.kernel import BoundFn, TurnPosition, apply_g1, moves_g1
from dynnim.strategist import Winning, advise_g1

MAX_X = 60


def show_blocks(f: BoundFn, turns=(1, 2, 3, 4)):
    print(f"bound f = {f.spec()}, losing counts up to {MAX_X}:")
    for k in turns:
        spans = []
        for block in iter_blocks_g1(f, k):
            if block.lo > MAX_X:
                break
            spans.append(
                f"[{block.lo}]" if block.lo == block.hi else f"[{block.lo}..{block.hi}]"
            )
        print(f"  turn {k}: " + " ".join(spans))
    print()


print(__doc__)

print("=" * 66)
print("1. The block picture for three bound shapes")
print("=" * 66)
print()
for f in (BoundFn.constant(3), BoundFn.affine(1, 0), BoundFn.table((1, 2, 2, 3, 7))):
    show_blocks(f)

print("A constant bound c gives the classic subtraction game: every block")
print("collapses to the single count n*(c+1), at every turn alike.")
print()

print("=" * 66)
print("2. Two turns later, the same blocks reappear shifted")
print("=" * 66)
print()
f = BoundFn.affine(1, 0)
k = 3
dlo, dhi = f(k) + 1, f(k + 1) + 1
print(f"With f = {f.spec()} at turn {k}: removing a full block's worth of")
print(f"stones takes two plies, so block n+1 at turn {k} is block n at")
print(f"turn {k + 2} moved up by ({dlo}, {dhi}):")
print()
for n in range(0, 4):
    here = block_bounds_g1(f, k, n + 1)
    there = block_bounds_g1(f, k + 2, n)
    print(
        f"  block {n + 1} @ turn {k}: [{here.lo}, {here.hi}]"
        f"   =   block {n} @ turn {k + 2}: [{there.lo}, {there.hi}]"
        f" + ({dlo}, {dhi})"
    )
    assert here.lo == there.lo + dlo and here.hi == there.hi + dhi
print()

print("=" * 66)
print("3. One advised game from 37 stones")
print("=" * 66)
print()
rng = random.Random(7)
pos = TurnPosition(37, 1)
verdict, _ = classify_g1(pos, f)
print(f"start: {pos.stones} stones at turn {pos.turn} -> {verdict}; the mover")
print("from an N count can force the win, so watch the engine do it")
engine_to_move = True
while True:
    options = moves_g1(pos, f)
    if not options:
        loser = "engine" if engine_to_move else "opponent"
        print(f"turn {pos.turn}: no stones left, {loser} is stuck and loses")
        break
    if engine_to_move:
        advice = advise_g1(pos, f)
        move = advice.move
        note = (
            f"lands on block {advice.witness}"
            if isinstance(advice, Winning)
            else "stalling; position already lost"
        )
        who = "engine  "
    else:
        move, _ = rng.choice(options)
        note = "random"
        who = "opponent"
    pos = apply_g1(pos, f, move)
    print(f"turn {pos.turn - 1}: {who} takes {move.take:>2} -> "
          f"{pos.stones:>2} stones  ({note})")
    engine_to_move = not engine_to_move
