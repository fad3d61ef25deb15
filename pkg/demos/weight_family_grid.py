"""The two-weight game's losing positions, drawn as a lattice.

A position holds x heavy stones (weight 2 each) and y light stones
(weight 1); a move removes stones of total weight between 1 and half
the remaining weight, rounded down.  The losing (P) positions cluster
just below powers of two in total weight, in three families:

  1   y = 0 and w + 2 a power of two        lone points on the x-axis
  2   w + 3 a power of two, few lights      short diagonal runs
  3   w + 1 a power of two, many lights     long diagonal tails

This script draws the w <= 63 corner of the lattice, lists the family
members band by band, and asks the strategist for a few moves.

Run:  python3 demos/weight_family_grid.py
"""

from dynnim.closed_form import classify_g2, iter_p_families
from dynnim.kernel import WeightedPosition, apply_g2, total_weight
from dynnim.strategist import Winning, advise_g2

MAX_W = 63
FAMILY_MARK = {"P1": "1", "P2": "2", "P3": "3"}

print(__doc__)

print("=" * 66)
print(f"1. The lattice up to total weight {MAX_W}")
print("=" * 66)
print()
print("rows are y (lights), columns are x (heavies); digits mark losing")
print("positions by family, dots are winning, blank is beyond the weight cut")
print()
for y in range(MAX_W, -1, -1):
    cells = []
    for x in range(0, (MAX_W // 2) + 1):
        if 2 * x + y > MAX_W:
            cells.append(" ")
            continue
        _, tag = classify_g2(WeightedPosition(x, y))
        cells.append(FAMILY_MARK[tag.kind] if tag else ".")
    line = "".join(cells).rstrip()
    if line:
        print(f"  y={y:>2}  {line}")
print("        " + "".join(str(x % 10) for x in range(0, MAX_W // 2 + 1)))
print("        x ->")
print()

print("=" * 66)
print("2. Family members, band by band (up to weight 31)")
print("=" * 66)
print()
band = None
for pos, tag in iter_p_families(31):
    w = total_weight(pos)
    power = w + {"P1": 2, "P2": 3, "P3": 1}[tag.kind]
    if (tag.kind, power) != band:
        band = (tag.kind, power)
        print(f"  w + {power - w} = {power}:")
    print(f"    ({pos.heavy:>2}, {pos.light:>2})  w={w:<3} {tag.label()}")
print()

print("=" * 66)
print("3. Ask the strategist")
print("=" * 66)
print()
for x, y in ((8, 0), (5, 5), (10, 11), (7, 0)):
    pos = WeightedPosition(x, y)
    advice = advise_g2(pos)
    if isinstance(advice, Winning):
        landed = apply_g2(pos, advice.move)
        print(
            f"  ({x}, {y}):  remove ({advice.move.take_heavy} heavy, "
            f"{advice.move.take_light} light) -> ({landed.heavy}, "
            f"{landed.light})  [{advice.witness.label()}]"
        )
    else:
        print(f"  ({x}, {y}):  losing position; best is to stall with "
              f"({advice.move.take_heavy} heavy, {advice.move.take_light} light)")
