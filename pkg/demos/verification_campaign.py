"""Run the full verification battery and print every report.

Three layers of evidence that the closed-form classifiers and the
strategist are right:

  1. classifier vs exhaustive search, position by position;
  2. self-play from winning starts, which the engine must never lose;
  3. a rendered table dump, as the archival artifact.

Everything here is deterministic: fixed seeds, fixed envelopes.  The
script exits non-zero if any report fails, so it doubles as a smoke
check in scripting.

Run:  python3 demos/verification_campaign.py
"""

import random
import sys
import tempfile
from pathlib import Path

from dynnim.closed_form import classify_g1, classify_g2, enumerate_p_g2
from dynnim.harness import (
    dump_table,
    render_table_g2,
    selfplay,
    verify_g1,
    verify_g2,
)
from dynnim.kernel import BoundFn, TurnPosition, Verdict, WeightedPosition, has_moves_g2

FNS = (
    BoundFn.constant(2),
    BoundFn.affine(1, 0),
    BoundFn.table((1, 2, 2, 3, 7)),
)

print(__doc__)
failed = False

print("=" * 66)
print("1. Classifier vs exhaustive search")
print("=" * 66)
print()
for f in FNS:
    report = verify_g1(f, max_x=120, max_k=30)
    failed |= not report.passed
    print(report.to_text())
report = verify_g2(max_weight=256)
failed |= not report.passed
print(report.to_text())

print("=" * 66)
print("2. Self-play from winning starts")
print("=" * 66)
print()
rng = random.Random(5)
f = BoundFn.affine(1, 0)

starts = []
while len(starts) < 60:
    pos = TurnPosition(rng.randrange(1, 201), rng.randrange(1, 16))
    if classify_g1(pos, f)[0] is Verdict.N:
        starts.append(pos)
report = selfplay("g1", starts, f=f, opponent="random", seed=17, engine_first=True)
failed |= not report.passed
print(report.to_text())

starts = []
while len(starts) < 60:
    pos = WeightedPosition(rng.randrange(0, 81), rng.randrange(0, 81))
    if has_moves_g2(pos) and classify_g2(pos)[0] is Verdict.N:
        starts.append(pos)
report = selfplay("g2", starts, opponent="random", seed=18, engine_first=True)
failed |= not report.passed
print(report.to_text())

p_starts = enumerate_p_g2(256)
report = selfplay("g2", p_starts, opponent="random", seed=19, engine_first=False)
failed |= not report.passed
print(report.to_text())

print("=" * 66)
print("3. Table dump")
print("=" * 66)
print()
out = Path(tempfile.gettempdir()) / "two_weight_table_127.csv"
dump_table(str(out), render_table_g2(127, fmt="csv"))
lines = out.read_text().splitlines()
print(f"wrote {out} ({len(lines) - 1} rows); first entries:")
for line in lines[:6]:
    print(f"  {line}")
print()

print("campaign", "FAILED" if failed else "passed, all reports green")
sys.exit(1 if failed else 0)
