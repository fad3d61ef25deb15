"""Acceptance gates for the dynnim package.

One test per release criterion.  Each prints a single ``[PASS]``/``[FAIL]``
line with the numbers that justify the verdict; run with

    pytest tests/test_acceptance.py -s

to see every line.  Verdicts are discrete, so every gate is exact: zero
mismatches, zero lost games, zero stray successors.  The two big
classifier-vs-search sweeps also carry wall-clock budgets.

The weight-4096 sweep is expensive and runs only when
``DYNNIM_ACCEPT_EXTENDED=1`` is set in the environment.
"""

import os
import random

import pytest

from dynnim.closed_form import (
    block_bounds_g1,
    classify_g1,
    classify_g2,
    enumerate_p_g1,
    enumerate_p_g2,
)
from dynnim.harness import selfplay, verify_g1, verify_g2
from dynnim.kernel import (
    BoundFn,
    MoveG2,
    TurnPosition,
    Verdict,
    WeightedPosition,
    apply_g2,
    has_moves_g2,
    moves_g1,
    moves_g2,
)
from dynnim.oracle import _successors_g2
from dynnim.strategist import NoMove, Winning, advise_g1, advise_g2

EXTENDED_FLAG = "DYNNIM_ACCEPT_EXTENDED"

# the turn-bound shapes every game-1 gate runs against
CANON_FNS = (
    BoundFn.constant(1),
    BoundFn.constant(2),
    BoundFn.constant(3),
    BoundFn.constant(4),
    BoundFn.affine(1, 0),
    BoundFn.affine(2, 1),
    BoundFn.table((1, 2, 2, 3, 7)),
)

G1_MAX_X = 200
G1_MAX_K = 40
G2_MAX_WEIGHT = 512


def _gate(label: str, ok: bool, detail: str):
    print(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
    assert ok, f"{label}: {detail}"


def test_two_weight_classifier_matches_exhaustive_search():
    report = verify_g2(max_weight=G2_MAX_WEIGHT)
    ok = report.passed and report.p_count == 512 and report.wall_time_s < 60.0
    _gate(
        "two-weight classifier == exhaustive search, weight <= 512",
        ok,
        f"{report.positions} positions, {report.p_count} P, "
        f"{len(report.mismatches)} mismatches, "
        f"{report.wall_time_s:.1f}s (budget 60s)",
    )


@pytest.mark.skipif(
    not os.environ.get(EXTENDED_FLAG),
    reason=f"set {EXTENDED_FLAG}=1 to run the weight-4096 sweep",
)
def test_two_weight_classifier_extended_sweep():
    report = verify_g2(max_weight=4096, use_fast_classify=True)
    ok = report.passed and report.p_count == 4096
    _gate(
        "two-weight classifier == exhaustive search, weight <= 4096",
        ok,
        f"{report.positions} positions, {report.p_count} P, "
        f"{len(report.mismatches)} mismatches, {report.wall_time_s:.1f}s",
    )


def test_turn_bounded_classifier_matches_exhaustive_search():
    positions = 0
    mismatches = 0
    wall = 0.0
    for f in CANON_FNS:
        report = verify_g1(f, max_x=G1_MAX_X, max_k=G1_MAX_K)
        positions += report.positions
        mismatches += len(report.mismatches)
        wall += report.wall_time_s
    ok = mismatches == 0 and wall < 10.0
    _gate(
        "turn-bounded classifier == exhaustive search, 7 bound shapes",
        ok,
        f"{positions} positions (x <= {G1_MAX_X}, k <= {G1_MAX_K}), "
        f"{mismatches} mismatches, {wall:.1f}s (budget 10s)",
    )


# The eight P-positions of total weight 13..15, plus every cell of the
# surrounding one-move-to-P regions.  Each region cell pairs with the
# anchor it can reach; the x-ranges stop exactly where the removal-weight
# cap or the next band of P-positions begins.
ANCHORS = ((7, 0), (6, 1), (5, 3), (4, 7), (3, 9), (2, 11), (1, 13), (0, 15))


def _anchor_region_pairs():
    pairs = []
    for x in range(8, 15):                      # heavier piles left onto (7,0)
        pairs.append(((x, 0), (7, 0)))
    caps = {1: 13, 2: 12, 3: 12, 4: 11, 5: 11, 6: 10}
    for y, cap in caps.items():                 # low rows down-left onto (7,0)
        for x in range(7, cap + 1):
            pairs.append(((x, y), (7, 0)))
    for cell, anchor in (((6, 2), (6, 1)), ((6, 3), (6, 1)),
                         ((6, 4), (6, 1)), ((5, 4), (5, 3))):
        pairs.append((cell, anchor))            # directly above the mid anchors
    for y in (7, 8):                            # band feeding (4,7)
        for x in range(5, 12):
            pairs.append(((x, y), (4, 7)))
    ladder = {1: (3, 9), 2: (2, 11), 3: (1, 13), 4: (0, 15)}
    for i, anchor in ladder.items():            # staircase rows, two per rung
        rows = [7 + 2 * i] + ([8 + 2 * i] if i <= 3 else [])
        for y in rows:
            for x in range(5 - i, 12 - i):
                pairs.append(((x, y), anchor))
    for y in range(16, 28):                     # tall light-heavy tail onto (0,15)
        i = (y - 7) // 2 if y % 2 else (y - 8) // 2
        for x in range(1, 12 - i):
            pairs.append(((x, y), (0, 15)))
    return pairs


def test_anchor_band_and_its_predecessors():
    for ax, ay in ANCHORS:
        verdict, tag = classify_g2(WeightedPosition(ax, ay))
        assert verdict is Verdict.P and tag is not None
    pairs = _anchor_region_pairs()
    cells = {cell for cell, _ in pairs}
    assert len(cells) == len(pairs) == 155
    for (cx, cy), (ax, ay) in pairs:
        cell = WeightedPosition(cx, cy)
        assert classify_g2(cell)[0] is Verdict.N
        landed = apply_g2(cell, MoveG2(cx - ax, cy - ay))
        assert (landed.heavy, landed.light) == (ax, ay)
    _gate(
        "weight 13..15 anchors and their predecessors",
        True,
        f"8 anchors P, {len(pairs)} surrounding cells N, "
        "each with a legal move onto its anchor",
    )


def test_constant_bound_reduces_to_classic_subtraction():
    checked = 0
    for c in range(1, 10):
        f = BoundFn.constant(c)
        for k in (1, 5, 40):
            for x in range(0, 501):
                verdict, _ = classify_g1(TurnPosition(x, k), f)
                want = Verdict.P if x % (c + 1) == 0 else Verdict.N
                assert verdict is want, (c, k, x)
                checked += 1
            for n in range(0, 501 // (c + 1) + 1):
                block = block_bounds_g1(f, k, n)
                assert block.lo == block.hi == n * (c + 1)
    _gate(
        "constant bounds reduce to the classic subtraction game",
        True,
        f"{checked} positions, c in 1..9: P exactly at multiples of c+1, "
        "all blocks degenerate",
    )


def test_p_positions_admit_no_p_successor():
    g2_checked = 0
    for pos in enumerate_p_g2(G2_MAX_WEIGHT):
        for x2, y2 in _successors_g2(pos.heavy, pos.light):
            assert classify_g2(WeightedPosition(x2, y2))[0] is Verdict.N, (pos, x2, y2)
            g2_checked += 1
    g1_checked = 0
    for f in CANON_FNS:
        for k in range(1, G1_MAX_K + 1):
            for block in enumerate_p_g1(f, k, G1_MAX_X):
                for u in range(block.lo, block.hi + 1):
                    for take in range(1, min(f(k), u) + 1):
                        succ = TurnPosition(u - take, k + 1)
                        assert classify_g1(succ, f)[0] is Verdict.N, (f.spec(), u, k, take)
                        g1_checked += 1
    _gate(
        "P-positions admit no P-successor",
        True,
        f"{g2_checked} successor moves from weight <= 512 P-positions, "
        f"{g1_checked} from turn-bounded P-positions: all land on N",
    )


def test_n_positions_get_a_certified_winning_move():
    g2_checked = 0
    for w in range(0, G2_MAX_WEIGHT + 1):
        for x in range(0, w // 2 + 1):
            pos = WeightedPosition(x, w - 2 * x)
            if classify_g2(pos)[0] is not Verdict.N:
                continue
            advice = advise_g2(pos)
            assert isinstance(advice, Winning), pos
            landed = apply_g2(pos, advice.move)
            assert landed == advice.target
            verdict, tag = classify_g2(landed)
            assert verdict is Verdict.P and tag == advice.witness, pos
            g2_checked += 1
    g1_checked = 0
    for f in CANON_FNS:
        for k in range(1, G1_MAX_K + 1):
            for x in range(1, G1_MAX_X + 1):
                pos = TurnPosition(x, k)
                if classify_g1(pos, f)[0] is not Verdict.N:
                    continue
                advice = advise_g1(pos, f)
                assert isinstance(advice, Winning), (f.spec(), pos)
                assert 1 <= advice.move.take <= f(k)
                target = TurnPosition(x - advice.move.take, k + 1)
                assert target == advice.target
                verdict, block = classify_g1(target, f)
                assert verdict is Verdict.P and block == advice.witness, (f.spec(), pos)
                g1_checked += 1
    _gate(
        "every N-position gets a certified winning move",
        True,
        f"{g2_checked} two-weight and {g1_checked} turn-bounded N-positions: "
        "each advised move is legal and lands on a classified P-position",
    )


def test_selfplay_engine_converts_every_won_start():
    rng = random.Random(20260822)
    f = BoundFn.affine(1, 0)

    g2_n_starts = []
    while len(g2_n_starts) < 200:
        pos = WeightedPosition(rng.randrange(0, 121), rng.randrange(0, 121))
        if has_moves_g2(pos) and classify_g2(pos)[0] is Verdict.N:
            g2_n_starts.append(pos)
    g2_p_starts = rng.sample(enumerate_p_g2(G2_MAX_WEIGHT), 200)

    g1_n_starts = []
    while len(g1_n_starts) < 200:
        pos = TurnPosition(rng.randrange(1, 301), rng.randrange(1, 26))
        if classify_g1(pos, f)[0] is Verdict.N:
            g1_n_starts.append(pos)
    g1_p_cells = []
    for k in range(1, 26):
        for block in enumerate_p_g1(f, k, 300):
            g1_p_cells.extend(TurnPosition(u, k) for u in range(block.lo, block.hi + 1))
    g1_p_starts = rng.sample(g1_p_cells, 200)

    reports = [
        selfplay("g2", g2_n_starts, opponent="random", seed=101, engine_first=True),
        selfplay("g2", g2_p_starts, opponent="random", seed=102, engine_first=False),
        selfplay("g1", g1_n_starts, f=f, opponent="random", seed=103, engine_first=True),
        selfplay("g1", g1_p_starts, f=f, opponent="random", seed=104, engine_first=False),
    ]
    ok = all(r.passed for r in reports)
    detail = ", ".join(
        f"{r.game} {'first' if r.engine_first else 'second'} "
        f"{r.engine_wins}/{r.trials}"
        for r in reports
    )
    _gate("self-play: engine converts every won start", ok, detail)


def test_terminal_positions_close_the_rules():
    for x, y in ((0, 0), (0, 1), (1, 0)):
        pos = WeightedPosition(x, y)
        verdict, _ = classify_g2(pos)
        assert verdict is Verdict.P
        assert not has_moves_g2(pos) and moves_g2(pos) == []
        assert isinstance(advise_g2(pos), NoMove)
    for f in CANON_FNS:
        for k in (1, 2, 9, 40):
            pos = TurnPosition(0, k)
            assert classify_g1(pos, f)[0] is Verdict.P
            assert moves_g1(pos, f) == []
            assert isinstance(advise_g1(pos, f), NoMove)
    _gate(
        "terminal positions close the rules",
        True,
        "(0,0), (0,1), (1,0) are stuck P-positions; an empty pile is stuck "
        "at every turn under every bound shape",
    )
