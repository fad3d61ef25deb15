"""Verification campaigns, self-play trials, and table dumps.

The verification functions replay the closed-form classifiers against
the exhaustive solvers position by position and report every
disagreement; an empty mismatch list is the pass condition.  Self-play
pits the strategist against a chosen opponent policy over seeded trials
and records a full transcript of any game the engine loses from a
winning start.

Reports serialize to text for reading and to JSON for archiving.  The
JSON form omits wall-clock time so that identical inputs produce
byte-identical output; timing stays visible in the text rendering.
Randomness comes from :class:`random.Random` (Mersenne Twister) seeded
with the ``seed`` recorded in the report.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field

from .closed_form import (
    classify_g1,
    classify_g2,
    enumerate_p_g1,
    _classify_xy,
)
from .kernel import (
    BoundFn,
    TurnPosition,
    Verdict,
    WeightedPosition,
    apply_g1,
    apply_g2,
    moves_g1,
    moves_g2,
)
from .oracle import OracleG1, OracleG2
from .strategist import NoMove, advise_g1, advise_g2


@dataclass
class VerificationReport:
    """Outcome of one classifier-vs-solver campaign."""

    game: str
    params: str
    positions: int
    p_count: int
    mismatches: list[dict] = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> str:
        payload = {
            "game": self.game,
            "params": self.params,
            "positions": self.positions,
            "pCount": self.p_count,
            "passed": self.passed,
            "mismatches": self.mismatches,
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"{'PASS' if self.passed else 'FAIL'} {self.game} {self.params}",
            f"  positions checked: {self.positions}",
            f"  P-positions:       {self.p_count}",
            f"  wall time:         {self.wall_time_s:.2f}s",
        ]
        if self.mismatches:
            first = self.mismatches[0]
            lines.append(f"  mismatches:        {len(self.mismatches)}")
            lines.append(f"  first mismatch:    {first}")
        return "\n".join(lines) + "\n"


def verify_g1(f: BoundFn, max_x: int = 200, max_k: int = 40) -> VerificationReport:
    """Compare the block classifier with the exhaustive solver on every
    position with stones <= max_x and start turn <= max_k."""
    start = time.perf_counter()
    oracle = OracleG1(f, max_stones=max(max_x, 1))
    mismatches = []
    positions = 0
    p_count = 0
    for k in range(1, max_k + 1):
        for x in range(0, max_x + 1):
            pos = TurnPosition(x, k)
            formula, _ = classify_g1(pos, f)
            truth = oracle.solve(pos)
            positions += 1
            if truth is Verdict.P:
                p_count += 1
            if formula is not truth:
                mismatches.append(
                    {"position": f"x={x},k={k}", "formula": formula.value, "oracle": truth.value}
                )
    return VerificationReport(
        game="g1",
        params=f"f={f.spec()} max_x={max_x} max_k={max_k}",
        positions=positions,
        p_count=p_count,
        mismatches=mismatches,
        wall_time_s=time.perf_counter() - start,
    )


def verify_g2(max_weight: int = 512, use_fast_classify: bool = False) -> VerificationReport:
    """Compare the family classifier with the sweep solver on every
    position of weight <= max_weight.

    ``use_fast_classify`` skips position-object construction on very
    large sweeps; the decision logic is the same either way.
    """
    start = time.perf_counter()
    oracle = OracleG2(max_weight=max(max_weight, 1))
    mismatches = []
    positions = 0
    p_count = 0
    for x, y, truth in oracle.iter_sweep(max_weight):
        if use_fast_classify:
            formula, _ = _classify_xy(x, y)
        else:
            formula, _ = classify_g2(WeightedPosition(x, y))
        positions += 1
        if truth is Verdict.P:
            p_count += 1
        if formula is not truth:
            mismatches.append(
                {"position": f"x={x},y={y}", "formula": formula.value, "oracle": truth.value}
            )
    return VerificationReport(
        game="g2",
        params=f"max_weight={max_weight}",
        positions=positions,
        p_count=p_count,
        mismatches=mismatches,
        wall_time_s=time.perf_counter() - start,
    )


@dataclass
class SelfPlayReport:
    """Outcome of a batch of engine games from fixed starts."""

    game: str
    starts: str
    opponent: str
    engine_first: bool
    trials: int
    engine_wins: int
    seed: int
    loss_transcripts: list[list[dict]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.engine_wins == self.trials

    def to_json(self) -> str:
        payload = {
            "game": self.game,
            "starts": self.starts,
            "opponent": self.opponent,
            "engineFirst": self.engine_first,
            "trials": self.trials,
            "engineWins": self.engine_wins,
            "seed": self.seed,
            "lossTranscripts": self.loss_transcripts,
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_text(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        lines = [
            f"{head} selfplay {self.game} starts={self.starts}",
            f"  opponent:    {self.opponent}"
            + ("  (engine moves first)" if self.engine_first else "  (engine moves second)"),
            f"  trials:      {self.trials}",
            f"  engine wins: {self.engine_wins}",
            f"  seed:        {self.seed}",
        ]
        if self.loss_transcripts:
            lines.append(f"  losses recorded: {len(self.loss_transcripts)}")
        return "\n".join(lines) + "\n"


def _game_adapter(game: str, f: BoundFn | None):
    if game == "g1":
        if f is None:
            raise ValueError("game 1 needs a bound function")
        return (
            lambda pos: moves_g1(pos, f),
            lambda pos: advise_g1(pos, f),
            lambda pos, move: apply_g1(pos, f, move),
            lambda pos: {"u": pos.stones, "k": pos.turn},
            lambda move: {"take": move.take},
        )
    if game == "g2":
        return (
            moves_g2,
            advise_g2,
            apply_g2,
            lambda pos: {"x": pos.heavy, "y": pos.light},
            lambda move: {"takeHeavy": move.take_heavy, "takeLight": move.take_light},
        )
    raise ValueError(f"unknown game {game!r}")


def selfplay(
    game: str,
    starts: list,
    *,
    f: BoundFn | None = None,
    opponent: str = "random",
    trials: int | None = None,
    seed: int = 0,
    engine_first: bool = True,
) -> SelfPlayReport:
    """Play ``trials`` games (cycling through ``starts``) with the engine
    following the strategist and the opponent playing ``random`` moves or
    the same ``engine`` policy.  A player with no move loses."""
    if opponent not in ("random", "engine"):
        raise ValueError("opponent must be 'random' or 'engine'")
    if not starts:
        raise ValueError("at least one start position required")
    legal, advise, apply_move, pos_json, move_json = _game_adapter(game, f)
    if trials is None:
        trials = len(starts)
    rng = random.Random(seed)
    wins = 0
    losses = []
    for trial in range(trials):
        pos = starts[trial % len(starts)]
        engine_to_move = engine_first
        transcript = [{"actor": "start", "position": pos_json(pos)}]
        while True:
            options = legal(pos)
            if not options:
                engine_won = not engine_to_move
                break
            if engine_to_move or opponent == "engine":
                advice = advise(pos)
                assert not isinstance(advice, NoMove)
                move = advice.move
            else:
                move, _ = rng.choice(options)
            pos = apply_move(pos, move)
            transcript.append(
                {
                    "actor": "engine" if engine_to_move else "opponent",
                    "move": move_json(move),
                    "position": pos_json(pos),
                }
            )
            engine_to_move = not engine_to_move
        if engine_won:
            wins += 1
        else:
            losses.append(transcript)
    if game == "g1":
        start_desc = f"f={f.spec()} " + ",".join(
            f"({p.stones},{p.turn})" for p in starts[:3]
        )
    else:
        start_desc = ",".join(f"({p.heavy},{p.light})" for p in starts[:3])
    if len(starts) > 3:
        start_desc += f",... ({len(starts)} starts)"
    return SelfPlayReport(
        game=game,
        starts=start_desc,
        opponent=opponent,
        engine_first=engine_first,
        trials=trials,
        engine_wins=wins,
        seed=seed,
        loss_transcripts=losses,
    )


def render_table_g2(max_weight: int, fmt: str = "csv") -> str:
    """Verdict/family table for every position of weight <= max_weight,
    sorted by (weight, heavy).  Formats: csv, json, text."""
    rows = []
    for w in range(0, max_weight + 1):
        for x in range(0, w // 2 + 1):
            y = w - 2 * x
            verdict, tag = _classify_xy(x, y)
            rows.append((x, y, verdict.value, tag.label() if tag else ""))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "y", "verdict", "family"])
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        payload = [
            {"x": x, "y": y, "verdict": v, "family": fam or None}
            for x, y, v, fam in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "text":
        out = [f"{'x':>6} {'y':>6} verdict family"]
        out += [f"{x:>6} {y:>6} {v:>7} {fam}".rstrip() for x, y, v, fam in rows]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_blocks_g1(f: BoundFn, k: int, max_x: int, fmt: str = "csv") -> str:
    """Block table at turn k clipped to max_x.  Formats: csv, json, text."""
    blocks = enumerate_p_g1(f, k, max_x)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "n", "lo", "hi"])
        writer.writerows((k, b.index, b.lo, b.hi) for b in blocks)
        return buf.getvalue()
    if fmt == "json":
        payload = [{"k": k, "n": b.index, "lo": b.lo, "hi": b.hi} for b in blocks]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "text":
        out = [f"blocks for f={f.spec()} at turn {k} (counts <= {max_x})"]
        out += [f"  n={b.index:<4} [{b.lo}, {b.hi}]" for b in blocks]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def dump_table(path: str, content: str):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(content)
