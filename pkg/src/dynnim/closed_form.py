"""Closed-form win/loss classification for both games.

Game 1.  At turn k the losing-for-the-mover stone counts form separated
intervals, the *blocks*.  Block 0 is the single count 0; block n has

    lo(n) = sum_{t=1..n} (f(k + 2t - 2) + 1)
    hi(n) = sum_{t=1..n} (f(k + 2t - 1) + 1)

so lo alternates the even-offset caps and hi the odd ones.  Because f
never decreases, lo(n) <= hi(n) < lo(n+1): the blocks are disjoint and
leave a gap before the next one.  A position is P exactly when its count
falls inside some block, and shifting the start turn by 2 renames block
n+1 at turn k to block n at turn k+2.

Game 2.  P-positions cluster just below powers of two in total weight
w = 2*heavy + light.  With y = light, the three families are

    family P1:  w + 2 = 2^(n+1)  and  y = 0               (one member)
    family P2:  w + 3 = 2^(n+1)  and  1 <= y <= 2n - 3
    family P3:  w + 1 = 2^(n+1)  and  y >= 2n + 1

written out, the members are

    P1: (2^n - 1, 0)
    P2: (2^n - i - 1, 2i - 1)      for 1 <= i <= n - 1
    P3: (2^n - n - i, 2n + 2i - 1) for 1 <= i <= 2^n - n

for every n >= 0; n = 0 contributes the stuck positions (0, 0) and
(0, 1), and (1, 0) is P1 with n = 1.  At most one family can claim a
position, so the tag returned with a P verdict is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .kernel import (
    BoundFn,
    RangeLimitError,
    TurnPosition,
    Verdict,
    WeightedPosition,
    _check_cap,
)


@dataclass(frozen=True)
class BlockBounds:
    """Inclusive stone-count interval of one game 1 block."""

    index: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("block index must be non-negative")
        if not 0 <= self.lo <= self.hi:
            raise ValueError("block bounds must satisfy 0 <= lo <= hi")

    def __contains__(self, stones: int) -> bool:
        return self.lo <= stones <= self.hi


@dataclass(frozen=True)
class PFamilyTag:
    """Which game 2 family a P-position belongs to, with its indices."""

    kind: str
    n: int
    i: int | None = None

    def __post_init__(self):
        if self.kind == "P1":
            if self.n < 0 or self.i is not None:
                raise ValueError("P1 takes n >= 0 and no member index")
        elif self.kind == "P2":
            if self.n < 2 or self.i is None or not 1 <= self.i <= self.n - 1:
                raise ValueError("P2 needs n >= 2 and 1 <= i <= n-1")
        elif self.kind == "P3":
            if self.n < 0 or self.i is None or not 1 <= self.i <= (1 << self.n) - self.n:
                raise ValueError("P3 needs n >= 0 and 1 <= i <= 2^n - n")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    def label(self) -> str:
        # colon-separated so the label embeds cleanly in csv rows
        if self.i is None:
            return f"{self.kind}:n={self.n}"
        return f"{self.kind}:n={self.n}:i={self.i}"


def block_bounds_g1(f: BoundFn, k: int, n: int) -> BlockBounds:
    """Bounds of block n for games starting at turn k (literal sums)."""
    if n < 0:
        raise ValueError("block index must be non-negative")
    lo = sum(f(k + 2 * t - 2) + 1 for t in range(1, n + 1))
    hi = sum(f(k + 2 * t - 1) + 1 for t in range(1, n + 1))
    _check_cap(hi, f"block {n} upper bound")
    return BlockBounds(n, lo, hi)


def iter_blocks_g1(f: BoundFn, k: int) -> Iterator[BlockBounds]:
    """Blocks 0, 1, 2, ... at turn k via running sums."""
    lo = hi = 0
    n = 0
    while True:
        yield BlockBounds(n, lo, hi)
        n += 1
        lo += f(k + 2 * n - 2) + 1
        hi += f(k + 2 * n - 1) + 1


def locate_g1(pos: TurnPosition, f: BoundFn) -> tuple[Verdict, int]:
    """Verdict plus a block index: the containing block when P, the index
    of the first block past the count when N."""
    x, k = pos.stones, pos.turn
    lo = hi = 0
    n = 0
    while True:
        if x < lo:
            return (Verdict.N, n)
        if x <= hi:
            return (Verdict.P, n)
        n += 1
        lo += f(k + 2 * n - 2) + 1
        # hi is only needed when x might sit inside block n; skipping it
        # when x < lo keeps huge bound values from tripping the range cap
        # on a block the query never reaches
        if x >= lo:
            hi += f(k + 2 * n - 1) + 1


def classify_g1(pos: TurnPosition, f: BoundFn) -> tuple[Verdict, int | None]:
    """Closed-form verdict; on P also the index of the containing block."""
    verdict, n = locate_g1(pos, f)
    return (verdict, n if verdict is Verdict.P else None)


def enumerate_p_g1(f: BoundFn, k: int, max_x: int) -> list[BlockBounds]:
    """Blocks at turn k clipped to counts <= max_x, in index order."""
    if max_x < 0:
        raise ValueError("max_x must be non-negative")
    _check_cap(max_x, "max_x")
    out = []
    for blk in iter_blocks_g1(f, k):
        if blk.lo > max_x:
            break
        out.append(BlockBounds(blk.index, blk.lo, min(blk.hi, max_x)))
    return out


def _pow2_exponent(v: int) -> int | None:
    # exponent m >= 1 with v = 2^m, else None
    if v >= 2 and v & (v - 1) == 0:
        return v.bit_length() - 1
    return None


def _classify_xy(x: int, y: int) -> tuple[Verdict, PFamilyTag | None]:
    w = 2 * x + y
    m = _pow2_exponent(w + 2)
    if m is not None and y == 0:
        return (Verdict.P, PFamilyTag("P1", m - 1))
    m = _pow2_exponent(w + 3)
    if m is not None:
        n = m - 1
        if 1 <= y <= 2 * n - 3:
            return (Verdict.P, PFamilyTag("P2", n, (y + 1) // 2))
    m = _pow2_exponent(w + 1)
    if m is not None:
        n = m - 1
        if y >= 2 * n + 1:
            return (Verdict.P, PFamilyTag("P3", n, (y - 2 * n + 1) // 2))
    return (Verdict.N, None)


def classify_g2(pos: WeightedPosition) -> tuple[Verdict, PFamilyTag | None]:
    """Closed-form verdict; on P also the canonical family tag."""
    return _classify_xy(pos.heavy, pos.light)


def iter_p_families(max_weight: int) -> Iterator[tuple[WeightedPosition, PFamilyTag]]:
    """Every P-position of weight <= max_weight generated family by family,
    ordered by (weight, heavy).  This is the member-list route, independent
    of the weight tests in :func:`classify_g2`."""
    if max_weight < 0:
        raise ValueError("max_weight must be non-negative")
    _check_cap(max_weight, "max_weight")
    out = []
    n = 0
    while (1 << (n + 1)) - 3 <= max_weight:
        top = 1 << n
        if 2 * top - 2 <= max_weight:
            out.append((WeightedPosition(top - 1, 0), PFamilyTag("P1", n)))
        if n >= 2 and 2 * top - 3 <= max_weight:
            for i in range(1, n):
                out.append((WeightedPosition(top - i - 1, 2 * i - 1), PFamilyTag("P2", n, i)))
        if 2 * top - 1 <= max_weight:
            for i in range(1, top - n + 1):
                out.append((WeightedPosition(top - n - i, 2 * n + 2 * i - 1), PFamilyTag("P3", n, i)))
        n += 1
    out.sort(key=lambda item: (item[0].weight, item[0].heavy))
    return iter(out)


def enumerate_p_g2(max_weight: int) -> list[WeightedPosition]:
    """All P-positions of weight <= max_weight, sorted by (weight, heavy)."""
    return [pos for pos, _ in iter_p_families(max_weight)]
