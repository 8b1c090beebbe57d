"""Random-order edge streams with segment addressing and memory metering.

Positions are 1-based. A segment ``[lo, hi]`` is inclusive on both ends and
empty iff ``lo == hi + 1``; half-open segments from fraction arithmetic use
the floor rule of :func:`segment_of_fraction`. Streams are strictly
one-pass: re-reading any position raises :class:`SinglePassViolation`, and
a consumed-position bitmap (on by default) audits this independently of
the cursor.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import Bipartition, Edge, Graph


class SinglePassViolation(RuntimeError):
    """A stream position was read twice, or a segment rewound the cursor."""


@dataclass(frozen=True)
class Segment:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 1 or self.lo > self.hi + 1:
            raise ValueError(f"bad segment [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1


def segment_of_fraction(m: int, start_frac: float, end_frac: float) -> Segment:
    """Segment ``[floor(m*start)+1, floor(m*end)]`` of an m-edge stream.

    The floor rule is fixed once here so every run is reproducible; empty
    segments are fine.
    """
    if m < 0:
        raise ValueError("stream length must be non-negative")
    if not 0.0 <= start_frac <= end_frac <= 1.0:
        raise ValueError(f"fractions out of range: ({start_frac}, {end_frac})")
    lo = math.floor(m * start_frac) + 1
    hi = math.floor(m * end_frac)
    return Segment(lo, max(hi, lo - 1))


class EdgeStream:
    """A permutation of a graph's edges exposed as a one-pass stream.

    ``cursor`` is the next unread position (1-based, ``m+1`` when
    exhausted). Segments may skip forward but never rewind. With
    ``track_reads`` (default) every consumed position is recorded in a
    bitmap and a second read raises, independent of the cursor check.
    """

    def __init__(
        self,
        edges: Iterable[Edge],
        n: int | None = None,
        bipartition: Bipartition | None = None,
        track_reads: bool = True,
    ):
        self.edges = tuple(edges)
        self.m = len(self.edges)
        self.n = n
        self.bipartition = bipartition
        self.cursor = 1
        self._consumed = bytearray(self.m + 1) if track_reads else None

    def iterate(self, seg: Segment) -> Iterator[Edge]:
        """Yield edges at positions ``seg.lo..seg.hi``, advancing the cursor."""
        for _, e in self.iterate_with_positions(seg):
            yield e

    def iterate_with_positions(self, seg: Segment) -> Iterator[tuple[int, Edge]]:
        if seg.hi > self.m:
            raise ValueError(f"segment [{seg.lo}, {seg.hi}] beyond stream of length {self.m}")
        if len(seg) == 0:
            return
        if seg.lo < self.cursor:
            raise SinglePassViolation(
                f"segment [{seg.lo}, {seg.hi}] rewinds past cursor {self.cursor}"
            )
        consumed = self._consumed
        edges = self.edges
        for pos in range(seg.lo, seg.hi + 1):
            if consumed is not None:
                if consumed[pos]:
                    raise SinglePassViolation(f"position {pos} read twice")
                consumed[pos] = 1
            self.cursor = pos + 1
            yield pos, edges[pos - 1]

    def remaining(self) -> Segment:
        return Segment(self.cursor, self.m)

    def positions_consumed(self) -> int:
        if self._consumed is None:
            raise ValueError("read tracking disabled for this stream")
        return sum(self._consumed)


def shuffle(g: Graph, seed: int) -> EdgeStream:
    """Uniform random permutation of ``g``'s edges as an :class:`EdgeStream`.

    Fisher-Yates shuffle driven by Python's seeded Mersenne Twister
    (``random.Random``), whose sequence is stable across platforms and
    versions, so one seed pins one stream.
    """
    if g.m == 0:
        raise ValueError("cannot stream an empty graph")
    order = list(g.edges)
    random.Random(seed).shuffle(order)
    return EdgeStream(order, n=g.n, bipartition=g.bipartition)


@dataclass
class MemoryMeter:
    """Counts currently retained edges against an optional budget.

    Exceeding the budget latches ``budget_exceeded`` and the run continues;
    truncating behavior silently would change the algorithms, so violations
    are surfaced instead.
    """

    budget: int | None = None
    stored_now: int = 0
    stored_peak: int = 0
    budget_exceeded: bool = False

    def store(self, k: int = 1) -> None:
        if k < 0:
            raise ValueError("cannot store a negative count")
        self.stored_now += k
        if self.stored_now > self.stored_peak:
            self.stored_peak = self.stored_now
        if self.budget is not None and self.stored_now > self.budget:
            self.budget_exceeded = True

    def release(self, k: int = 1) -> None:
        if k < 0:
            raise ValueError("cannot release a negative count")
        if k > self.stored_now:
            raise ValueError(f"release of {k} exceeds stored_now={self.stored_now}")
        self.stored_now -= k
