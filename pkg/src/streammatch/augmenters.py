"""Recursive streaming augmenters.

Two variants over a stream suffix and a starting matching: the three-path
augmenter grows the matching through 3-edge augmenting paths; the
three/five variant adds a connector phase that also closes 5-edge paths.
Both return a candidate edge set T that always contains the starting
matching, ready for one offline exact matching over ``T`` plus whatever
else the caller stored.

The core is an offer-based state machine (:class:`AugmenterRun`) so a
pipeline can dispatch each arriving edge to several consumers in one
physical pass. Edges must arrive normalized (A-side endpoint first) with
strictly increasing positions. Phase boundaries are fractions of the
remaining suffix, recomputed at every recursion; a boundary is acted on
when the first position beyond it shows up (or at ``finish``), which is
equivalent to eager handling because decisions consume no edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .augpaths import (
    WingContext,
    both_wing_paths,
    paths_from_connector,
    select_disjoint,
    three_aug_from_wings,
)
from .core import AugPathSet, Edge, Matching, apply_augmenting_paths
from .greedy import GreedyMatcher
from .stream import EdgeStream, MemoryMeter


@dataclass(frozen=True)
class AugmenterParams:
    """Knobs shared by the augmenters and the pipelines.

    ``tau`` is the stream fraction per wing phase, ``recursion_threshold_frac``
    the fraction of the current matching that found paths must reach before
    the augmenter applies them and recurses, and ``prefix_frac`` the stream
    prefix the pipelines feed to the initial greedy pass.

    Two presets: ``practical`` (defaults below) for desk-scale experiments,
    and ``paper`` with the asymptotic formula values, where each phase is
    floored at one edge so tiny streams remain well formed.
    """

    tau: float = 0.05
    recursion_threshold_frac: float = 0.05
    max_recursion_depth: int = 16
    prefix_frac: float = 0.1
    preset: str = "practical"

    def __post_init__(self):
        if not 0.0 < self.tau <= 1.0 / 6.0:
            raise ValueError(f"tau={self.tau} outside (0, 1/6]")
        if not 0.0 < self.recursion_threshold_frac <= 1.0:
            raise ValueError("recursion threshold fraction outside (0, 1]")
        if self.max_recursion_depth < 1:
            raise ValueError("max recursion depth must be >= 1")
        if not 0.0 < self.prefix_frac <= 1.0:
            raise ValueError("prefix fraction outside (0, 1]")

    @classmethod
    def practical(cls) -> "AugmenterParams":
        return cls()

    @classmethod
    def paper(cls, n: int) -> "AugmenterParams":
        """Formula values for an n-vertex graph: tau = 1/(100 log2^3 n),
        threshold and prefix 1/log2 n, depth cap 2 log2^2 n."""
        log2n = max(math.log2(max(n, 2)), 1.0)
        return cls(
            tau=min(1.0 / (100.0 * log2n**3), 1.0 / 6.0),
            recursion_threshold_frac=min(1.0 / log2n, 1.0),
            max_recursion_depth=max(1, math.ceil(2.0 * log2n**2)),
            prefix_frac=min(1.0 / log2n, 1.0),
            preset="paper",
        )


@dataclass(frozen=True)
class CandidateSet:
    """Result of an augmenter run.

    ``edges`` is T; ``components`` holds the final recursion level's
    labeled sub-sets (m0, p1, p2, q1, q2, c, r1..r5) for diagnostics;
    ``final_suffix_start`` is the stream position where that level began.
    The starting matching is always a subset of ``edges``.
    """

    edges: frozenset[Edge]
    components: dict[str, frozenset[Edge]]
    recursion_depth_used: int
    depth_capped: bool
    final_suffix_start: int

    def size(self) -> int:
        return len(self.edges)


_PHASE1, _PHASE2, _PHASE3, _COLLECT = range(4)

_R_NAMES = ("r1", "r2", "r3", "r4", "r5")


class AugmenterRun:
    """One augmenter execution consuming a dispatched sub-stream.

    ``suffix_start..suffix_end`` bound the positions this run owns. The
    caller offers any subset of those positions in increasing order; in
    nested pipelines the "positions" are sub-stream edge counts against a
    proxy length. The starting matching counts as already stored by the
    caller: the meter is charged only for edges newly retained here.
    """

    def __init__(
        self,
        m0: Matching,
        params: AugmenterParams,
        suffix_start: int,
        suffix_end: int,
        five_paths: bool,
        meter: MemoryMeter | None = None,
    ):
        if suffix_start < 1:
            raise ValueError("suffix start must be >= 1")
        self.params = params
        self.meter = meter if meter is not None else MemoryMeter()
        self.suffix_end = suffix_end
        self.five = five_paths
        self.m0 = m0.copy()
        self.depth_used = 0
        self.depth_capped = False
        self.accumulated: set[Edge] = set()
        self._retained: set[Edge] = set(self.m0.edge_set())
        self._last_pos = suffix_start - 1
        self._enter_level(suffix_start)

    # -- level plumbing ----------------------------------------------------

    def _enter_level(self, start: int) -> None:
        self.level_start = start
        self.p1 = GreedyMatcher()
        self.q1 = GreedyMatcher()
        self.p2 = GreedyMatcher()
        self.q2 = GreedyMatcher()
        self.c = GreedyMatcher()
        self.r: dict[str, list[Edge]] = {name: [] for name in _R_NAMES}
        self.ctx: WingContext | None = None
        remaining = self.suffix_end - start + 1
        if remaining <= 0:
            self._close_phase1()
            self.state = _COLLECT
            return
        seg = max(1, math.floor(remaining * self.params.tau))
        self.end1 = start - 1 + min(seg, remaining)
        self.end2 = self.end1 + min(seg, self.suffix_end - self.end1)
        if self.five:
            self.end3 = self.end2 + min(seg, self.suffix_end - self.end2)
        else:
            self.end3 = self.end2
        self.state = _PHASE1

    def _close_phase1(self) -> None:
        self.ctx = WingContext.build(self.m0, self.p1.matching, self.q1.matching)

    def _phase_end(self) -> int:
        if self.state == _PHASE1:
            return self.end1
        if self.state == _PHASE2:
            return self.end2
        return self.end3

    def _advance(self, pos: int) -> None:
        while self.state != _COLLECT and pos > self._phase_end():
            if self.state == _PHASE1:
                self._close_phase1()
                self.state = _PHASE2
            elif self.state == _PHASE2 and self.five:
                self.state = _PHASE3
            else:
                self._decide(self._phase_end())

    def _found_paths(self) -> AugPathSet:
        ctx = self.ctx
        assert ctx is not None
        if not self.five:
            p_count, q_count = len(self.p2), len(self.q2)
            if p_count >= q_count:
                return three_aug_from_wings(ctx, self.p2.matching, "p")
            return three_aug_from_wings(ctx, self.q2.matching, "q")
        return select_disjoint(
            [
                paths_from_connector(ctx, self.c.matching),
                both_wing_paths(ctx),
                three_aug_from_wings(ctx, self.p2.matching, "p"),
                three_aug_from_wings(ctx, self.q2.matching, "q"),
            ]
        )

    def _decide(self, decision_pos: int) -> None:
        paths = self._found_paths()
        need = self.params.recursion_threshold_frac * len(self.m0)
        if len(paths) >= need and len(paths) >= 1:
            if self.depth_used >= self.params.max_recursion_depth:
                # cap is defensive: flag the run and keep collecting
                self.depth_capped = True
                self.state = _COLLECT
                return
            self.depth_used += 1
            self.accumulated |= self.m0.edge_set()
            self.m0 = apply_augmenting_paths(self.m0, paths)
            keep = self.accumulated | self.m0.edge_set()
            dropped = len(self._retained) - len(self._retained & keep)
            if dropped:
                self.meter.release(dropped)
            self._retained &= keep
            self._enter_level(decision_pos + 1)
            return
        self.state = _COLLECT

    def _retain(self, e: Edge) -> None:
        if e not in self._retained:
            self._retained.add(e)
            self.meter.store(1)

    # -- streaming interface -----------------------------------------------

    def offer(self, pos: int, e: Edge) -> None:
        if pos <= self._last_pos:
            raise ValueError(f"positions must increase: got {pos} after {self._last_pos}")
        if pos > self.suffix_end:
            raise ValueError(f"position {pos} beyond suffix end {self.suffix_end}")
        self._last_pos = pos
        self._advance(pos)
        a, b = e
        pm = self.m0.partner
        am = a in pm
        bm = b in pm
        state = self.state
        if state == _PHASE1:
            if am and not bm:
                if self.p1.offer(e):
                    self._retain(e)
            elif bm and not am:
                if self.q1.offer(e):
                    self._retain(e)
        elif state == _PHASE2:
            ctx = self.ctx
            if not am and ctx.in_b_mp(b):
                if self.p2.offer(e):
                    self._retain(e)
            elif not bm and ctx.in_a_mq(a):
                if self.q2.offer(e):
                    self._retain(e)
        elif state == _PHASE3:
            ctx = self.ctx
            if ctx.in_a_mq(a) and ctx.in_b_mp(b):
                if self.c.offer(e):
                    self._retain(e)
        else:
            self._collect(e, a, b, am, bm)

    def _collect(self, e: Edge, a: int, b: int, am: bool, bm: bool) -> None:
        ctx = self.ctx
        stored = False
        if not am and ctx.in_b_mp(b):
            p2p = self.p2.partner
            if a not in p2p and b not in p2p:
                self.r["r1"].append(e)
                stored = True
        if not bm and ctx.in_a_mq(a):
            q2p = self.q2.partner
            if a not in q2p and b not in q2p:
                self.r["r2"].append(e)
                stored = True
        if am and not bm:
            p1p = self.p1.partner
            if a not in p1p and b not in p1p:
                self.r["r3"].append(e)
                stored = True
        if bm and not am:
            q1p = self.q1.partner
            if a not in q1p and b not in q1p:
                self.r["r4"].append(e)
                stored = True
        if self.five and ctx.in_a_mq(a) and ctx.in_b_mp(b):
            cp = self.c.partner
            if a not in cp and b not in cp:
                self.r["r5"].append(e)
                stored = True
        if stored:
            self._retain(e)

    def finish(self) -> CandidateSet:
        self._advance(self.suffix_end + 1)
        components = {
            "m0": self.m0.edge_set(),
            "p1": self.p1.matching.edge_set(),
            "p2": self.p2.matching.edge_set(),
            "q1": self.q1.matching.edge_set(),
            "q2": self.q2.matching.edge_set(),
            "c": self.c.matching.edge_set(),
        }
        for name in _R_NAMES:
            components[name] = frozenset(self.r[name])
        edges = set(self.accumulated)
        for part in components.values():
            edges |= part
        return CandidateSet(
            edges=frozenset(edges),
            components=components,
            recursion_depth_used=self.depth_used,
            depth_capped=self.depth_capped,
            final_suffix_start=self.level_start,
        )


def _run_over_stream(
    stream: EdgeStream,
    m0: Matching,
    params: AugmenterParams,
    meter: MemoryMeter | None,
    five_paths: bool,
) -> CandidateSet:
    run = AugmenterRun(
        m0,
        params,
        suffix_start=stream.cursor,
        suffix_end=stream.m,
        five_paths=five_paths,
        meter=meter,
    )
    for pos, e in stream.iterate_with_positions(stream.remaining()):
        run.offer(pos, e)
    return run.finish()


def augment_three(
    stream: EdgeStream,
    m0: Matching,
    params: AugmenterParams,
    meter: MemoryMeter | None = None,
) -> CandidateSet:
    """Three-path augmenter over the stream's remaining suffix (CLI code
    ``barg``).

    Wing phases P1/Q1 then P2/Q2 over successive tau-fractions; if either
    second-wing matching reaches the recursion threshold the larger side's
    paths (ties to P) are applied and the run recurses on the rest of the
    suffix, else residual collectors r1..r4 store everything the analysis
    needs and T is their union with the wing matchings and the matching.
    """
    return _run_over_stream(stream, m0, params, meter, five_paths=False)


def augment_three_five(
    stream: EdgeStream,
    m0: Matching,
    params: AugmenterParams,
    meter: MemoryMeter | None = None,
) -> CandidateSet:
    """Three/five-path augmenter (CLI code ``farg``).

    Adds a connector phase over a third tau-fraction; candidate paths come
    from connectors, both-wing edges, and each second-wing side, combined
    by the disjoint greedy sweep before the recursion check, and collector
    r5 stores leftover connector edges.
    """
    return _run_over_stream(stream, m0, params, meter, five_paths=True)
