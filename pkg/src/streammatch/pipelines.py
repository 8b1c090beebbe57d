"""Top-level matching pipelines over a random-order stream.

``bipartite_pipeline`` runs a greedy prefix, then a single dispatched pass
over the remainder that feeds an augmenter with the edges touching the
prefix matching at exactly one endpoint and stores the fully disjoint
edges, finishing with one offline exact matching over everything stored.

``general_pipeline`` reduces a general graph to the bipartite case: the
prefix matching's vertices become side A of a relabeled bipartite view,
the remaining stream edges crossing that split feed a nested bipartite
run, and the final exact matching is computed by the general-graph
oracle. The nested run cannot know its sub-stream's length in advance, so
it segments by edge count against the outer stream length as a proxy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .augmenters import AugmenterParams, AugmenterRun, CandidateSet
from .core import Bipartition, Edge, Matching
from .exact import max_matching_bipartite, max_matching_general
from .greedy import GreedyMatcher
from .stream import EdgeStream, MemoryMeter, Segment, segment_of_fraction

AUGMENTER_CODES = ("barg", "farg")


def _five_paths(augmenter: str) -> bool:
    if augmenter not in AUGMENTER_CODES:
        raise ValueError(f"augmenter must be one of {AUGMENTER_CODES}, got {augmenter!r}")
    return augmenter == "farg"


@dataclass(frozen=True)
class RunArtifacts:
    """Per-run record: sizes of the stored structures, the memory peak,
    recursion depth, and any flags (``depth_capped``, ``budget_exceeded``).

    ``m0_edges`` and ``candidate`` are kept for diagnostics and tests; a
    nested run's artifacts ride along in ``inner``.
    """

    m0_size: int
    t_size: int
    r_size: int
    final_size: int
    peak_edges: int
    recursion_depth: int
    flags: tuple[str, ...]
    m0_edges: frozenset[Edge] = frozenset()
    candidate: CandidateSet | None = None
    inner: "RunArtifacts | None" = None


def _flags(meter: MemoryMeter, cand: CandidateSet | None) -> tuple[str, ...]:
    out = []
    if cand is not None and cand.depth_capped:
        out.append("depth_capped")
    if meter.budget_exceeded:
        out.append("budget_exceeded")
    return tuple(out)


def bipartite_pipeline(
    stream: EdgeStream,
    params: AugmenterParams,
    augmenter: str = "farg",
    meter: MemoryMeter | None = None,
) -> tuple[Matching, RunArtifacts]:
    """Approximate maximum matching of a bipartite random-order stream.

    Greedy over the first ``prefix_frac`` of the stream, one dispatched
    pass over the rest (augmenter feed: exactly one endpoint matched by
    the prefix matching; residual store: no endpoint matched), then an
    exact bipartite matching over prefix matching + candidate set +
    residuals.
    """
    five = _five_paths(augmenter)
    if stream.bipartition is None:
        raise ValueError("bipartite pipeline requires a stream with a bipartition")
    if meter is None:
        meter = MemoryMeter()
    m = stream.m
    prefix = segment_of_fraction(m, 0.0, params.prefix_frac)
    m0 = GreedyMatcher(meter)
    for e in stream.iterate(prefix):
        m0.offer(e)
    m0 = m0.matching
    run = AugmenterRun(
        m0,
        params,
        suffix_start=prefix.hi + 1,
        suffix_end=m,
        five_paths=five,
        meter=meter,
    )
    pm = m0.partner
    residual: list[Edge] = []
    for pos, e in stream.iterate_with_positions(Segment(prefix.hi + 1, m)):
        a, b = e
        am = a in pm
        bm = b in pm
        if am != bm:
            run.offer(pos, e)
        elif not am:
            residual.append(e)
            meter.store(1)
    cand = run.finish()
    pool = m0.edge_set() | cand.edges | set(residual)
    final = max_matching_bipartite(sorted(pool), stream.bipartition)
    artifacts = RunArtifacts(
        m0_size=len(m0),
        t_size=cand.size(),
        r_size=len(residual),
        final_size=len(final),
        peak_edges=meter.stored_peak,
        recursion_depth=cand.recursion_depth_used,
        flags=_flags(meter, cand),
        m0_edges=m0.edge_set(),
        candidate=cand,
    )
    return final, artifacts


@dataclass(frozen=True)
class BipartiteView:
    """Relabeled bipartite view of a general graph split by a matching.

    Side A holds the matching's vertices, side B everything else; view ids
    are contiguous (A first), with ``to_view``/``to_orig`` the recorded
    bijection. Admitted edges always cross, oriented matched-side first.
    """

    side_a: tuple[int, ...]
    to_view: dict[int, int]
    to_orig: tuple[int, ...]
    bipartition: Bipartition

    @classmethod
    def build(cls, m0: Matching, n: int) -> "BipartiteView":
        side_a = tuple(sorted(m0.partner))
        covered = m0.partner
        order = list(side_a) + [v for v in range(n) if v not in covered]
        to_view = {orig: i for i, orig in enumerate(order)}
        return cls(side_a, to_view, tuple(order), Bipartition.prefix(n, len(side_a)))

    def view_edge(self, matched_end: int, free_end: int) -> Edge:
        return (self.to_view[matched_end], self.to_view[free_end])

    def orig_edge(self, e: Edge) -> Edge:
        u, v = self.to_orig[e[0]], self.to_orig[e[1]]
        return (u, v) if u < v else (v, u)


class _NestedBipartiteRun:
    """Count-as-you-go bipartite run fed one view edge at a time.

    Its prefix is the first ``ceil(prefix_frac * proxy_m)`` admitted edges
    and the augmenter's phase boundaries count admitted edges against the
    same proxy length, because the sub-stream's true length is unknowable
    online.
    """

    def __init__(
        self,
        view: BipartiteView,
        params: AugmenterParams,
        five_paths: bool,
        meter: MemoryMeter,
        proxy_m: int,
    ):
        self.view = view
        self.params = params
        self.five = five_paths
        self.meter = meter
        self.proxy_m = proxy_m
        self.prefix_count = min(proxy_m, math.ceil(params.prefix_frac * proxy_m))
        self.count = 0
        self._greedy = GreedyMatcher(meter)
        self.m0: Matching | None = None
        self.run: AugmenterRun | None = None
        self.residual: list[Edge] = []

    def _start_suffix(self) -> None:
        self.m0 = self._greedy.matching
        self.run = AugmenterRun(
            self.m0,
            self.params,
            suffix_start=self.prefix_count + 1,
            suffix_end=self.proxy_m,
            five_paths=self.five,
            meter=self.meter,
        )

    def offer(self, e: Edge) -> None:
        self.count += 1
        if self.count <= self.prefix_count:
            self._greedy.offer(e)
            return
        if self.run is None:
            self._start_suffix()
        a, b = e
        pm = self.m0.partner
        am = a in pm
        bm = b in pm
        if am != bm:
            self.run.offer(self.count, e)
        elif not am:
            self.residual.append(e)
            self.meter.store(1)

    def finish(self) -> tuple[Matching, RunArtifacts]:
        if self.run is None:
            self._start_suffix()
        cand = self.run.finish()
        pool = self.m0.edge_set() | cand.edges | set(self.residual)
        final = max_matching_bipartite(sorted(pool), self.view.bipartition)
        artifacts = RunArtifacts(
            m0_size=len(self.m0),
            t_size=cand.size(),
            r_size=len(self.residual),
            final_size=len(final),
            peak_edges=self.meter.stored_peak,
            recursion_depth=cand.recursion_depth_used,
            flags=_flags(self.meter, cand),
            m0_edges=self.m0.edge_set(),
            candidate=cand,
        )
        return final, artifacts


def general_pipeline(
    stream: EdgeStream,
    params: AugmenterParams,
    augmenter: str = "farg",
    meter: MemoryMeter | None = None,
) -> tuple[Matching, RunArtifacts]:
    """Approximate maximum matching of a general-graph random-order stream.

    Greedy prefix matching, then one dispatched pass: edges with exactly
    one endpoint matched enter the bipartite view's nested run, edges with
    no matched endpoint are stored, and the rest are dropped. The final
    matching is exact over prefix matching + nested result + residuals.
    """
    five = _five_paths(augmenter)
    if meter is None:
        meter = MemoryMeter()
    if stream.n is None:
        raise ValueError("general pipeline requires a stream with a vertex count")
    m = stream.m
    prefix = segment_of_fraction(m, 0.0, params.prefix_frac)
    g0 = GreedyMatcher(meter)
    for e in stream.iterate(prefix):
        g0.offer(e)
    m0 = g0.matching
    view = BipartiteView.build(m0, stream.n)
    nested = _NestedBipartiteRun(view, params, five, meter, proxy_m=m)
    pm = m0.partner
    residual: list[Edge] = []
    for _, e in stream.iterate_with_positions(Segment(prefix.hi + 1, m)):
        u, v = e
        um = u in pm
        vm = v in pm
        if um != vm:
            if um:
                nested.offer(view.view_edge(u, v))
            else:
                nested.offer(view.view_edge(v, u))
        elif not um:
            residual.append(e)
            meter.store(1)
    m1_view, inner_artifacts = nested.finish()
    m1 = Matching(sorted(view.orig_edge(e) for e in m1_view))
    pool = m0.edge_set() | m1.edge_set() | set(residual)
    final = max_matching_general(sorted(pool))
    flags = set(inner_artifacts.flags)
    if meter.budget_exceeded:
        flags.add("budget_exceeded")
    artifacts = RunArtifacts(
        m0_size=len(m0),
        t_size=len(m1),
        r_size=len(residual),
        final_size=len(final),
        peak_edges=meter.stored_peak,
        recursion_depth=inner_artifacts.recursion_depth,
        flags=tuple(sorted(flags)),
        m0_edges=m0.edge_set(),
        candidate=inner_artifacts.candidate,
        inner=inner_artifacts,
    )
    return final, artifacts
