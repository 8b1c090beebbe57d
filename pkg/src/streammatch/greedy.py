"""Streaming greedy matching and residual-edge collection.

The greedy rule is pure first-come admission: an edge joins the matching
iff both endpoints are still free. ``GreedyMatcher`` and
``ResidualCollector`` are the incremental forms used by the pipelines'
dispatched single pass; the module-level functions wrap them for callers
holding an edge sequence.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .core import Edge, Matching
from .stream import MemoryMeter

EdgePred = Callable[[Edge], bool]


class GreedyMatcher:
    """First-come maximal matching over the edges offered to it."""

    __slots__ = ("matching", "meter")

    def __init__(self, meter: MemoryMeter | None = None):
        self.matching = Matching()
        self.meter = meter

    def offer(self, e: Edge) -> bool:
        if self.matching.add(e):
            if self.meter is not None:
                self.meter.store(1)
            return True
        return False

    @property
    def partner(self) -> dict[int, int]:
        return self.matching.partner

    def __len__(self) -> int:
        return len(self.matching)


class ResidualCollector:
    """Stores every offered edge, in arrival order."""

    __slots__ = ("edges", "meter")

    def __init__(self, meter: MemoryMeter | None = None):
        self.edges: list[Edge] = []
        self.meter = meter

    def offer(self, e: Edge) -> None:
        self.edges.append(e)
        if self.meter is not None:
            self.meter.store(1)

    def __len__(self) -> int:
        return len(self.edges)


def greedy_matching(
    edges: Iterable[Edge],
    pred: EdgePred | None = None,
    meter: MemoryMeter | None = None,
) -> Matching:
    """Greedy matching over the subsequence of ``edges`` satisfying ``pred``.

    The result is maximal with respect to that subsequence: after the pass,
    every pred-satisfying edge touches a matched vertex. The meter is
    charged one stored edge per admission.
    """
    g = GreedyMatcher(meter)
    for e in edges:
        if pred is None or pred(e):
            g.offer(e)
    return g.matching


def collect_residual(
    edges: Iterable[Edge],
    pred: EdgePred,
    meter: MemoryMeter | None = None,
) -> list[Edge]:
    """Store exactly the pred-satisfying edges, in arrival order.

    No internal cap: the meter's budget flag is the enforcement mechanism,
    since truncating here would silently change the algorithms.
    """
    c = ResidualCollector(meter)
    for e in edges:
        if pred(e):
            c.offer(e)
    return c.edges
