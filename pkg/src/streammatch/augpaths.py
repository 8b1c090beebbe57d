"""Construction of vertex-disjoint 3- and 5-edge augmenting paths from
wing matchings.

Terminology: for a matched edge ``(a, b)``, an *upper wing* is an edge
from ``a`` to an unmatched B-vertex and a *lower wing* an edge from an
unmatched A-vertex to ``b``. A *connector* joins the B-endpoint of one
matched edge to the A-endpoint of another; together with both edges'
wings it closes a 5-edge augmenting path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import AugPath, AugPathSet, Edge, Matching


@dataclass(frozen=True)
class WingContext:
    """A matching plus the wing matchings hanging off it.

    ``mp`` (resp. ``mq``) is exactly the set of matching edges touched by
    ``p1`` (resp. ``q1``); each such edge has exactly one wing, at its
    A-endpoint for ``p1`` and at its B-endpoint for ``q1``.
    """

    m0: Matching
    p1: Matching
    q1: Matching
    mp: frozenset[Edge]
    mq: frozenset[Edge]

    @classmethod
    def build(cls, m0: Matching, p1: Matching, q1: Matching) -> "WingContext":
        mp = frozenset(e for e in m0 if e[0] in p1.partner)
        mq = frozenset(e for e in m0 if e[1] in q1.partner)
        return cls(m0, p1, q1, mp, mq)

    def upper_wing(self, e: Edge) -> Edge:
        a = e[0]
        return (a, self.p1.partner[a])

    def lower_wing(self, e: Edge) -> Edge:
        b = e[1]
        return (self.q1.partner[b], b)

    def in_b_mp(self, b: int) -> bool:
        a = self.m0.partner.get(b)
        return a is not None and a in self.p1.partner

    def in_a_mq(self, a: int) -> bool:
        b = self.m0.partner.get(a)
        return b is not None and b in self.q1.partner


def three_aug_from_wings(ctx: WingContext, wings2: Matching, side: str = "p") -> AugPathSet:
    """One 3-edge augmenting path per second-wing edge; exactly ``len(wings2)`` paths.

    On the P side each ``wings2`` edge ``(a2, b)`` must match an unmatched
    vertex ``a2`` to ``b`` in B(mp); the path is then
    (upper wing of the matched edge at ``b``, that matched edge, ``(a2, b)``).
    The Q side is symmetric with ``wings2`` edges ``(a, b2)`` landing on
    A(mq). Disjointness follows because all three layers are matchings.
    """
    if side not in ("p", "q"):
        raise ValueError(f"side must be 'p' or 'q', got {side!r}")
    paths = []
    for x, y in wings2:
        if side == "p":
            if not ctx.in_b_mp(y):
                raise ValueError(f"second wing {(x, y)} does not land on B(mp)")
            e0 = (ctx.m0.partner[y], y)
            paths.append(AugPath((ctx.upper_wing(e0), e0, (x, y))))
        else:
            if not ctx.in_a_mq(x):
                raise ValueError(f"second wing {(x, y)} does not land on A(mq)")
            e0 = (x, ctx.m0.partner[x])
            paths.append(AugPath(((x, y), e0, ctx.lower_wing(e0))))
    return AugPathSet(tuple(paths))


def paths_from_connector(ctx: WingContext, c: Matching) -> AugPathSet:
    """Augmenting paths closed by connector edges A(mq) x B(mp).

    A connector ``(a, b)`` joins the matched edge at ``b`` (in mp, so it
    has an upper wing) to the matched edge at ``a`` (in mq, lower wing).
    When the two coincide, the connector is that matching edge itself and
    a 3-edge path with both wings is emitted; otherwise the 5-edge path
    (upper wing, matched, connector, matched, lower wing).

    Emits one path per connector. A matched edge carrying both kinds of
    wing can be reached by two different connectors in different roles;
    the later one is skipped to keep the family vertex-disjoint, so the
    output can fall short of ``len(c)`` only in that degenerate case.
    """
    used: set[Edge] = set()
    paths = []
    for a, b in c:
        if not ctx.in_a_mq(a):
            raise ValueError(f"connector {(a, b)} does not start in A(mq)")
        if not ctx.in_b_mp(b):
            raise ValueError(f"connector {(a, b)} does not end in B(mp)")
        e0 = (ctx.m0.partner[b], b)
        e1 = (a, ctx.m0.partner[a])
        if e0 in used or e1 in used:
            continue
        if e0 == e1:
            paths.append(AugPath((ctx.upper_wing(e0), e0, ctx.lower_wing(e0))))
            used.add(e0)
        else:
            paths.append(AugPath((ctx.upper_wing(e0), e0, (a, b), e1, ctx.lower_wing(e1))))
            used.add(e0)
            used.add(e1)
    return AugPathSet(tuple(paths))


def both_wing_paths(ctx: WingContext) -> AugPathSet:
    """A 3-edge path for every matched edge carrying both wings (mp & mq)."""
    paths = tuple(
        AugPath((ctx.upper_wing(e), e, ctx.lower_wing(e)))
        for e in sorted(ctx.mp & ctx.mq)
    )
    return AugPathSet(paths)


def select_disjoint(families: Sequence[AugPathSet]) -> AugPathSet:
    """Greedy sweep over path families given in priority order.

    Walks the families first to last (callers pass connector paths, then
    both-wing paths, then P-side, then Q-side), keeping each path unless it
    shares a vertex with one already kept. Input families must each be
    internally disjoint; the output is globally disjoint.
    """
    taken: set[int] = set()
    kept = []
    for fam in families:
        for p in fam:
            vs = p.vertices()
            if taken & vs:
                continue
            taken |= vs
            kept.append(p)
    return AugPathSet(tuple(kept))
