"""Core graph, matching, and augmenting-path types.

Vertices are dense non-negative integers ``0..n-1``. Edges are plain
``(u, v)`` tuples, normalized once at graph construction: the side-A
endpoint first for bipartite graphs, the smaller index first otherwise.
Everything downstream relies on that normalization, so for a bipartite
edge ``(a, b)`` the first entry is always the A-side vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

Edge = tuple[int, int]

SIDE_A = 0
SIDE_B = 1


class Bipartition:
    """Per-vertex side labels (A/B) for a bipartite graph."""

    __slots__ = ("side",)

    def __init__(self, side: Sequence[int]):
        side = tuple(side)
        for s in side:
            if s not in (SIDE_A, SIDE_B):
                raise ValueError(f"side label must be SIDE_A or SIDE_B, got {s!r}")
        self.side = side

    @classmethod
    def prefix(cls, n: int, n_a: int) -> "Bipartition":
        """Vertices ``0..n_a-1`` on side A, the rest on side B."""
        if not 0 <= n_a <= n:
            raise ValueError(f"n_a={n_a} out of range for n={n}")
        return cls((SIDE_A,) * n_a + (SIDE_B,) * (n - n_a))

    def __len__(self) -> int:
        return len(self.side)

    def is_a(self, v: int) -> bool:
        return self.side[v] == SIDE_A

    def crosses(self, u: int, v: int) -> bool:
        return self.side[u] != self.side[v]

    def orient(self, u: int, v: int) -> Edge:
        """Return the edge with its A-side endpoint first."""
        if self.side[u] == self.side[v]:
            raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")
        return (u, v) if self.side[u] == SIDE_A else (v, u)


def normalize_edge(u: int, v: int, bipartition: Bipartition | None = None) -> Edge:
    if u == v:
        raise ValueError(f"self-loop ({u}, {v})")
    if bipartition is not None:
        return bipartition.orient(u, v)
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable vertex/edge set with an optional bipartition.

    Construct through :meth:`build`, which validates, normalizes and
    deduplicates the edge list (``dropped_duplicates`` counts the drops).
    """

    n: int
    edges: tuple[Edge, ...]
    bipartition: Bipartition | None = None
    dropped_duplicates: int = 0

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        bipartition: Bipartition | None = None,
    ) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if bipartition is not None and len(bipartition) != n:
            raise ValueError("bipartition length does not match vertex count")
        seen: dict[Edge, None] = {}
        dropped = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            e = normalize_edge(u, v, bipartition)
            if e in seen:
                dropped += 1
            else:
                seen[e] = None
        return cls(n, tuple(seen), bipartition, dropped)

    @property
    def m(self) -> int:
        return len(self.edges)


class Matching:
    """A set of vertex-disjoint edges with O(1) partner lookup.

    Mutable while one algorithm run builds it; every other consumer treats
    it as a value (``copy()`` before mutating a shared instance). Edges are
    stored in insertion order; equality is set equality of the edges.
    """

    __slots__ = ("partner", "_edges")

    def __init__(self, edges: Iterable[Edge] = ()):
        self.partner: dict[int, int] = {}
        self._edges: dict[Edge, None] = {}
        for e in edges:
            if not self.add(e):
                raise ValueError(f"edges share a vertex at {e}")

    def add(self, e: Edge) -> bool:
        """Admit ``e`` iff both endpoints are currently unmatched."""
        u, v = e
        if u in self.partner or v in self.partner:
            return False
        self.partner[u] = v
        self.partner[v] = u
        self._edges[e] = None
        return True

    def remove(self, e: Edge) -> None:
        if e not in self._edges:
            raise KeyError(f"{e} not in matching")
        del self._edges[e]
        del self.partner[e[0]]
        del self.partner[e[1]]

    def covers(self, v: int) -> bool:
        return v in self.partner

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self._edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self._edges)

    def copy(self) -> "Matching":
        out = Matching()
        out.partner = dict(self.partner)
        out._edges = dict(self._edges)
        return out

    def __len__(self) -> int:
        return len(self._edges)

    def __contains__(self, e: Edge) -> bool:
        return e in self._edges

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self._edges.keys() == other._edges.keys()

    def __repr__(self) -> str:
        return f"Matching({sorted(self._edges)})"


@dataclass(frozen=True)
class AugPath:
    """An alternating path of 3 or 5 edges.

    Edges are listed along the path and alternate
    non-matching / matching / ... starting and ending with non-matching
    edges; a 5-edge path reads (wing, matched, connector, matched, wing).
    Shape (chain consistency, length, distinct vertices) is checked here;
    alternation against a concrete matching is checked by
    :func:`aug_path_violations`.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self):
        if len(self.edges) not in (3, 5):
            raise ValueError(f"augmenting path must have 3 or 5 edges, got {len(self.edges)}")
        verts = self.vertex_walk()
        if len(set(verts)) != len(verts):
            raise ValueError(f"augmenting path revisits a vertex: {self.edges}")

    @property
    def kind(self) -> str:
        return "threeAug" if len(self.edges) == 3 else "fiveAug"

    def vertex_walk(self) -> list[int]:
        """Vertices in path order; raises if consecutive edges do not chain."""
        edges = self.edges
        first_shared = _shared_vertex(edges[0], edges[1])
        walk = [_other_endpoint(edges[0], first_shared), first_shared]
        for i in range(1, len(edges)):
            prev = walk[-1]
            u, v = edges[i]
            if prev == u:
                walk.append(v)
            elif prev == v:
                walk.append(u)
            else:
                raise ValueError(f"edges {edges[i - 1]} and {edges[i]} do not share a vertex")
        return walk

    def vertices(self) -> set[int]:
        return set(self.vertex_walk())

    def endpoints(self) -> tuple[int, int]:
        walk = self.vertex_walk()
        return walk[0], walk[-1]


def _shared_vertex(e: Edge, f: Edge) -> int:
    common = set(e) & set(f)
    if len(common) != 1:
        raise ValueError(f"edges {e} and {f} must share exactly one vertex")
    return next(iter(common))


def _other_endpoint(e: Edge, v: int) -> int:
    return e[1] if e[0] == v else e[0]


@dataclass(frozen=True)
class AugPathSet:
    """Pairwise vertex-disjoint augmenting paths (hard invariant)."""

    paths: tuple[AugPath, ...]

    def __post_init__(self):
        seen: set[int] = set()
        for p in self.paths:
            vs = p.vertices()
            if seen & vs:
                raise ValueError(f"augmenting paths share vertices {sorted(seen & vs)}")
            seen |= vs

    def vertices(self) -> set[int]:
        out: set[int] = set()
        for p in self.paths:
            out |= p.vertices()
        return out

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[AugPath]:
        return iter(self.paths)


EMPTY_PATH_SET = AugPathSet(())


def validate_matching(g: Graph, m: "Matching | Iterable[Edge]") -> list[str]:
    """Check matching invariants against a host graph.

    Returns a list of violation messages; empty means valid. Violations are
    data, not failures: callers decide what to do with them. Accepts either
    a :class:`Matching` or a raw edge collection (so that ill-formed inputs
    can be examined too).
    """
    violations: list[str] = []
    if isinstance(m, Matching):
        edges = m.edges
        for e in edges:
            u, v = e
            if m.partner.get(u) != v or m.partner.get(v) != u:
                violations.append(f"partner map inconsistent at {e}")
    else:
        edges = tuple(m)
    host = set(g.edges)
    used: dict[int, Edge] = {}
    for e in edges:
        u, v = e
        if u == v:
            violations.append(f"self-loop {e}")
            continue
        if e not in host and (v, u) not in host:
            violations.append(f"edge {e} absent from graph")
        for x in (u, v):
            if x in used:
                violations.append(f"vertex {x} shared by {used[x]} and {e}")
            else:
                used[x] = e
    return violations


def aug_path_violations(path: AugPath, m: Matching) -> list[str]:
    """Check a single path's alternation and endpoints against ``m``."""
    violations: list[str] = []
    for i, e in enumerate(path.edges):
        if i % 2 == 1:
            if e not in m:
                violations.append(f"edge {e} at position {i} must be in the matching")
        else:
            if e in m:
                violations.append(f"edge {e} at position {i} must not be in the matching")
    for v in path.endpoints():
        if m.covers(v):
            violations.append(f"path endpoint {v} is matched")
    return violations


def _is_reverse_path(path: AugPath, m: Matching) -> bool:
    """True if the path reads as already applied: outer edges matched,
    interior edges free (the orientation that un-augments under Δ)."""
    return all(
        (e in m) == (i % 2 == 0) for i, e in enumerate(path.edges)
    )


def apply_augmenting_paths(m: Matching, u: AugPathSet) -> Matching:
    """Return ``m`` symmetric-differenced with the edges of every path in ``u``.

    Each path must alternate against ``m`` in one of its two orientations:
    fresh (interior edges matched, endpoints free; grows the matching by
    one) or already applied (outer edges matched; undoes that growth, so
    applying the same path set twice restores the original matching).
    Anything else is rejected loudly, since a bad path set signals a logic
    error upstream.
    """
    grown = 0
    for p in u:
        problems = aug_path_violations(p, m)
        if not problems:
            grown += 1
        elif not _is_reverse_path(p, m):
            raise ValueError("invalid augmenting path set: " + "; ".join(problems))
    out = m.copy()
    for p in u:
        adds = []
        for e in p.edges:
            if e in out:
                out.remove(e)
            else:
                adds.append(e)
        for e in adds:
            if not out.add(e):
                raise ValueError(f"path edge {e} conflicts while augmenting")
    if len(out) != len(m) + grown - (len(u.paths) - grown):
        raise AssertionError("augmented size != |m| +/- path count")
    return out


def filter_edges(edges: Iterable[Edge], pred: Callable[[Edge], bool]) -> Iterator[Edge]:
    """Order-preserving subsequence of ``edges`` satisfying ``pred``.

    Lazy, so it composes with one-pass streams.
    """
    return (e for e in edges if pred(e))
