"""Reproducible instance generators and edge-list file I/O.

All generators are deterministic per (parameters, seed). The text format
is line-oriented and diffable:

    # optional comments anywhere
    <n> <m> <bipartite|general>
    <n_a>              # bipartite only: vertices 0..n_a-1 are side A
    <u> <v>            # m edge lines, 0-based vertex ids
"""

from __future__ import annotations

import logging
import random
from pathlib import Path

from .core import Bipartition, Graph

logger = logging.getLogger(__name__)


def gen_konrad_hard(n: int) -> Graph:
    """The adversarial bipartite instance on which greedy stalls near 1/2.

    Sides of ``n`` vertices each: a perfect matching ``a_i - b_i`` plus the
    complete block between the first half of A and the second half of B,
    so random arrival floods greedy with block edges. ``m = n + (n/2)^2``
    and the identity edges certify a perfect matching.
    """
    if n < 2 or n % 2:
        raise ValueError(f"side size must be even and >= 2, got {n}")
    edges = [(i, n + i) for i in range(n)]
    half = n // 2
    edges += [(i, n + j) for i in range(half) for j in range(half, n)]
    return Graph.build(2 * n, edges, Bipartition.prefix(2 * n, n))


def gen_planted_bipartite(n: int, extra_edge_prob: float, seed: int) -> Graph:
    """Bipartite instance with a planted perfect matching ``a_i - b_i``.

    Every off-diagonal pair is added independently with probability
    ``extra_edge_prob``; the planted diagonal guarantees a maximum
    matching of exactly ``n``.
    """
    if n < 1:
        raise ValueError("side size must be >= 1")
    if not 0.0 <= extra_edge_prob <= 1.0:
        raise ValueError("probability outside [0, 1]")
    rng = random.Random(seed)
    edges = [(i, n + i) for i in range(n)]
    p = extra_edge_prob
    if p > 0.0:
        for i in range(n):
            for j in range(n):
                if i != j and rng.random() < p:
                    edges.append((i, n + j))
    return Graph.build(2 * n, edges, Bipartition.prefix(2 * n, n))


def gen_random_general(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style G(n, p), deduplicated and deterministic per seed."""
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("probability outside [0, 1]")
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if p > 0.0 and rng.random() < p
    ]
    return Graph.build(n, edges)


class EdgeListError(ValueError):
    """Malformed edge-list file; message carries the line number."""


def load_edgelist(path: str | Path) -> Graph:
    """Parse the edge-list format above into a validated Graph.

    Duplicate edges are dropped with a logged warning count; an edge not
    crossing a declared bipartition is an error.
    """
    path = Path(path)
    rows: list[tuple[int, str]] = []
    with path.open(encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.split("#", 1)[0].strip()
            if text:
                rows.append((lineno, text))
    if not rows:
        raise EdgeListError(f"{path}:1: missing header line")

    def ints(lineno: str, text: str, k: int) -> list[int]:
        parts = text.split()
        if len(parts) != k:
            raise EdgeListError(f"{path}:{lineno}: expected {k} fields, got {len(parts)}")
        try:
            return [int(x) for x in parts]
        except ValueError as exc:
            raise EdgeListError(f"{path}:{lineno}: {exc}") from None

    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 3 or parts[2] not in ("bipartite", "general"):
        raise EdgeListError(
            f"{path}:{lineno}: header must be '<n> <m> <bipartite|general>', got {header!r}"
        )
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise EdgeListError(f"{path}:{lineno}: {exc}") from None
    body = rows[1:]
    bipartition = None
    if parts[2] == "bipartite":
        if not body:
            raise EdgeListError(f"{path}:{lineno}: bipartite header but no n_a line")
        (na_line, na_text), body = body[0], body[1:]
        (n_a,) = ints(na_line, na_text, 1)
        if not 0 <= n_a <= n:
            raise EdgeListError(f"{path}:{na_line}: n_a={n_a} out of range")
        bipartition = Bipartition.prefix(n, n_a)
    if len(body) != m:
        raise EdgeListError(f"{path}: header declares {m} edges, file has {len(body)}")
    edges = []
    for lineno, text in body:
        u, v = ints(lineno, text, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"{path}:{lineno}: vertex out of range in '{text}'")
        if u == v:
            raise EdgeListError(f"{path}:{lineno}: self-loop {u}")
        if bipartition is not None and not bipartition.crosses(u, v):
            raise EdgeListError(f"{path}:{lineno}: edge ({u}, {v}) does not cross the bipartition")
        edges.append((u, v))
    g = Graph.build(n, edges, bipartition)
    if g.dropped_duplicates:
        logger.warning("%s: dropped %d duplicate edges", path, g.dropped_duplicates)
    return g


def save_edgelist(g: Graph, path: str | Path) -> None:
    path = Path(path)
    lines = []
    if g.bipartition is not None:
        side_a = sum(1 for v in range(g.n) if g.bipartition.is_a(v))
        for v in range(side_a):
            if not g.bipartition.is_a(v):
                raise ValueError("file format requires side A to be a vertex prefix")
        lines.append(f"{g.n} {g.m} bipartite")
        lines.append(str(side_a))
    else:
        lines.append(f"{g.n} {g.m} general")
    lines += [f"{u} {v}" for u, v in g.edges]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
