"""Shared instance builders for the test suite."""

from __future__ import annotations

import random

import pytest

from streammatch import Bipartition, Graph


def bip_graph(n_a: int, n_b: int, edges) -> Graph:
    """Bipartite graph with side A = 0..n_a-1, side B = n_a..n_a+n_b-1."""
    return Graph.build(n_a + n_b, edges, Bipartition.prefix(n_a + n_b, n_a))


def k22() -> Graph:
    # A = {0, 1}, B = {2, 3}
    return bip_graph(2, 2, [(0, 2), (0, 3), (1, 2), (1, 3)])


def random_bipartite(n_a: int, n_b: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (i, n_a + j)
        for i in range(n_a)
        for j in range(n_b)
        if rng.random() < p
    ]
    return bip_graph(n_a, n_b, edges)


def random_general(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.build(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
