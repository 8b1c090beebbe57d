"""Offline exact maximum-matching oracles.

Three independent routes: a Hopcroft-Karp style phase algorithm for
bipartite edge sets (https://en.wikipedia.org/wiki/Hopcroft-Karp_algorithm),
a blossom-contraction algorithm for general edge sets
(https://en.wikipedia.org/wiki/Blossom_algorithm), and a memoized
exhaustive recursion used as the test oracle for both. All are
deterministic: adjacency is sorted and augmentation proceeds in
lowest-index order, so only ties among equal-size maximum matchings are
broken by that fixed rule.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .core import Bipartition, Edge, Matching

_INF = -1


def max_matching_bipartite(edges: Iterable[Edge], bip: Bipartition) -> Matching:
    """Maximum-cardinality matching of a bipartite edge set.

    Every edge must cross ``bip``; the returned matching stores edges with
    their A-side endpoint first.
    """
    adj: dict[int, list[int]] = {}
    seen: set[Edge] = set()
    for u, v in edges:
        a, b = bip.orient(u, v)
        if (a, b) in seen:
            continue
        seen.add((a, b))
        adj.setdefault(a, []).append(b)
    lefts = sorted(adj)
    for a in lefts:
        adj[a].sort()

    pair_a: dict[int, int] = {}
    pair_b: dict[int, int] = {}
    dist: dict[int, int] = {}

    def bfs() -> bool:
        q: deque[int] = deque()
        for a in lefts:
            if a not in pair_a:
                dist[a] = 0
                q.append(a)
            else:
                dist[a] = _INF
        found = _INF
        while q:
            a = q.popleft()
            if found != _INF and dist[a] >= found:
                continue
            for b in adj[a]:
                a2 = pair_b.get(b)
                if a2 is None:
                    if found == _INF:
                        found = dist[a] + 1
                elif dist[a2] == _INF:
                    dist[a2] = dist[a] + 1
                    q.append(a2)
        return found != _INF

    def dfs(root: int) -> bool:
        # iterative so long augmenting paths cannot blow the stack
        stack: list[tuple[int, int]] = [(root, 0)]
        trail: list[tuple[int, int]] = []
        while stack:
            a, i = stack.pop()
            nbrs = adj[a]
            advanced = False
            while i < len(nbrs):
                b = nbrs[i]
                i += 1
                a2 = pair_b.get(b)
                if a2 is None:
                    trail.append((a, b))
                    for x, y in trail:
                        pair_a[x] = y
                        pair_b[y] = x
                    return True
                if dist.get(a2) == dist[a] + 1:
                    stack.append((a, i))
                    trail.append((a, b))
                    stack.append((a2, 0))
                    advanced = True
                    break
            if not advanced:
                dist[a] = _INF
                if trail and stack:
                    trail.pop()
        return False

    while bfs():
        for a in lefts:
            if a not in pair_a:
                dfs(a)
    return Matching(sorted((a, b) for a, b in pair_a.items()))


def max_matching_general(edges: Iterable[Edge]) -> Matching:
    """Maximum-cardinality matching of an arbitrary edge set.

    Blossom contraction: repeated alternating BFS from each free vertex,
    shrinking odd cycles to their base until an augmenting path appears.
    """
    es = sorted({(u, v) if u < v else (v, u) for u, v in edges})
    for u, v in es:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v})")
    if not es:
        return Matching()
    n = max(v for _, v in es) + 1
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in es:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    match: list[int] = [-1] * n

    def find_and_augment(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        q: deque[int] = deque([root])

        def lca(a: int, b: int) -> int:
            on_path = [False] * n
            x = a
            while True:
                x = base[x]
                on_path[x] = True
                if match[x] == -1:
                    break
                x = parent[match[x]]
            y = b
            while True:
                y = base[y]
                if on_path[y]:
                    return y
                y = parent[match[y]]

        def mark_blossom(v: int, stem: int, child: int, flag: list[bool]) -> None:
            while base[v] != stem:
                flag[base[v]] = True
                flag[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    stem = lca(v, to)
                    in_blossom = [False] * n
                    mark_blossom(v, stem, to, in_blossom)
                    mark_blossom(to, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not in_tree[i]:
                                in_tree[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment: flip matched/unmatched along the tree path
                        u2 = to
                        while u2 != -1:
                            pv = parent[u2]
                            nxt = match[pv]
                            match[u2] = pv
                            match[pv] = u2
                            u2 = nxt
                        return True
                    in_tree[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1 and adj[v]:
            find_and_augment(v)
    return Matching(sorted((u, match[u]) for u in range(n) if match[u] > u))


def max_matching_bruteforce(edges: Iterable[Edge]) -> int:
    """Exact maximum matching size by exhaustive recursion; test oracle.

    Memoized include/exclude over the lowest free vertex's edges. Refuses
    inputs with more than 20 distinct vertices.
    """
    es = sorted({(u, v) if u < v else (v, u) for u, v in edges})
    for u, v in es:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v})")
    verts = sorted({x for e in es for x in e})
    k = len(verts)
    if k > 20:
        raise ValueError(f"brute force refuses {k} > 20 vertices")
    index = {v: i for i, v in enumerate(verts)}
    nbr = [0] * k
    for u, v in es:
        nbr[index[u]] |= 1 << index[v]
        nbr[index[v]] |= 1 << index[u]
    memo: dict[int, int] = {}

    def best(used: int) -> int:
        if used in memo:
            return memo[used]
        i = 0
        while i < k and used & (1 << i):
            i += 1
        if i == k:
            return 0
        taken = used | (1 << i)
        res = best(taken)  # leave vertex i unmatched
        free_nbrs = nbr[i] & ~used
        while free_nbrs:
            low = free_nbrs & -free_nbrs
            res = max(res, 1 + best(taken | low))
            free_nbrs ^= low
        memo[used] = res
        return res

    return best(0)
