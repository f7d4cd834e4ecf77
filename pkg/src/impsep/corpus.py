"""Deterministic corpora of test instances.

Exhaustive mode enumerates every connected graph up to a small vertex count,
one representative per isomorphism class, by repeatedly attaching a new
vertex to the graphs one size below and discarding isomorphic duplicates
(colour-refinement invariant first, backtracking check within a bucket).
Random mode draws seed-reproducible Erdos-Renyi style graphs. All graphs use
vertex ids 1..n so they serialize directly to instance files.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


def _refined_colors(adj: tuple[int, ...]) -> tuple[int, ...]:
    """Stable vertex colours: iterated degree refinement, canonical values."""
    n = len(adj)
    colors = [adj[i].bit_count() for i in range(n)]
    for _ in range(n):
        sigs = []
        for i in range(n):
            row = adj[i]
            nb = []
            while row:
                low = row & -row
                row ^= low
                nb.append(colors[low.bit_length() - 1])
            nb.sort()
            sigs.append((colors[i], tuple(nb)))
        remap = {s: c for c, s in enumerate(sorted(set(sigs)))}
        fresh = [remap[s] for s in sigs]
        if len(set(fresh)) == len(set(colors)):
            return tuple(fresh)
        colors = fresh
    return tuple(colors)


def _invariant(adj: tuple[int, ...], colors: tuple[int, ...]) -> tuple:
    m = sum(a.bit_count() for a in adj) // 2
    return len(adj), m, tuple(sorted(colors))


def _isomorphic(a: tuple[int, ...], ca: tuple[int, ...], b: tuple[int, ...], cb: tuple[int, ...]) -> bool:
    n = len(a)
    order = sorted(range(n), key=lambda i: (ca.count(ca[i]), ca[i], i))
    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or cb[j] != ca[i]:
                continue
            ok = True
            for prev in order[:k]:
                if (a[i] >> prev & 1) != (b[j] >> mapping[prev] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[i] = j
            used[j] = True
            if extend(k + 1):
                return True
            used[j] = False
            mapping[i] = -1
        return False

    return extend(0)


def connected_adjacency(n: int) -> list[tuple[int, ...]]:
    """Adjacency masks of all connected graphs on n vertices, one per iso class."""
    if n < 1:
        return []
    level: list[tuple[int, ...]] = [(0,)]
    for size in range(2, n + 1):
        buckets: dict[tuple, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
        fresh: list[tuple[int, ...]] = []
        for parent in level:
            for attach in range(1, 1 << (size - 1)):
                rows = [parent[i] | ((attach >> i & 1) << (size - 1)) for i in range(size - 1)]
                rows.append(attach)
                cand = tuple(rows)
                colors = _refined_colors(cand)
                key = _invariant(cand, colors)
                bucket = buckets.setdefault(key, [])
                if any(_isomorphic(cand, colors, other, oc) for other, oc in bucket):
                    continue
                bucket.append((cand, colors))
                fresh.append(cand)
        level = fresh
    return level


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on vertex ids 1..n, one per isomorphism class."""
    out = []
    for adj in connected_adjacency(n):
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if adj[i] >> j & 1:
                    edges.append((i + 1, j + 1))
        out.append(Graph(range(1, n + 1), edges))
    return out


def random_graph(rng: random.Random, n: int, edge_prob: float) -> Graph:
    """An Erdos-Renyi style graph on ids 1..n, reproducible from the rng state."""
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < edge_prob]
    return Graph(range(1, n + 1), edges)


def random_separation_instance(rng: random.Random, n: int, edge_prob: float) -> tuple[Graph, int, int]:
    """A random graph plus two distinct designated vertices."""
    g = random_graph(rng, n, edge_prob)
    x, y = rng.sample(range(1, n + 1), 2)
    return g, x, y


def random_terminal_instance(rng: random.Random, n: int, edge_prob: float, t_count: int) -> tuple[Graph, frozenset[int]]:
    """A random graph plus a random terminal set of the requested size."""
    g = random_graph(rng, n, edge_prob)
    return g, frozenset(rng.sample(range(1, n + 1), t_count))
