"""Definitional brute-force reference implementations.

Everything here replays the defining property of the object it computes by
exhaustive subset enumeration, deliberately independent of the polynomial
algorithms elsewhere in the package. Intended for desk-scale graphs only; the
test suite leans on these as ground truth.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, VertexSet
from .multiway import CutCertificate, MwcInstance


def _adjacency(g: Graph) -> tuple[tuple[int, ...], dict[int, int], list[int]]:
    # Rebuilt from the public accessors so the oracle does not share the
    # graph's internal representation.
    ids = g.vertices
    pos = {v: i for i, v in enumerate(ids)}
    adj = [0] * len(ids)
    for v in ids:
        for u in g.neighbors(v):
            adj[pos[v]] |= 1 << pos[u]
    return ids, pos, adj


def _spread(adj: list[int], start: int, blocked: int) -> int:
    seen = start & ~blocked
    grow = True
    while grow:
        grow = False
        m = seen
        acc = 0
        while m:
            low = m & -m
            m ^= low
            acc |= adj[low.bit_length() - 1]
        acc &= ~blocked
        if acc & ~seen:
            seen |= acc
            grow = True
    return seen


def _separator_data(g: Graph, x, y, max_size: int) -> list[tuple[int, int, int]]:
    """All deletable cuts of size <= max_size as (size, cut_mask, nr_mask)."""
    ids, pos, adj = _adjacency(g)
    xm = sum(1 << pos[v] for v in x)
    ym = sum(1 << pos[v] for v in y)
    full = (1 << len(ids)) - 1
    free = [i for i in range(len(ids)) if not ((xm | ym) >> i & 1) and ids[i] not in g.undeletable]
    found = []
    for size in range(0, max_size + 1):
        for combo in combinations(free, size):
            km = 0
            for i in combo:
                km |= 1 << i
            reached = _spread(adj, ym, km)
            if reached & xm:
                continue
            nr = full & ~km & ~reached
            found.append((size, km, nr))
    return found


def oracle_separators(g: Graph, x, y, max_size: int) -> set[VertexSet]:
    """Every deletable X-Y separator of size at most ``max_size``."""
    x, y = frozenset(x), frozenset(y)
    ids = g.vertices
    data = _separator_data(g, x, y, max_size)
    out = set()
    for _, km, _ in data:
        out.add(frozenset(ids[i] for i in range(len(ids)) if km >> i & 1))
    return out


def oracle_important(g: Graph, x, y, max_size: int) -> set[VertexSet]:
    """Every important X-Y separator of size at most ``max_size``.

    A minimal separator K is important when no separator K' of size <= |K|
    leaves strictly more vertices unreachable from Y. Both minimality and
    importance are checked literally against the full separator list.
    """
    x, y = frozenset(x), frozenset(y)
    ids = g.vertices
    data = _separator_data(g, x, y, max_size)
    cut_masks = {km for _, km, _ in data}
    out = set()
    for size, km, nr in data:
        minimal = True
        m = km
        while m:
            low = m & -m
            m ^= low
            if (km ^ low) in cut_masks:
                minimal = False
                break
        if not minimal:
            continue
        dominated = False
        for size2, km2, nr2 in data:
            if size2 <= size and nr2 != nr and nr | nr2 == nr2:
                dominated = True
                break
        if not dominated:
            out.add(frozenset(ids[i] for i in range(len(ids)) if km >> i & 1))
    return out


def oracle_min_multiway_cut(inst: MwcInstance) -> tuple[int, CutCertificate] | None:
    """Smallest deletable non-terminal set separating all terminal pairs.

    Returns None when two terminals are adjacent (no multiway cut exists).
    Candidate sets are scanned in increasing size, lexicographically, so the
    returned certificate is deterministic.
    """
    g = inst.graph
    ts = sorted(inst.terminals)
    ids, pos, adj = _adjacency(g)
    for a, b in combinations(ts, 2):
        if g.has_edge(a, b):
            return None
    free = [i for i in range(len(ids)) if ids[i] not in inst.terminals and ids[i] not in g.undeletable]
    tbits = [1 << pos[t] for t in ts]
    for size in range(0, len(free) + 1):
        for combo in combinations(free, size):
            km = 0
            for i in combo:
                km |= 1 << i
            ok = True
            seen_any = 0
            for tb in tbits:
                if seen_any & tb:
                    ok = False
                    break
                comp = _spread(adj, tb, km)
                if comp & seen_any:
                    ok = False
                    break
                seen_any |= comp
            if ok:
                cut = frozenset(ids[i] for i in range(len(ids)) if km >> i & 1)
                return size, CutCertificate.from_cut(inst, cut)
    return None
