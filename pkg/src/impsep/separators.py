"""Vertex-disjoint path packing, minimum and important X-Y separators.

Separators are always sets of deletable vertices outside X and Y. The partial
order used throughout: K1 >= K2 when the set of vertices K1 disconnects from
Y contains the set K2 disconnects from Y ("closer to Y is larger"). A minimal
separator is *important* when no separator of the same or smaller size lies
strictly closer to Y; for each graph there is a unique smallest one, computed
here by growing a frontier from Y over a maximum system of vertex-disjoint
paths.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import (
    InvalidArgumentError,
    NonMinimalSeparatorError,
    NotASeparatorError,
)
from .graph import Graph, VertexSet, contract_set, project, reachable_mask, torso


class Order(enum.Enum):
    """Verdict of comparing two separators under the closer-to-Y order."""

    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class PathSystem:
    """A system of X-Y paths, internally disjoint on deletable vertices.

    Undeletable vertices have unbounded capacity and may be shared between
    paths; every path starts at a vertex of X, ends at a vertex of Y and
    contains no other X or Y vertices.
    """

    paths: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class Separator:
    """A certified X-Y separator with its cached side partition.

    ``x_side`` holds every vertex the cut disconnects from Y (X included),
    ``y_side`` the rest; together with ``cut`` they partition the vertices of
    the graph the separator was certified against.
    """

    cut: VertexSet
    x: VertexSet
    y: VertexSet
    x_side: VertexSet
    y_side: VertexSet

    @classmethod
    def certify(cls, g: Graph, x: Iterable[int], y: Iterable[int], cut: Iterable[int]) -> "Separator":
        xs, ys, cs = frozenset(x), frozenset(y), frozenset(cut)
        xm, ym, km = g._mask(xs), g._mask(ys), g._mask(cs)
        if not xm or not ym or xm & ym:
            raise InvalidArgumentError("X and Y must be non-empty and disjoint")
        if km & (xm | ym):
            raise InvalidArgumentError("separator vertices must avoid X and Y")
        if km & g._undel:
            raise InvalidArgumentError("separator contains an undeletable vertex")
        reached = reachable_mask(g._adj, ym, km)
        if reached & xm:
            raise NotASeparatorError("set does not disconnect X from Y")
        x_side = g._unmask(g._full & ~km & ~reached)
        y_side = g._unmask(reached)
        return cls(cs, xs, ys, x_side, y_side)

    def __len__(self) -> int:
        return len(self.cut)


# -- unit-capacity vertex flow ------------------------------------------------


class _PathNetwork:
    """Max-flow network whose integral flows are X-Y path systems.

    Every vertex v outside X and Y is split into an entry and an exit node
    joined by an arc of capacity 1 (unbounded if v is undeletable); graph
    edges become unbounded arcs between exits and entries. Arcs are laid out
    in ascending vertex order and the search scans them in that order, so
    results are deterministic.
    """

    def __init__(self, g: Graph, x: VertexSet, y: VertexSet):
        self.g = g
        n = g.n
        xm, ym = g._mask(x), g._mask(y)
        self.inf = n + 2
        self.source = 2 * n
        self.sink = 2 * n + 1
        self.adj: list[list[int]] = [[] for _ in range(2 * n + 2)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self._arc_at: dict[tuple[int, int], int] = {}

        def add(u: int, v: int, c: int) -> None:
            a = len(self.to)
            self.to.append(v)
            self.cap.append(c)
            self.to.append(u)
            self.cap.append(0)
            self.adj[u].append(a)
            self.adj[v].append(a + 1)
            self._arc_at[(u, v)] = a

        for i in range(n):
            if (xm | ym) >> i & 1:
                continue
            add(2 * i, 2 * i + 1, self.inf if g._undel >> i & 1 else 1)
        for i in range(n):
            if xm >> i & 1:
                add(self.source, 2 * i + 1, self.inf)
        for i in range(n):
            if ym >> i & 1:
                continue
            row = g._adj[i]
            while row:
                low = row & -row
                row ^= low
                j = low.bit_length() - 1
                if not (xm >> j & 1):
                    add(2 * i + 1, 2 * j, self.inf)
        for i in range(n):
            if ym >> i & 1:
                add(2 * i, self.sink, self.inf)
        self.value = 0

    def try_seed(self, paths: Iterable[Iterable[int]]) -> bool:
        """Pre-load the flow with the given vertex paths; reject invalid ones."""
        pos = self.g._pos
        use: dict[int, int] = {}
        for p in paths:
            p = list(p)
            if any(v not in pos for v in p) or len(p) < 2:
                return False
            nodes = [self.source, 2 * pos[p[0]] + 1]
            for v in p[1:-1]:
                nodes.extend((2 * pos[v], 2 * pos[v] + 1))
            nodes.extend((2 * pos[p[-1]], self.sink))
            for u, v in zip(nodes, nodes[1:]):
                a = self._arc_at.get((u, v))
                if a is None:
                    return False
                use[a] = use.get(a, 0) + 1
        if any(cnt > self.cap[a] for a, cnt in use.items()):
            return False
        pushed = 0
        for a, cnt in use.items():
            self.cap[a] -= cnt
            self.cap[a ^ 1] += cnt
            if self.to[a ^ 1] == self.source:
                pushed += cnt
        self.value += pushed
        return True

    def max_flow(self) -> int:
        to, cap, adj = self.to, self.cap, self.adj
        nnode = len(adj)
        while True:
            parent = [-1] * nnode
            parent[self.source] = -2
            queue = [self.source]
            qi = 0
            while qi < len(queue) and parent[self.sink] == -1:
                u = queue[qi]
                qi += 1
                for a in adj[u]:
                    v = to[a]
                    if cap[a] > 0 and parent[v] == -1:
                        parent[v] = a
                        if v == self.sink:
                            break
                        queue.append(v)
            if parent[self.sink] == -1:
                return self.value
            push = self.inf
            v = self.sink
            while v != self.source:
                a = parent[v]
                push = min(push, cap[a])
                v = to[a ^ 1]
            v = self.sink
            while v != self.source:
                a = parent[v]
                cap[a] -= push
                cap[a ^ 1] += push
                v = to[a ^ 1]
            self.value += push

    def source_side(self) -> list[bool]:
        """Residual reachability from the source after max_flow."""
        seen = [False] * len(self.adj)
        seen[self.source] = True
        stack = [self.source]
        while stack:
            u = stack.pop()
            for a in self.adj[u]:
                v = self.to[a]
                if self.cap[a] > 0 and not seen[v]:
                    seen[v] = True
                    stack.append(v)
        return seen

    def decompose(self) -> list[list[int]]:
        """Split the current flow into vertex paths, discarding flow cycles."""
        flow = {a: self.cap[a ^ 1] for a in range(0, len(self.to), 2) if self.cap[a ^ 1] > 0}
        ids = self.g._ids
        paths = []
        for _ in range(self.value):
            node = self.source
            seq = [node]
            seen_at = {node: 0}
            while node != self.sink:
                for a in self.adj[node]:
                    if a % 2 == 0 and flow.get(a, 0) > 0:
                        flow[a] -= 1
                        node = self.to[a]
                        break
                else:
                    raise AssertionError("flow conservation violated")
                if node in seen_at:
                    seq = seq[: seen_at[node] + 1]
                else:
                    seq.append(node)
                    seen_at[node] = len(seq) - 1
            path = [ids[u // 2] for u in seq[1:-1] if u % 2 == 1]
            paths.append(path)
        return paths


def _blocked(g: Graph, xm: int, ym: int) -> bool:
    """True when X reaches Y via adjacency or undeletable vertices only."""
    allowed = xm | (g._undel & ~ym)
    reach = reachable_mask(g._adj, xm, g._full & ~allowed)
    nb = 0
    while reach:
        low = reach & -reach
        reach ^= low
        nb |= g._adj[low.bit_length() - 1]
    return bool(nb & ym)


def _check_xy(g: Graph, x: Iterable[int], y: Iterable[int]) -> tuple[VertexSet, VertexSet]:
    xs, ys = frozenset(x), frozenset(y)
    xm, ym = g._mask(xs), g._mask(ys)
    if not xm or not ym:
        raise InvalidArgumentError("X and Y must be non-empty")
    if xm & ym:
        raise InvalidArgumentError("X and Y must be disjoint")
    return xs, ys


def max_disjoint_paths(g: Graph, x: Iterable[int], y: Iterable[int]) -> PathSystem | None:
    """A maximum system of internally vertex-disjoint X-Y paths.

    Returns None when no separator exists, i.e. X touches Y directly or
    through undeletable vertices alone.
    """
    xs, ys = _check_xy(g, x, y)
    if _blocked(g, g._mask(xs), g._mask(ys)):
        return None
    net = _PathNetwork(g, xs, ys)
    net.max_flow()
    return PathSystem(tuple(tuple(p) for p in net.decompose()))


def min_separator(g: Graph, x: Iterable[int], y: Iterable[int]) -> Separator | None:
    """A minimum X-Y separator, or None when none exists.

    The cut is extracted from the residual of the maximum path packing, so by
    duality its size equals the number of disjoint paths.
    """
    xs, ys = _check_xy(g, x, y)
    if _blocked(g, g._mask(xs), g._mask(ys)):
        return None
    net = _PathNetwork(g, xs, ys)
    r = net.max_flow()
    if r == 0:
        return Separator.certify(g, xs, ys, ())
    side = net.source_side()
    cut = [g._ids[i] for i in range(g.n) if side[2 * i] and not side[2 * i + 1]]
    return Separator.certify(g, xs, ys, cut)


def is_separator(g: Graph, x: Iterable[int], y: Iterable[int], k: Iterable[int]) -> bool:
    """Whether deleting ``k`` leaves no path from X to Y."""
    xs, ys = _check_xy(g, x, y)
    km = g._mask(k)
    xm, ym = g._mask(xs), g._mask(ys)
    if km & (xm | ym):
        raise InvalidArgumentError("candidate separator overlaps X or Y")
    return not (reachable_mask(g._adj, ym, km) & xm)


def is_minimal(g: Graph, x: Iterable[int], y: Iterable[int], k: Iterable[int]) -> bool:
    """Whether ``k`` separates and no proper subset of it does.

    Equivalent test: every cut vertex has a neighbour in the component region
    of X and one in the component region of Y.
    """
    xs, ys = _check_xy(g, x, y)
    km = g._mask(k)
    xm, ym = g._mask(xs), g._mask(ys)
    if km & (xm | ym):
        raise InvalidArgumentError("candidate separator overlaps X or Y")
    reach_x = reachable_mask(g._adj, xm, km)
    if reach_x & ym:
        return False
    reach_y = reachable_mask(g._adj, ym, km)
    m = km
    while m:
        low = m & -m
        m ^= low
        row = g._adj[low.bit_length() - 1]
        if not (row & reach_x) or not (row & reach_y):
            return False
    return True


def _require_minimal(g: Graph, k: Separator) -> None:
    if not is_minimal(g, k.x, k.y, k.cut):
        raise NonMinimalSeparatorError(f"separator {sorted(k.cut)} is not minimal")


def compare(g: Graph, y: Iterable[int], k1: Separator, k2: Separator) -> Order:
    """Order two minimal separators by containment of their X sides.

    Uses the cached side partitions: K1 <= K2 exactly when every vertex of
    K1 missing from K2 lies on K2's X side.
    """
    ys = frozenset(y)
    if k1.y != ys or k2.y != ys or k1.x != k2.x:
        raise InvalidArgumentError("separators were certified for different X/Y pairs")
    _require_minimal(g, k1)
    _require_minimal(g, k2)
    if k1.cut == k2.cut:
        return Order.EQUAL
    leq = k1.cut - k2.cut <= k2.x_side
    geq = k2.cut - k1.cut <= k1.x_side
    if leq and geq:
        raise AssertionError("distinct minimal separators cannot dominate each other")
    if leq:
        return Order.LESS
    if geq:
        return Order.GREATER
    return Order.INCOMPARABLE


def _top_bottom(g: Graph, x, y, k1: Separator, k2: Separator) -> tuple[VertexSet, VertexSet]:
    _require_minimal(g, k1)
    _require_minimal(g, k2)
    common = k1.cut & k2.cut
    k1t = k1.cut & k2.x_side
    k2t = k2.cut & k1.x_side
    k1b = k1.cut - k1t - common
    k2b = k2.cut - k2t - common
    return k1t | k2t | common, k1b | k2b | common


def top(g: Graph, x: Iterable[int], y: Iterable[int], k1: Separator, k2: Separator) -> Separator:
    """Combine two minimal separators keeping the parts nearer to X."""
    t, _ = _top_bottom(g, x, y, k1, k2)
    return Separator.certify(g, x, y, t)


def bottom(g: Graph, x: Iterable[int], y: Iterable[int], k1: Separator, k2: Separator) -> Separator:
    """Combine two minimal separators keeping the parts nearer to Y.

    The result dominates both inputs in the separator order.
    """
    _, b = _top_bottom(g, x, y, k1, k2)
    return Separator.certify(g, x, y, b)


# -- smallest important separator ---------------------------------------------


def _expand_undeletable(g: Graph, internal_undel: VertexSet, r: int) -> tuple[Graph, dict[int, int]]:
    """Replace each undeletable vertex by r+1 interchangeable deletable copies.

    With r the maximum flow value, no minimum separator can afford to contain
    a whole copy class, so minimum separators of the result avoid copies
    entirely and coincide with the flag-respecting ones of ``g``.
    """
    next_id = max(g.vertices) + 1
    group: dict[int, list[int]] = {}
    origin: dict[int, int] = {}
    for v in g.vertices:
        group[v] = [v]
    for v in sorted(internal_undel):
        for _ in range(r):
            group[v].append(next_id)
            origin[next_id] = v
            next_id += 1
    vertices = [u for vs in group.values() for u in vs]
    edges = []
    for a, b in g.edges():
        for ca in group[a]:
            for cb in group[b]:
                edges.append((ca, cb))
    undel = [v for v in g.undeletable if v not in internal_undel]
    return Graph(vertices, edges, undel), origin


def _frontier_cut(gstar: Graph, paths: list[list[int]], x0: int, y0: int) -> list[int]:
    """Grow a region from y0 along the paths until each path pins one vertex.

    On every round, for each path, take the earliest vertex adjacent to the
    region and the latest vertex outside it; when the two coincide on all
    paths those vertices form the minimum separator lying closest to Y.
    """
    pos = gstar._pos
    adj = gstar._adj
    pidx = [[pos[v] for v in p] for p in paths]
    region = 1 << pos[y0]
    while True:
        firsts = []
        lasts = []
        for pi in pidx:
            z = max(i for i in range(len(pi)) if not (region >> pi[i] & 1))
            f = next(i for i in range(len(pi)) if adj[pi[i]] & region)
            if f < 1 or f > z:
                raise AssertionError("frontier reached an X-Y endpoint")
            firsts.append(f)
            lasts.append(z)
        if firsts == lasts:
            ids = gstar._ids
            return [ids[pi[f]] for pi, f in zip(pidx, firsts)]
        grown = region
        for pi, f, z in zip(pidx, firsts, lasts):
            if f != z:
                for i in range(f + 1, z + 1):
                    grown |= 1 << pi[i]
        if grown == region:
            raise AssertionError("frontier stalled")
        region = grown


def _smallest_important_with_paths(
    g: Graph,
    x: Iterable[int],
    y: Iterable[int],
    seed: list[list[int]] | None = None,
) -> tuple[Separator | None, list[list[int]], int]:
    """Smallest important separator plus the path system and seeded flow value."""
    xs, ys = _check_xy(g, x, y)
    if _blocked(g, g._mask(xs), g._mask(ys)):
        return None, [], 0
    gc = g
    x0, y0 = min(xs), min(ys)
    if len(xs) > 1:
        gc = contract_set(gc, xs, x0)
    if len(ys) > 1:
        gc = contract_set(gc, ys, y0)
    net = _PathNetwork(gc, frozenset((x0,)), frozenset((y0,)))
    seeded = 0
    if seed and net.try_seed(seed):
        seeded = net.value
    r = net.max_flow()
    if r == 0:
        return Separator.certify(g, xs, ys, ()), [], seeded
    internal_undel = gc.undeletable - {x0, y0}
    origin: dict[int, int] = {}
    if internal_undel:
        gc, origin = _expand_undeletable(gc, internal_undel, r)
        net = _PathNetwork(gc, frozenset((x0,)), frozenset((y0,)))
        if net.max_flow() != r:
            raise AssertionError("copy expansion changed the minimum cut size")
    paths = net.decompose()
    vstar = {v for p in paths for v in p} | {x0, y0}
    gstar = torso(gc, vstar)
    cut = _frontier_cut(gstar, paths, x0, y0)
    if any(v in origin for v in cut):
        raise AssertionError("minimum separator contains an expanded copy")
    carried = [[origin.get(v, v) for v in p] for p in paths]
    return Separator.certify(g, xs, ys, cut), carried, seeded


def smallest_important_separator(g: Graph, x: Iterable[int], y: Iterable[int]) -> Separator | None:
    """The unique minimum-size important X-Y separator, or None if none exists.

    Every other important separator lies strictly closer to Y than this one.
    """
    sep, _, _ = _smallest_important_with_paths(g, x, y)
    return sep


def is_important(g: Graph, x: Iterable[int], y: Iterable[int], k: Separator) -> bool:
    """Whether no separator of size at most |k| lies strictly closer to Y.

    Polynomial test: after contracting k's X side away, k must come back as
    the unique smallest important separator of the reduced graph.
    """
    xs, ys = _check_xy(g, x, y)
    _require_minimal(g, k)
    gp = project(g, xs, ys, k.cut)
    best = smallest_important_separator(gp, xs, ys)
    return best is not None and len(best) == len(k) and best.cut == k.cut


def normalize(g: Graph, x: Iterable[int], y: Iterable[int]) -> tuple[Graph, Separator] | None:
    """Project g by its smallest important separator K*.

    In the result N(X) = K* is the unique smallest X-Y separator while the
    set of important separators is unchanged; returns None when X and Y
    cannot be separated.
    """
    xs, ys = _check_xy(g, x, y)
    best = smallest_important_separator(g, xs, ys)
    if best is None:
        return None
    return project(g, xs, ys, best.cut), best
