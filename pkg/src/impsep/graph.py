"""Immutable simple graphs and the structural transforms used throughout.

Vertices are arbitrary integers and stay stable under every transform that
does not delete them: projection, torso and contraction all keep surviving
ids unchanged. Adjacency is stored as one bitmask per vertex (index order =
ascending id), which keeps reachability and subset scans fast at the graph
sizes this package targets (tens of vertices).

A vertex may be flagged *undeletable*: separator-producing operations never
put such a vertex into a cut and treat it as having unbounded capacity, which
is behaviourally equivalent to replacing it by many parallel copies.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import InvalidArgumentError, InvalidVertexError, NotASeparatorError

VertexSet = frozenset[int]


def reachable_mask(adj: tuple[int, ...], start: int, blocked: int) -> int:
    """Bitmask of positions reachable from ``start`` without entering ``blocked``.

    Start positions count as reached unless they are themselves blocked.
    """
    seen = start & ~blocked
    frontier = seen
    while frontier:
        nbrs = 0
        m = frontier
        while m:
            low = m & -m
            m ^= low
            nbrs |= adj[low.bit_length() - 1]
        frontier = nbrs & ~blocked & ~seen
        seen |= frontier
    return seen


class Graph:
    """Undirected simple graph over stable integer vertex ids."""

    __slots__ = ("_ids", "_pos", "_adj", "_undel")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]] = (),
        undeletable: Iterable[int] = (),
    ):
        ids = tuple(sorted(set(vertices)))
        pos = {v: i for i, v in enumerate(ids)}
        adj = [0] * len(ids)
        for u, v in edges:
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            try:
                iu, iv = pos[u], pos[v]
            except KeyError as exc:
                raise InvalidVertexError(f"edge endpoint {exc.args[0]} is not a vertex") from None
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu
        undel = 0
        for v in undeletable:
            if v not in pos:
                raise InvalidVertexError(f"undeletable vertex {v} is not a vertex")
            undel |= 1 << pos[v]
        self._ids = ids
        self._pos = pos
        self._adj = tuple(adj)
        self._undel = undel

    @classmethod
    def _from_internal(cls, ids: tuple[int, ...], adj: tuple[int, ...], undel: int) -> "Graph":
        g = object.__new__(cls)
        g._ids = ids
        g._pos = {v: i for i, v in enumerate(ids)}
        g._adj = adj
        g._undel = undel
        return g

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._ids)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._ids

    @property
    def vertex_set(self) -> VertexSet:
        return frozenset(self._ids)

    @property
    def undeletable(self) -> VertexSet:
        return self._unmask(self._undel)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def neighbors(self, v: int) -> VertexSet:
        return self._unmask(self._adj[self._index(v)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[self._index(u)] >> self._index(v) & 1)

    def degree(self, v: int) -> int:
        return self._adj[self._index(v)].bit_count()

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        out = []
        for i, u in enumerate(self._ids):
            m = self._adj[i] >> (i + 1) << (i + 1)
            while m:
                low = m & -m
                m ^= low
                out.append((u, self._ids[low.bit_length() - 1]))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._ids == other._ids
            and self._adj == other._adj
            and self._undel == other._undel
        )

    def __hash__(self) -> int:
        return hash((self._ids, self._adj, self._undel))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    # -- internal mask plumbing --------------------------------------------

    def _index(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise InvalidVertexError(f"vertex {v} is not in the graph") from None

    def _mask(self, vs: Iterable[int]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self._index(v)
        return m

    def _unmask(self, mask: int) -> VertexSet:
        out = []
        while mask:
            low = mask & -mask
            mask ^= low
            out.append(self._ids[low.bit_length() - 1])
        return frozenset(out)

    @property
    def _full(self) -> int:
        return (1 << len(self._ids)) - 1

    def _restrict(self, keep: int) -> tuple[tuple[int, ...], list[int], int]:
        """Reindexed (ids, adjacency, undeletable) of the induced subgraph."""
        old = []
        m = keep
        while m:
            low = m & -m
            m ^= low
            old.append(low.bit_length() - 1)
        ids = tuple(self._ids[i] for i in old)
        adj = []
        for i in old:
            row = self._adj[i] & keep
            packed = 0
            for j, oj in enumerate(old):
                packed |= (row >> oj & 1) << j
            adj.append(packed)
        undel = 0
        for j, oj in enumerate(old):
            undel |= (self._undel >> oj & 1) << j
        return ids, adj, undel

    def without(self, drop: Iterable[int]) -> "Graph":
        """The induced subgraph after deleting the given vertices."""
        keep = self._full & ~self._mask(drop)
        ids, adj, undel = self._restrict(keep)
        return Graph._from_internal(ids, tuple(adj), undel)

    def induced(self, keep_vertices: Iterable[int]) -> "Graph":
        """The subgraph induced by the given vertices."""
        ids, adj, undel = self._restrict(self._mask(keep_vertices))
        return Graph._from_internal(ids, tuple(adj), undel)


# -- structural operations ---------------------------------------------------


def neighborhood(g: Graph, c: Iterable[int]) -> VertexSet:
    """Vertices outside ``c`` adjacent to at least one vertex of ``c``."""
    cm = g._mask(c)
    nb = 0
    m = cm
    while m:
        low = m & -m
        m ^= low
        nb |= g._adj[low.bit_length() - 1]
    return g._unmask(nb & ~cm)


def reach_complement(g: Graph, a: Iterable[int], b: Iterable[int]) -> VertexSet:
    """Vertices outside ``b`` that cannot be reached from ``a`` in g minus b."""
    am = g._mask(a)
    bm = g._mask(b)
    if am & bm:
        raise InvalidArgumentError("source set and removed set overlap")
    reached = reachable_mask(g._adj, am, bm)
    return g._unmask(g._full & ~bm & ~reached)


def contract_set(g: Graph, s: Iterable[int], label: int) -> Graph:
    """Replace the vertex set ``s`` by a single vertex ``label`` adjacent to N(s).

    ``label`` must either be a member of ``s`` or a fresh id. The new vertex is
    undeletable if any member of ``s`` was.
    """
    sm = g._mask(s)
    if not sm:
        raise InvalidArgumentError("cannot contract an empty set")
    if label in g and not (sm >> g._index(label) & 1):
        raise InvalidArgumentError(f"label {label} collides with a vertex outside the set")
    nb = 0
    m = sm
    while m:
        low = m & -m
        m ^= low
        nb |= g._adj[low.bit_length() - 1]
    nb &= ~sm
    keep = g._full & ~sm
    ids, adj, undel = g._restrict(keep)
    nb_ids = g._unmask(nb)
    new_ids = tuple(sorted(set(ids) | {label}))
    pos = {v: i for i, v in enumerate(new_ids)}
    new_adj = [0] * len(new_ids)
    for i, v in enumerate(ids):
        row = adj[i]
        packed = 0
        while row:
            low = row & -row
            row ^= low
            packed |= 1 << pos[ids[low.bit_length() - 1]]
        new_adj[pos[v]] = packed
    li = pos[label]
    for u in nb_ids:
        new_adj[li] |= 1 << pos[u]
        new_adj[pos[u]] |= 1 << li
    new_undel = 0
    for i, v in enumerate(ids):
        new_undel |= (undel >> i & 1) << pos[v]
    if g._undel & sm:
        new_undel |= 1 << li
    return Graph._from_internal(new_ids, tuple(new_adj), new_undel)


def torso(g: Graph, s: Iterable[int]) -> Graph:
    """The graph on ``s`` with edges of g[s] plus shortcuts through the outside.

    Two vertices of ``s`` become adjacent whenever g contains a path between
    them whose intermediate vertices all avoid ``s``.
    """
    sm = g._mask(s)
    ids, adj, undel = g._restrict(sm)
    pos = {v: i for i, v in enumerate(ids)}
    outside = g._full & ~sm
    todo = outside
    while todo:
        seed = todo & -todo
        comp = reachable_mask(g._adj, seed, ~outside & g._full)
        todo &= ~comp
        nb = 0
        m = comp
        while m:
            low = m & -m
            m ^= low
            nb |= g._adj[low.bit_length() - 1]
        attach = [pos[v] for v in g._unmask(nb & sm)]
        for i in attach:
            for j in attach:
                if i != j:
                    adj[i] |= 1 << j
    return Graph._from_internal(ids, tuple(adj), undel)


def project(g: Graph, x: Iterable[int], y: Iterable[int], k) -> Graph:
    """Contract the X side of the separator ``k`` away and wire X straight to it.

    Deletes every vertex outside X that the cut ``k`` disconnects from Y, then
    adds an edge from each vertex of X to each vertex of the cut. ``k`` may be
    a certified separator or a plain vertex set; either way it is re-verified
    against this graph.
    """
    cut = getattr(k, "cut", k)
    xm = g._mask(x)
    ym = g._mask(y)
    km = g._mask(cut)
    if km & (xm | ym):
        raise InvalidArgumentError("separator overlaps X or Y")
    reached = reachable_mask(g._adj, ym, km)
    if reached & xm:
        raise NotASeparatorError("the given set does not separate X from Y")
    nr = g._full & ~km & ~reached
    keep = g._full & ~(nr & ~xm)
    ids, adj, undel = g._restrict(keep)
    pos = {v: i for i, v in enumerate(ids)}
    xi = [pos[v] for v in g._unmask(xm)]
    ki = [pos[v] for v in g._unmask(km)]
    for i in xi:
        for j in ki:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph._from_internal(ids, tuple(adj), undel)


def make_undeletable(g: Graph, s: Iterable[int]) -> Graph:
    """A copy of g whose vertices in ``s`` are additionally flagged undeletable."""
    sm = g._mask(s)
    if not sm:
        return g
    return Graph._from_internal(g._ids, g._adj, g._undel | sm)
