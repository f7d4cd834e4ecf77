"""Witness calculus on normalized graphs and excess-bounded enumeration.

A graph is *normalized* for X and Y when N(X) is its unique smallest X-Y
separator. For a subset S of N(X), the smallest separators avoiding S contain
exactly one important one, the *important witness* of S; chaining witnesses
through repeated projection extends this to sequences of disjoint sets
(*attributes*). Every important separator of excess k over the minimum is
reproduced by some attribute whose sets have at most k vertices in total,
which bounds the number of such separators by sum_{i<=k} C(n, i) and turns
enumeration into a scan over small vertex subsets.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    InvalidArgumentError,
    NoSeparatorError,
    NotInNeighborhoodError,
    NotNormalizedError,
)
from .graph import Graph, VertexSet, make_undeletable, neighborhood, project
from .separators import (
    Separator,
    _smallest_important_with_paths,
    is_important,
    is_minimal,
    normalize,
    smallest_important_separator,
)


@dataclass(frozen=True)
class Attribute:
    """An ordered sequence of pairwise-disjoint non-empty vertex sets.

    Whether the sequence actually names a compound witness of a given graph
    is decided by :func:`compound_witness`, not at construction.
    """

    sets: tuple[VertexSet, ...]

    def __post_init__(self):
        seen: set[int] = set()
        for s in self.sets:
            if not s:
                raise InvalidArgumentError("attribute sets must be non-empty")
            if seen & s:
                raise InvalidArgumentError("attribute sets must be pairwise disjoint")
            seen |= s

    @property
    def rank(self) -> int:
        return sum(len(s) for s in self.sets)


def _ensure_normalized(g: Graph, x: VertexSet, y: VertexSet) -> VertexSet:
    """Return N(X) after verifying it is the unique smallest X-Y separator."""
    nx = neighborhood(g, x)
    best = smallest_important_separator(g, x, y)
    if best is None or best.cut != nx:
        raise NotNormalizedError("N(X) is not the unique smallest X-Y separator")
    return nx


def _witness(g: Graph, x: VertexSet, y: VertexSet, s: VertexSet) -> Separator | None:
    """Unique important separator among the smallest ones disjoint from s."""
    return smallest_important_separator(make_undeletable(g, s), x, y)


def cover_excess(g: Graph, x: Iterable[int], y: Iterable[int], s: Iterable[int]) -> int | float:
    """Excess of the smallest X-Y separator avoiding ``s``, or math.inf.

    The value is infinite exactly when no separator avoids ``s``, in
    particular when ``s`` touches Y.
    """
    xs, ys, ss = frozenset(x), frozenset(y), frozenset(s)
    nx = _ensure_normalized(g, xs, ys)
    if not ss <= nx:
        raise NotInNeighborhoodError("cover set must lie inside N(X)")
    w = _witness(g, xs, ys, ss)
    return math.inf if w is None else len(w) - len(nx)


def important_witness(g: Graph, x: Iterable[int], y: Iterable[int], s: Iterable[int]) -> Separator | None:
    """The unique important separator among smallest separators avoiding ``s``.

    None signals infinite cover excess (no separator avoids ``s``).
    """
    xs, ys, ss = frozenset(x), frozenset(y), frozenset(s)
    nx = _ensure_normalized(g, xs, ys)
    if not ss <= nx:
        raise NotInNeighborhoodError("cover set must lie inside N(X)")
    return _witness(g, xs, ys, ss)


def attribute_of(g: Graph, x: Iterable[int], y: Iterable[int], s: Iterable[int]) -> Attribute | None:
    """Decompose ``s`` into the unique attribute it can correspond to.

    Peels S1 = s intersect N(X), recurses on the rest in the graph projected
    by S1's important witness. Returns None when the decomposition is not
    well formed: empty input, an empty peel with residue left, a vertex that
    fell out of the projected graph, or a witness that does not exist.
    The graph must be normalized for X and Y.
    """
    xs, ys = frozenset(x), frozenset(y)
    remaining = frozenset(s)
    if not remaining:
        return None
    layers: list[VertexSet] = []
    cur = g
    while remaining:
        if not remaining <= cur.vertex_set:
            return None
        s1 = remaining & neighborhood(cur, xs)
        if not s1:
            return None
        w = _witness(cur, xs, ys, s1)
        if w is None:
            return None
        layers.append(s1)
        remaining = remaining - s1
        if remaining:
            cur = project(cur, xs, ys, w.cut)
    return Attribute(tuple(layers))


def _carry_paths(paths: list[list[int]], cut: VertexSet) -> list[list[int]] | None:
    """Shorten paths to start at their last crossing of ``cut``.

    After projecting by ``cut``, each shortened path survives: X is wired
    straight to the cut and the tail beyond the last crossing avoids every
    deleted vertex. Used to seed the next stage's flow.
    """
    out = []
    for p in paths:
        last = None
        for i, v in enumerate(p):
            if v in cut:
                last = i
        if last is None:
            return None
        out.append([p[0], *p[last:]])
    return out


def _compound_run(
    g: Graph,
    x: VertexSet,
    y: VertexSet,
    attr: Attribute,
    k0: tuple[Separator, list[list[int]]] | None = None,
) -> tuple[Separator | None, list[tuple[int, int]]]:
    """Run the staged witness construction; also report (seeded, value) per stage."""
    if k0 is None:
        prev, carried, _ = _smallest_important_with_paths(g, x, y)
        if prev is None:
            return None, []
    else:
        prev, carried = k0
    cur = g
    stats: list[tuple[int, int]] = []
    for si in attr.sets:
        if not si <= prev.cut:
            return None, stats
        cur = make_undeletable(project(cur, x, y, prev.cut), si)
        seed = _carry_paths(carried, prev.cut)
        sep, carried, seeded = _smallest_important_with_paths(cur, x, y, seed)
        if sep is None:
            return None, stats
        stats.append((seeded, len(sep)))
        prev = sep
    return prev, stats


def compound_witness(g: Graph, x: Iterable[int], y: Iterable[int], attr: Attribute) -> Separator | None:
    """The separator named by ``attr``, or None when no such witness exists.

    Stage i projects by the previous stage's separator, freezes the i-th
    attribute set and takes the smallest important separator of the result;
    the construction fails when an attribute set escapes the previous cut or
    a stage has no separator left. Each stage's flow is seeded with the
    surviving paths of the previous one. The graph must be normalized.
    """
    xs, ys = frozenset(x), frozenset(y)
    sep, _ = _compound_run(g, xs, ys, attr)
    if sep is None:
        return None
    return Separator.certify(g, xs, ys, sep.cut)


def enumerate_important(
    g: Graph,
    x: Iterable[int],
    y: Iterable[int],
    k: int,
    max_workers: int | None = None,
) -> list[Separator]:
    """All important X-Y separators whose excess over the minimum is <= k.

    Normalizes the graph, emits the unique smallest important separator, then
    scans every vertex subset of size 1..k in size-then-lexicographic order,
    mapping each through attribute decomposition and the compound witness
    construction; candidates that fail the importance or excess test are
    dropped and duplicates keep their first occurrence, so the output order
    is deterministic. With ``max_workers`` set, subsets are evaluated on a
    thread pool; the merged output is identical to the sequential one.

    Raises NoSeparatorError when X and Y cannot be separated at all.
    """
    xs, ys = frozenset(x), frozenset(y)
    if k < 0:
        raise InvalidArgumentError("excess bound must be non-negative")
    norm = normalize(g, xs, ys)
    if norm is None:
        raise NoSeparatorError("X and Y cannot be separated")
    g_norm, best = norm
    r = len(best)
    k0_sep, k0_paths, _ = _smallest_important_with_paths(g_norm, xs, ys)
    if k0_sep is None:  # cannot happen for a normalized projection
        raise AssertionError("projection lost the separator")
    k0 = (k0_sep, k0_paths)

    def evaluate(subset: tuple[int, ...]) -> VertexSet | None:
        attr = attribute_of(g_norm, xs, ys, subset)
        if attr is None:
            return None
        sep, _ = _compound_run(g_norm, xs, ys, attr, k0)
        if sep is None:
            return None
        cut = sep.cut
        if len(cut) - r > k:
            return None
        if not is_minimal(g, xs, ys, cut):
            return None
        if not is_important(g, xs, ys, Separator.certify(g, xs, ys, cut)):
            return None
        return cut

    subsets = [c for size in range(1, k + 1) for c in combinations(g_norm.vertices, size)]
    if max_workers:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(evaluate, subsets))
    else:
        results = [evaluate(s) for s in subsets]

    out: dict[tuple[int, ...], Separator] = {tuple(sorted(best.cut)): best}
    for cut in results:
        if cut is None:
            continue
        key = tuple(sorted(cut))
        if key not in out:
            out[key] = Separator.certify(g, xs, ys, cut)
    return list(out.values())
