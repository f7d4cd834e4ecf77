"""Isolating cuts and the above-guarantee vertex multiway cut solver.

For terminals T, the largest minimum isolating-cut size m is a lower bound on
any multiway cut. The solver decides whether a cut of size m+k exists by
branching over the important isolating cuts of a terminal attaining m with
excess at most k, then recursing on the residual instance with the leftover
budget: some optimal solution always contains an important isolating cut of
any fixed terminal, so the branching is exhaustive.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    AdjacentTerminalsError,
    InvalidArgumentError,
    InvalidVertexError,
    NoSeparatorError,
)
from .graph import Graph, VertexSet, reachable_mask
from .separators import Separator, min_separator, smallest_important_separator
from .witnesses import enumerate_important


@dataclass(frozen=True)
class MwcInstance:
    """A graph with at least two distinguished terminal vertices.

    Terminals are never part of any cut; cuts consist of deletable
    non-terminal vertices.
    """

    graph: Graph
    terminals: VertexSet

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        if len(self.terminals) < 2:
            raise InvalidArgumentError("an instance needs at least two terminals")
        missing = self.terminals - self.graph.vertex_set
        if missing:
            raise InvalidVertexError(f"terminals {sorted(missing)} are not vertices")


@dataclass(frozen=True)
class CutCertificate:
    """A verified multiway cut with the component partition it induces."""

    cut: VertexSet
    components: tuple[VertexSet, ...]

    @property
    def size(self) -> int:
        return len(self.cut)

    @classmethod
    def from_cut(cls, inst: MwcInstance, cut: Iterable[int]) -> "CutCertificate | None":
        """Certify ``cut`` against the instance; None when a component keeps 2+ terminals."""
        g = inst.graph
        cs = frozenset(cut)
        cm = g._mask(cs)
        if cm & g._mask(inst.terminals):
            raise InvalidArgumentError("a multiway cut cannot contain terminals")
        if cm & g._undel:
            raise InvalidArgumentError("a multiway cut cannot contain undeletable vertices")
        comps: list[VertexSet] = []
        todo = g._full & ~cm
        while todo:
            seed = todo & -todo
            comp = reachable_mask(g._adj, seed, cm)
            todo &= ~comp
            members = g._unmask(comp)
            if len(members & inst.terminals) > 1:
                return None
            comps.append(members)
        comps.sort(key=min)
        return cls(cs, tuple(comps))


def min_isolating_cut(inst: MwcInstance, t: int) -> Separator | None:
    """A minimum separator between ``t`` and the remaining terminals.

    None when ``t`` is adjacent to another terminal (or only undeletable
    vertices stand between them).
    """
    if t not in inst.terminals:
        raise InvalidArgumentError(f"{t} is not a terminal")
    return min_separator(inst.graph, (t,), inst.terminals - {t})


def lower_bound_m(inst: MwcInstance) -> tuple[int, int]:
    """The largest minimum isolating-cut size and the terminal attaining it.

    Ties go to the smallest terminal id. Raises AdjacentTerminalsError when
    two terminals share an edge (no multiway cut can exist).
    """
    _check_terminals_apart(inst)
    best = -1
    best_t = -1
    for t in sorted(inst.terminals):
        sep = min_isolating_cut(inst, t)
        if sep is None:
            raise NoSeparatorError(f"terminal {t} cannot be isolated by deletable vertices")
        if len(sep) > best:
            best = len(sep)
            best_t = t
    return best, best_t


def _check_terminals_apart(inst: MwcInstance) -> None:
    for a, b in combinations(sorted(inst.terminals), 2):
        if inst.graph.has_edge(a, b):
            raise AdjacentTerminalsError(f"terminals {a} and {b} are adjacent")


def _terminal_region(g: Graph, cut: VertexSet, terminals: VertexSet) -> VertexSet:
    """Vertices of components of g minus cut that contain a terminal."""
    cm = g._mask(cut)
    keep = 0
    for t in sorted(terminals):
        tb = 1 << g._index(t)
        if not keep & tb:
            keep |= reachable_mask(g._adj, tb, cm)
    return g._unmask(keep)


def _solve_residual(g: Graph, cut: VertexSet, rest: VertexSet, budget: int) -> VertexSet | None:
    """Solve the instance left after deleting ``cut`` and retiring its terminal.

    Components holding no remaining terminal are dropped before recursing.
    """
    if len(rest) == 1:
        return frozenset()
    residual = g.induced(_terminal_region(g, cut, rest))
    sub = solve_budget(MwcInstance(residual, rest), budget)
    return None if sub is None else sub.cut


def solve_budget(inst: MwcInstance, budget: int) -> CutCertificate | None:
    """A multiway cut of size at most ``budget``, or None when none exists.

    Branches on the terminal with the largest minimum isolating cut: by the
    important-cut property it suffices to try every important isolating cut
    of that terminal within budget and recurse on what is left. Adjacent or
    otherwise unseparable terminal pairs yield None.
    """
    if budget < 0:
        raise InvalidArgumentError("budget must be non-negative")
    g = inst.graph
    try:
        _check_terminals_apart(inst)
    except AdjacentTerminalsError:
        return None
    best = -1
    best_t = -1
    for t in sorted(inst.terminals):
        sep = min_isolating_cut(inst, t)
        if sep is None:
            return None
        if len(sep) > best:
            best = len(sep)
            best_t = t
    if best == 0:
        cert = CutCertificate.from_cut(inst, ())
        assert cert is not None
        return cert
    if best > budget:
        return None
    rest = inst.terminals - {best_t}
    for cand in enumerate_important(g, (best_t,), rest, budget - best):
        sub = _solve_residual(g, cand.cut, rest, budget - len(cand))
        if sub is not None:
            cert = CutCertificate.from_cut(inst, cand.cut | sub)
            assert cert is not None and cert.size <= budget
            return cert
    return None


def solve_above_guarantee(inst: MwcInstance, k: int) -> CutCertificate | None:
    """A multiway cut of size at most m+k, or None when none exists.

    For k = 0 the unique smallest important isolating cut of the terminal
    attaining m either is itself a multiway cut or there is no solution. For
    k > 0, branches over that terminal's important isolating cuts of excess
    at most k and solves each residual instance with the leftover budget.
    """
    if k < 0:
        raise InvalidArgumentError("excess must be non-negative")
    m, t = lower_bound_m(inst)
    g = inst.graph
    rest = inst.terminals - {t}
    if k == 0:
        best = smallest_important_separator(g, (t,), rest)
        assert best is not None
        return CutCertificate.from_cut(inst, best.cut)
    for cand in enumerate_important(g, (t,), rest, k):
        sub = _solve_residual(g, cand.cut, rest, m + k - len(cand))
        if sub is not None:
            cert = CutCertificate.from_cut(inst, cand.cut | sub)
            assert cert is not None and cert.size <= m + k
            return cert
    return None
