"""Degeneracy greedy coloring, palette-bounded exact coloring, the split coloring
of the backward-ancestor part, and the product combiner.

All colorings are of the underlying undirected graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Sequence

from .graph import Digraph, InstanceTooLarge, VertexColoring
from .outtree import OutTree
from .subdivision import SubdivisionWitness, extract_from_out_star

DEFAULT_PALETTE_CAP = 64


@dataclass(frozen=True)
class DegeneracyOrder:
    order: tuple[int, ...]  # elimination sequence, smallest degree first
    degeneracy: int


def degeneracy_order(d: Digraph) -> DegeneracyOrder:
    """Smallest-last elimination; ties go to the lowest vertex id."""
    deg = [len(d.neighbors(v)) for v in range(d.n)]
    alive = set(range(d.n))
    order, worst = [], 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        worst = max(worst, deg[v])
        order.append(v)
        alive.remove(v)
        for u in d.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return DegeneracyOrder(tuple(order), worst)


def _first_free(taken: set[int]) -> int:
    c = 0
    while c in taken:
        c += 1
    return c


def greedy_degeneracy_color(d: Digraph) -> VertexColoring:
    """Colour in reverse elimination order with the lowest free colour."""
    colors: dict[int, int] = {}
    for v in reversed(degeneracy_order(d).order):
        colors[v] = _first_free({colors[u] for u in d.neighbors(v) if u in colors})
    return VertexColoring(colors)


class NotAcyclic(ValueError):
    def __init__(self, cycle: Sequence[int]) -> None:
        self.cycle = list(cycle)
        super().__init__(f"digraph has a directed cycle through {self.cycle}")


class OutDegreeExceeded(ValueError):
    def __init__(self, vertex: int, degree: int, bound: int) -> None:
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has out-degree {degree} > {bound}")


def color_acyclic_by_outdegree(d: Digraph, bound: int) -> VertexColoring:
    """At most ``bound + 1`` colours for an acyclic digraph of max out-degree ``bound``.

    Vertices are coloured sinks first, so each vertex only has to avoid its
    already coloured out-neighbours.
    """
    for v in range(d.n):
        if d.out_degree(v) > bound:
            raise OutDegreeExceeded(v, d.out_degree(v), bound)
    # graphlib yields a node after all its "predecessors"; feed out-neighbours as those
    sorter = TopologicalSorter({v: d.successors(v) for v in range(d.n)})
    try:
        order = list(sorter.static_order())
    except CycleError as exc:
        raise NotAcyclic(exc.args[1]) from None
    colors: dict[int, int] = {}
    for v in order:
        colors[v] = _first_free({colors[u] for u in d.successors(v)})
    return VertexColoring(colors)


@dataclass(frozen=True)
class Unsatisfiable:
    palette: int
    reason: str = ""


class SearchBudgetExceeded(RuntimeError):
    pass


def exact_color_within(
    d: Digraph, palette: int, cap: int = DEFAULT_PALETTE_CAP, budget: int | None = None
) -> VertexColoring | Unsatisfiable:
    """A proper colouring with at most ``palette`` colours, or :class:`Unsatisfiable`.

    Backtracking picks the most saturated vertex and opens at most one new
    colour per step. ``budget`` caps the number of search nodes.
    """
    if d.n > cap:
        raise InstanceTooLarge(f"{d.n} vertices exceeds the palette-search cap of {cap}")
    if palette < 0:
        raise ValueError("palette must be non-negative")
    n = d.n
    if n == 0:
        return VertexColoring({})
    if palette == 0:
        return Unsatisfiable(0, "non-empty graph")
    adj = [d.neighbors(v) for v in range(n)]
    quick = greedy_degeneracy_color(d)
    if quick.palette_size <= palette:
        return quick

    colors = [-1] * n
    # count of neighbours per colour, per vertex
    seen: list[dict[int, int]] = [dict() for _ in range(n)]
    nodes = 0

    def pick() -> int:
        best, key = -1, (-1, -1, 0)
        for v in range(n):
            if colors[v] < 0:
                k = (len(seen[v]), len(adj[v]), -v)
                if k > key:
                    best, key = v, k
        return best

    def place(v: int, c: int, delta: int) -> None:
        for u in adj[v]:
            cnt = seen[u]
            cnt[c] = cnt.get(c, 0) + delta
            if not cnt[c]:
                del cnt[c]

    def search(done: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded(f"palette search exceeded {budget} nodes")
        if done == n:
            return True
        v = pick()
        if len(seen[v]) >= palette:
            return False
        for c in range(min(used + 1, palette)):
            if c in seen[v]:
                continue
            colors[v] = c
            place(v, c, +1)
            if search(done + 1, max(used, c + 1)):
                return True
            place(v, c, -1)
            colors[v] = -1
        return False

    if search(0, 0):
        return VertexColoring(dict(enumerate(colors)))
    return Unsatisfiable(palette, "exhaustive search")


def product_coloring(c1: VertexColoring, c2: VertexColoring, width: int | None = None) -> VertexColoring:
    """Pair the two colours of each vertex and flatten as ``c1 * width + c2``.

    ``width`` defaults to one more than the largest colour of ``c2``.
    """
    if set(c1.assignment) != set(c2.assignment):
        raise ValueError("colorings are defined on different vertex sets")
    w = width if width is not None else c2.max_color + 1
    if c2.max_color >= w:
        raise ValueError(f"width {w} is too small for the second coloring")
    return VertexColoring({v: c1[v] * w + c2[v] for v in c1.assignment})


@dataclass(frozen=True)
class SplitColoring:
    """Colours 0-1 on out-degree <= 1 vertices, colours 2-6 on the rest."""

    s1: frozenset[int]
    s2: frozenset[int]
    coloring: VertexColoring
    s2_max_outdegree: int  # largest out-degree inside the subgraph induced by s2


S1_COLORS = 2
SPLIT_PALETTE = 7


def color_di2(
    d: Digraph,
    t: OutTree,
    vertices: Sequence[int],
    arcs: Sequence[tuple[int, int]],
    k: int,
) -> SplitColoring | SubdivisionWitness:
    """Split-colour a backward-ancestor part, or extract a witness from a dense out-star.

    ``vertices``/``arcs`` are global ids; every arc must run from a vertex to
    one of its proper tree ancestors.
    """
    if t is None:
        raise ValueError("the backward-ancestor part needs its out-tree")
    out: dict[int, list[int]] = {v: [] for v in vertices}
    for x, y in arcs:
        if x == y or not t.is_ancestor(y, x):
            raise ValueError(f"arc ({x}, {y}) does not point to a tree ancestor")
        out[x].append(y)
    s1 = frozenset(v for v in vertices if len(out[v]) <= 1)
    s2 = frozenset(v for v in vertices if len(out[v]) >= 2)
    lv = t.level
    for x in sorted(s2):
        ys = sorted(out[x], key=lambda v: lv[v])
        if sum(1 for y in ys[1:-1] if y in s2) >= 3:
            return extract_from_out_star(d, t, out, s2, x, k)

    def induced(part: frozenset[int]) -> tuple[Digraph, tuple[int, ...]]:
        verts = tuple(sorted(part))
        return d.relabeled_subgraph(verts, [(x, y) for x, y in arcs if x in part and y in part])

    g1, m1 = induced(s1)
    g2, m2 = induced(s2)
    c1 = color_acyclic_by_outdegree(g1, 1).relabel(m1)
    c2 = color_acyclic_by_outdegree(g2, 4).relabel(m2)
    colors = dict(c1.assignment)
    colors.update({v: S1_COLORS + c for v, c in c2.assignment.items()})
    s2_max = max((g2.out_degree(v) for v in range(g2.n)), default=0)
    return SplitColoring(s1, s2, VertexColoring(colors), s2_max)
