"""Digraph container, strong connectivity, random strong digraphs, exact chromatic number."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

DEFAULT_EXACT_CAP = 20


class InstanceTooLarge(ValueError):
    """An exact routine refused an instance above its vertex cap."""


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on vertices ``0..n-1``.

    Antiparallel pairs ``(u, v)``/``(v, u)`` are two distinct arcs. ``names``
    keeps the external identifiers seen at the I/O boundary, if any.
    """

    n: int
    arcs: frozenset[tuple[int, int]]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u} rejected")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        if self.names is not None and len(self.names) != self.n:
            raise ValueError("names must list exactly one name per vertex")

    @classmethod
    def from_arcs(
        cls, n: int, arcs: Iterable[tuple[int, int]], names: Sequence[str] | None = None
    ) -> Digraph:
        """Build a digraph, rejecting duplicate arcs (``frozenset`` would hide them)."""
        seen: set[tuple[int, int]] = set()
        for u, v in arcs:
            arc = (int(u), int(v))
            if arc in seen:
                raise ValueError(f"duplicate arc {arc} rejected")
            seen.add(arc)
        return cls(n, frozenset(seen), tuple(names) if names is not None else None)

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(a)) for a in out)

    @cached_property
    def _in(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inc[v].append(u)
        return tuple(tuple(sorted(a)) for a in inc)

    @cached_property
    def _nbrs(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self._out[v]) | frozenset(self._in[v]) for v in range(self.n))

    def successors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def neighbors(self, v: int) -> frozenset[int]:
        """Neighbours in the underlying graph."""
        return self._nbrs[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def vertices(self) -> range:
        return range(self.n)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def underlying_edges(self) -> set[frozenset[int]]:
        return {frozenset(a) for a in self.arcs}

    def has_antiparallel(self) -> bool:
        return any((v, u) in self.arcs for u, v in self.arcs)

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def induced(self, vertices: Sequence[int]) -> tuple[Digraph, tuple[int, ...]]:
        """Induced subdigraph relabelled densely; returns it with the local->global map."""
        verts = tuple(vertices)
        local = {v: i for i, v in enumerate(verts)}
        arcs = frozenset((local[u], local[v]) for u, v in self.arcs if u in local and v in local)
        return Digraph(len(verts), arcs), verts

    def relabeled_subgraph(
        self, vertices: Sequence[int], arcs: Iterable[tuple[int, int]]
    ) -> tuple[Digraph, tuple[int, ...]]:
        """Digraph on ``vertices`` (relabelled 0..) keeping only the given arcs."""
        verts = tuple(vertices)
        local = {v: i for i, v in enumerate(verts)}
        return Digraph(len(verts), frozenset((local[u], local[v]) for u, v in arcs)), verts


@dataclass(frozen=True)
class VertexColoring:
    """Vertex -> colour index. Properness is judged on the underlying graph."""

    assignment: Mapping[int, int]

    @property
    def palette_size(self) -> int:
        return len(set(self.assignment.values()))

    @property
    def max_color(self) -> int:
        return max(self.assignment.values(), default=-1)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def conflicts(self, d: Digraph) -> list[tuple[int, int]]:
        """Arcs whose endpoints share a colour (unassigned endpoints are reported too)."""
        a = self.assignment
        return [(u, v) for u, v in d.sorted_arcs() if u not in a or v not in a or a[u] == a[v]]

    def is_proper(self, d: Digraph) -> bool:
        return not self.conflicts(d)

    def relabel(self, mapping: Sequence[int]) -> VertexColoring:
        """Move a coloring of a relabelled subgraph back to global vertex ids."""
        return VertexColoring({mapping[v]: c for v, c in self.assignment.items()})


def _reach(n: int, start: int, adj) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def is_strongly_connected(d: Digraph) -> bool:
    """Forward and backward reachability from vertex 0 both cover every vertex."""
    if d.n <= 1:
        return True
    return len(_reach(d.n, 0, d.successors)) == d.n and len(_reach(d.n, 0, d.predecessors)) == d.n


def generate_strong_digraph(n: int, density: float, seed: int, *, oriented: bool = False) -> Digraph:
    """Random Hamiltonian backbone plus independent extra arcs.

    In the default mode every remaining ordered pair is added with probability
    ``density``. With ``oriented=True`` each unordered pair carries at most one
    arc: a pair off the backbone gets one arc, of random direction, with
    probability ``density``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    if oriented and n == 2:
        raise ValueError("no strong oriented graph on 2 vertices")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    arcs: set[tuple[int, int]] = set()
    if n > 1:
        for i in range(n):
            arcs.add((perm[i], perm[(i + 1) % n]))
    if oriented:
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in arcs or (v, u) in arcs:
                    continue
                if rng.random() < density:
                    arcs.add((u, v) if rng.random() < 0.5 else (v, u))
    else:
        for u in range(n):
            for v in range(n):
                if u != v and (u, v) not in arcs and rng.random() < density:
                    arcs.add((u, v))
    return Digraph(n, frozenset(arcs))


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, frozenset((u, v) for u in range(n) for v in range(n) if u != v))


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)) if n > 1 else frozenset())


def directed_path(n: int) -> Digraph:
    return Digraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def _adjacency_sets(d: Digraph) -> list[set[int]]:
    return [set(d.neighbors(v)) for v in range(d.n)]


def chromatic_number_exact(d: Digraph, cap: int = DEFAULT_EXACT_CAP) -> tuple[int, VertexColoring]:
    """Chromatic number of the underlying graph by DSATUR branch and bound.

    Returns the number together with one optimal coloring.
    """
    if d.n > cap:
        raise InstanceTooLarge(f"{d.n} vertices exceeds the exact-coloring cap of {cap}")
    n = d.n
    if n == 0:
        return 0, VertexColoring({})
    adj = _adjacency_sets(d)
    if not any(adj):
        return 1, VertexColoring({v: 0 for v in range(n)})

    # upper bound from a plain DSATUR pass
    best = _dsatur_greedy(adj)
    best_k = max(best) + 1
    lower = len(_greedy_clique(adj))
    if lower == best_k:
        return best_k, VertexColoring(dict(enumerate(best)))

    colors = [-1] * n
    nbr_colors: list[dict[int, int]] = [dict() for _ in range(n)]

    def pick() -> int:
        v_best, key_best = -1, (-1, -1)
        for v in range(n):
            if colors[v] < 0:
                key = (len(nbr_colors[v]), len(adj[v]))
                if key > key_best:
                    v_best, key_best = v, key
        return v_best

    def assign(v: int, c: int, sign: int) -> None:
        for u in adj[v]:
            cnt = nbr_colors[u]
            if sign > 0:
                cnt[c] = cnt.get(c, 0) + 1
            else:
                cnt[c] -= 1
                if not cnt[c]:
                    del cnt[c]

    def search(colored: int, used: int) -> None:
        nonlocal best, best_k
        if used >= best_k:
            return
        if colored == n:
            best, best_k = colors[:], used
            return
        v = pick()
        # new colour only as the next unused index: colour classes are interchangeable
        for c in range(min(used + 1, best_k - 1)):
            if c in nbr_colors[v]:
                continue
            colors[v] = c
            assign(v, c, +1)
            search(colored + 1, max(used, c + 1))
            assign(v, c, -1)
            colors[v] = -1
            if best_k == lower:
                return

    search(0, 0)
    return best_k, VertexColoring(dict(enumerate(best)))


def _dsatur_greedy(adj: list[set[int]]) -> list[int]:
    n = len(adj)
    colors = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (len(sat[u]), len(adj[u]), -u))
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        for u in adj[v]:
            sat[u].add(c)
    return colors


def _greedy_clique(adj: list[set[int]]) -> list[int]:
    """A maximal clique grown from each vertex in turn; the largest found."""
    best: list[int] = []
    for start in range(len(adj)):
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(cand, key=lambda u: (len(adj[u] & cand), -u))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best
