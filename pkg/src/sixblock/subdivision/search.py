"""Exhaustive backtracking searches: pattern subdivisions and long antidirected cycles.

Both searches count node expansions against a budget. ``NOT_FOUND`` is only
reported when the search space was exhausted; running out of budget gives
``BUDGET_EXCEEDED``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Generic, TypeVar

from ..graph import Digraph
from .witness import BACKWARD, FORWARD, CyclePattern, SubdivisionWitness

DEFAULT_BUDGET = 10**7

T = TypeVar("T")


class Status(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchResult(Generic[T]):
    status: Status
    value: T | None
    expansions: int

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


class _OutOfBudget(Exception):
    pass


@dataclass(frozen=True)
class AntidirectedCycle:
    """Vertices in cyclic order; ``sources[j]`` tells whether vertex j is a source."""

    vertices: tuple[int, ...]
    sources: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[tuple[int, int]]:
        n = len(self.vertices)
        out = []
        for j in range(n):
            a, b = self.vertices[j], self.vertices[(j + 1) % n]
            out.append((a, b) if self.sources[j] else (b, a))
        return out

    def is_valid_in(self, d: Digraph) -> bool:
        n = len(self.vertices)
        return (
            n >= 4
            and n % 2 == 0
            and len(set(self.vertices)) == n
            and all(self.sources[j] != self.sources[(j + 1) % n] for j in range(n))
            and all(d.has_arc(u, v) for u, v in self.arcs())
        )

    def relabel(self, mapping) -> AntidirectedCycle:
        return AntidirectedCycle(tuple(mapping[v] for v in self.vertices), self.sources)


def find_subdivision_bruteforce(
    d: Digraph, pattern: CyclePattern, budget: int = DEFAULT_BUDGET
) -> SearchResult[SubdivisionWitness]:
    """Search all oriented cycles whose blocks dominate ``pattern`` in cyclic order.

    Block 0 starts at a branch vertex ``b0`` and may leave it along an out-arc
    (``b0`` a source) or an in-arc (``b0`` a sink); the walk then grows blocks
    one arc at a time, switching direction once a block is long enough, and
    must close on ``b0`` exactly when the last block ends.
    """
    lengths = pattern.block_lengths
    nb = len(lengths)
    # arcs still owed from block j onwards, counting block j in full
    owed = [sum(lengths[j:]) for j in range(nb)] + [0]
    n = d.n
    expansions = 0
    path: list[int] = []
    on_path = [False] * n
    cuts: list[int] = []  # path index where each finished block ends

    def step_targets(v: int, forward: bool):
        return d.successors(v) if forward else d.predecessors(v)

    def grow(b0: int, j: int, blen: int, forward: bool) -> bool:
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise _OutOfBudget
        # vertices still needed beyond the current one (the closing arc reuses b0)
        need = max(lengths[j] - blen, 0) + owed[j + 1] - 1
        if n - len(path) < need:
            return False
        if blen >= lengths[j] and j < nb - 1:
            cuts.append(len(path) - 1)
            if grow_step(b0, j + 1, 0, not forward):
                return True
            cuts.pop()
        return grow_step(b0, j, blen, forward)

    def grow_step(b0: int, j: int, blen: int, forward: bool) -> bool:
        v = path[-1]
        for w in step_targets(v, forward):
            if w == b0 and j == nb - 1 and blen + 1 >= lengths[j] and len(path) > 2:
                path.append(w)
                return True
            if on_path[w]:
                continue
            path.append(w)
            on_path[w] = True
            if grow(b0, j, blen + 1, forward):
                return True
            on_path[w] = False
            path.pop()
        return False

    try:
        for b0 in range(n):
            for first_forward in (True, False):
                path[:] = [b0]
                on_path[b0] = True
                cuts.clear()
                if grow_step(b0, 0, 0, first_forward):
                    witness = _witness_from_walk(path, cuts, first_forward)
                    return SearchResult(Status.FOUND, witness, expansions)
                on_path[b0] = False
    except _OutOfBudget:
        return SearchResult(Status.BUDGET_EXCEEDED, None, expansions)
    return SearchResult(Status.NOT_FOUND, None, expansions)


def _witness_from_walk(walk: list[int], cuts: list[int], first_forward: bool) -> SubdivisionWitness:
    bounds = [0] + cuts + [len(walk) - 1]
    paths, dirs = [], []
    forward = first_forward
    for a, b in zip(bounds, bounds[1:]):
        seg = walk[a : b + 1]
        paths.append(tuple(seg) if forward else tuple(reversed(seg)))
        dirs.append(FORWARD if forward else BACKWARD)
        forward = not forward
    return SubdivisionWitness(tuple(paths), tuple(dirs), "exhaustive search")


def find_antidirected_cycle(
    d: Digraph, min_len: int, budget: int = DEFAULT_BUDGET
) -> SearchResult[AntidirectedCycle]:
    """Depth-first search for an antidirected cycle with at least ``min_len`` vertices.

    The start vertex is the smallest vertex of the cycle and is tried first as
    a source, then as a sink; steps alternate between out- and in-arcs.
    """
    if min_len < 4 or min_len % 2:
        raise ValueError("min_len must be even and at least 4")
    n = d.n
    expansions = 0
    path: list[int] = []
    on_path = [False] * n

    def extend(start: int, out_step: bool) -> bool:
        # out_step: the next arc leaves path[-1]
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise _OutOfBudget
        v = path[-1]
        if len(path) >= min_len and len(path) % 2 == 0:
            # closing arc runs in the direction of the next step, ending at start
            if (d.has_arc(v, start) if out_step else d.has_arc(start, v)):
                return True
        for w in (d.successors(v) if out_step else d.predecessors(v)):
            if w <= start or on_path[w]:
                continue
            path.append(w)
            on_path[w] = True
            if extend(start, not out_step):
                return True
            on_path[w] = False
            path.pop()
        return False

    try:
        for start in range(n):
            for start_is_source in (True, False):
                path[:] = [start]
                on_path[start] = True
                if extend(start, start_is_source):
                    srcs = tuple((j % 2 == 0) == start_is_source for j in range(len(path)))
                    return SearchResult(Status.FOUND, AntidirectedCycle(tuple(path), srcs), expansions)
                on_path[start] = False
    except _OutOfBudget:
        return SearchResult(Status.BUDGET_EXCEEDED, None, expansions)
    return SearchResult(Status.NOT_FOUND, None, expansions)
