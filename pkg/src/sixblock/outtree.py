"""Spanning out-trees: construction, finalisation, and ancestry queries.

Levels count vertices on the root path, so the root sits at level 1.
"""
from __future__ import annotations

import enum
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Sequence

from .graph import Digraph


class UnreachableVertex(ValueError):
    def __init__(self, vertex: int, root: int) -> None:
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not reachable from root {root}")


class Orientation(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class OutTree:
    root: int
    parent: tuple[int | None, ...]
    level: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def _interval(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        # preorder entry/exit stamps make ancestry an O(1) comparison
        tin = [0] * self.n
        tout = [0] * self.n
        clock = 0
        stack = [(self.root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                tout[v] = clock
                continue
            tin[v] = clock
            clock += 1
            stack.append((v, True))
            for c in reversed(self.children[v]):
                stack.append((c, False))
        return tuple(tin), tuple(tout)

    def is_ancestor(self, x: int, y: int) -> bool:
        """``x`` lies on the root-to-``y`` tree path (reflexive)."""
        tin, tout = self._interval
        return tin[x] <= tin[y] < tout[x]

    def related(self, x: int, y: int) -> bool:
        return self.is_ancestor(x, y) or self.is_ancestor(y, x)

    def lca(self, x: int, y: int) -> int:
        lv, par = self.level, self.parent
        while lv[x] > lv[y]:
            x = par[x]
        while lv[y] > lv[x]:
            y = par[y]
        while x != y:
            x, y = par[x], par[y]
        return x

    def tree_path(self, x: int, y: int) -> list[int]:
        """Vertex sequence of the directed tree path from ancestor ``x`` down to ``y``."""
        if not self.is_ancestor(x, y):
            raise ValueError(f"{x} is not an ancestor of {y}")
        path = [y]
        while path[-1] != x:
            path.append(self.parent[path[-1]])
        path.reverse()
        return path

    def subtree(self, x: int) -> list[int]:
        out, stack = [], [x]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(self.children[v])
        return sorted(out)

    def level_set(self, i: int) -> list[int]:
        return [v for v in range(self.n) if self.level[v] == i]

    def orientation(self, x: int, y: int) -> Orientation:
        return Orientation.FORWARD if self.level[x] < self.level[y] else Orientation.BACKWARD

    def to_json(self, d: Digraph | None = None) -> dict[str, Any]:
        name = d.name if d is not None else str
        return {
            "root": name(self.root),
            "parent": {name(v): name(p) for v, p in enumerate(self.parent) if p is not None},
            "level": {name(v): lv for v, lv in enumerate(self.level)},
        }


def _levels(root: int, parent: Sequence[int | None]) -> tuple[int, ...]:
    n = len(parent)
    kids: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(parent):
        if p is not None:
            kids[p].append(v)
    level = [0] * n
    level[root] = 1
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for c in kids[v]:
            level[c] = level[v] + 1
            queue.append(c)
    return tuple(level)


def tree_from_parents(root: int, parent: Sequence[int | None]) -> OutTree:
    par = tuple(parent)
    if par[root] is not None:
        raise ValueError("the root must have no parent")
    if sum(p is None for p in par) != 1:
        raise ValueError("exactly one vertex may lack a parent")
    level = _levels(root, par)
    if 0 in level:
        raise ValueError("parent map does not form a tree rooted at the root")
    return OutTree(root, par, level)


def spanning_out_tree(d: Digraph, root: int = 0) -> OutTree:
    """Breadth-first spanning out-tree; successors are scanned in id order."""
    if not 0 <= root < d.n:
        raise ValueError(f"root {root} is not a vertex")
    parent: list[int | None] = [None] * d.n
    seen = [False] * d.n
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in d.successors(v):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                queue.append(w)
    for v in range(d.n):
        if not seen[v]:
            raise UnreachableVertex(v, root)
    return tree_from_parents(root, parent)


def random_spanning_out_tree(d: Digraph, root: int, rng: random.Random) -> OutTree:
    """Grow a spanning out-tree by attaching a uniformly chosen frontier arc each step."""
    parent: list[int | None] = [None] * d.n
    inside = {root}
    frontier = [(root, w) for w in d.successors(root)]
    while frontier:
        u, w = frontier.pop(rng.randrange(len(frontier)))
        if w in inside:
            continue
        inside.add(w)
        parent[w] = u
        frontier.extend((w, x) for x in d.successors(w) if x not in inside)
    missing = [v for v in range(d.n) if v not in inside]
    if missing:
        raise UnreachableVertex(missing[0], root)
    return tree_from_parents(root, parent)


def is_final(d: Digraph, t: OutTree) -> bool:
    """Every backward arc ``(x, y)`` points to an ancestor ``y`` of ``x``."""
    lv = t.level
    return all(lv[x] < lv[y] or t.is_ancestor(y, x) for x, y in d.arcs)


def _violations(d: Digraph, t: OutTree) -> list[tuple[int, int, int]]:
    lv = t.level
    return [(lv[y], y, x) for x, y in d.arcs if lv[x] >= lv[y] and not t.is_ancestor(y, x)]


def finalize_counting(d: Digraph, t: OutTree) -> tuple[OutTree, int]:
    """Rotate violating backward arcs into the tree until it is final.

    Each round takes the violating arc ``(x, y)`` with the smallest
    ``(level(y), y, x)``, makes ``x`` the parent of ``y`` and shifts the levels
    of the subtree under ``y``. Returns the final tree and the number of rounds.
    """
    if t.n != d.n:
        raise ValueError("tree does not span the digraph")
    for v, p in enumerate(t.parent):
        if p is not None and not d.has_arc(p, v):
            raise ValueError(f"tree arc ({p}, {v}) is not an arc of the digraph")
    limit = d.n * d.n
    rotations = 0
    while True:
        bad = _violations(d, t)
        if not bad:
            return t, rotations
        _, y, x = min(bad)
        parent = list(t.parent)
        parent[y] = x
        t = OutTree(t.root, tuple(parent), _levels(t.root, parent))
        rotations += 1
        if rotations > limit:
            raise RuntimeError(f"finalisation exceeded {limit} rotations")


def finalize(d: Digraph, t: OutTree) -> OutTree:
    return finalize_counting(d, t)[0]
