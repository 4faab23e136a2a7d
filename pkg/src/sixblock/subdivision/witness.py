"""Cycle patterns, subdivision witnesses, and the trusted witness checker.

A witness lists the ``n`` directed paths of an oriented cycle in cyclic order.
``directions[j]`` says whether the cyclic walk runs along ``paths[j]`` from its
tail to its head ("forward") or from head to tail ("backward"). Consecutive
paths meet at branch vertices, which alternate between sources and sinks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from ..graph import Digraph

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class CyclePattern:
    block_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.block_lengths) < 2 or len(self.block_lengths) % 2:
            raise ValueError("an oriented cycle pattern needs an even number (>= 2) of blocks")
        if any(int(b) < 1 for b in self.block_lengths):
            raise ValueError("block lengths must be positive")

    @classmethod
    def six_block(cls, k: int) -> CyclePattern:
        return cls((k, 1, 1, 1, 1, 1))

    @classmethod
    def parse(cls, text: str) -> CyclePattern:
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad pattern {text!r}: {exc}") from None

    def __len__(self) -> int:
        return len(self.block_lengths)

    def __getitem__(self, j: int) -> int:
        return self.block_lengths[j]


@dataclass(frozen=True)
class SubdivisionWitness:
    paths: tuple[tuple[int, ...], ...]
    directions: tuple[str, ...]
    case: str = ""  # which construction produced it; informational only

    @property
    def branch_vertices(self) -> list[int]:
        return [p[0] if d == FORWARD else p[-1] for p, d in zip(self.paths, self.directions)]

    def vertices(self) -> set[int]:
        return {v for p in self.paths for v in p}

    def to_json(self, d: Digraph, pattern: CyclePattern) -> dict[str, Any]:
        return {
            "pattern": list(pattern.block_lengths),
            "paths": [[d.name(v) for v in p] for p in self.paths],
            "directions": list(self.directions),
        }

    @classmethod
    def from_json(cls, d: Digraph, doc: dict[str, Any]) -> SubdivisionWitness:
        index = {d.name(v): v for v in range(d.n)}
        try:
            paths = tuple(tuple(index[str(v)] for v in p) for p in doc["paths"])
        except KeyError as exc:
            raise ValueError(f"witness names unknown vertex {exc.args[0]!r}") from None
        return cls(paths, tuple(doc["directions"]))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_subdivision(d: Digraph, w: SubdivisionWitness, p: CyclePattern) -> Verdict:
    """Check every witness invariant against ``d`` for pattern ``p``."""
    nb = len(p)
    if len(w.paths) != nb or len(w.directions) != nb:
        return Verdict(False, f"expected {nb} paths and directions, got {len(w.paths)}/{len(w.directions)}")
    for j, (path, direction) in enumerate(zip(w.paths, w.directions)):
        if direction not in (FORWARD, BACKWARD):
            return Verdict(False, f"path {j}: unknown direction {direction!r}")
        if len(path) < 2:
            return Verdict(False, f"path {j} has no arc")
        if len(path) - 1 < p[j]:
            return Verdict(False, f"path {j} has length {len(path) - 1} < {p[j]}")
        for u, v in zip(path, path[1:]):
            if not (0 <= u < d.n and 0 <= v < d.n) or not d.has_arc(u, v):
                return Verdict(False, f"path {j}: ({u}, {v}) is not an arc")
    for j in range(nb):
        if w.directions[j] == w.directions[(j + 1) % nb]:
            return Verdict(False, f"paths {j} and {(j + 1) % nb} run the same way")

    def ends(j: int) -> tuple[int, int]:
        path = w.paths[j]
        return (path[0], path[-1]) if w.directions[j] == FORWARD else (path[-1], path[0])

    for j in range(nb):
        if ends(j)[1] != ends((j + 1) % nb)[0]:
            return Verdict(False, f"paths {j} and {(j + 1) % nb} do not meet")
    branch = [ends(j)[0] for j in range(nb)]
    if len(set(branch)) != nb:
        return Verdict(False, "branch vertices repeat")
    used = set(branch)
    for j, path in enumerate(w.paths):
        for v in path[1:-1]:
            if v in used:
                return Verdict(False, f"path {j}: inner vertex {v} reused")
            used.add(v)
    return Verdict(True)


def assemble_witness(segments: Sequence[Sequence[int]], k: int, case: str = "") -> SubdivisionWitness | None:
    """Chain directed paths into an oriented cycle and rotate a long one first.

    The paths may be listed in any order: each branch vertex must end exactly
    two of them. Returns ``None`` when they do not close up or no path reaches
    length ``k``. The result still has to pass :func:`verify_subdivision`.
    """
    segs = [tuple(s) for s in segments]
    if not segs or any(len(s) < 2 for s in segs):
        return None
    touching: dict[int, list[int]] = {}
    for j, s in enumerate(segs):
        for end in (s[0], s[-1]):
            touching.setdefault(end, []).append(j)
    if any(len(js) != 2 for js in touching.values()):
        return None
    # walk the cycle starting along segs[0] from tail to head
    order, dirs = [0], [FORWARD]
    at = segs[0][-1]
    prev = 0
    while True:
        a, b = touching[at]
        nxt = b if a == prev else a
        if nxt == 0:
            break
        if nxt in order:
            return None
        s = segs[nxt]
        if s[0] == at:
            dirs.append(FORWARD)
            at = s[-1]
        else:
            dirs.append(BACKWARD)
            at = s[0]
        order.append(nxt)
        prev = nxt
    if len(order) != len(segs) or at != segs[0][0]:
        return None
    long_ones = [j for j, s in enumerate(order) if len(segs[s]) - 1 >= k]
    if not long_ones:
        return None
    r = long_ones[0]
    order = order[r:] + order[:r]
    dirs = dirs[r:] + dirs[:r]
    return SubdivisionWitness(tuple(segs[j] for j in order), tuple(dirs), case)


def witness_from_antidirected(vertices: Sequence[int], first_is_source: bool, case: str = "") -> SubdivisionWitness:
    """Every arc of an antidirected cycle as its own length-1 path."""
    n = len(vertices)
    segs = []
    for j in range(n):
        a, b = vertices[j], vertices[(j + 1) % n]
        source_here = (j % 2 == 0) == first_is_source
        segs.append((a, b) if source_here else (b, a))
    dirs = tuple(FORWARD if (j % 2 == 0) == first_is_source else BACKWARD for j in range(n))
    return SubdivisionWitness(tuple(segs), dirs, case)
