"""Level-residue vertex classes and the three-way arc split inside each class."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from .graph import Digraph
from .outtree import OutTree, is_final


class ArcClass(enum.Enum):
    A1 = 1  # down the tree: tail is a proper ancestor of head
    A2 = 2  # up the tree: head is a proper ancestor of tail
    A3 = 3  # everything else


def class_index(level: int, k: int) -> int:
    """Class in ``1..k`` holding a level; residue 0 goes to class ``k``."""
    r = level % k
    return r if r else k


def classify_arc(t: OutTree, arc: tuple[int, int]) -> ArcClass:
    x, y = arc
    lx, ly = t.level[x], t.level[y]
    if lx < ly and t.is_ancestor(x, y):
        return ArcClass.A1
    if lx > ly and t.is_ancestor(y, x):
        return ArcClass.A2
    return ArcClass.A3


@dataclass(frozen=True)
class ClassPart:
    index: int
    vertices: tuple[int, ...]
    arcs: dict[ArcClass, tuple[tuple[int, int], ...]]

    def subdigraph(self, cls: ArcClass) -> tuple[Digraph, tuple[int, ...]]:
        """Spanning subdigraph of the class with one arc type, relabelled densely."""
        local = {v: i for i, v in enumerate(self.vertices)}
        arcs = frozenset((local[u], local[v]) for u, v in self.arcs[cls])
        return Digraph(len(self.vertices), arcs), self.vertices


@dataclass(frozen=True)
class Decomposition:
    k: int
    tree: OutTree
    classes: tuple[ClassPart, ...]
    cross_arcs: tuple[tuple[int, int], ...]

    def part(self, i: int) -> ClassPart:
        return self.classes[i - 1]

    def to_json(self, d: Digraph) -> dict[str, Any]:
        name = d.name
        return {
            "k": self.k,
            "classes": [
                {
                    "index": c.index,
                    "vertices": [name(v) for v in c.vertices],
                    "arcs": {
                        cls.name: [[name(u), name(v)] for u, v in c.arcs[cls]] for cls in ArcClass
                    },
                }
                for c in self.classes
            ],
            "cross_class_arcs": [[name(u), name(v)] for u, v in self.cross_arcs],
        }


class NotFinal(ValueError):
    pass


def decompose(d: Digraph, t: OutTree, k: int) -> Decomposition:
    """Split vertices by level residue mod ``k`` and each class's arcs into A1/A2/A3.

    Arcs joining two different classes belong to no class; the colour offsets
    per class take care of them.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not is_final(d, t):
        raise NotFinal("decomposition needs a final out-tree")
    cls_of = [class_index(t.level[v], k) for v in range(d.n)]
    buckets: dict[int, dict[ArcClass, list[tuple[int, int]]]] = {
        i: {c: [] for c in ArcClass} for i in range(1, k + 1)
    }
    cross = []
    for x, y in d.sorted_arcs():
        if cls_of[x] != cls_of[y]:
            cross.append((x, y))
            continue
        buckets[cls_of[x]][classify_arc(t, (x, y))].append((x, y))
    parts = tuple(
        ClassPart(
            i,
            tuple(v for v in range(d.n) if cls_of[v] == i),
            {c: tuple(arcs) for c, arcs in buckets[i].items()},
        )
        for i in range(1, k + 1)
    )
    return Decomposition(k, t, parts, tuple(cross))
