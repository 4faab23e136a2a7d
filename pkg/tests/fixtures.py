"""Hand-built digraphs realising individual cases of the extraction arguments.

Each fixture is written for k = 1 as a parent map plus extra arcs over named
vertices. :func:`build` stretches every tree arc into a directed path of
length k, so the named vertices keep their ancestry and all land in level
class 1; the extra arcs are added unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass

from sixblock.graph import Digraph
from sixblock.outtree import OutTree, tree_from_parents
from sixblock.subdivision import AntidirectedCycle


@dataclass(frozen=True)
class Fixture:
    d: Digraph
    t: OutTree
    ids: dict[str, int]
    k: int

    def cycle(self, names: list[str], first_is_source: bool) -> AntidirectedCycle:
        verts = tuple(self.ids[v] for v in names)
        return AntidirectedCycle(verts, tuple((j % 2 == 0) == first_is_source for j in range(len(verts))))


def build(root: str, parent: dict[str, str], arcs: list[tuple[str, str]], k: int = 1) -> Fixture:
    names = [root] + [v for v in parent if v != root]
    for u, v in arcs:
        for w in (u, v):
            if w not in names:
                names.append(w)
    ids = {v: i for i, v in enumerate(names)}
    n = len(names)
    par: dict[int, int | None] = {ids[root]: None}
    all_arcs: set[tuple[int, int]] = set()
    for child, p in parent.items():
        prev = ids[p]
        for _ in range(k - 1):
            mid = n
            n += 1
            par[mid] = prev
            all_arcs.add((prev, mid))
            prev = mid
        par[ids[child]] = prev
        all_arcs.add((prev, ids[child]))
    all_arcs |= {(ids[u], ids[v]) for u, v in arcs}
    names += [f"_{i}" for i in range(len(names), n)]
    t = tree_from_parents(ids[root], [par[v] for v in range(n)])
    return Fixture(Digraph(n, frozenset(all_arcs), tuple(names)), t, ids, k)


def _chain(*names: str) -> dict[str, str]:
    return {b: a for a, b in zip(names, names[1:])}


# forward part: antidirected 8- or 10-cycles of ancestor-to-descendant arcs

FORWARD_CYCLE_8 = ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"]
FORWARD_CYCLE_10 = ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"]


def _alternating_arcs(cycle: list[str]) -> list[tuple[str, str]]:
    """Arcs of an antidirected cycle whose even positions are sources."""
    m = len(cycle)
    out = []
    for j in range(m):
        a, b = cycle[j], cycle[(j + 1) % m]
        out.append((a, b) if j % 2 == 0 else (b, a))
    return out


def forward_entry_at_x2(k: int = 1) -> Fixture:
    parent = {**_chain("x2", "x6", "x4", "x0", "x1"), "x7": "x0", "x3": "x4", "x5": "x4"}
    return build("x2", parent, _alternating_arcs(FORWARD_CYCLE_8), k)


def forward_x2_above_entry(k: int = 1) -> Fixture:
    parent = {**_chain("x2", "x4", "x8", "x6", "x0", "x1"), "x3": "x4", "x5": "x6", "x7": "x6", "x9": "x0"}
    return build("x2", parent, _alternating_arcs(FORWARD_CYCLE_10), k)


def forward_entry_above_x2(k: int = 1) -> Fixture:
    parent = {**_chain("x4", "x2", "x8", "x6", "x0", "x1"), "x3": "x2", "x5": "x6", "x7": "x6", "x9": "x0"}
    return build("x4", parent, _alternating_arcs(FORWARD_CYCLE_10), k)


# backward part: x with out-neighbours y1 < ya < yb < yc < yp on one chain

_STAR = [("x", "y1"), ("x", "ya"), ("x", "yb"), ("x", "yc"), ("x", "yp")]


def backward_z4_below_ya_z2_below_y1(k: int = 1) -> Fixture:
    parent = _chain("y1", "z2", "ya", "z4", "yb", "yc", "yp", "x")
    arcs = _STAR + [("ya", "z2"), ("ya", "y1"), ("yb", "ya"), ("yb", "y1"), ("yc", "z4"), ("yc", "ya")]
    return build("y1", parent, arcs, k)


def backward_z4_below_ya_z2_above_y1(k: int = 1) -> Fixture:
    parent = _chain("w", "z2", "y1", "ya", "z4", "yb", "yc", "yp", "x")
    arcs = _STAR + [("ya", "z2"), ("ya", "w"), ("yb", "ya"), ("yb", "y1"), ("yc", "z4"), ("yc", "ya")]
    return build("w", parent, arcs, k)


def backward_z2_above_z4(k: int = 1) -> Fixture:
    parent = _chain("y1", "z2", "z4", "ya", "yb", "yc", "yp", "x")
    arcs = _STAR + [("ya", "z2"), ("ya", "y1"), ("yb", "ya"), ("yb", "y1"), ("yc", "z4"), ("yc", "ya")]
    return build("y1", parent, arcs, k)


def backward_z4_above_z2(k: int = 1) -> Fixture:
    parent = _chain("y1", "z4", "w", "z2", "ya", "yb", "yc", "yp", "x")
    arcs = _STAR + [("ya", "z2"), ("ya", "w"), ("yb", "ya"), ("yb", "y1"), ("yc", "z4"), ("yc", "ya")]
    return build("y1", parent, arcs, k)


# residual part: antidirected 8-cycle x0..x7 with x0 the deepest sink and
# lca(x1, x0) = a < lca(x6, x0) = b < lca(x7, x0) = c on x0's root path

RESIDUAL_CYCLE = ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"]


def _residual_arcs() -> list[tuple[str, str]]:
    # x0 is a sink, so odd positions are sources
    m = len(RESIDUAL_CYCLE)
    return [
        (RESIDUAL_CYCLE[(j + 1) % m], RESIDUAL_CYCLE[j]) if j % 2 == 0 else (RESIDUAL_CYCLE[j], RESIDUAL_CYCLE[(j + 1) % m])
        for j in range(m)
    ]


def residual_x2_beside_xs1(k: int = 1) -> Fixture:
    """x2 and x6 unrelated, branching off above b, x2 outside the subtree of x7."""
    parent = {
        **_chain("r", "a", "b", "c", "d", "e", "x0"),
        "x1": "a", "x7": "c", **_chain("b", "p", "q", "x6"), **_chain("a", "u", "x2"),
        "x3": "r", **_chain("r", "v", "x5"), "x4": "d",
    }
    return build("r", parent, _residual_arcs(), k)


def residual_in_arc_into_x2(k: int = 1) -> Fixture:
    """x2 below x6; the arc x3 -> x2 enters T_x2 from a side branch."""
    parent = {
        **_chain("r", "a", "b", "c", "d", "e", "f", "x0"),
        "x1": "a", "x7": "c", **_chain("b", "p", "q", "x6", "x2"),
        "x3": "r", "x5": "r", "x4": "d",
    }
    return build("r", parent, _residual_arcs(), k)


def residual_uncovered(k: int = 1) -> Fixture:
    """Like residual_x2_beside_xs1 but x6 branches off above x1: lca(x6, x0) < lca(x1, x0)."""
    parent = {
        **_chain("r", "a", "b", "c", "d", "e", "x0"),
        "x1": "a", "x7": "c", **_chain("r", "p", "q", "s", "g", "x6"), **_chain("a", "u", "x2"),
        "x3": "r", **_chain("r", "v", "x5"), "x4": "d",
    }
    return build("r", parent, _residual_arcs(), k)
