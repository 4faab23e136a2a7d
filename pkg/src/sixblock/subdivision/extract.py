"""Turn long antidirected cycles and dense out-stars into subdivision witnesses.

Each extractor normalises its input the way the underlying argument does,
then instantiates the matching templates from :mod:`.templates`. Every
candidate union of paths is checked with :func:`verify_subdivision`; the
first one that passes is returned. When no template applies the extractor
raises :class:`FallbackRequired` and the caller runs the exhaustive search.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from ..decompose import ArcClass, class_index, classify_arc
from ..graph import Digraph
from ..outtree import OutTree
from . import templates as tpl
from .search import AntidirectedCycle
from .witness import CyclePattern, SubdivisionWitness, assemble_witness, verify_subdivision


class FallbackRequired(Exception):
    """No proof template produced a verified witness for this configuration."""

    def __init__(self, reason: str, configuration: str = "") -> None:
        self.configuration = configuration
        super().__init__(reason)


class _Ctx:
    """Name -> vertex bindings plus the tree predicates guards are written in."""

    def __init__(self, t: OutTree, names: dict[str, int], sources: frozenset[int] = frozenset()) -> None:
        self.t = t
        self.v = names
        self.sources = sources

    def le(self, a: str, b: str) -> bool:
        return self.t.is_ancestor(self.v[a], self.v[b])

    def lt(self, a: str, b: str) -> bool:
        return self.v[a] != self.v[b] and self.le(a, b)

    def related(self, a: str, b: str) -> bool:
        return self.le(a, b) or self.le(b, a)

    def name_eq(self, a: str, b: str) -> bool:
        return self.v[a] == self.v[b]

    def is_source(self, a: str) -> bool:
        return self.v[a] in self.sources


def _build_segment(d: Digraph, t: OutTree, segment: str, names: Mapping[str, int]) -> list[int] | None:
    walk: list[int] = []
    for piece in segment.split("+"):
        kind, ends = piece.split(":")
        a, b = (names[s] for s in ends.split(">"))
        if kind == "A":
            if not d.has_arc(a, b):
                return None
            part = [a, b]
        else:
            if not t.is_ancestor(a, b):
                return None
            part = t.tree_path(a, b)
        if walk and walk[-1] != part[0]:
            return None
        walk.extend(part[1:] if walk else part)
    return walk if len(walk) >= 2 else None


@dataclass
class _Engine:
    d: Digraph
    t: OutTree
    k: int
    arcs: Sequence[tuple[int, int]] = ()
    cycle: Sequence[int] = ()
    sources: frozenset[int] = frozenset()
    attempts: int = 0

    def _bindings(self, template: tpl.Template, base: dict[str, int]) -> Iterator[dict[str, int]]:
        if template.binder == tpl.NONE:
            yield dict(base)
        elif template.binder == tpl.ARC:
            for x, y in self.arcs:
                yield {**base, "x": x, "y": y}
        elif template.binder == tpl.INDEX:
            m = len(self.cycle)
            for i in range(1, m):
                yield {
                    **base,
                    "xim2": self.cycle[(i - 2) % m],
                    "xim1": self.cycle[i - 1],
                    "xi": self.cycle[i],
                    "xi1": self.cycle[(i + 1) % m],
                    "xi2": self.cycle[(i + 2) % m],
                }
        elif template.binder == tpl.FORK:
            m = len(self.cycle)
            for i, x in enumerate(self.cycle):
                if x not in self.sources:
                    continue
                a, b = self.cycle[i - 1], self.cycle[(i + 1) % m]
                yield {**base, "x": x, "y": a, "yp": b}
                yield {**base, "x": x, "y": b, "yp": a}

    def run(self, catalogue: Iterable[tpl.Template], base: dict[str, int]) -> SubdivisionWitness | None:
        """Guarded pass first, then every template regardless of its guard."""
        pattern = CyclePattern.six_block(self.k)
        catalogue = tuple(catalogue)
        for guarded in (True, False):
            for template in catalogue:
                if not guarded and template.guard is None:
                    continue  # already tried in the first pass
                for names in self._bindings(template, base):
                    try:
                        for name, (a, b) in template.lets.items():
                            names[name] = self.t.lca(names[a], names[b])
                        if guarded and template.guard is not None:
                            if not template.guard(_Ctx(self.t, names, self.sources)):
                                continue
                        segs = [_build_segment(self.d, self.t, s, names) for s in template.segments]
                    except KeyError:
                        continue
                    if any(s is None for s in segs):
                        continue
                    self.attempts += 1
                    w = assemble_witness(segs, self.k, template.case)
                    if w is not None and verify_subdivision(self.d, w, pattern):
                        return w
        return None


def _check_cycle(d: Digraph, c: AntidirectedCycle) -> None:
    if not c.is_valid_in(d):
        raise ValueError("not an antidirected cycle of the digraph")
    if len(c) < 8:
        raise ValueError(f"antidirected cycle of length {len(c)} is shorter than 8")


def _rotate(c: AntidirectedCycle, start: int, reverse: bool) -> list[int]:
    m = len(c)
    step = -1 if reverse else 1
    return [c.vertices[(start + step * j) % m] for j in range(m)]


def _cycle_names(order: Sequence[int], t: OutTree) -> dict[str, int]:
    m = len(order)
    names = {f"x{j}": order[j] for j in range(5)}
    names.update(xs=order[m - 1], xs1=order[m - 2], xs2=order[m - 3], xs3=order[m - 4])
    x0 = order[0]
    for j in range(1, 5):
        names[f"z{j}"] = t.lca(order[j], x0)
    names.update(zs=t.lca(order[m - 1], x0), zs1=t.lca(order[m - 2], x0))
    return names


def extract_from_adc_d1(d: Digraph, t: OutTree, c: AntidirectedCycle, k: int) -> SubdivisionWitness:
    """Witness from an antidirected cycle whose arcs all run down the tree."""
    _check_cycle(d, c)
    for u, v in c.arcs():
        if u == v or not t.is_ancestor(u, v):
            raise ValueError(f"arc ({u}, {v}) does not run from an ancestor to a descendant")
    lv = t.level
    srcs = [v for v, s in zip(c.vertices, c.sources) if s]
    x0 = min(srcs, key=lambda v: (-lv[v], v))
    start = c.vertices.index(x0)
    order = _rotate(c, start, reverse=False)
    if lv[order[2]] > lv[order[-2]]:
        order = _rotate(c, start, reverse=True)
    engine = _Engine(d, t, k, cycle=order, sources=frozenset(srcs))
    w = engine.run(tpl.D1_TEMPLATES, _cycle_names(order, t))
    if w is None:
        raise FallbackRequired("no forward-part template verified", "forward")
    return w


def d3_configuration(t: OutTree, c: AntidirectedCycle) -> tuple[str, list[int]]:
    """Normalised vertex order and the ancestry configuration of (z1, zs1, zs).

    Returns ``"chain"`` for ``z1 < zs1 < zs`` pairwise distinct, ``"equal"``
    for ``z1 = zs`` with ``x1 <= xs`` and ``xs1 <= x0``, ``"other"`` otherwise.
    """
    lv = t.level
    sinks = [v for v, s in zip(c.vertices, c.sources) if not s]
    x0 = min(sinks, key=lambda v: (-lv[v], v))
    start = c.vertices.index(x0)
    order = _rotate(c, start, reverse=False)
    z1, zs = t.lca(order[1], x0), t.lca(order[-1], x0)
    if lv[zs] < lv[z1] or (z1 == zs and lv[order[1]] > lv[order[-1]]):
        order = _rotate(c, start, reverse=True)
        z1, zs = zs, z1
    zs1 = t.lca(order[-2], x0)
    if lv[z1] < lv[zs1] < lv[zs]:
        return "chain", order
    if z1 == zs and t.is_ancestor(order[1], order[-1]) and t.is_ancestor(order[-2], x0):
        return "equal", order
    return "other", order


def residual_class_arcs(d: Digraph, t: OutTree, k: int, vertex: int) -> list[tuple[int, int]]:
    """Arcs of the residual part of the class holding ``vertex``."""
    i = class_index(t.level[vertex], k)
    same = lambda v: class_index(t.level[v], k) == i  # noqa: E731
    return [a for a in d.sorted_arcs() if same(a[0]) and same(a[1]) and classify_arc(t, a) is ArcClass.A3]


def extract_from_adc_d3(
    d: Digraph,
    t: OutTree,
    c: AntidirectedCycle,
    k: int,
    part_arcs: Sequence[tuple[int, int]] | None = None,
) -> SubdivisionWitness:
    """Witness from an antidirected cycle of the residual part.

    Only the two configurations the argument treats explicitly are replayed;
    every other ordering of ``z1, zs1, zs`` raises :class:`FallbackRequired`
    straight away.
    """
    _check_cycle(d, c)
    for a in c.arcs():
        if classify_arc(t, a) is not ArcClass.A3:
            raise ValueError(f"arc {a} is not a residual-part arc")
    config, order = d3_configuration(t, c)
    if config == "other":
        raise FallbackRequired("configuration not covered by the case analysis", config)
    arcs = list(part_arcs) if part_arcs is not None else residual_class_arcs(d, t, k, order[0])
    srcs = frozenset(v for v, s in zip(c.vertices, c.sources) if s)
    primary = tpl.D3_CHAIN_TEMPLATES if config == "chain" else tpl.D3_EQUAL_TEMPLATES
    everything = tpl.D3_CHAIN_TEMPLATES + tpl.D3_EQUAL_TEMPLATES
    mirrored = [order[0]] + order[:0:-1]
    for catalogue, labelled in ((primary, order), (everything, order), (everything, mirrored)):
        engine = _Engine(d, t, k, arcs=arcs, cycle=labelled, sources=srcs)
        w = engine.run(catalogue, _cycle_names(labelled, t))
        if w is not None:
            return w
    raise FallbackRequired("no residual-part template verified", config)


def extract_from_out_star(
    d: Digraph,
    t: OutTree,
    out_nbrs: Mapping[int, Sequence[int]],
    s2: set[int] | frozenset[int],
    x: int,
    k: int,
) -> SubdivisionWitness:
    """Witness from a vertex with three interior out-neighbours of out-degree >= 2.

    ``out_nbrs`` lists out-neighbours inside the backward-ancestor part; all of
    them are tree ancestors of their tail, so each list sits on one chain.
    """
    lv = t.level
    ys = sorted(out_nbrs[x], key=lambda v: lv[v])
    interior = [y for y in ys[1:-1] if y in s2]
    if len(interior) < 3:
        raise ValueError("fewer than three interior out-neighbours of out-degree >= 2")
    ya, yb, yc = interior[:3]
    engine = _Engine(d, t, k)
    base = {"x": x, "y1": ys[0], "yp": ys[-1], "ya": ya, "yb": yb, "yc": yc}
    for z2 in out_nbrs[ya]:
        for z4 in out_nbrs[yc]:
            if z4 == ya:
                continue
            w = engine.run(tpl.D2_TEMPLATES, {**base, "z2": z2, "z4": z4})
            if w is not None:
                return w
    raise FallbackRequired("no backward-part template verified", "backward")
