from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sixblock.decompose import ArcClass, NotFinal, class_index, classify_arc, decompose
from sixblock.graph import Digraph, directed_path
from sixblock.outtree import finalize, random_spanning_out_tree, spanning_out_tree, tree_from_parents

from strategies import strong_digraphs


def test_class_index():
    assert [class_index(lv, 2) for lv in range(1, 6)] == [1, 2, 1, 2, 1]
    assert [class_index(lv, 3) for lv in (1, 2, 3, 4)] == [1, 2, 3, 1]


def test_path_levels_k2():
    d = directed_path(5)
    t = spanning_out_tree(d, 0)
    dec = decompose(d, t, 2)
    assert dec.part(1).vertices == (0, 2, 4)
    assert dec.part(2).vertices == (1, 3)


def test_k1_single_class():
    d = directed_path(5)
    dec = decompose(d, spanning_out_tree(d, 0), 1)
    assert len(dec.classes) == 1 and dec.part(1).vertices == tuple(range(5))
    assert not dec.cross_arcs


def test_back_arc_by_class():
    # r=0 -> a=1 -> b=2 with the extra arc (b, r)
    d = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    t = spanning_out_tree(d, 0)
    dec3 = decompose(d, t, 3)
    assert (2, 0) in dec3.cross_arcs
    assert all((2, 0) not in arcs for c in dec3.classes for arcs in c.arcs.values())
    dec2 = decompose(d, t, 2)
    assert dec2.part(1).arcs[ArcClass.A2] == ((2, 0),)


def test_classify():
    t = tree_from_parents(0, [None, 0, 1, 0])
    assert classify_arc(t, (0, 2)) is ArcClass.A1
    assert classify_arc(t, (2, 0)) is ArcClass.A2
    assert classify_arc(t, (1, 3)) is ArcClass.A3


def test_rejects_non_final():
    d = Digraph.from_arcs(3, [(0, 1), (0, 2), (1, 2)])
    with pytest.raises(NotFinal):
        decompose(d, tree_from_parents(0, [None, 0, 0]), 1)


def test_to_json_names():
    d = Digraph.from_arcs(2, [(0, 1), (1, 0)], ["u", "w"])
    doc = decompose(d, spanning_out_tree(d, 0), 1).to_json(d)
    assert doc["classes"][0]["arcs"] == {"A1": [["u", "w"]], "A2": [["w", "u"]], "A3": []}


def _acyclic(n, arcs):
    from graphlib import CycleError, TopologicalSorter

    try:
        list(TopologicalSorter({v: [y for x, y in arcs if x == v] for v in range(n)}).static_order())
        return True
    except CycleError:
        return False


@settings(max_examples=150)
@given(strong_digraphs(max_n=25), st.integers(1, 4), st.integers(0, 10**6))
def test_partition_properties(d, k, seed):
    t = finalize(d, random_spanning_out_tree(d, 0, random.Random(seed)))
    dec = decompose(d, t, k)
    placed = [a for c in dec.classes for arcs in c.arcs.values() for a in arcs]
    assert sorted(placed + list(dec.cross_arcs)) == d.sorted_arcs()
    assert len(set(placed)) == len(placed)
    for c in dec.classes:
        for x, y in c.arcs[ArcClass.A3]:
            # finality: no backward arc to a non-ancestor survives
            assert t.level[x] < t.level[y] or t.is_ancestor(y, x)
            assert not t.related(x, y)
        for cls in (ArcClass.A1, ArcClass.A2):
            assert _acyclic(d.n, c.arcs[cls])
        for x, y in c.arcs[ArcClass.A1] + c.arcs[ArcClass.A2]:
            assert (t.level[x] - t.level[y]) % k == 0


@settings(max_examples=50)
@given(strong_digraphs(max_n=15), st.integers(1, 3), st.integers(0, 10**6))
def test_stable_under_tree_preserving_relabel(d, k, seed):
    t = finalize(d, spanning_out_tree(d, 0))
    perm = list(range(1, d.n))
    random.Random(seed).shuffle(perm)
    perm = [0] + perm
    d2 = Digraph(d.n, frozenset((perm[u], perm[v]) for u, v in d.arcs))
    par2 = [None] * d.n
    for v, p in enumerate(t.parent):
        par2[perm[v]] = None if p is None else perm[p]
    t2 = tree_from_parents(0, par2)
    for a in d.arcs:
        assert classify_arc(t, a) is classify_arc(t2, (perm[a[0]], perm[a[1]]))
    assert len(decompose(d2, t2, k).cross_arcs) == len(decompose(d, t, k).cross_arcs)
