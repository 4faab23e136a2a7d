"""Hypothesis strategies for small digraphs."""
from __future__ import annotations

from hypothesis import strategies as st

from sixblock.graph import Digraph, generate_strong_digraph


@st.composite
def digraphs(draw, min_n: int = 0, max_n: int = 9, oriented: bool = False) -> Digraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and (not oriented or u < v)]
    if draw(st.booleans()):
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        chosen = [p for p, keep in zip(pairs, mask) if keep]
    else:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if oriented:
        flips = draw(st.lists(st.booleans(), min_size=len(chosen), max_size=len(chosen)))
        chosen = [(v, u) if f else (u, v) for (u, v), f in zip(chosen, flips)]
    return Digraph(n, frozenset(chosen))


@st.composite
def strong_digraphs(draw, min_n: int = 1, max_n: int = 12, oriented: bool = False) -> Digraph:
    n = draw(st.integers(max(min_n, 3) if oriented else min_n, max_n))
    density = draw(st.sampled_from((0.0, 0.05, 0.15, 0.4, 0.7, 1.0)))
    seed = draw(st.integers(0, 2**31))
    return generate_strong_digraph(n, density, seed, oriented=oriented)
