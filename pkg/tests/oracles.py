"""Independent reference implementations used to cross-check the engine.

The subdivision and antidirected-cycle oracles enumerate every simple cycle
of the underlying graph with networkx and try every way of orienting it with
arcs of the digraph; nothing here shares code with the searches under test.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
import numpy as np

from sixblock.graph import Digraph


def _orientations(d: Digraph, cycle: list[int]):
    m = len(cycle)
    options = []
    for j in range(m):
        a, b = cycle[j], cycle[(j + 1) % m]
        opts = [o for o, ok in ((True, d.has_arc(a, b)), (False, d.has_arc(b, a))) if ok]
        options.append(opts)
    return itertools.product(*options)


def _runs(orient: tuple[bool, ...]) -> list[int]:
    """Cyclic run lengths of equal directions; a directed cycle is one run."""
    m = len(orient)
    changes = [j for j in range(m) if orient[j] != orient[j - 1]]
    if not changes:
        return [m]
    return [(changes[(i + 1) % len(changes)] - changes[i]) % m or m for i in range(len(changes))]


def _underlying_cycles(d: Digraph, length_bound: int | None = None):
    g = nx.Graph()
    g.add_nodes_from(range(d.n))
    g.add_edges_from(d.arcs)
    return nx.simple_cycles(g, length_bound=length_bound)


def has_six_block_subdivision(d: Digraph, k: int) -> bool:
    """Some cycle orients into exactly six blocks, one of them at least ``k`` long."""
    for cycle in _underlying_cycles(d):
        if len(cycle) < 5 + k:
            continue
        for orient in _orientations(d, cycle):
            runs = _runs(orient)
            if len(runs) == 6 and max(runs) >= k:
                return True
    return False


def has_antidirected_cycle(d: Digraph, min_len: int) -> bool:
    for cycle in _underlying_cycles(d):
        if len(cycle) < min_len or len(cycle) % 2:
            continue
        for orient in _orientations(d, cycle):
            if len(_runs(orient)) == len(cycle):
                return True
    return False


def brute_chromatic_number(d: Digraph) -> int:
    """Smallest c admitting a proper colouring, by numpy enumeration of all c^n assignments."""
    if d.n == 0:
        return 0
    edges = np.array(sorted({(min(a), max(a)) for a in d.arcs}), dtype=np.int64).reshape(-1, 2)
    for c in range(1, d.n + 1):
        grid = _assignments(d.n, c)
        if not len(edges):
            return c
        ok = np.all(grid[:, edges[:, 0]] != grid[:, edges[:, 1]], axis=1)
        if ok.any():
            return c
    return d.n


@lru_cache(maxsize=None)
def _assignments(n: int, c: int) -> np.ndarray:
    idx = np.arange(c**n, dtype=np.int64)
    return np.stack([(idx // c**j) % c for j in range(n)], axis=1)


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[np.ndarray, list[tuple[int, int]]]:
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    index = {p: b for b, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    table = np.array([[index[(p[u], p[v])] for u, v in pairs] for p in perms], dtype=np.int64)
    return table, pairs


def digraph_isomorphism_classes(n: int) -> list[Digraph]:
    """One representative per isomorphism class of digraphs on ``n`` vertices.

    Each digraph is a bit mask over ordered pairs; the canonical form is the
    smallest mask over all vertex permutations, computed in bulk with numpy.
    """
    if n <= 1:
        return [Digraph(n, frozenset())]
    table, pairs = _perm_tables(n)
    m = len(pairs)
    half = m // 2
    codes = np.arange(1 << m, dtype=np.int64)
    lo, hi = codes & ((1 << half) - 1), codes >> half
    small = np.arange(1 << (m - half), dtype=np.int64)
    canon = np.full(codes.shape, np.iinfo(np.int64).max, dtype=np.int64)
    for row in table:
        # image of every low-half and high-half bit pattern under this permutation
        lut_lo = np.zeros(1 << half, dtype=np.int64)
        lut_hi = np.zeros(1 << (m - half), dtype=np.int64)
        for b in range(half):
            lut_lo |= ((small[: 1 << half] >> b) & 1) << row[b]
        for b in range(m - half):
            lut_hi |= ((small >> b) & 1) << row[half + b]
        np.minimum(canon, lut_lo[lo] | lut_hi[hi], out=canon)
    reps = np.unique(canon)
    return [Digraph(n, frozenset(pairs[b] for b in range(m) if (int(code) >> b) & 1)) for code in reps]


def coloring_certificate_ok(d: Digraph, colors: dict[int, int], bound: int) -> bool:
    if sorted(colors) != list(range(d.n)):
        return False
    if any(not isinstance(c, int) or c < 0 for c in colors.values()):
        return False
    return all(colors[u] != colors[v] for u, v in d.arcs) and len(set(colors.values())) <= bound


def subdivision_certificate_ok(d: Digraph, paths, directions, blocks) -> bool:
    """Walk the paths in order, reversing the backward ones; the walk must be a simple closed cycle."""
    if len(paths) != len(blocks) or len(directions) != len(blocks) or len(blocks) < 2:
        return False
    walk: list[int] = []
    for j, (path, direction) in enumerate(zip(paths, directions)):
        if direction == directions[j - 1] or len(path) - 1 < blocks[j]:
            return False
        if any((u, v) not in d.arcs for u, v in zip(path, path[1:])):
            return False
        seq = list(path) if direction == "forward" else list(reversed(path))
        if walk and walk[-1] != seq[0]:
            return False
        walk.extend(seq[1:] if walk else seq)
    return walk[0] == walk[-1] and len(set(walk[:-1])) == len(walk) - 1
