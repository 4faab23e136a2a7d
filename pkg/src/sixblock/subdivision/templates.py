"""Witness templates: six-path unions written over named tree and cycle vertices.

A segment is a ``+``-joined chain of pieces. ``A:u>v`` is the single arc
``u -> v`` and ``T:u>v`` is the tree path from ancestor ``u`` down to ``v``.
Names refer to cycle positions (``x0``, ``x1``, ``xs`` for the last vertex,
``xs1`` for the one before it, ``xi``/``xi1``/``xim1`` around a scanned
index), to l.c.a. values ``zj = lca(xj, x0)``, or to extra vertices bound by
the template's binder and ``lets``.

Guards only order the search: every candidate is assembled and then checked
by the independent verifier, so a mis-guarded template cannot produce a bad
witness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

# binder kinds
NONE = "none"
ARC = "arc"  # (x, y) over the arcs of the part
INDEX = "index"  # xi, xi1, xim1, xim2 over cycle positions
FORK = "fork"  # a cycle source x with its two cycle out-neighbours y, yp


@dataclass(frozen=True)
class Template:
    case: str
    segments: tuple[str, ...]
    guard: Callable | None = None
    binder: str = NONE
    lets: dict[str, tuple[str, str]] = field(default_factory=dict)


def _t(case, segs, guard=None, binder=NONE, lets=None) -> Template:
    return Template(case, tuple(s.replace(" ", "") for s in segs), guard, binder, dict(lets or {}))


# --- antidirected cycle inside the forward-ancestor part ---------------------
# x0 is the source of maximal level, x2 the lower of the two sources next to
# x0's out-neighbours, xs1 the other one; the scanned index i is where the
# cycle last enters the subtree of xs1.

D1_TEMPLATES = (
    _t(
        "forward part: entry right after x2",
        ["T:x2>xi + A:xi>xi1", "T:xs1>xi2 + A:xi2>xi1", "A:xs1>xs", "A:x0>xs", "A:x0>x1", "A:x2>x1"],
        lambda c: c.name_eq("xi", "x2"),
        INDEX,
    ),
    _t(
        "forward part: x2 above the entry source",
        ["T:x2>xi + A:xi>xi1", "T:xs1>xi2 + A:xi2>xi1", "A:xs1>xs", "A:x0>xs", "A:x0>x1", "A:x2>x1"],
        lambda c: c.le("x2", "xi"),
        INDEX,
    ),
    _t(
        "forward part: entry source above x2",
        ["T:xi>x2 + A:x2>x1", "A:x0>x1", "A:x0>xs", "A:xs1>xs", "T:xs1>xi2 + A:xi2>xi1", "A:xi>xi1"],
        lambda c: c.le("xi", "x2"),
        INDEX,
    ),
)


# --- out-star inside the backward-ancestor part ------------------------------
# x has out-neighbours y1 <= ... <= yp on one tree chain; ya < yb < yc are
# the three interior ones of out-degree >= 2, z2 an out-neighbour of ya and
# z4 one of yc other than ya.

D2_TEMPLATES = (
    _t(
        "backward part: z4 below ya, z2 below y1",
        ["T:ya>z4", "A:yc>z4", "T:yc>yp", "A:x>yp", "A:x>y1 + T:y1>z2", "A:ya>z2"],
        lambda c: c.lt("ya", "z4") and c.le("y1", "z2"),
    ),
    _t(
        "backward part: z4 below ya, z2 above y1",
        ["T:ya>z4", "A:yc>z4", "T:yc>yp", "A:x>yp", "A:x>y1", "A:ya>z2 + T:z2>y1"],
        lambda c: c.lt("ya", "z4") and c.le("z2", "y1"),
    ),
    _t(
        "backward part: z2 above z4 above ya",
        ["T:yc>yp", "A:x>yp", "A:x>yb", "T:ya>yb", "A:ya>z2 + T:z2>z4", "A:yc>z4"],
        lambda c: c.le("z4", "ya") and c.le("z2", "z4"),
    ),
    _t(
        "backward part: z4 above z2",
        ["T:yc>yp", "A:x>yp", "A:x>yb", "T:ya>yb", "A:ya>z2", "A:yc>z4 + T:z4>z2"],
        lambda c: c.le("z4", "ya") and c.le("z4", "z2"),
    ),
)


# --- antidirected cycle inside the residual part -----------------------------
# x0 is the sink of maximal level and zj = lca(xj, x0). "chain" covers
# z1 < zs1 < zs, "equal" covers z1 = zs with x1 <= xs and xs1 <= x0.

_X2_IN_XS1 = "x2 below xs1"
_X2_MID = "x2 strictly between zs1 and xs1"
_X2_LOW = "x2 between z1 and zs1"


def _chain_templates() -> tuple[Template, ...]:
    out: list[Template] = []
    add = out.append
    notin = lambda c, v, *roots: not any(c.le(r, v) for r in roots)  # noqa: E731

    # in-arcs into the subtree of x2 from outside T_x1 and T_xs1
    below = lambda c: c.le("xs1", "x2")  # noqa: E731
    in_x2 = lambda c: below(c) and c.le("x2", "y") and notin(c, "x", "x1", "xs1")  # noqa: E731
    lz = {"z": ("x", "xs1")}
    add(_t(f"{_X2_IN_XS1}: in-arc from a side branch left of zs1",
           ["T:z>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "A:x1>x2 + T:x2>y", "T:z>x + A:x>y"],
           lambda c: in_x2(c) and c.le("z", "zs1") and not c.le("xs", "x"), ARC, lz))
    add(_t(f"{_X2_IN_XS1}: in-arc from below xs",
           ["T:xs>x + A:x>y", "A:x1>x2 + T:x2>y", "A:x1>x0", "T:zs1>x0", "T:zs1>xs1", "A:xs>xs1"],
           lambda c: in_x2(c) and c.le("xs", "x"), ARC, lz))
    add(_t(f"{_X2_IN_XS1}: in-arc from a side branch right of zs1",
           ["T:zs>x0", "A:x1>x0", "A:x1>x2 + T:x2>y", "T:z>x + A:x>y", "T:z>xs1", "T:zs>xs + A:xs>xs1"],
           lambda c: in_x2(c) and c.lt("zs1", "z"), ARC, lz))

    # out-arcs leaving the subtree of x3 (x3 below xs1)
    out_x3 = lambda c: c.le("xs1", "x3") and c.le("x3", "x") and notin(c, "y", "x2", "x3")  # noqa: E731
    add(_t(f"{_X2_IN_XS1}: out-arc from T_x3 to an ancestor of x0",
           ["A:xs>xs1 + T:xs1>x2", "A:x3>x2", "T:x3>x + A:x>y", "T:z1>y", "T:z1>x1 + A:x1>x0", "A:xs>x0"],
           lambda c: out_x3(c) and c.le("y", "x0"), ARC))
    add(_t(f"{_X2_IN_XS1}: out-arc from T_x3 to a side branch",
           ["A:xs>xs1 + T:xs1>x2", "A:x3>x2", "T:x3>x + A:x>y", "T:z>y", "T:z>x0", "A:xs>x0"],
           lambda c: out_x3(c) and notin(c, "y", "xs", "xs1"), ARC, {"z": ("x0", "y")}))
    add(_t(f"{_X2_IN_XS1}: out-arc from T_x3 into T_xs",
           ["T:xs>y", "T:x3>x + A:x>y", "A:x3>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: out_x3(c) and c.le("xs", "y"), ARC))
    add(_t(f"{_X2_IN_XS1}: out-arc from T_x3 elsewhere into T_xs1",
           ["A:xs>xs1 + T:xs1>y", "T:x3>x + A:x>y", "A:x3>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: out_x3(c) and c.le("xs1", "y"), ARC))

    # out-arcs leaving T_xs1 for outside T_x1 and T_xs1
    out_xs1 = lambda c: below(c) and c.le("xs1", "x") and notin(c, "y", "x1", "xs1")  # noqa: E731
    add(_t(f"{_X2_IN_XS1}: out-arc from T_x2 to a side branch",
           ["T:z>y", "A:x1>x2 + T:x2>x + A:x>y", "A:x1>x0", "A:xs>x0", "A:xs>xs1", "T:z>xs1"],
           lambda c: out_xs1(c) and c.le("x2", "x") and not c.le("xs", "y"), ARC, {"z": ("xs1", "y")}))
    add(_t(f"{_X2_IN_XS1}: out-arc from T_x2 into T_xs",
           ["T:xs>y", "A:x1>x2 + T:x2>x + A:x>y", "A:x1>x0", "T:zs1>x0", "T:zs1>xs1", "A:xs>xs1"],
           lambda c: out_xs1(c) and c.le("x2", "x") and c.le("xs", "y"), ARC))
    add(_t(f"{_X2_IN_XS1}: out-arc from between xs1 and x2 to an ancestor of x0",
           ["T:zs>y", "A:x>y", "T:x>x2", "A:x1>x2", "A:x1>x0", "T:zs>xs + A:xs>x0"],
           lambda c: out_xs1(c) and c.lt("x", "x2") and c.le("y", "x0"), ARC))
    add(_t(f"{_X2_IN_XS1}: out-arc from between xs1 and x2 to a side branch",
           ["T:x>x2", "A:x1>x2", "A:x1>x0", "T:z>x0", "T:z>y", "A:x>y"],
           lambda c: out_xs1(c) and c.lt("x", "x2") and not c.le("y", "x0"), ARC, {"z": ("x0", "y")}))
    lzp = {"zp": ("x2", "x")}
    add(_t(f"{_X2_IN_XS1}: out-arc from beside x2 into T_xs",
           ["T:xs>y", "T:zp>x + A:x>y", "T:zp>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: out_xs1(c) and not c.related("x", "x2") and c.le("xs", "y"), ARC, lzp))
    add(_t(f"{_X2_IN_XS1}: out-arc from beside x2 to a side branch",
           ["T:z>y", "T:zp>x + A:x>y", "T:zp>x2", "A:x1>x2", "A:x1>x0", "T:z>xs + A:xs>x0"],
           lambda c: out_xs1(c) and not c.related("x", "x2") and not c.related("y", "xs"), ARC,
           {"zp": ("x2", "x"), "z": ("xs", "y")}))

    # in-arcs into T_xs1 from outside T_x1 and T_xs1
    in_xs1 = lambda c: below(c) and c.le("xs1", "y") and notin(c, "x", "x1", "xs1")  # noqa: E731
    add(_t(f"{_X2_IN_XS1}: in-arc from below xs onto the x2 chain",
           ["T:xs>x + A:x>y + T:y>x2", "A:x1>x2", "A:x1>x0", "T:zs1>x0", "T:zs1>xs1", "A:xs>xs1"],
           lambda c: in_xs1(c) and c.le("y", "x2") and c.le("xs", "x"), ARC))
    add(_t(f"{_X2_IN_XS1}: in-arc from a side branch onto the x2 chain",
           ["T:z>x + A:x>y + T:y>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0", "A:xs>xs1", "T:z>xs1"],
           lambda c: in_xs1(c) and c.le("y", "x2"), ARC, {"z": ("xs1", "x")}))
    add(_t(f"{_X2_IN_XS1}: in-arc from an ancestor of x0 beside x2",
           ["T:x>x0", "A:x1>x0", "A:x1>x2", "T:zp>x2", "T:zp>y", "A:x>y"],
           lambda c: in_xs1(c) and not c.le("y", "x2") and c.le("x", "x0"), ARC, {"zp": ("x2", "y")}))
    add(_t(f"{_X2_IN_XS1}: in-arc from a side branch beside x2",
           ["T:z>x0", "A:x1>x0", "A:x1>x2", "T:zp>x2", "T:zp>y", "T:z>x + A:x>y"],
           lambda c: in_xs1(c) and not c.le("y", "x2"), ARC, {"zp": ("x2", "y"), "z": ("x0", "x")}))

    # the cycle's first exit from T_x2 and T_x3 at position i
    exit_at = lambda c: below(c) and (c.le("x2", "xi") or c.le("x3", "xi")) and not (c.le("x2", "xi1") or c.le("x3", "xi1"))  # noqa: E731
    to_xs1 = lambda c: exit_at(c) and c.le("xs1", "xi1")  # noqa: E731
    to_x1 = lambda c: exit_at(c) and c.le("x1", "xi1")  # noqa: E731
    src = lambda c: c.is_source("xi")  # noqa: E731
    in3 = lambda c: c.le("x3", "xi")  # noqa: E731
    in2 = lambda c: c.le("x2", "xi")  # noqa: E731
    add(_t(f"{_X2_IN_XS1}: exit from T_x3 at a source into T_xs1",
           ["A:xs>xs1 + T:xs1>xi1", "T:x3>xi + A:xi>xi1", "A:x3>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: to_xs1(c) and in3(c) and src(c), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x3 at a source into T_x1",
           ["T:x1>xi1", "T:x3>xi + A:xi>xi1", "A:x3>x2", "A:xs>xs1 + T:xs1>x2", "A:xs>x0", "A:x1>x0"],
           lambda c: to_x1(c) and in3(c) and src(c), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x3 at a sink into T_xs1",
           ["A:xs>xs1 + T:xs1>xi1 + A:xi1>xi", "T:x3>xi", "A:x3>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: to_xs1(c) and in3(c) and not src(c), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x3 at a sink into T_x1",
           ["A:xs>xs1 + T:xs1>x2", "A:x3>x2", "T:x3>xi", "T:x1>xi1 + A:xi1>xi", "A:x1>x0", "A:xs>x0"],
           lambda c: to_x1(c) and in3(c) and not src(c), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a source after T_x2, into T_xs1",
           ["A:x1>x2 + T:x2>xim1", "A:xi>xim1", "A:xi>xi1", "A:xs>xs1 + T:xs1>xi1", "A:xs>x0", "A:x1>x0"],
           lambda c: to_xs1(c) and in2(c) and src(c) and c.le("x2", "xim1"), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a source, into T_x1",
           ["T:x1>xi1", "A:xi>xi1", "A:xi>xim1", "A:xs>xs1 + T:xs1>xim1", "A:xs>x0", "A:x1>x0"],
           lambda c: to_x1(c) and in2(c) and src(c), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a source after T_x3, into T_xs1",
           ["T:x3>xim1", "A:xi>xim1", "A:xi>xi1", "T:z1>xi1", "T:z1>x1 + A:x1>x2", "A:x3>x2"],
           lambda c: to_xs1(c) and in2(c) and src(c) and c.le("x3", "xim1"), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a sink after T_x3, into T_xs1",
           ["A:xs>xs1 + T:xs1>xi1 + A:xi1>xi", "T:x3>xim1 + A:xim1>xi", "A:x3>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: to_xs1(c) and in2(c) and not src(c) and c.le("x3", "xim1"), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a sink after T_x3, into T_x1",
           ["T:x1>xi1 + A:xi1>xi", "T:x3>xim1 + A:xim1>xi", "A:x3>x2", "A:xs>xs1 + T:xs1>x2", "A:xs>x0", "A:x1>x0"],
           lambda c: to_x1(c) and in2(c) and not src(c) and c.le("x3", "xim1"), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a sink beside x4, into T_x1",
           ["T:x1>xi1 + A:xi1>xi", "T:z>xim1 + A:xim1>xi", "T:z>x4", "A:xs>xs1 + T:xs1>x3 + A:x3>x4", "A:xs>x0", "A:x1>x0"],
           lambda c: to_x1(c) and in2(c) and not src(c) and c.le("x2", "xim1") and not c.le("x4", "xim1"),
           INDEX, {"z": ("x4", "xim1")}))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a sink above x4, into T_x1",
           ["T:x1>xi1 + A:xi1>xi", "A:xim1>xi", "T:xim1>x4", "A:x3>x4", "A:x3>x2", "A:x1>x2"],
           lambda c: to_x1(c) and in2(c) and not src(c) and c.lt("x2", "xim1") and c.lt("xim1", "x4"), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a sink below x4, into T_x1",
           ["T:x1>xi1 + A:xi1>xi", "A:x3>x4 + T:x4>xim1 + A:xim1>xi", "A:x3>x2", "A:xs>xs1 + T:xs1>x2", "A:xs>x0", "A:x1>x0"],
           lambda c: to_x1(c) and in2(c) and not src(c) and c.le("x4", "xim1"), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a sink, two back in T_x2",
           ["A:x1>x2 + T:x2>xim2", "A:xim1>xim2", "A:xim1>xi", "A:xs>xs1 + T:xs1>xi1 + A:xi1>xi", "A:xs>x0", "A:x1>x0"],
           lambda c: to_xs1(c) and in2(c) and not src(c) and c.le("x2", "xim2"), INDEX))
    add(_t(f"{_X2_IN_XS1}: exit from T_x2 at a sink, two back in T_x3",
           ["A:xs>xs1 + T:xs1>xim2", "A:xim1>xim2", "A:xim1>xi", "A:x1>x2 + T:x2>xi", "A:x1>x0", "A:xs>x0"],
           lambda c: to_xs1(c) and in2(c) and not src(c) and c.le("x3", "xim2"), INDEX))
    add(_t(f"{_X2_IN_XS1}: x3 below x1, closing through xs2",
           ["T:x3>xs2 + A:xs2>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "A:x1>x2", "A:x3>x2"],
           lambda c: c.le("x1", "x3") and c.le("x3", "xs2")))

    # x2 strictly between zs1 and xs1
    mid = lambda c: c.lt("zs1", "x2") and c.lt("x2", "xs1")  # noqa: E731
    add(_t(f"{_X2_MID}: xs2 below x1",
           ["T:x1>xs2 + A:xs2>xs1", "A:xs>xs1", "A:xs>x0", "T:zs1>x0", "T:zs1>x2", "A:x1>x2"],
           lambda c: mid(c) and c.le("x1", "xs2")))
    add(_t(f"{_X2_MID}: xs2 above x1",
           ["T:z1>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0", "A:xs>xs1", "T:z1>xs2 + A:xs2>xs1"],
           lambda c: mid(c) and c.le("xs2", "x1")))
    add(_t(f"{_X2_MID}: xs2 beside x1 outside T_zs1",
           ["T:zs1>x0", "A:xs>x0", "A:xs>xs1", "T:z>xs2 + A:xs2>xs1", "T:z>x1 + A:x1>x2", "T:zs1>x2"],
           lambda c: mid(c) and not c.related("xs2", "x1") and not c.le("zs1", "xs2"), NONE, {"z": ("x1", "xs2")}))
    add(_t(f"{_X2_MID}: xs3 below xs1",
           ["A:xs>xs1 + T:xs1>xs3", "T:zp>xs2 + A:xs2>xs3", "T:zp>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: mid(c) and c.le("xs1", "xs3"), NONE, {"zp": ("xs2", "x2")}))
    add(_t(f"{_X2_MID}: xs3 below xs",
           ["T:xs>xs3", "A:xs2>xs3", "A:xs2>xs1", "A:x1>x2 + T:x2>xs1", "A:x1>x0", "A:xs>x0"],
           lambda c: mid(c) and c.le("xs", "xs3")))
    add(_t(f"{_X2_MID}: xs3 below x1",
           ["T:x1>xs3", "A:xs2>xs3", "A:xs2>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0"],
           lambda c: mid(c) and c.le("x1", "xs3")))
    add(_t(f"{_X2_MID}: xs3 above x1, xs2 off the x0 chain",
           ["T:z1>x0", "A:xs>x0", "A:xs>xs1", "A:xs2>xs1", "A:xs2>xs3", "T:z1>xs3"],
           lambda c: mid(c) and c.le("xs3", "x1") and not c.le("xs2", "x0")))
    add(_t(f"{_X2_MID}: xs3 above x1, xs2 on the x0 chain",
           ["T:xs2>x0", "A:xs>x0", "A:xs>xs1", "T:z1>xs1", "T:z1>xs3", "A:xs2>xs3"],
           lambda c: mid(c) and c.le("xs3", "x1") and c.le("xs2", "x0")))
    lzp3 = {"zp": ("xs3", "x1")}
    add(_t(f"{_X2_MID}: xs3 beside x1 with a long branch",
           ["T:zp>xs3", "A:xs2>xs3", "A:xs2>xs1", "A:xs>xs1", "A:xs>x0", "T:zp>x1 + A:x1>x0"],
           lambda c: mid(c) and not c.related("xs3", "x1"), NONE, lzp3))
    add(_t(f"{_X2_MID}: xs3 beside x1, xs2 off the x0 chain",
           ["A:x1>x2 + T:x2>xs1", "A:xs2>xs1", "A:xs2>xs3", "T:z1>xs3", "T:z1>x0", "A:x1>x0"],
           lambda c: mid(c) and not c.related("xs3", "x1") and not c.le("xs2", "x0")))
    add(_t(f"{_X2_MID}: xs3 beside x1, xs2 on the x0 chain",
           ["T:xs2>x0", "A:xs>x0", "A:xs>xs1", "T:zp>x1 + A:x1>x2 + T:x2>xs1", "T:zp>xs3", "A:xs2>xs3"],
           lambda c: mid(c) and not c.related("xs3", "x1") and c.le("xs2", "x0"), NONE, lzp3))

    # x2 between z1 and zs1
    low = lambda c: c.lt("z1", "x2") and c.le("x2", "zs1")  # noqa: E731
    into_x2 = lambda c: low(c) and notin(c, "x", "x1", "x2") and c.lt("x2", "y")  # noqa: E731
    lz0 = {"z": ("x0", "x")}
    add(_t(f"{_X2_LOW}: in-arc into T_x2 above xs1",
           ["T:z>x + A:x>y + T:y>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "A:x1>x2", "T:z>x2"],
           lambda c: into_x2(c) and c.le("y", "xs1"), ARC, lz0))
    add(_t(f"{_X2_LOW}: in-arc into T_xs1",
           ["T:zs>x0", "A:x1>x0", "A:x1>x2", "T:z>x2", "T:z>x + A:x>y", "T:zs>xs + A:xs>xs1 + T:xs1>y"],
           lambda c: into_x2(c) and c.le("xs1", "y"), ARC, lz0))
    add(_t(f"{_X2_LOW}: in-arc into T_x2 beside xs1, branching left of zs1",
           ["T:zp>xs1", "A:xs>xs1", "A:xs>x0", "T:zpp>x1 + A:x1>x0", "T:zpp>x + A:x>y", "T:zp>y"],
           lambda c: into_x2(c) and not c.related("y", "xs1") and c.le("zp", "zs1") and not c.le("xs", "y"),
           ARC, {"zp": ("y", "xs1"), "zpp": ("x", "x1")}))
    add(_t(f"{_X2_LOW}: in-arc into T_xs",
           ["T:xs>y", "T:z>x + A:x>y", "T:z>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: into_x2(c) and c.le("xs", "y"), ARC, lz0))
    add(_t(f"{_X2_LOW}: in-arc into T_x2 beside xs1, branching right of zs1",
           ["T:z>x0", "A:xs>x0", "A:xs>xs1", "T:zp>xs1", "T:zp>y", "T:z>x + A:x>y"],
           lambda c: into_x2(c) and not c.related("y", "xs1") and c.lt("zs1", "zp"), ARC,
           {"z": ("x0", "x"), "zp": ("y", "xs1")}))

    from_x2 = lambda c: low(c) and c.lt("x2", "x") and notin(c, "y", "x1", "x2")  # noqa: E731
    lzy = {"z": ("y", "x2"), "zp": ("x", "x0")}
    add(_t(f"{_X2_LOW}: out-arc from T_x2 on the x0 chain",
           ["T:x>x0", "A:x1>x0", "A:x1>x2", "T:z>x2", "T:z>y", "A:x>y"],
           lambda c: from_x2(c) and c.le("x", "x0"), ARC, lzy))
    add(_t(f"{_X2_LOW}: out-arc from T_x2 branching below x2",
           ["T:z>y", "T:zp>x + A:x>y", "T:zp>x0", "A:x1>x0", "A:x1>x2", "T:z>x2"],
           lambda c: from_x2(c) and not c.le("x", "x0") and not c.name_eq("zp", "x2"), ARC, lzy))
    add(_t(f"{_X2_LOW}: out-arc from T_x2 beside xs1",
           ["T:zpp>y", "T:x2>x + A:x>y", "T:x2>xs1", "A:xs>xs1", "A:xs>x0", "T:zpp>x1 + A:x1>x0"],
           lambda c: from_x2(c) and not c.related("x", "xs1"), ARC, {"zpp": ("x1", "y")}))
    add(_t(f"{_X2_LOW}: out-arc from T_x2 above xs1",
           ["T:z>x0", "A:xs>x0", "A:xs>xs1", "T:x>xs1", "A:x>y", "T:z>y"],
           lambda c: from_x2(c) and c.le("x", "xs1"), ARC, lzy))
    add(_t(f"{_X2_LOW}: out-arc from T_xs1",
           ["T:z>y", "A:xs>xs1 + T:xs1>x + A:x>y", "A:xs>x0", "A:x1>x0", "A:x1>x2", "T:z>x2"],
           lambda c: from_x2(c) and c.le("xs1", "x"), ARC, lzy))

    into_x1 = lambda c: low(c) and notin(c, "x", "x1", "x2") and c.lt("x1", "y")  # noqa: E731
    add(_t(f"{_X2_LOW}: in-arc into T_x1 from off the x0 chain",
           ["T:z>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "T:x1>y", "T:z>x + A:x>y"],
           lambda c: into_x1(c) and not c.le("x", "x0"), ARC, {"z": ("x", "x2")}))
    add(_t(f"{_X2_LOW}: in-arc into T_x1 from the x0 chain",
           ["T:x>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "T:x1>y", "A:x>y"],
           lambda c: into_x1(c) and c.le("x", "x0"), ARC))
    add(_t(f"{_X2_LOW}: out-arc from T_x1 to a side branch",
           ["T:z>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "T:x1>x + A:x>y", "T:z>y"],
           lambda c: low(c) and c.lt("x1", "x") and notin(c, "y", "x1", "x2") and not c.le("y", "x2"), ARC,
           {"z": ("y", "x2")}))

    fork = lambda c: low(c) and c.lt("x1", "x") and c.lt("z1", "y") and c.le("y", "x2")  # noqa: E731
    add(_t(f"{_X2_LOW}: closing fork into T_x1",
           ["T:x1>yp", "A:x>yp", "A:x>y + T:y>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0"],
           lambda c: fork(c) and c.le("x1", "yp"), FORK))
    add(_t(f"{_X2_LOW}: closing fork between x2 and xs1",
           ["A:x>yp + T:yp>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "A:x1>x2", "A:x>y + T:y>x2"],
           lambda c: fork(c) and c.lt("x2", "yp") and c.lt("yp", "xs1"), FORK))
    add(_t(f"{_X2_LOW}: closing fork into T_xs1",
           ["T:zs>x0", "A:x1>x0", "A:x1>x2", "A:x>y + T:y>x2", "A:x>yp", "T:zs>xs + A:xs>xs1 + T:xs1>yp"],
           lambda c: fork(c) and c.le("xs1", "yp"), FORK))
    add(_t(f"{_X2_LOW}: closing fork beside xs1",
           ["T:x1>x + A:x>yp", "T:z>yp", "T:z>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0"],
           lambda c: fork(c) and not c.related("yp", "xs1") and not c.le("xs", "yp"), FORK, {"z": ("yp", "xs1")}))
    add(_t(f"{_X2_LOW}: closing fork into T_xs",
           ["T:xs>yp", "A:x>yp", "A:x>y", "T:z1>y", "T:z1>x1 + A:x1>x0", "A:xs>x0"],
           lambda c: fork(c) and c.le("xs", "yp"), FORK))

    # x2 and xs1 unrelated
    apart = lambda c: not c.related("x2", "xs1")  # noqa: E731
    lc = {"z": ("x2", "xs1")}
    add(_t("x2 beside xs1, branching left of zs1",
           ["T:z>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "A:x1>x2", "T:z>x2"],
           lambda c: apart(c) and c.le("z", "zs1") and not c.le("xs", "x2"), NONE, lc))
    add(_t("x2 beside xs1 and below xs",
           ["T:xs>x2", "A:x1>x2", "A:x1>x0", "T:zs1>x0", "T:zs1>xs1", "A:xs>xs1"],
           lambda c: apart(c) and c.le("xs", "x2")))
    add(_t("x2 beside xs1, branching right of zs1",
           ["T:zs>x0", "A:x1>x0", "A:x1>x2", "T:z>x2", "T:z>xs1", "T:zs>xs + A:xs>xs1"],
           lambda c: apart(c) and c.lt("zs1", "z"), NONE, lc))
    return tuple(out)


def _equal_templates() -> tuple[Template, ...]:
    out: list[Template] = []
    add = out.append
    not_rel = lambda c, a, b: not c.related(a, b)  # noqa: E731

    add(_t("equal tops: x2 beside xs1",
           ["T:z2>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0", "A:xs>xs1", "T:z2>xs1"],
           lambda c: not_rel(c, "x2", "xs1")))
    add(_t("equal tops: x3 outside T_x1",
           ["T:z3>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "A:x1>x2", "T:z3>x3 + A:x3>x2"],
           lambda c: not c.le("x1", "x3")))
    add(_t("equal tops: x3 below x1, off T_xs",
           ["T:x1>x3 + A:x3>x2", "T:z2>x2", "T:z2>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0"],
           lambda c: c.le("x1", "x3") and not c.le("xs", "x3")))
    add(_t("equal tops: x3 on the chain from xs1 to x0",
           ["T:x3>x0", "A:xs>x0", "A:xs>xs1", "T:zs>xs1", "T:zs>x1 + A:x1>x2", "A:x3>x2"],
           lambda c: c.le("xs1", "x3") and c.le("x3", "x0")))

    x2_mid = lambda c: c.lt("xs1", "x2") and c.lt("x2", "x0")  # noqa: E731
    add(_t("equal tops: x4 outside T_xs1 and T_xs",
           ["A:x3>x2 + T:x2>x0", "A:xs>x0", "A:xs>xs1", "T:z4>xs1", "T:z4>x4", "A:x3>x4"],
           lambda c: x2_mid(c) and not c.le("xs1", "x4") and not c.le("xs", "x4")))
    add(_t("equal tops: x4 below xs",
           ["T:xs>x4", "A:x3>x4", "A:x3>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: x2_mid(c) and c.le("xs", "x4")))
    add(_t("equal tops: x4 below xs1 outside T_x2",
           ["A:xs>xs1 + T:xs1>x4", "A:x3>x4", "A:x3>x2", "A:x1>x2", "A:x1>x0", "A:xs>x0"],
           lambda c: x2_mid(c) and c.le("xs1", "x4") and not c.le("x2", "x4")))
    add(_t("equal tops: x4 between x2 and x0",
           ["A:x3>x4 + T:x4>x0", "A:xs>x0", "A:xs>xs1", "T:zs>xs1", "T:zs>x1 + A:x1>x2", "A:x3>x2"],
           lambda c: x2_mid(c) and c.le("x2", "x4") and c.le("x4", "x0")))
    add(_t("equal tops: x4 beside xs1, outside T_x1",
           ["T:x1>xs + A:xs>xs1", "T:z4>xs1", "T:z4>x4", "A:x3>x4", "A:x3>x2", "A:x1>x2"],
           lambda c: x2_mid(c) and not_rel(c, "x4", "xs1") and not c.le("x1", "x4")))
    add(_t("equal tops: x4 in T_x1 outside T_xs",
           ["T:zs>x4", "A:x3>x4", "A:x3>x2 + T:x2>x0", "A:xs>x0", "A:xs>xs1", "T:zs>xs1"],
           lambda c: x2_mid(c) and c.le("x1", "x4") and not c.le("xs", "x4")))
    add(_t("equal tops: x4 above xs1",
           ["A:x3>x4 + T:x4>xs1", "A:xs>xs1", "A:xs>x0", "A:x1>x0", "A:x1>x2", "A:x3>x2"],
           lambda c: x2_mid(c) and c.le("x4", "xs1")))
    add(_t("equal tops: x4 in T_x2 off the x0 chain, x3 below xs",
           ["T:z4>x4", "T:xs>x3 + A:x3>x4", "A:xs>xs1", "T:zs>xs1", "T:zs>x1 + A:x1>x0", "T:z4>x0"],
           lambda c: x2_mid(c) and c.le("xs", "x3") and c.le("x2", "x4") and not c.le("x4", "x0")))
    add(_t("equal tops: x4 in T_x2 off the x0 chain, x3 in T_x1",
           ["T:zs>x3 + A:x3>x4", "T:z4>x4", "T:z4>x0", "A:xs>x0", "A:xs>xs1", "T:zs>xs1"],
           lambda c: x2_mid(c) and c.le("x1", "x3") and not c.le("x4", "x0")))
    add(_t("equal tops: x4 in T_x1 outside T_xs, x3 beside",
           ["T:x1>x4", "A:x3>x4", "A:x3>x2", "A:xs>xs1 + T:xs1>x2", "A:xs>x0", "A:x1>x0"],
           lambda c: x2_mid(c) and c.le("x1", "x4") and not c.le("xs", "x4")))
    add(_t("equal tops: x4 off the x0 chain, x3 beside",
           ["T:x1>xs + A:xs>xs1", "T:z3>xs1", "T:z3>x3 + A:x3>x4", "T:z4>x4", "T:z4>x0", "A:x1>x0"],
           lambda c: x2_mid(c) and not c.le("x4", "x0")))
    return tuple(out)


D3_CHAIN_TEMPLATES = _chain_templates()
D3_EQUAL_TEMPLATES = _equal_templates()
