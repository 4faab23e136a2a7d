"""End-to-end certification: a bounded proper coloring or a verified subdivision witness."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Sequence

from .coloring import (
    SPLIT_PALETTE,
    SearchBudgetExceeded,
    SplitColoring,
    Unsatisfiable,
    color_di2,
    exact_color_within,
    greedy_degeneracy_color,
)
from .decompose import ArcClass, ClassPart, Decomposition, decompose
from .graph import Digraph, InstanceTooLarge, VertexColoring, is_strongly_connected
from .io import coloring_to_json
from .outtree import finalize_counting, spanning_out_tree
from .subdivision import (
    DEFAULT_BUDGET,
    AntidirectedCycle,
    CyclePattern,
    FallbackRequired,
    Status,
    SubdivisionWitness,
    extract_from_adc_d1,
    extract_from_adc_d3,
    find_antidirected_cycle,
    find_subdivision_bruteforce,
    verify_subdivision,
    witness_from_antidirected,
)

SCHEMA_VERSION = 1


def part_palette(k: int) -> int:
    """Colour budget for the forward-ancestor and residual parts."""
    return 16 if k == 1 else 24


def class_block(k: int) -> int:
    """Colours reserved for one level class: 7 * P * P."""
    p = part_palette(k)
    return SPLIT_PALETTE * p * p


def color_bound(k: int) -> int:
    if k < 1:
        raise ValueError("k must be at least 1")
    return class_block(k) * k


class InputInvalid(ValueError):
    pass


class InternalError(RuntimeError):
    """A certificate failed its own check, or an exhaustive search contradicted the theory."""


@dataclass(frozen=True)
class CertifyConfig:
    root: int = 0
    budget: int = DEFAULT_BUDGET
    allow_antiparallel: bool = False
    exact_cap: int = 64


@dataclass(frozen=True)
class Colored:
    coloring: VertexColoring
    bound: int


@dataclass(frozen=True)
class Subdivided:
    witness: SubdivisionWitness
    pattern: CyclePattern


Certificate = Colored | Subdivided


class Outcome(enum.Enum):
    COLORED = "colored"
    SUBDIVIDED = "subdivided"
    INCOMPLETE = "incomplete"


@dataclass
class PartTrace:
    name: str  # "backward", "forward" or "residual"
    vertices: int
    arcs: int
    palette: int | None = None
    route: str = ""
    coloring: VertexColoring | None = field(default=None, repr=False)  # global vertex ids
    split: SplitColoring | None = field(default=None, repr=False)

    def to_json(self) -> dict[str, Any]:
        return {"part": self.name, "vertices": self.vertices, "arcs": self.arcs,
                "palette": self.palette, "route": self.route}


@dataclass
class ClassTrace:
    index: int
    vertices: int
    parts: list[PartTrace] = field(default_factory=list)

    def part(self, name: str) -> PartTrace:
        return next(p for p in self.parts if p.name == name)

    def to_json(self) -> dict[str, Any]:
        return {"index": self.index, "vertices": self.vertices, "parts": [p.to_json() for p in self.parts]}


@dataclass
class Counters:
    rotations: int = 0
    search_expansions: int = 0
    extractions: int = 0
    fallbacks: int = 0
    exact_unsat: int = 0

    def to_json(self) -> dict[str, int]:
        return dict(self.__dict__)


@dataclass
class PipelineReport:
    outcome: Outcome
    k: int
    bound: int
    certificate: Certificate | None
    trace: list[ClassTrace]
    counters: Counters
    message: str = ""
    decomposition: Decomposition | None = field(default=None, repr=False)

    def to_json(self, d: Digraph) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "status": self.outcome.value,
            "k": self.k,
            "bound": self.bound,
            "trace": [c.to_json() for c in self.trace],
            "counters": self.counters.to_json(),
        }
        cert = self.certificate
        if isinstance(cert, Colored):
            doc["certificate"] = {"type": "coloring", "bound": cert.bound, **coloring_to_json(d, cert.coloring)}
        elif isinstance(cert, Subdivided):
            doc["certificate"] = {"type": "subdivision", "case": cert.witness.case,
                                  **cert.witness.to_json(d, cert.pattern)}
        else:
            doc["certificate"] = None
        if self.message:
            doc["message"] = self.message
        return doc


def verify_coloring(d: Digraph, c: VertexColoring, bound: int) -> bool:
    """Proper on the underlying graph, total on the vertices, palette within ``bound``."""
    if set(c.assignment) != set(range(d.n)):
        return False
    if any(col < 0 for col in c.assignment.values()):
        return False
    return c.is_proper(d) and c.palette_size <= bound


def verify_certificate(d: Digraph, cert: Certificate, k: int) -> bool:
    if isinstance(cert, Colored):
        return cert.bound <= color_bound(k) and verify_coloring(d, cert.coloring, cert.bound)
    return cert.pattern == CyclePattern.six_block(k) and bool(verify_subdivision(d, cert.witness, cert.pattern))


class _Found(Exception):
    def __init__(self, witness: SubdivisionWitness) -> None:
        self.witness = witness


class _Incomplete(Exception):
    pass


class _Pipeline:
    def __init__(self, d: Digraph, k: int, config: CertifyConfig) -> None:
        self.d = d
        self.k = k
        self.config = config
        self.pattern = CyclePattern.six_block(k)
        self.counters = Counters()
        self.budget_left = config.budget

    def _spend(self, amount: int) -> None:
        self.counters.search_expansions += amount
        self.budget_left -= amount

    def brute_force(self, focus: Sequence[int], part: PartTrace, authoritative_miss_is_bug: bool) -> None:
        """Exhaustive search near ``focus`` first, then in the whole digraph."""
        self.counters.fallbacks += 1
        t = self.tree
        local = set()
        for v in focus:
            while v is not None and v not in local:
                local.add(v)
                v = t.parent[v]
        scopes = [tuple(sorted(local))] if len(local) < self.d.n else []
        scopes.append(tuple(range(self.d.n)))
        for scope in scopes:
            sub, back = self.d.induced(scope)
            res = find_subdivision_bruteforce(sub, self.pattern, max(self.budget_left, 0))
            self._spend(res.expansions)
            if res.status is Status.FOUND:
                w = res.value
                part.route += "; exhaustive search found a witness"
                raise _Found(SubdivisionWitness(
                    tuple(tuple(back[v] for v in p) for p in w.paths), w.directions, "exhaustive search"))
            if res.status is Status.BUDGET_EXCEEDED:
                part.route += "; exhaustive search ran out of budget"
                raise _Incomplete(f"class part '{part.name}': search budget exhausted")
        if authoritative_miss_is_bug:
            raise InternalError(f"class part '{part.name}' has no proper {part_palette(self.k)}-coloring "
                                "yet the digraph has no witness")

    def run_backward(self, cls: ClassPart, ct: ClassTrace) -> PartTrace:
        arcs = cls.arcs[ArcClass.A2]
        pt = PartTrace("backward", len(cls.vertices), len(arcs))
        ct.parts.append(pt)
        try:
            res = color_di2(self.d, self.tree, cls.vertices, arcs, self.k)
        except FallbackRequired as exc:
            pt.route = f"out-star extraction failed ({exc})"
            self.counters.extractions += 1
            self.brute_force(cls.vertices, pt, authoritative_miss_is_bug=False)
            sub, verts = self.d.relabeled_subgraph(cls.vertices, arcs)
            c = exact_color_within(sub, SPLIT_PALETTE, cap=max(self.config.exact_cap, sub.n))
            if isinstance(c, Unsatisfiable):
                raise InternalError("backward part needs more than 7 colours and has no witness")
            pt.coloring, pt.palette = c.relabel(verts), c.palette_size
            pt.route += "; exact coloring"
            return pt
        if isinstance(res, SubdivisionWitness):
            self.counters.extractions += 1
            pt.route = f"out-star extraction: {res.case}"
            raise _Found(res)
        pt.split = res
        pt.coloring = res.coloring
        pt.palette = res.coloring.palette_size
        pt.route = f"split coloring |S1|={len(res.s1)} |S2|={len(res.s2)}"
        return pt

    def run_antidirected_part(self, cls: ClassPart, ct: ClassTrace, name: str, arc_class: ArcClass) -> PartTrace:
        arcs = cls.arcs[arc_class]
        pt = PartTrace(name, len(cls.vertices), len(arcs))
        ct.parts.append(pt)
        sub, verts = self.d.relabeled_subgraph(cls.vertices, arcs)
        cap = part_palette(self.k)
        greedy = greedy_degeneracy_color(sub)
        if greedy.palette_size <= cap:
            pt.coloring, pt.palette, pt.route = greedy.relabel(verts), greedy.palette_size, "degeneracy greedy"
            return pt
        unsat = False
        try:
            exact = exact_color_within(sub, cap, cap=self.config.exact_cap, budget=max(self.budget_left, 1))
            if isinstance(exact, VertexColoring):
                pt.coloring, pt.palette, pt.route = exact.relabel(verts), exact.palette_size, "exact coloring"
                return pt
            unsat = True
            self.counters.exact_unsat += 1
            pt.route = f"no {cap}-coloring"
        except (InstanceTooLarge, SearchBudgetExceeded) as exc:
            pt.route = f"exact coloring unavailable ({exc})"
        min_len = 6 if self.k == 1 else 8
        res = find_antidirected_cycle(sub, min_len, max(self.budget_left, 0))
        self._spend(res.expansions)
        if res.status is Status.BUDGET_EXCEEDED:
            pt.route += "; antidirected search ran out of budget"
            raise _Incomplete(f"class {cls.index} {name} part: antidirected search budget exhausted")
        if res.status is Status.NOT_FOUND:
            if unsat:
                raise InternalError(f"{name} part needs more than {cap} colours but has no long antidirected cycle")
            pt.route += "; no long antidirected cycle, coloring unavailable"
            raise _Incomplete(f"class {cls.index} {name} part: no coloring within {cap} and no witness found")
        cycle: AntidirectedCycle = res.value.relabel(verts)
        if len(cycle) == 6:
            pt.route += "; antidirected hexagon"
            raise _Found(witness_from_antidirected(cycle.vertices, cycle.sources[0], "antidirected hexagon"))
        self.counters.extractions += 1
        extractor = extract_from_adc_d1 if arc_class is ArcClass.A1 else extract_from_adc_d3
        try:
            if arc_class is ArcClass.A1:
                w = extractor(self.d, self.tree, cycle, self.k)
            else:
                w = extractor(self.d, self.tree, cycle, self.k, arcs)
        except FallbackRequired as exc:
            pt.route += f"; extraction fell back ({exc})"
            self.brute_force(cycle.vertices, pt, authoritative_miss_is_bug=True)
            raise _Incomplete("unreachable")  # brute_force either raises or reports a bug
        pt.route += f"; extracted: {w.case}"
        raise _Found(w)

    def run(self) -> PipelineReport:
        d, k = self.d, self.k
        bound = color_bound(k)
        t0 = spanning_out_tree(d, self.config.root)
        self.tree, self.counters.rotations = finalize_counting(d, t0)
        dec = decompose(d, self.tree, k)
        trace: list[ClassTrace] = []
        colors: dict[int, int] = {}
        p = part_palette(k)
        block = class_block(k)
        try:
            for cls in dec.classes:
                ct = ClassTrace(cls.index, len(cls.vertices))
                trace.append(ct)
                c2 = self.run_backward(cls, ct).coloring
                c1 = self.run_antidirected_part(cls, ct, "forward", ArcClass.A1).coloring
                c3 = self.run_antidirected_part(cls, ct, "residual", ArcClass.A3).coloring
                offset = (cls.index - 1) * block
                for v in cls.vertices:
                    colors[v] = offset + c2[v] * p * p + c1[v] * p + c3[v]
        except _Found as found:
            cert = Subdivided(found.witness, self.pattern)
            if not verify_certificate(d, cert, k):
                raise InternalError(f"extracted witness failed verification: "
                                    f"{verify_subdivision(d, found.witness, self.pattern).reason}") from None
            return PipelineReport(Outcome.SUBDIVIDED, k, bound, cert, trace, self.counters, decomposition=dec)
        except _Incomplete as inc:
            return PipelineReport(Outcome.INCOMPLETE, k, bound, None, trace, self.counters, str(inc), dec)
        cert = Colored(VertexColoring(colors), bound)
        if not verify_certificate(d, cert, k):
            raise InternalError("combined coloring failed verification")
        return PipelineReport(Outcome.COLORED, k, bound, cert, trace, self.counters, decomposition=dec)


def certify(d: Digraph, k: int, config: CertifyConfig | None = None) -> PipelineReport:
    """Colour ``d`` within the bound for ``k`` or find a six-block subdivision witness."""
    config = config or CertifyConfig()
    if k < 1:
        raise InputInvalid("k must be at least 1")
    if d.n < 1:
        raise InputInvalid("the digraph has no vertices")
    if not 0 <= config.root < d.n:
        raise InputInvalid(f"root {config.root} is not a vertex")
    if not config.allow_antiparallel and d.has_antiparallel():
        raise InputInvalid("antiparallel arcs present (pass allow_antiparallel to accept them)")
    if not is_strongly_connected(d):
        raise InputInvalid("the digraph is not strongly connected")
    return _Pipeline(d, k, config).run()
