"""Cycle-pattern subdivisions: witnesses, the trusted checker, searches, extractors."""
from __future__ import annotations

from .extract import (
    FallbackRequired,
    d3_configuration,
    extract_from_adc_d1,
    extract_from_adc_d3,
    extract_from_out_star,
)
from .search import (
    DEFAULT_BUDGET,
    AntidirectedCycle,
    SearchResult,
    Status,
    find_antidirected_cycle,
    find_subdivision_bruteforce,
)
from .witness import (
    BACKWARD,
    FORWARD,
    CyclePattern,
    SubdivisionWitness,
    Verdict,
    assemble_witness,
    verify_subdivision,
    witness_from_antidirected,
)

__all__ = [
    "AntidirectedCycle",
    "BACKWARD",
    "CyclePattern",
    "DEFAULT_BUDGET",
    "FORWARD",
    "FallbackRequired",
    "SearchResult",
    "Status",
    "SubdivisionWitness",
    "Verdict",
    "assemble_witness",
    "d3_configuration",
    "extract_from_adc_d1",
    "extract_from_adc_d3",
    "extract_from_out_star",
    "find_antidirected_cycle",
    "find_subdivision_bruteforce",
    "verify_subdivision",
    "witness_from_antidirected",
]
