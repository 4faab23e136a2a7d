"""Certify strong digraphs: a bounded proper coloring or a six-block cycle subdivision."""
from __future__ import annotations

from .certify import (
    CertifyConfig,
    Colored,
    Outcome,
    PipelineReport,
    Subdivided,
    certify,
    color_bound,
    verify_certificate,
    verify_coloring,
)
from .graph import Digraph, VertexColoring, generate_strong_digraph, is_strongly_connected
from .io import parse_digraph
from .subdivision import CyclePattern, SubdivisionWitness, verify_subdivision

__all__ = [
    "CertifyConfig",
    "Colored",
    "CyclePattern",
    "Digraph",
    "Outcome",
    "PipelineReport",
    "Subdivided",
    "SubdivisionWitness",
    "VertexColoring",
    "certify",
    "color_bound",
    "generate_strong_digraph",
    "is_strongly_connected",
    "parse_digraph",
    "verify_certificate",
    "verify_coloring",
    "verify_subdivision",
]
