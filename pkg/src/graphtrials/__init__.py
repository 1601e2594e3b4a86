"""graphtrials: visual certificates for graph assertions.

Given a graph and an assertion, compute witness evidence, lay out a visual
certificate (node-link, adjacency-matrix, or book style), verify it, let a
deterministic judge validate it from the drawing's gist alone, and score
node-link layouts with eight aesthetic metrics.
"""

from .assertions import PERCEPTUAL_COMPLEXITY, Assertion, Kind
from .graph import Graph, parse_graph, serialize_graph
from .pipeline import build_certificate, find_evidence
from .serialize import certificate_from_json, certificate_to_json
from .trial import (
    Certificate,
    extract_mental_model,
    judge,
    mutate_certificate,
    verify,
    verify_evidence,
    verify_faithfulness,
)

__all__ = [
    "PERCEPTUAL_COMPLEXITY",
    "Assertion",
    "Certificate",
    "Graph",
    "Kind",
    "build_certificate",
    "certificate_from_json",
    "certificate_to_json",
    "extract_mental_model",
    "find_evidence",
    "judge",
    "mutate_certificate",
    "parse_graph",
    "serialize_graph",
    "verify",
    "verify_evidence",
    "verify_faithfulness",
]

__version__ = "1.0.0"
