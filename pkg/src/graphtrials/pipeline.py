"""The prosecution pipeline: evidence, layout, certificate."""

from __future__ import annotations

from .assertions import Assertion, Kind
from .errors import LayoutError, NoEvidenceError, UnreachableError
from .evidence import (
    BfsWitness,
    BookEmbedding,
    CompleteWitness,
    Coloring,
    Cycle,
    MissingEdge,
    Partition,
    SearchBudget,
    SpanTree,
    SparseSubgraph,
    VertexCut,
    WitnessSet,
    book_embedding_evidence,
    coloring_evidence,
    completeness_evidence,
    connectivity_evidence,
    cut_set_evidence,
    cycle_evidence,
    distance_evidence,
    sparsify_k_connected,
    witness_set_evidence,
)
from .graph import Graph, is_connected
from .layout import (
    book_layout,
    cycle_outer_layout,
    highlighted_subgraph_layout,
    level_layout,
    matrix_certificate_order,
    radial_tree_layout,
    separation_layout,
)
from .trial import Certificate

# default style first, then any further supported styles
KIND_STYLES: dict[Kind, tuple[str, ...]] = {
    Kind.CONNECTED: ("nodelink",),
    Kind.NOT_CONNECTED: ("nodelink",),
    Kind.NOT_K_CONNECTED: ("nodelink",),
    Kind.K_CONNECTED_SPARSE: ("nodelink",),
    Kind.HAMILTONIAN_CYCLE: ("nodelink", "matrix"),
    Kind.LENGTH_K_CYCLE: ("nodelink",),
    Kind.NOT_BIPARTITE: ("nodelink", "matrix"),
    Kind.K_COLORABLE: ("matrix",),
    Kind.COMPLETE: ("matrix",),
    Kind.NOT_COMPLETE: ("matrix",),
    Kind.CLIQUE: ("matrix",),
    Kind.INDEPENDENT_SET: ("matrix",),
    Kind.DOMINATING_SET: ("matrix",),
    Kind.DISTANCE_EQUALS: ("nodelink",),
    Kind.DIAMETER_GREATER: ("nodelink",),
    Kind.STACK_LEQ: ("book",),
    Kind.QUEUE_LEQ: ("book",),
}


def find_evidence(g: Graph, a: Assertion, budget: SearchBudget | None = None):
    """Extract a witness for the assertion, or raise NoEvidenceError."""
    kind = a.kind
    a.validate_for(g.n)
    if kind == Kind.CONNECTED:
        ev = connectivity_evidence(g)
        if isinstance(ev, Partition):
            raise NoEvidenceError("graph is disconnected")
        return ev
    if kind == Kind.NOT_CONNECTED:
        ev = connectivity_evidence(g)
        if isinstance(ev, SpanTree):
            raise NoEvidenceError("graph is connected")
        return ev
    if kind == Kind.NOT_K_CONNECTED:
        return cut_set_evidence(g, a.k)
    if kind == Kind.K_CONNECTED_SPARSE:
        return sparsify_k_connected(g, a.k)
    if kind == Kind.HAMILTONIAN_CYCLE:
        return cycle_evidence(g, "hamiltonian", budget=budget)
    if kind == Kind.LENGTH_K_CYCLE:
        return cycle_evidence(g, "length", a.k, budget=budget)
    if kind == Kind.NOT_BIPARTITE:
        return cycle_evidence(g, "odd", budget=budget)
    if kind == Kind.K_COLORABLE:
        return coloring_evidence(g, a.k, budget=budget)
    if kind == Kind.COMPLETE:
        ev = completeness_evidence(g)
        if isinstance(ev, MissingEdge):
            raise NoEvidenceError(f"edge ({ev.u}, {ev.v}) is missing")
        return ev
    if kind == Kind.NOT_COMPLETE:
        ev = completeness_evidence(g)
        if isinstance(ev, CompleteWitness):
            raise NoEvidenceError("graph is complete")
        return ev
    if kind == Kind.CLIQUE:
        return witness_set_evidence(g, "clique", a.k, budget=budget)
    if kind == Kind.INDEPENDENT_SET:
        return witness_set_evidence(g, "independent", a.k, budget=budget)
    if kind == Kind.DOMINATING_SET:
        return witness_set_evidence(g, "dominating", a.k, budget=budget)
    if kind == Kind.DISTANCE_EQUALS:
        if not is_connected(g):
            raise NoEvidenceError("distance witness requires a connected graph")
        try:
            ev = distance_evidence(g, "pair", a.u, a.v)
        except UnreachableError as exc:
            raise NoEvidenceError(str(exc))
        if len(ev.path) - 1 != a.k:
            raise NoEvidenceError(
                f"distance between {a.u} and {a.v} is {len(ev.path) - 1}, not {a.k}"
            )
        return ev
    if kind == Kind.DIAMETER_GREATER:
        if not is_connected(g) or g.n == 0:
            raise NoEvidenceError("diameter witness requires a connected graph")
        ev = distance_evidence(g, "deepest")
        if max(ev.depth.values()) <= a.k:
            raise NoEvidenceError(f"diameter is not greater than {a.k}")
        return ev
    if kind == Kind.STACK_LEQ:
        return book_embedding_evidence(g, a.k, "stack", budget=budget)
    if kind == Kind.QUEUE_LEQ:
        return book_embedding_evidence(g, a.k, "queue", budget=budget)
    raise ValueError(f"unknown assertion kind {kind}")


def synthesize_layout(g: Graph, a: Assertion, ev, style: str):
    if isinstance(ev, SpanTree):
        return radial_tree_layout(g, ev)
    if isinstance(ev, (Partition, VertexCut)):
        return separation_layout(g, ev)
    if isinstance(ev, SparseSubgraph):
        return highlighted_subgraph_layout(g, ev)
    if isinstance(ev, Cycle):
        if style == "matrix":
            variant = (
                "hamiltonian" if a.kind == Kind.HAMILTONIAN_CYCLE else "parity"
            )
            return matrix_certificate_order(g, ev, variant)
        return cycle_outer_layout(g, ev)
    if isinstance(ev, (Coloring, WitnessSet, MissingEdge, CompleteWitness)):
        return matrix_certificate_order(g, ev)
    if isinstance(ev, BfsWitness):
        return level_layout(g, ev)
    if isinstance(ev, BookEmbedding):
        return book_layout(g, ev)
    raise LayoutError(f"no layout for evidence type {type(ev).__name__}")


def build_certificate(
    g: Graph,
    a: Assertion,
    style: str | None = None,
    evidence=None,
    budget: SearchBudget | None = None,
) -> Certificate:
    allowed = KIND_STYLES[a.kind]
    if style is None:
        style = allowed[0]
    if style not in allowed:
        raise LayoutError(
            f"style {style!r} is not supported for {a.kind.value} "
            f"(supported: {', '.join(allowed)})"
        )
    if evidence is None:
        evidence = find_evidence(g, a, budget)
    layout = synthesize_layout(g, a, evidence, style)
    return Certificate(g, a, evidence, layout)
