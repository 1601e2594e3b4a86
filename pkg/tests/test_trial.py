"""Verifier and judge: faithfulness, evidence validity, gist extraction,
observation accounting, and rejection of adversarial mutations."""

import random

import pytest

from graphtrials.assertions import PERCEPTUAL_COMPLEXITY, Assertion, Kind
from graphtrials.evidence import BookEmbedding, Coloring, SpanTree
from graphtrials.graph import Graph
from graphtrials.layout import BookLayout, MatrixLayout, NodeLinkLayout
from graphtrials.pipeline import KIND_STYLES, build_certificate
from graphtrials.trial import (
    Certificate,
    ColumnCoverage,
    FilledBlock,
    HighlightedConvexCycle,
    HighlightedTree,
    MentalModel,
    PagePanel,
    _applicable,
    extract_mental_model,
    judge,
    mutate_certificate,
    verify,
    verify_evidence,
    verify_faithfulness,
)

from conftest import complete_graph, cycle_graph, path_graph, star_graph


def run_trial(g, a, style=None):
    cert = build_certificate(g, a, style=style)
    violations = verify(cert)
    assert violations == [], violations
    verdict = judge(cert, extract_mental_model(cert))
    return cert, verdict


TWO_TRIANGLES = Graph.from_edges(
    6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
)

# (kind, graph, params, style, expected observations)
JUDGE_CASES = [
    (Kind.CONNECTED, cycle_graph(4), {}, None, 5),
    (Kind.NOT_CONNECTED, TWO_TRIANGLES, {}, None, 3),
    (Kind.NOT_K_CONNECTED, path_graph(3), {"k": 2}, None, 3),
    (Kind.K_CONNECTED_SPARSE, complete_graph(4), {"k": 2}, None, 6),
    (Kind.HAMILTONIAN_CYCLE, cycle_graph(5), {}, "nodelink", 1),
    (Kind.HAMILTONIAN_CYCLE, cycle_graph(5), {}, "matrix", 2),
    (Kind.LENGTH_K_CYCLE, cycle_graph(5), {"k": 5}, None, 6),
    (Kind.NOT_BIPARTITE, cycle_graph(5), {}, "nodelink", 2),
    (Kind.NOT_BIPARTITE, cycle_graph(5), {}, "matrix", 1),
    (Kind.K_COLORABLE, cycle_graph(5), {"k": 3}, None, 4),
    (Kind.COMPLETE, complete_graph(4), {}, None, 1),
    (Kind.NOT_COMPLETE, cycle_graph(4), {}, None, 1),
    (Kind.CLIQUE, complete_graph(4), {"k": 3}, None, 3),
    (Kind.INDEPENDENT_SET, cycle_graph(4), {"k": 2}, None, 2),
    (Kind.DOMINATING_SET, cycle_graph(4), {"k": 2}, None, 4),
    (Kind.DISTANCE_EQUALS, path_graph(3), {"k": 2, "u": 0, "v": 2}, None, 4),
    (Kind.DIAMETER_GREATER, cycle_graph(4), {"k": 1}, None, 4),
    (Kind.STACK_LEQ, complete_graph(4), {"k": 2}, None, 12),
    (Kind.QUEUE_LEQ, cycle_graph(4), {"k": 1}, None, 9),
]


@pytest.mark.parametrize(
    "kind,g,params,style,obs",
    JUDGE_CASES,
    ids=[f"{c[0].value}-{c[3] or 'default'}" for c in JUDGE_CASES],
)
def test_judge_convinced_with_expected_observations(kind, g, params, style, obs):
    a = Assertion(kind, **params)
    _, verdict = run_trial(g, a, style)
    assert verdict.convinced, verdict.reasons
    assert verdict.observations == obs
    assert verdict.complexity_class == PERCEPTUAL_COMPLEXITY[kind]


def test_judge_reads_only_the_mental_model():
    cert = build_certificate(cycle_graph(4), Assertion(Kind.CONNECTED))
    empty = judge(cert, MentalModel(()))
    assert not empty.convinced
    assert empty.reasons == ("gist_absent:tree",)


# --- gist extraction fixtures


def test_tree_token_c4():
    cert = build_certificate(cycle_graph(4), Assertion(Kind.CONNECTED))
    m = extract_mental_model(cert)
    trees = [t for t in m.components if isinstance(t, HighlightedTree)]
    assert trees and trees[0] == HighlightedTree(3, (1, 2, 1), True)


def test_cycle_token_c5():
    cert = build_certificate(cycle_graph(5), Assertion(Kind.HAMILTONIAN_CYCLE))
    m = extract_mental_model(cert)
    cycs = [t for t in m.components if isinstance(t, HighlightedConvexCycle)]
    assert cycs and cycs[0] == HighlightedConvexCycle(5, True)


def test_matrix_tokens_clique_and_dominating():
    cert = build_certificate(complete_graph(4), Assertion(Kind.CLIQUE, k=3))
    m = extract_mental_model(cert)
    assert any(
        isinstance(t, FilledBlock) and t.start == 0 and t.size == 3
        for t in m.components
    )
    cert2 = build_certificate(star_graph(5), Assertion(Kind.DOMINATING_SET, k=1))
    m2 = extract_mental_model(cert2)
    cov = [t for t in m2.components if isinstance(t, ColumnCoverage)]
    assert cov == [ColumnCoverage(1, 5, 5)]


def test_book_tokens_k4():
    cert = build_certificate(complete_graph(4), Assertion(Kind.STACK_LEQ, k=2))
    m = extract_mental_model(cert)
    panels = [t for t in m.components if isinstance(t, PagePanel)]
    assert len(panels) == 2
    assert all(p.interleave_free for p in panels)
    assert sum(p.arcs for p in panels) == 6


# --- verifier reason codes


def test_verify_edge_set_mismatch():
    cert = build_certificate(cycle_graph(4), Assertion(Kind.CONNECTED))
    g2 = Graph(4, cert.graph.edges | {(0, 2)})
    assert "edge_set_mismatch" in verify_faithfulness(
        Certificate(g2, cert.assertion, cert.evidence, cert.layout)
    )


def test_verify_occluded_vertex():
    g = path_graph(3)
    # vertex 2 sits on the open segment of edge (0, 1)
    lay = NodeLinkLayout(
        ((0.0, 0.0), (2.0, 0.0), (1.0, 0.0)), g.edges, frozenset(), frozenset()
    )
    cert = Certificate(g, Assertion(Kind.CONNECTED), SpanTree(0, {1: 0, 2: 1}, {0: 0, 1: 1, 2: 2}), lay)
    assert "occluded_vertex" in verify_faithfulness(cert)


def test_verify_vertex_separation():
    g = Graph.from_edges(3, [(0, 1)])
    lay = NodeLinkLayout(
        ((0.0, 0.0), (100.0, 0.0), (0.0, 1e-4)), g.edges, frozenset(), frozenset()
    )
    cert = Certificate(g, Assertion(Kind.NOT_CONNECTED), None, lay)
    assert "vertex_separation" in verify_faithfulness(cert)


def test_verify_dangling_highlight():
    g = path_graph(2)
    lay = NodeLinkLayout(
        ((0.0, 0.0), (1.0, 0.0)), g.edges, frozenset(), frozenset({(0, 5)})
    )
    cert = Certificate(g, Assertion(Kind.CONNECTED), None, lay)
    assert "dangling_highlight" in verify_faithfulness(cert)


def test_verify_matrix_mark_not_edge():
    g = cycle_graph(4)
    lay = MatrixLayout(
        (0, 1, 2, 3), (1.0,) * 4, frozenset({(0, 2, "evidence")})
    )
    cert = Certificate(g, Assertion(Kind.COMPLETE), None, lay)
    assert any(v.startswith("mark_not_edge") for v in verify_faithfulness(cert))


def test_verify_evidence_kind_mismatch():
    cert = build_certificate(cycle_graph(4), Assertion(Kind.CONNECTED))
    wrong = Certificate(
        cert.graph, Assertion(Kind.NOT_BIPARTITE), cert.evidence, cert.layout
    )
    assert verify_evidence(wrong) == ["evidence_kind_mismatch"]


def test_verify_improper_coloring():
    g = cycle_graph(4)
    ev = Coloring((0, 0, 1, 1), 2)
    cert = Certificate(g, Assertion(Kind.K_COLORABLE, k=2), ev, MatrixLayout((0, 1, 2, 3), (1.0,) * 4))
    assert "improper_coloring" in verify_evidence(cert)


def test_verify_rejects_conflicting_stack_spine():
    g = cycle_graph(4)
    ev = BookEmbedding((0, 2, 1, 3), {e: 0 for e in g.edges}, 1, "stack")
    cert = Certificate(g, Assertion(Kind.STACK_LEQ, k=1), ev, BookLayout(ev.spine, dict(ev.pages), 1, "stack"))
    assert "page_conflict" in verify_evidence(cert)


def test_verify_cut_too_large():
    cert = build_certificate(path_graph(3), Assertion(Kind.NOT_K_CONNECTED, k=2))
    tightened = Certificate(
        cert.graph, Assertion(Kind.NOT_K_CONNECTED, k=1), cert.evidence, cert.layout
    )
    assert "cut_too_large" in verify_evidence(tightened)


# --- adversarial mutations


MUTATION_TARGETS = [
    (Kind.CONNECTED, cycle_graph(5), {}, None),
    (Kind.NOT_CONNECTED, TWO_TRIANGLES, {}, None),
    (Kind.HAMILTONIAN_CYCLE, cycle_graph(5), {}, "nodelink"),
    (Kind.HAMILTONIAN_CYCLE, cycle_graph(6), {}, "matrix"),
    (Kind.NOT_BIPARTITE, cycle_graph(5), {}, "matrix"),
    (Kind.K_COLORABLE, cycle_graph(5), {"k": 3}, None),
    (Kind.CLIQUE, complete_graph(4), {"k": 3}, None),
    (Kind.INDEPENDENT_SET, cycle_graph(6), {"k": 3}, None),
    (Kind.DOMINATING_SET, star_graph(5), {"k": 1}, None),
    (Kind.STACK_LEQ, complete_graph(4), {"k": 2}, None),
    (Kind.QUEUE_LEQ, cycle_graph(5), {"k": 1}, None),
]


@pytest.mark.parametrize(
    "kind,g,params,style",
    MUTATION_TARGETS,
    ids=[f"{c[0].value}-{c[3] or 'default'}" for c in MUTATION_TARGETS],
)
def test_mutations_rejected(kind, g, params, style):
    cert, verdict = run_trial(g, Assertion(kind, **params), style)
    assert verdict.convinced
    muts = _applicable(cert)
    assert muts, "expected at least one applicable mutation"
    for name in muts:
        for seed in range(5):
            bad = mutate_certificate(cert, name, random.Random(seed))
            violations = verify(bad)
            if violations:
                continue
            v = judge(bad, extract_mental_model(bad))
            assert not v.convinced, (name, seed)


def test_inapplicable_mutation_raises():
    cert = build_certificate(complete_graph(4), Assertion(Kind.COMPLETE))
    with pytest.raises(ValueError):
        mutate_certificate(cert, "drop_page", random.Random(0))


def test_verdict_json():
    _, verdict = run_trial(cycle_graph(4), Assertion(Kind.CONNECTED))
    doc = verdict.to_json()
    assert doc == {
        "convinced": True,
        "observations": 5,
        "class": "O(n)",
        "reasons": [],
    }
