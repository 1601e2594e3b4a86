"""Evidence extraction: witnesses checked against independent computations."""

import random
from itertools import combinations

import networkx as nx
import pytest

from graphtrials.errors import NoEvidenceError, SearchBudgetExceeded
from graphtrials.evidence import (
    BfsWitness,
    BookEmbedding,
    Coloring,
    CompleteWitness,
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
    evidence_from_json,
    minimum_vertex_cut,
    sparsify_k_connected,
    vertex_connectivity_at_least,
    witness_set_evidence,
)
from graphtrials.graph import Graph
from graphtrials.oracle import (
    is_k_connected,
    queue_page_conflicts,
    stack_page_conflicts,
)

from conftest import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_connectivity_evidence_c4_spanning_tree():
    ev = connectivity_evidence(cycle_graph(4))
    assert isinstance(ev, SpanTree)
    assert ev.root == 0
    assert ev.parent == {1: 0, 3: 0, 2: 1}
    assert ev.depth == {0: 0, 1: 1, 3: 1, 2: 2}


def test_connectivity_evidence_partition():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    ev = connectivity_evidence(g)
    assert isinstance(ev, Partition)
    assert ev.side_a == (0, 1, 2)
    assert ev.side_b == (3, 4, 5)


def test_minimum_vertex_cut_k23():
    # complete bipartite on {0,1} x {2,3,4}: the only minimum cut is {0,1}
    g = complete_bipartite(2, 3)
    assert minimum_vertex_cut(g) == (0, 1)


def test_minimum_vertex_cut_complete():
    assert minimum_vertex_cut(complete_graph(4)) is None


@pytest.mark.parametrize("seed", range(40))
def test_minimum_vertex_cut_vs_networkx(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(2, 9), rng.choice([0.3, 0.5, 0.8]))
    cut = minimum_vertex_cut(g)
    h = to_nx(g)
    if g.is_complete():
        assert cut is None
        return
    assert len(cut) == nx.node_connectivity(h)
    # removing the cut really disconnects (or the graph was disconnected)
    h.remove_nodes_from(cut)
    assert h.number_of_nodes() == 0 or not nx.is_connected(h)


def test_cut_set_evidence_p3():
    ev = cut_set_evidence(path_graph(3), 2)
    assert isinstance(ev, VertexCut)
    assert ev.cut == (1,)
    assert ev.side_a == (0,) and ev.side_b == (2,)


def test_cut_set_evidence_k23_sides():
    ev = cut_set_evidence(complete_bipartite(2, 3), 3)
    assert ev.cut == (0, 1)
    assert ev.side_a == (2,)
    assert ev.side_b == (3, 4)


def test_cut_set_evidence_disconnected_gives_empty_cut():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    ev = cut_set_evidence(g, 1)
    assert ev.cut == ()


def test_cut_set_evidence_refuses_when_too_connected():
    with pytest.raises(NoEvidenceError):
        cut_set_evidence(complete_graph(4), 2)


def test_sparsify_c5_keeps_all_edges():
    ev = sparsify_k_connected(cycle_graph(5), 2)
    assert set(ev.edges) == set(cycle_graph(5).edges)


@pytest.mark.parametrize("seed", range(30))
def test_sparsify_properties(seed):
    rng = random.Random(700 + seed)
    g = random_graph(rng, rng.randint(4, 10), 0.6)
    for k in (1, 2, 3):
        if not is_k_connected(g, k):
            continue
        ev = sparsify_k_connected(g, k)
        assert len(ev.edges) <= k * (g.n - 1)
        assert set(ev.edges) <= set(g.edges)
        sub = Graph.from_edges(g.n, ev.edges)
        assert vertex_connectivity_at_least(sub, k)


def test_cycle_evidence_hamiltonian_k4():
    ev = cycle_evidence(complete_graph(4), "hamiltonian")
    assert ev.vertices == (0, 1, 2, 3)


def test_cycle_evidence_canonical_orientation():
    ev = cycle_evidence(cycle_graph(5), "hamiltonian")
    assert ev.vertices[0] == 0
    assert ev.vertices[1] < ev.vertices[-1]


def test_cycle_evidence_length():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    ev = cycle_evidence(g, "length", k=3)
    assert ev.vertices == (0, 1, 2)
    with pytest.raises(NoEvidenceError):
        cycle_evidence(cycle_graph(5), "length", k=4)


def test_shortest_odd_cycle():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    ev = cycle_evidence(g, "odd")
    assert ev.vertices == (0, 1, 2)
    with pytest.raises(NoEvidenceError):
        cycle_evidence(complete_bipartite(2, 3), "odd")


@pytest.mark.parametrize("seed", range(20))
def test_odd_cycle_is_shortest(seed):
    rng = random.Random(800 + seed)
    g = random_graph(rng, rng.randint(3, 9), 0.4)
    h = to_nx(g)
    odd = [len(c) for c in nx.simple_cycles(h) if len(c) % 2 == 1]
    if not odd:
        with pytest.raises(NoEvidenceError):
            cycle_evidence(g, "odd")
        return
    ev = cycle_evidence(g, "odd")
    assert len(ev.vertices) == min(odd)
    vs = ev.vertices
    for i in range(len(vs)):
        assert g.has_edge(vs[i], vs[(i + 1) % len(vs)])


def test_coloring_evidence_c5():
    ev = coloring_evidence(cycle_graph(5), 3)
    assert ev.colors == (0, 1, 0, 1, 2)
    assert ev.k == 3
    with pytest.raises(NoEvidenceError):
        coloring_evidence(cycle_graph(5), 2)


def test_coloring_classes_ordering():
    ev = coloring_evidence(complete_bipartite(2, 3), 2)
    classes = ev.classes()
    # larger class first
    assert [len(c) for c in classes] == [3, 2]


def test_completeness_evidence():
    assert isinstance(completeness_evidence(complete_graph(4)), CompleteWitness)
    ev = completeness_evidence(cycle_graph(4))
    assert isinstance(ev, MissingEdge)
    assert (ev.u, ev.v) == (0, 2)  # lexicographically first non-edge


def test_witness_set_lexicographic():
    assert witness_set_evidence(complete_graph(4), "clique", 3).vertices == (0, 1, 2)
    assert witness_set_evidence(cycle_graph(4), "independent", 2).vertices == (0, 2)
    assert witness_set_evidence(cycle_graph(4), "dominating", 2).vertices == (0, 1)
    with pytest.raises(NoEvidenceError):
        witness_set_evidence(cycle_graph(4), "clique", 3)


def test_distance_evidence_pair():
    ev = distance_evidence(path_graph(3), "pair", u=0, v=2)
    assert ev.path == (0, 1, 2)
    assert ev.root == 0
    assert ev.depth[2] == 2


def test_distance_evidence_deepest():
    ev = distance_evidence(path_graph(4), "deepest")
    assert max(ev.depth.values()) == 3
    assert len(ev.path) == 4


def test_book_embedding_small():
    ev = book_embedding_evidence(cycle_graph(4), 1, "stack")
    pos = {v: i for i, v in enumerate(ev.spine)}
    pages = {}
    for e, p in ev.pages.items():
        pages.setdefault(p, []).append(e)
    assert set(ev.pages) == set(cycle_graph(4).edges)
    for arcs in pages.values():
        assert stack_page_conflicts(pos, sorted(arcs)) == []


def test_book_embedding_k4_two_stack_pages():
    ev = book_embedding_evidence(complete_graph(4), 2, "stack")
    assert max(ev.pages.values()) <= 1
    pos = {v: i for i, v in enumerate(ev.spine)}
    for p in range(2):
        arcs = sorted(e for e, q in ev.pages.items() if q == p)
        assert stack_page_conflicts(pos, arcs) == []


def test_book_embedding_queue():
    ev = book_embedding_evidence(complete_graph(4), 2, "queue")
    pos = {v: i for i, v in enumerate(ev.spine)}
    for p in range(2):
        arcs = sorted(e for e, q in ev.pages.items() if q == p)
        assert queue_page_conflicts(pos, arcs) == []
    with pytest.raises(NoEvidenceError):
        book_embedding_evidence(complete_graph(5), 2, "stack")


def test_budget_exhaustion():
    budget = SearchBudget(limit=3)
    with pytest.raises(SearchBudgetExceeded):
        cycle_evidence(complete_graph(8), "hamiltonian", budget=budget)


def test_evidence_json_roundtrip():
    samples = [
        SpanTree(0, {1: 0, 2: 1}, {0: 0, 1: 1, 2: 2}),
        Partition((0, 1), (2, 3)),
        VertexCut((1,), (0,), (2,)),
        Cycle((0, 1, 2)),
        Coloring((0, 1, 0), 2),
        MissingEdge(0, 2),
        CompleteWitness(),
        WitnessSet("clique", (0, 1, 2)),
        BfsWitness(0, {0: 0, 1: 1}, (0, 1)),
        SparseSubgraph(frozenset({(0, 1), (1, 2)}), 1),
        BookEmbedding((0, 1, 2), {(0, 1): 0, (1, 2): 0}, 1, "stack"),
    ]
    for ev in samples:
        back = evidence_from_json(ev.to_json())
        assert back == ev, ev
