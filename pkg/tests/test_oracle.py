"""Oracle checks against independent implementations (networkx / itertools)."""

import random
from itertools import combinations, permutations

import networkx as nx
import pytest

from graphtrials.assertions import Assertion, Kind
from graphtrials.errors import OracleSizeError
from graphtrials.graph import Graph
from graphtrials.oracle import (
    is_k_connected,
    oracle_check,
    queue_page_conflicts,
    stack_page_conflicts,
    two_color,
)

from conftest import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
    star_graph,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def slow_hamiltonian(g: Graph) -> bool:
    """Permutation-based reference, independent of the bitmask solver."""
    if g.n < 3:
        return False
    for perm in permutations(range(1, g.n)):
        seq = (0,) + perm
        if all(g.has_edge(seq[i], seq[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


def slow_chromatic_leq(g: Graph, k: int) -> bool:
    from itertools import product

    for colors in product(range(k), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in g.edges):
            return True
    return g.n == 0


@pytest.mark.parametrize("seed", range(30))
def test_connectivity_kinds_vs_networkx(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.4, 0.7]))
    h = to_nx(g)
    assert oracle_check(g, Assertion(Kind.CONNECTED)) == nx.is_connected(h)
    assert oracle_check(g, Assertion(Kind.NOT_CONNECTED)) == (
        not nx.is_connected(h)
    )
    if g.n >= 2:
        kappa = nx.node_connectivity(h)
        for k in range(1, g.n):
            want = kappa < k if not g.is_complete() else False
            assert (
                oracle_check(g, Assertion(Kind.NOT_K_CONNECTED, k=k)) == want
            ), (g, k)
            assert is_k_connected(g, k) == (kappa >= k and g.n > k)


@pytest.mark.parametrize("seed", range(20))
def test_hamiltonian_vs_permutations(seed):
    rng = random.Random(100 + seed)
    g = random_graph(rng, rng.randint(3, 7), rng.choice([0.3, 0.6, 0.9]))
    assert oracle_check(g, Assertion(Kind.HAMILTONIAN_CYCLE)) == slow_hamiltonian(g)


def test_hamiltonian_fixtures():
    assert oracle_check(cycle_graph(5), Assertion(Kind.HAMILTONIAN_CYCLE))
    assert oracle_check(complete_graph(4), Assertion(Kind.HAMILTONIAN_CYCLE))
    assert not oracle_check(path_graph(4), Assertion(Kind.HAMILTONIAN_CYCLE))
    assert not oracle_check(star_graph(5), Assertion(Kind.HAMILTONIAN_CYCLE))


@pytest.mark.parametrize("seed", range(20))
def test_length_k_cycle_vs_networkx(seed):
    rng = random.Random(200 + seed)
    g = random_graph(rng, rng.randint(3, 8), 0.4)
    h = to_nx(g)
    lengths = {len(c) for c in nx.simple_cycles(h)}
    for k in range(3, g.n + 1):
        assert oracle_check(g, Assertion(Kind.LENGTH_K_CYCLE, k=k)) == (
            k in lengths
        )


@pytest.mark.parametrize("seed", range(30))
def test_bipartite_vs_networkx(seed):
    rng = random.Random(300 + seed)
    g = random_graph(rng, rng.randint(1, 10), 0.3)
    h = to_nx(g)
    is_bip = nx.is_bipartite(h)
    assert oracle_check(g, Assertion(Kind.NOT_BIPARTITE)) == (not is_bip)
    coloring = two_color(g)
    if is_bip:
        assert coloring is not None
        assert all(coloring[u] != coloring[v] for u, v in g.edges)
    else:
        assert coloring is None


@pytest.mark.parametrize("seed", range(15))
def test_colorable_vs_product(seed):
    rng = random.Random(400 + seed)
    g = random_graph(rng, rng.randint(1, 6), 0.5)
    for k in range(1, 5):
        assert oracle_check(g, Assertion(Kind.K_COLORABLE, k=k)) == (
            slow_chromatic_leq(g, k)
        )


def test_completeness():
    assert oracle_check(complete_graph(4), Assertion(Kind.COMPLETE))
    assert oracle_check(Graph.from_edges(1, []), Assertion(Kind.COMPLETE))
    assert not oracle_check(cycle_graph(4), Assertion(Kind.COMPLETE))
    assert oracle_check(cycle_graph(4), Assertion(Kind.NOT_COMPLETE))
    assert not oracle_check(complete_graph(3), Assertion(Kind.NOT_COMPLETE))


@pytest.mark.parametrize("seed", range(15))
def test_witness_sets_vs_combinations(seed):
    rng = random.Random(500 + seed)
    g = random_graph(rng, rng.randint(1, 8), 0.4)
    for k in range(1, g.n + 1):
        has_clique = any(
            all(g.has_edge(u, v) for u, v in combinations(s, 2))
            for s in combinations(range(g.n), k)
        )
        has_indep = any(
            not any(g.has_edge(u, v) for u, v in combinations(s, 2))
            for s in combinations(range(g.n), k)
        )
        has_dom = any(
            set(s).union(*(g.neighbors(v) for v in s)) == set(range(g.n))
            for s in combinations(range(g.n), k)
        )
        assert oracle_check(g, Assertion(Kind.CLIQUE, k=k)) == has_clique
        assert oracle_check(g, Assertion(Kind.INDEPENDENT_SET, k=k)) == has_indep
        assert oracle_check(g, Assertion(Kind.DOMINATING_SET, k=k)) == has_dom


@pytest.mark.parametrize("seed", range(20))
def test_distance_and_diameter_vs_networkx(seed):
    rng = random.Random(600 + seed)
    g = random_graph(rng, rng.randint(2, 10), 0.35)
    h = to_nx(g)
    connected = nx.is_connected(h)
    u, v = rng.sample(range(g.n), 2)
    for k in range(1, g.n + 1):
        want = (
            connected
            and nx.has_path(h, u, v)
            and nx.shortest_path_length(h, u, v) == k
        )
        got = oracle_check(g, Assertion(Kind.DISTANCE_EQUALS, k=k, u=u, v=v))
        assert got == want
        want_diam = connected and nx.diameter(h) > k
        assert oracle_check(g, Assertion(Kind.DIAMETER_GREATER, k=k)) == want_diam


def test_distance_scoped_to_connected_graphs():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not oracle_check(g, Assertion(Kind.DISTANCE_EQUALS, k=1, u=0, v=1))
    assert not oracle_check(g, Assertion(Kind.DIAMETER_GREATER, k=1))


def test_book_numbers_known_values():
    # stack number: outerplanar graphs need 1 page; K_n needs ceil(n/2) for n >= 4
    assert oracle_check(cycle_graph(4), Assertion(Kind.STACK_LEQ, k=1))
    assert oracle_check(complete_graph(4), Assertion(Kind.STACK_LEQ, k=2))
    assert not oracle_check(complete_graph(5), Assertion(Kind.STACK_LEQ, k=2))
    assert oracle_check(complete_graph(5), Assertion(Kind.STACK_LEQ, k=3))
    # queue number: cycles need 1; K_n needs floor(n/2)
    assert oracle_check(cycle_graph(5), Assertion(Kind.QUEUE_LEQ, k=1))
    assert oracle_check(complete_graph(4), Assertion(Kind.QUEUE_LEQ, k=2))
    assert not oracle_check(complete_graph(4), Assertion(Kind.QUEUE_LEQ, k=1))
    assert oracle_check(complete_graph(5), Assertion(Kind.QUEUE_LEQ, k=2))
    assert oracle_check(path_graph(6), Assertion(Kind.QUEUE_LEQ, k=1))


def test_page_conflict_predicates():
    pos = {0: 0, 1: 1, 2: 2, 3: 3}
    # (0,2) and (1,3) interleave on a stack page but do not nest
    assert stack_page_conflicts(pos, [(0, 2), (1, 3)]) == [(0, 1)]
    assert queue_page_conflicts(pos, [(0, 2), (1, 3)]) == []
    # (0,3) and (1,2) nest on a queue page but do not interleave
    assert queue_page_conflicts(pos, [(0, 3), (1, 2)]) == [(0, 1)]
    assert stack_page_conflicts(pos, [(0, 3), (1, 2)]) == []
    # sharing an endpoint is never a conflict
    assert stack_page_conflicts(pos, [(0, 2), (2, 3)]) == []
    assert queue_page_conflicts(pos, [(0, 2), (0, 3)]) == []


def test_oracle_size_guards():
    big = cycle_graph(13)
    with pytest.raises(OracleSizeError):
        oracle_check(big, Assertion(Kind.HAMILTONIAN_CYCLE))
    with pytest.raises(OracleSizeError):
        oracle_check(cycle_graph(9), Assertion(Kind.STACK_LEQ, k=1))
    # polynomial kinds accept n = 13 fine
    assert oracle_check(big, Assertion(Kind.CONNECTED))
