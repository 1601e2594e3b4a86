"""Brute-force ground-truth oracles, size-gated.

These are deliberately written as independent exhaustive checks (bitmask DP,
subset enumeration, permutation scans) so the evidence extractors can be
cross-validated against them.  They are not meant to scale.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .assertions import Assertion, Kind
from .errors import OracleSizeError
from .graph import Graph, graph_distances, is_connected

NP_HARD_LIMIT = 12
BOOK_LIMIT = 8
POLY_LIMIT = 512

_BOOK_KINDS = {Kind.STACK_LEQ, Kind.QUEUE_LEQ}
_NP_KINDS = {
    Kind.HAMILTONIAN_CYCLE,
    Kind.LENGTH_K_CYCLE,
    Kind.K_COLORABLE,
    Kind.CLIQUE,
    Kind.INDEPENDENT_SET,
    Kind.DOMINATING_SET,
} | _BOOK_KINDS


def _guard(g: Graph, a: Assertion):
    if a.kind in _BOOK_KINDS and g.n > BOOK_LIMIT:
        raise OracleSizeError(f"{a.kind.value} oracle limited to n <= {BOOK_LIMIT}")
    if a.kind in _NP_KINDS and g.n > NP_HARD_LIMIT:
        raise OracleSizeError(f"{a.kind.value} oracle limited to n <= {NP_HARD_LIMIT}")
    if g.n > POLY_LIMIT:
        raise OracleSizeError(f"oracle limited to n <= {POLY_LIMIT}")


def _removal_disconnects(g: Graph, removed: frozenset[int]) -> bool:
    rest = [v for v in range(g.n) if v not in removed]
    if len(rest) < 2:
        return False
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) < len(rest)


def has_separator_leq(g: Graph, size: int) -> bool:
    """True iff some vertex set of size <= `size` disconnects g.

    The empty set counts: a disconnected graph has a size-0 separator.
    Complete graphs have no separator of any size.
    """
    verts = range(g.n)
    for s in range(0, size + 1):
        for sub in combinations(verts, s):
            if _removal_disconnects(g, frozenset(sub)):
                return True
    return False


def is_k_connected(g: Graph, k: int) -> bool:
    return g.n >= k + 1 and not has_separator_leq(g, k - 1)


def _has_hamiltonian_cycle(g: Graph) -> bool:
    n = g.n
    if n < 3:
        return False
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    # bitmask DP over vertex subsets containing 0
    full = (1 << n) - 1
    reach = {(1, 0)}  # (mask, endpoint)
    frontier = [(1, 0)]
    while frontier:
        mask, v = frontier.pop()
        if mask == full:
            if adj[v] & 1:
                return True
            continue
        nxt = adj[v] & ~mask
        while nxt:
            w = (nxt & -nxt).bit_length() - 1
            nxt &= nxt - 1
            key = (mask | (1 << w), w)
            if key not in reach:
                reach.add(key)
                frontier.append(key)
    return False


def _has_cycle_length_k(g: Graph, k: int) -> bool:
    n = g.n
    if k < 3 or k > n:
        return False
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    # paths from anchor s using only vertices >= s, of exactly k vertices
    for s in range(n):
        allowed = ~((1 << s) - 1)
        reach = {(1 << s, s)}
        frontier = [(1 << s, s, 1)]
        while frontier:
            mask, v, size = frontier.pop()
            if size == k:
                if adj[v] & (1 << s):
                    return True
                continue
            nxt = adj[v] & ~mask & allowed
            while nxt:
                w = (nxt & -nxt).bit_length() - 1
                nxt &= nxt - 1
                key = (mask | (1 << w), w)
                if key not in reach:
                    reach.add(key)
                    frontier.append((key[0], w, size + 1))
        # reach sets per anchor are independent
    return False


def two_color(g: Graph) -> dict[int, int] | None:
    """BFS 2-coloring; None when an odd cycle exists."""
    color: dict[int, int] = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def _is_k_colorable(g: Graph, k: int) -> bool:
    if k >= g.n:
        return True
    if k == 1:
        return g.m == 0
    if k == 2:
        return two_color(g) is not None
    if k ** g.n <= 1_000_000:
        edges = g.sorted_edges()
        for coloring in product(range(k), repeat=g.n):
            if all(coloring[u] != coloring[v] for u, v in edges):
                return True
        return False
    return _color_backtrack(g, k)


def _color_backtrack(g: Graph, k: int) -> bool:
    colors = [-1] * g.n

    def rec(v: int) -> bool:
        if v == g.n:
            return True
        used = {colors[w] for w in g.neighbors(v) if colors[w] >= 0}
        for c in range(min(k, v + 1)):  # symmetry: new color only once
            if c not in used:
                colors[v] = c
                if rec(v + 1):
                    return True
                colors[v] = -1
        return False

    return rec(0)


def _is_clique(g: Graph, sub) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(sub, 2))


def _is_independent(g: Graph, sub) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(sub, 2))


def _is_dominating(g: Graph, sub) -> bool:
    dom = set(sub)
    for v in sub:
        dom.update(g.neighbors(v))
    return len(dom) == g.n


def stack_page_conflicts(spine_pos: dict[int, int], edges) -> list[tuple[int, int]]:
    """Indices of edge pairs that interleave on the spine (would cross)."""
    iv = [tuple(sorted((spine_pos[u], spine_pos[v]))) for u, v in edges]
    out = []
    for i in range(len(iv)):
        a, b = iv[i]
        for j in range(i + 1, len(iv)):
            c, d = iv[j]
            if a < c < b < d or c < a < d < b:
                out.append((i, j))
    return out


def queue_page_conflicts(spine_pos: dict[int, int], edges) -> list[tuple[int, int]]:
    """Indices of edge pairs that nest on the spine."""
    iv = [tuple(sorted((spine_pos[u], spine_pos[v]))) for u, v in edges]
    out = []
    for i in range(len(iv)):
        a, b = iv[i]
        for j in range(i + 1, len(iv)):
            c, d = iv[j]
            if a < c < d < b or c < a < b < d:
                out.append((i, j))
    return out


def _conflicts_colorable(pairs: list[tuple[int, int]], m: int, k: int) -> bool:
    if not pairs:
        return True
    if k == 1:
        return False
    adj = [[] for _ in range(m)]
    for i, j in pairs:
        adj[i].append(j)
        adj[j].append(i)
    colors = [-1] * m

    def rec(i: int) -> bool:
        if i == m:
            return True
        used = {colors[j] for j in adj[i] if colors[j] >= 0}
        for c in range(min(k, i + 1)):
            if c not in used:
                colors[i] = c
                if rec(i + 1):
                    return True
                colors[i] = -1
        return False

    return rec(0)


def _book_leq(g: Graph, k: int, discipline: str) -> bool:
    if g.n <= 2 or g.m == 0:
        return True
    edges = g.sorted_edges()
    if discipline == "stack":
        # crossing depends only on the cyclic order, up to reflection:
        # fix vertex 0 first and orient by the second position
        for perm in permutations(range(1, g.n)):
            if g.n >= 3 and perm[0] > perm[-1]:
                continue
            pos = {v: i + 1 for i, v in enumerate(perm)}
            pos[0] = 0
            if _conflicts_colorable(
                stack_page_conflicts(pos, edges), len(edges), k
            ):
                return True
        return False
    # queue: nesting is linear; only reversal symmetry applies
    for perm in permutations(range(g.n)):
        if perm[0] > perm[-1]:
            continue
        pos = {v: i for i, v in enumerate(perm)}
        if _conflicts_colorable(queue_page_conflicts(pos, edges), len(edges), k):
            return True
    return False


def oracle_check(g: Graph, a: Assertion) -> bool:
    """Exhaustive truth of the assertion; exponential time accepted."""
    a.validate_for(g.n)
    _guard(g, a)
    kind = a.kind
    if kind == Kind.CONNECTED:
        return is_connected(g)
    if kind == Kind.NOT_CONNECTED:
        return not is_connected(g)
    if kind == Kind.NOT_K_CONNECTED:
        return has_separator_leq(g, a.k - 1)
    if kind == Kind.K_CONNECTED_SPARSE:
        return is_k_connected(g, a.k)
    if kind == Kind.HAMILTONIAN_CYCLE:
        return _has_hamiltonian_cycle(g)
    if kind == Kind.LENGTH_K_CYCLE:
        return _has_cycle_length_k(g, a.k)
    if kind == Kind.NOT_BIPARTITE:
        return two_color(g) is None
    if kind == Kind.K_COLORABLE:
        return _is_k_colorable(g, a.k)
    if kind == Kind.COMPLETE:
        return g.is_complete()
    if kind == Kind.NOT_COMPLETE:
        return not g.is_complete()
    if kind == Kind.CLIQUE:
        return any(_is_clique(g, s) for s in combinations(range(g.n), a.k))
    if kind == Kind.INDEPENDENT_SET:
        return any(_is_independent(g, s) for s in combinations(range(g.n), a.k))
    if kind == Kind.DOMINATING_SET:
        return any(_is_dominating(g, s) for s in combinations(range(g.n), a.k))
    if kind == Kind.DISTANCE_EQUALS:
        # distance witnesses are BFS level drawings of the whole graph, so
        # the assertion is scoped to connected graphs
        return is_connected(g) and graph_distances(g, a.u).get(a.v) == a.k
    if kind == Kind.DIAMETER_GREATER:
        if not is_connected(g) or g.n == 0:
            return False
        ecc = max(
            max(graph_distances(g, s).values()) for s in range(g.n)
        )
        return ecc > a.k
    if kind == Kind.STACK_LEQ:
        return _book_leq(g, a.k, "stack")
    if kind == Kind.QUEUE_LEQ:
        return _book_leq(g, a.k, "queue")
    raise ValueError(f"unknown assertion kind {kind}")
