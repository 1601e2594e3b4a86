"""Witness extraction: exact algorithms producing evidence for each assertion.

Tie-breaking is everywhere by ascending vertex id (BFS queue order,
backtracking branch order, lexicographic witness selection) so identical
inputs always yield identical evidence.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    InvalidEvidenceError,
    NoEvidenceError,
    SearchBudgetExceeded,
    UnreachableError,
)
from .graph import Graph, bfs_tree, connected_components, is_connected

DEFAULT_BUDGET = 10_000_000


class SearchBudget:
    """Node counter for exact searches; raises when exhausted."""

    def __init__(self, limit: int | None = None):
        if limit is None:
            limit = int(os.environ.get("GRAPHTRIALS_BUDGET", DEFAULT_BUDGET))
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1):
        self.used += amount
        if self.used > self.limit:
            raise SearchBudgetExceeded(
                f"search exceeded node budget of {self.limit}"
            )


# ---------------------------------------------------------------------------
# evidence variants


@dataclass(frozen=True)
class SpanTree:
    tag = "span_tree"
    root: int
    parent: dict[int, int]
    depth: dict[int, int]

    def to_json(self):
        return {
            "tag": self.tag,
            "root": self.root,
            "parent": {str(k): v for k, v in sorted(self.parent.items())},
            "depth": {str(k): v for k, v in sorted(self.depth.items())},
        }


@dataclass(frozen=True)
class Partition:
    tag = "partition"
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def to_json(self):
        return {"tag": self.tag, "side_a": list(self.side_a), "side_b": list(self.side_b)}


@dataclass(frozen=True)
class VertexCut:
    tag = "vertex_cut"
    cut: tuple[int, ...]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def to_json(self):
        return {
            "tag": self.tag,
            "cut": list(self.cut),
            "side_a": list(self.side_a),
            "side_b": list(self.side_b),
        }


@dataclass(frozen=True)
class Cycle:
    tag = "cycle"
    vertices: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [
            tuple(sorted((vs[i], vs[(i + 1) % len(vs)])))
            for i in range(len(vs))
        ]

    def to_json(self):
        return {"tag": self.tag, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class Coloring:
    tag = "coloring"
    colors: tuple[int, ...]  # color per vertex id
    k: int

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]

    def to_json(self):
        return {"tag": self.tag, "colors": list(self.colors), "k": self.k}


@dataclass(frozen=True)
class MissingEdge:
    tag = "missing_edge"
    u: int
    v: int

    def to_json(self):
        return {"tag": self.tag, "u": self.u, "v": self.v}


@dataclass(frozen=True)
class CompleteWitness:
    tag = "complete"

    def to_json(self):
        return {"tag": self.tag}


@dataclass(frozen=True)
class WitnessSet:
    tag = "witness_set"
    kind: str  # clique | independent | dominating
    vertices: tuple[int, ...]

    def to_json(self):
        return {"tag": self.tag, "kind": self.kind, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class BfsWitness:
    tag = "bfs"
    root: int
    depth: dict[int, int]
    path: tuple[int, ...]  # witness path from root to the target vertex

    def to_json(self):
        return {
            "tag": self.tag,
            "root": self.root,
            "depth": {str(k): v for k, v in sorted(self.depth.items())},
            "path": list(self.path),
        }


@dataclass(frozen=True)
class SparseSubgraph:
    tag = "sparse_subgraph"
    edges: frozenset[tuple[int, int]]
    k: int

    def to_json(self):
        return {"tag": self.tag, "edges": sorted(self.edges), "k": self.k}


@dataclass(frozen=True)
class BookEmbedding:
    tag = "book_embedding"
    spine: tuple[int, ...]
    pages: dict[tuple[int, int], int] = field(hash=False)
    k: int = 1
    discipline: str = "stack"

    def to_json(self):
        return {
            "tag": self.tag,
            "spine": list(self.spine),
            "pages": [[u, v, p] for (u, v), p in sorted(self.pages.items())],
            "k": self.k,
            "discipline": self.discipline,
        }


EVIDENCE_TAGS = {
    cls.tag: cls
    for cls in (
        SpanTree,
        Partition,
        VertexCut,
        Cycle,
        Coloring,
        MissingEdge,
        CompleteWitness,
        WitnessSet,
        BfsWitness,
        SparseSubgraph,
        BookEmbedding,
    )
}


def evidence_from_json(d: dict):
    tag = d.get("tag")
    if tag == "span_tree":
        return SpanTree(
            d["root"],
            {int(k): v for k, v in d["parent"].items()},
            {int(k): v for k, v in d["depth"].items()},
        )
    if tag == "partition":
        return Partition(tuple(d["side_a"]), tuple(d["side_b"]))
    if tag == "vertex_cut":
        return VertexCut(tuple(d["cut"]), tuple(d["side_a"]), tuple(d["side_b"]))
    if tag == "cycle":
        return Cycle(tuple(d["vertices"]))
    if tag == "coloring":
        return Coloring(tuple(d["colors"]), d["k"])
    if tag == "missing_edge":
        return MissingEdge(d["u"], d["v"])
    if tag == "complete":
        return CompleteWitness()
    if tag == "witness_set":
        return WitnessSet(d["kind"], tuple(d["vertices"]))
    if tag == "bfs":
        return BfsWitness(
            d["root"],
            {int(k): v for k, v in d["depth"].items()},
            tuple(d["path"]),
        )
    if tag == "sparse_subgraph":
        return SparseSubgraph(
            frozenset(tuple(e) for e in d["edges"]), d["k"]
        )
    if tag == "book_embedding":
        return BookEmbedding(
            tuple(d["spine"]),
            {(u, v): p for u, v, p in d["pages"]},
            d["k"],
            d["discipline"],
        )
    raise InvalidEvidenceError(f"unknown evidence tag {tag!r}")


# ---------------------------------------------------------------------------
# extraction


def connectivity_evidence(g: Graph):
    """BFS spanning tree from vertex 0, or the smallest component vs rest."""
    if g.n == 0:
        raise NoEvidenceError("empty graph")
    parent, depth = bfs_tree(g, 0)
    if len(depth) == g.n:
        return SpanTree(0, parent, depth)
    comps = connected_components(g)
    smallest = min(comps, key=lambda c: (len(c), c[0]))
    rest = sorted(v for v in range(g.n) if v not in set(smallest))
    return Partition(tuple(smallest), tuple(rest))


# --- minimum vertex cut via max-flow on the vertex-split network


def _vertex_cut_between(g: Graph, s: int, t: int) -> set[int]:
    """Minimum s-t vertex cut for non-adjacent s, t (Menger via max-flow)."""
    n = g.n
    # node 2v = v_in, 2v+1 = v_out; capacity 1 on in->out except s, t
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = big if v in (s, t) else 1
    for u, v in g.edges:
        cap[(2 * u + 1, 2 * v)] = big
        cap[(2 * v + 1, 2 * u)] = big
    adj: dict[int, list[int]] = {}
    for (a, b) in list(cap):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
        cap.setdefault((b, a), 0)
    src, sink = 2 * s + 1, 2 * t

    def bfs_path():
        prev = {src: None}
        queue = [src]
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            for b in adj.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    if b == sink:
                        return prev
                    queue.append(b)
        return None

    while True:
        prev = bfs_path()
        if prev is None:
            break
        # unit capacities on vertex arcs: bottleneck is 1 unless pure-infinite
        path = []
        b = sink
        while prev[b] is not None:
            path.append((prev[b], b))
            b = prev[b]
        bottleneck = min(cap[e] for e in path)
        for e in path:
            cap[e] -= bottleneck
            cap[(e[1], e[0])] += bottleneck
    # min cut: split arcs crossing the reachable frontier
    reach = {src}
    stack = [src]
    while stack:
        a = stack.pop()
        for b in adj.get(a, ()):
            if b not in reach and cap[(a, b)] > 0:
                reach.add(b)
                stack.append(b)
    return {
        v
        for v in range(n)
        if 2 * v in reach and 2 * v + 1 not in reach
    }


def minimum_vertex_cut(g: Graph) -> tuple[int, ...] | None:
    """Smallest vertex separator over all non-adjacent pairs; None if complete."""
    best: tuple[int, ...] | None = None
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            cut = _vertex_cut_between(g, s, t)
            if best is None or len(cut) < len(best):
                best = tuple(sorted(cut))
                if not best:
                    return best
    return best


def _cut_sides(g: Graph, cut: set[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rest = [v for v in range(g.n) if v not in cut]
    sub_edges = [
        (u, v) for u, v in g.edges if u not in cut and v not in cut
    ]
    sub = Graph.from_edges(g.n, sub_edges)
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        u = stack.pop()
        for w in sub.neighbors(u):
            if w not in cut and w not in seen:
                seen.add(w)
                stack.append(w)
    side_a = tuple(sorted(seen))
    side_b = tuple(sorted(v for v in rest if v not in seen))
    return side_a, side_b


def cut_set_evidence(g: Graph, k: int) -> VertexCut:
    """A separator of size <= k-1 with the two sides of one separation."""
    if not is_connected(g):
        comps = connected_components(g)
        smallest = min(comps, key=lambda c: (len(c), c[0]))
        rest = sorted(v for v in range(g.n) if v not in set(smallest))
        return VertexCut((), tuple(smallest), tuple(rest))
    cut = minimum_vertex_cut(g)
    if cut is None or len(cut) > k - 1:
        raise NoEvidenceError(f"graph is {k}-connected (no separator of size < {k})")
    side_a, side_b = _cut_sides(g, set(cut))
    if len(side_b) < len(side_a):
        side_a, side_b = side_b, side_a
    return VertexCut(cut, side_a, side_b)


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """Exact polynomial check via max-flow separators."""
    if g.n < k + 1:
        return False
    cut = minimum_vertex_cut(g)
    return cut is None or len(cut) >= k


def sparsify_k_connected(g: Graph, k: int) -> SparseSubgraph:
    """Union of the first k scan-first-search forests (Nagamochi-Ibaraki)."""
    if not vertex_connectivity_at_least(g, k):
        raise NoEvidenceError(f"graph is not {k}-connected")
    r = [0] * g.n
    scanned = [False] * g.n
    forest_index: dict[tuple[int, int], int] = {}
    for _ in range(g.n):
        v = max(
            (x for x in range(g.n) if not scanned[x]),
            key=lambda x: (r[x], -x),
        )
        scanned[v] = True
        for u in g.neighbors(v):
            if not scanned[u]:
                e = (v, u) if v < u else (u, v)
                forest_index[e] = r[u]
                r[u] += 1
    keep = frozenset(e for e, i in forest_index.items() if i < k)
    return SparseSubgraph(keep, k)


# --- cycles


def _canonical_cycle(seq: list[int]) -> tuple[int, ...]:
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    rev = [rot[0]] + rot[:0:-1]
    return tuple(rot if rot[1] <= rev[1] else rev)


def _backtrack_cycle(g: Graph, length: int, budget: SearchBudget):
    """Exact search for a cycle of the given length, ascending branch order."""
    adj = g.adjacency
    for anchor in range(g.n):
        path = [anchor]
        on_path = {anchor}

        def rec() -> list[int] | None:
            budget.spend()
            v = path[-1]
            if len(path) == length:
                if anchor in adj[v]:
                    return list(path)
                return None
            for w in adj[v]:
                if w > anchor and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    found = rec()
                    if found is not None:
                        return found
                    path.pop()
                    on_path.remove(w)
            return None

        found = rec()
        if found is not None:
            return _canonical_cycle(found)
        if length == g.n:
            break  # a hamiltonian cycle must contain vertex 0
    return None


def _shortest_odd_cycle(g: Graph):
    best: tuple[int, ...] | None = None
    for root in range(g.n):
        parent, depth = bfs_tree(g, root)
        for u, v in g.sorted_edges():
            if u in depth and v in depth and depth[u] == depth[v]:
                pu, pv = [u], [v]
                a, b = u, v
                while a != b:
                    a, b = parent[a], parent[b]
                    pu.append(a)
                    pv.append(b)
                if len(set(pu) | set(pv)) != len(pu) + len(pv) - 1:
                    continue  # paths met earlier; not a simple cycle here
                cycle = pu[::-1] + pv[:-1]
                if best is None or len(cycle) < len(best):
                    best = _canonical_cycle(cycle)
    return best


def cycle_evidence(
    g: Graph, kind: str, k: int | None = None, budget: SearchBudget | None = None
) -> Cycle:
    """Cycle witness: hamiltonian, exact length k, or shortest odd."""
    budget = budget or SearchBudget()
    if kind == "odd":
        found = _shortest_odd_cycle(g)
        if found is None:
            raise NoEvidenceError("graph is bipartite: no odd cycle")
        return Cycle(found)
    if kind == "hamiltonian":
        length = g.n
    elif kind == "length":
        if k is None:
            raise ValueError("length cycles need k")
        length = k
    else:
        raise ValueError(f"unknown cycle kind {kind!r}")
    if length < 3 or length > g.n:
        raise NoEvidenceError(f"no cycle of length {length} possible")
    found = _backtrack_cycle(g, length, budget)
    if found is None:
        raise NoEvidenceError(f"no cycle of length {length} found")
    return Cycle(found)


# --- colorings


def _order_color_classes(colors: list[int], k: int) -> tuple[int, ...]:
    """Relabel so classes come in descending size, ties by smallest member."""
    members: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        members.setdefault(c, []).append(v)
    ranked = sorted(members, key=lambda c: (-len(members[c]), members[c][0]))
    relabel = {c: i for i, c in enumerate(ranked)}
    return tuple(relabel[c] for c in colors)


def coloring_evidence(
    g: Graph, k: int, budget: SearchBudget | None = None
) -> Coloring:
    budget = budget or SearchBudget()
    if k < 1:
        raise ValueError("k must be positive")
    colors = [-1] * g.n

    def rec(v: int) -> bool:
        budget.spend()
        if v == g.n:
            return True
        used = {colors[w] for w in g.neighbors(v) if colors[w] >= 0}
        for c in range(min(k, v + 1)):
            if c not in used:
                colors[v] = c
                if rec(v + 1):
                    return True
                colors[v] = -1
        return False

    if not rec(0):
        raise NoEvidenceError(f"graph is not {k}-colorable")
    return Coloring(_order_color_classes(colors, k), k)


def completeness_evidence(g: Graph):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                return MissingEdge(u, v)
    return CompleteWitness()


def witness_set_evidence(
    g: Graph, kind: str, k: int, budget: SearchBudget | None = None
) -> WitnessSet:
    """Lexicographically smallest vertex set of size k satisfying the kind."""
    budget = budget or SearchBudget()
    if kind == "clique":
        ok = lambda s: all(g.has_edge(u, v) for u, v in combinations(s, 2))
    elif kind == "independent":
        ok = lambda s: not any(g.has_edge(u, v) for u, v in combinations(s, 2))
    elif kind == "dominating":

        def ok(s):
            dom = set(s)
            for v in s:
                dom.update(g.neighbors(v))
            return len(dom) == g.n

    else:
        raise ValueError(f"unknown witness set kind {kind!r}")
    if k > g.n:
        raise NoEvidenceError(f"no vertex set of size {k} in a graph on {g.n} vertices")
    for sub in combinations(range(g.n), k):
        budget.spend()
        if ok(sub):
            return WitnessSet(kind, sub)
    raise NoEvidenceError(f"no {kind} set of size {k}")


def distance_evidence(
    g: Graph, mode: str, u: int | None = None, v: int | None = None
) -> BfsWitness:
    """BFS witness: pair mode records a shortest u-v path; deepest mode the
    maximum-depth BFS tree over all roots (ties to the smallest root)."""
    if mode == "pair":
        parent, depth = bfs_tree(g, u)
        if v not in depth:
            raise UnreachableError(f"vertex {v} unreachable from {u}")
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        return BfsWitness(u, depth, tuple(reversed(path)))
    if mode == "deepest":
        if not is_connected(g) or g.n == 0:
            raise NoEvidenceError("deepest BFS witness requires a connected graph")
        best_root, best_parent, best_depth = None, None, None
        for root in range(g.n):
            parent, depth = bfs_tree(g, root)
            d = max(depth.values())
            if best_depth is None or d > max(best_depth.values()):
                best_root, best_parent, best_depth = root, parent, depth
        target = min(
            x for x in best_depth if best_depth[x] == max(best_depth.values())
        )
        path = [target]
        while path[-1] != best_root:
            path.append(best_parent[path[-1]])
        return BfsWitness(best_root, best_depth, tuple(reversed(path)))
    raise ValueError(f"unknown distance mode {mode!r}")


# --- book embeddings (exact, small instances; the CLI also ingests external
#     book evidence per the black-box allowance)

from .oracle import queue_page_conflicts, stack_page_conflicts  # noqa: E402


def _min_conflict_coloring(pairs, m: int, k: int) -> list[int] | None:
    adj = [[] for _ in range(m)]
    for i, j in pairs:
        adj[i].append(j)
        adj[j].append(i)
    colors = [-1] * m

    def rec(i: int) -> bool:
        if i == m:
            return True
        used = {colors[j] for j in adj[i] if colors[j] >= 0}
        for c in range(k):
            if c not in used:
                colors[i] = c
                if rec(i + 1):
                    return True
                colors[i] = -1
        return False

    return colors if rec(0) else None


def book_embedding_evidence(
    g: Graph, k: int, discipline: str, budget: SearchBudget | None = None
) -> BookEmbedding:
    """Exact spine + page search (backtracking with partial-conflict pruning)."""
    budget = budget or SearchBudget()
    if discipline not in ("stack", "queue"):
        raise ValueError(f"unknown discipline {discipline!r}")
    edges = g.sorted_edges()
    conflicts = (
        stack_page_conflicts if discipline == "stack" else queue_page_conflicts
    )
    if not edges:
        return BookEmbedding(tuple(range(g.n)), {}, k, discipline)
    spine: list[int] = []
    placed: set[int] = set()

    def rec() -> BookEmbedding | None:
        budget.spend()
        if len(spine) == g.n:
            pos = {x: i for i, x in enumerate(spine)}
            coloring = _min_conflict_coloring(
                conflicts(pos, edges), len(edges), k
            )
            if coloring is None:
                return None
            return BookEmbedding(
                tuple(spine),
                {edges[i]: c for i, c in enumerate(coloring)},
                k,
                discipline,
            )
        for x in range(g.n):
            if x in placed:
                continue
            spine.append(x)
            placed.add(x)
            pos = {y: i for i, y in enumerate(spine)}
            done = [e for e in edges if e[0] in placed and e[1] in placed]
            if _min_conflict_coloring(
                conflicts(pos, done), len(done), k
            ) is not None:
                found = rec()
                if found is not None:
                    return found
            spine.pop()
            placed.remove(x)
        return None

    found = rec()
    if found is None:
        raise NoEvidenceError(
            f"no {discipline} layout with {k} page(s) exists"
        )
    return found
