"""Simple undirected graph type plus the edge-list text format.

Vertices are dense integer ids 0..n-1.  Optional name labels are carried as
metadata and never consulted by any algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import GraphParseError


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph."""

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalized")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) endpoint out of range")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        return Graph(n, frozenset(normalize_edge(u, v) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists in ascending vertex order."""
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header ``n m``, then m lines ``u v``.

    ``#`` starts a comment line; blank lines are ignored; CRLF accepted.
    Errors report the offending 1-based line number.
    """
    n = None
    m_declared = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise GraphParseError("header must be 'n m'", lineno)
            try:
                n, m_declared = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError("header values must be integers", lineno)
            if n < 0 or m_declared < 0:
                raise GraphParseError("header values must be nonnegative", lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("edge endpoints must be integers", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range in ({u}, {v})", lineno)
        e = normalize_edge(u, v)
        if e in edges:
            raise GraphParseError(f"duplicate edge ({u}, {v})", lineno)
        edges.add(e)
    if n is None:
        raise GraphParseError("empty document", 1)
    if len(edges) != m_declared:
        raise GraphParseError(
            f"declared {m_declared} edges but found {len(edges)}", 1
        )
    return Graph(n, frozenset(edges))


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def bfs_tree(g: Graph, root: int) -> tuple[dict[int, int], dict[int, int]]:
    """BFS from root with ascending-id tie-breaking.

    Returns (parent, depth) maps over the reachable vertices; the root has no
    parent entry and depth 0.
    """
    parent: dict[int, int] = {}
    depth = {root: 0}
    queue = [root]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for w in g.neighbors(u):
            if w not in depth:
                depth[w] = depth[u] + 1
                parent[w] = u
                queue.append(w)
    return parent, depth


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    _, depth = bfs_tree(g, 0)
    return len(depth) == g.n


def graph_distances(g: Graph, source: int) -> dict[int, int]:
    _, depth = bfs_tree(g, source)
    return depth
