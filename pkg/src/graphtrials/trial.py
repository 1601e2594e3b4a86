"""Certificate verification and the deterministic judge.

The verifier plays defense: it checks that the drawing shows exactly the
graph (faithfulness) and that the embedded evidence is valid.  The judge
then reads *only* the mental model -- an ordered list of gist tokens
extracted from the layout -- and validates the assertion, counting one
observation per token inspection or count unit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .assertions import PERCEPTUAL_COMPLEXITY, Assertion, Kind
from .errors import UnrecognizedGistError
from .evidence import (
    BfsWitness,
    BookEmbedding,
    CompleteWitness,
    Coloring,
    Cycle,
    MissingEdge,
    Partition,
    SpanTree,
    SparseSubgraph,
    VertexCut,
    WitnessSet,
    vertex_connectivity_at_least,
)
from .graph import Graph, normalize_edge
from .layout import (
    BookLayout,
    MatrixLayout,
    NodeLinkLayout,
    convex_hull,
    delta_sep,
    min_pairwise_distance,
    occlusion_ok,
)
from .oracle import queue_page_conflicts, stack_page_conflicts


@dataclass(frozen=True)
class Certificate:
    graph: Graph
    assertion: Assertion
    evidence: object
    layout: object


# ---------------------------------------------------------------------------
# mental model tokens


@dataclass(frozen=True)
class SeparatedGroup:
    size: int


@dataclass(frozen=True)
class StripVertices:
    count: int


@dataclass(frozen=True)
class HighlightedConvexCycle:
    length: int
    spanning: bool


@dataclass(frozen=True)
class HighlightedTree:
    levels: int
    sizes: tuple[int, ...]
    spanning: bool


@dataclass(frozen=True)
class HighlightedSubgraph:
    edge_count: int
    vertex_count: int
    spanning: bool


@dataclass(frozen=True)
class TopmostSingleton:
    pass


@dataclass(frozen=True)
class LevelBands:
    sizes: tuple[int, ...]
    path_bands: tuple[int, ...]
    skip_free: bool


@dataclass(frozen=True)
class DiagonalRun:
    length: int
    full: bool


@dataclass(frozen=True)
class CornerCellPair:
    closing_index: int


@dataclass(frozen=True)
class MarkedCell:
    filled: bool
    square: bool | None  # parity-width squareness; None without parity widths


@dataclass(frozen=True)
class EmptyBlock:
    start: int
    size: int
    spanning: bool


@dataclass(frozen=True)
class FilledBlock:
    start: int
    size: int
    spanning: bool


@dataclass(frozen=True)
class BlockPartition:
    count: int


@dataclass(frozen=True)
class ColumnCoverage:
    k: int
    covered: int
    total: int


@dataclass(frozen=True)
class PagePanel:
    page: int
    arcs: int
    interleave_free: bool
    nesting_free: bool


@dataclass(frozen=True)
class BookShape:
    spine: int
    arcs: int


@dataclass(frozen=True)
class MentalModel:
    components: tuple


@dataclass(frozen=True)
class Verdict:
    convinced: bool
    observations: int
    complexity_class: str
    reasons: tuple[str, ...] = ()

    def to_json(self):
        return {
            "convinced": self.convinced,
            "observations": self.observations,
            "class": self.complexity_class,
            "reasons": list(self.reasons),
        }


# ---------------------------------------------------------------------------
# faithfulness


def verify_faithfulness(c: Certificate) -> list[str]:
    g, lay = c.graph, c.layout
    out: list[str] = []
    if isinstance(lay, NodeLinkLayout):
        if len(lay.positions) != g.n:
            return ["vertex_count_mismatch"]
        if lay.drawn_edges != g.edges:
            out.append("edge_set_mismatch")
        pos = lay.positions
        if g.n >= 2 and min_pairwise_distance(pos) < delta_sep(pos):
            out.append("vertex_separation")
        if not occlusion_ok(pos, sorted(lay.drawn_edges)):
            out.append("occluded_vertex")
        for v in lay.highlight_vertices:
            if not (0 <= v < g.n):
                out.append("dangling_highlight")
                break
        if not lay.highlight_edges <= lay.drawn_edges:
            out.append("dangling_highlight")
    elif isinstance(lay, MatrixLayout):
        if sorted(lay.order) != list(range(g.n)):
            return ["bad_order"]
        if len(lay.row_widths) != g.n or any(w <= 0 for w in lay.row_widths):
            out.append("bad_widths")
        for i, j, cls in sorted(lay.marked_cells):
            if not (0 <= i < g.n and 0 <= j < g.n) or i == j:
                out.append("mark_out_of_range")
                continue
            is_edge = g.has_edge(lay.order[i], lay.order[j])
            if cls == "evidence" and not is_edge:
                out.append(f"mark_not_edge:{i},{j}")
            if cls == "block-boundary" and is_edge:
                out.append(f"boundary_on_edge:{i},{j}")
        for lo, hi in lay.block_bounds:
            if not (0 <= lo < hi <= g.n):
                out.append("bad_block_bounds")
    elif isinstance(lay, BookLayout):
        if sorted(lay.spine) != list(range(g.n)):
            return ["bad_order"]
        if set(lay.pages) != set(g.edges):
            out.append("unassigned_edge")
        if any(not (0 <= p < lay.k) for p in lay.pages.values()):
            out.append("page_out_of_range")
    else:
        out.append("unknown_layout")
    return out


# ---------------------------------------------------------------------------
# evidence validity


def _check_span_tree(g: Graph, ev: SpanTree, out: list[str]):
    if set(ev.depth) != set(range(g.n)):
        out.append("not_spanning")
        return
    if ev.depth.get(ev.root) != 0 or ev.root in ev.parent:
        out.append("bad_root")
    if set(ev.parent) != set(range(g.n)) - {ev.root}:
        out.append("not_spanning")
        return
    for v, p in ev.parent.items():
        if not g.has_edge(v, p):
            out.append("tree_edge_absent")
        if ev.depth.get(v) != ev.depth.get(p, -2) + 1:
            out.append("bad_depths")


def _check_sides(g: Graph, cut, side_a, side_b, out: list[str]):
    if not side_a or not side_b:
        out.append("empty_side")
        return
    pieces = set(cut) | set(side_a) | set(side_b)
    if len(set(cut)) + len(set(side_a)) + len(set(side_b)) != len(pieces) or pieces != set(
        range(g.n)
    ):
        out.append("not_a_partition")
        return
    sa, sb = set(side_a), set(side_b)
    for u, v in g.edges:
        if (u in sa and v in sb) or (u in sb and v in sa):
            out.append("edge_across_separation")
            return


def _check_bfs(g: Graph, ev: BfsWitness, out: list[str]):
    depth = ev.depth
    if set(depth) != set(range(g.n)):
        out.append("not_spanning")
        return
    if depth.get(ev.root) != 0:
        out.append("bad_root")
        return
    if sum(1 for v in depth if depth[v] == 0) != 1:
        out.append("bad_root")
    for u, v in g.edges:
        if abs(depth[u] - depth[v]) > 1:
            out.append("level_skip_edge")
            return
    for v in range(g.n):
        if depth[v] > 0 and not any(
            depth[w] == depth[v] - 1 for w in g.neighbors(v)
        ):
            out.append("orphan_level")
            return
    if not ev.path or ev.path[0] != ev.root:
        out.append("bad_path")
        return
    for i in range(len(ev.path) - 1):
        if not g.has_edge(ev.path[i], ev.path[i + 1]):
            out.append("bad_path")
            return
        if depth[ev.path[i + 1]] != depth[ev.path[i]] + 1:
            out.append("bad_path")
            return


def verify_evidence(c: Certificate) -> list[str]:
    g, a, ev = c.graph, c.assertion, c.evidence
    out: list[str] = []
    kind = a.kind
    if isinstance(ev, SpanTree):
        if kind != Kind.CONNECTED:
            return ["evidence_kind_mismatch"]
        _check_span_tree(g, ev, out)
    elif isinstance(ev, Partition):
        if kind != Kind.NOT_CONNECTED:
            return ["evidence_kind_mismatch"]
        _check_sides(g, (), ev.side_a, ev.side_b, out)
    elif isinstance(ev, VertexCut):
        if kind != Kind.NOT_K_CONNECTED:
            return ["evidence_kind_mismatch"]
        if len(ev.cut) > a.k - 1:
            out.append("cut_too_large")
        _check_sides(g, ev.cut, ev.side_a, ev.side_b, out)
    elif isinstance(ev, Cycle):
        if kind not in (Kind.HAMILTONIAN_CYCLE, Kind.LENGTH_K_CYCLE, Kind.NOT_BIPARTITE):
            return ["evidence_kind_mismatch"]
        vs = ev.vertices
        if len(set(vs)) != len(vs) or len(vs) < 3:
            out.append("bad_cycle")
        elif any(not g.has_edge(u, v) for u, v in ev.edges()):
            out.append("cycle_edge_absent")
        elif kind == Kind.HAMILTONIAN_CYCLE and len(vs) != g.n:
            out.append("cycle_not_spanning")
        elif kind == Kind.LENGTH_K_CYCLE and len(vs) != a.k:
            out.append("cycle_wrong_length")
        elif kind == Kind.NOT_BIPARTITE and len(vs) % 2 == 0:
            out.append("cycle_not_odd")
    elif isinstance(ev, Coloring):
        if kind != Kind.K_COLORABLE:
            return ["evidence_kind_mismatch"]
        if len(ev.colors) != g.n or ev.k != a.k:
            out.append("bad_coloring")
        elif any(not (0 <= col < a.k) for col in ev.colors):
            out.append("too_many_colors")
        elif any(ev.colors[u] == ev.colors[v] for u, v in g.edges):
            out.append("improper_coloring")
    elif isinstance(ev, MissingEdge):
        if kind != Kind.NOT_COMPLETE:
            return ["evidence_kind_mismatch"]
        if not (0 <= ev.u < ev.v < g.n) or g.has_edge(ev.u, ev.v):
            out.append("edge_not_missing")
    elif isinstance(ev, CompleteWitness):
        if kind != Kind.COMPLETE:
            return ["evidence_kind_mismatch"]
        if not g.is_complete():
            out.append("graph_not_complete")
    elif isinstance(ev, WitnessSet):
        expect = {
            "clique": Kind.CLIQUE,
            "independent": Kind.INDEPENDENT_SET,
            "dominating": Kind.DOMINATING_SET,
        }.get(ev.kind)
        if expect != kind:
            return ["evidence_kind_mismatch"]
        vs = ev.vertices
        if len(set(vs)) != len(vs) or len(vs) != a.k or any(
            not (0 <= v < g.n) for v in vs
        ):
            out.append("bad_witness_set")
        elif ev.kind == "clique":
            if any(
                not g.has_edge(u, v)
                for i, u in enumerate(vs)
                for v in vs[i + 1 :]
            ):
                out.append("not_a_clique")
        elif ev.kind == "independent":
            if any(
                g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]
            ):
                out.append("not_independent")
        else:
            dom = set(vs)
            for v in vs:
                dom.update(g.neighbors(v))
            if len(dom) != g.n:
                out.append("not_dominating")
    elif isinstance(ev, BfsWitness):
        if kind not in (Kind.DISTANCE_EQUALS, Kind.DIAMETER_GREATER):
            return ["evidence_kind_mismatch"]
        _check_bfs(g, ev, out)
        if not out:
            if kind == Kind.DISTANCE_EQUALS:
                if ev.root != a.u or ev.path[-1] != a.v or len(ev.path) - 1 != a.k:
                    out.append("path_mismatch")
            else:
                if max(ev.depth.values()) <= a.k:
                    out.append("depth_not_greater")
                elif ev.depth[ev.path[-1]] != max(ev.depth.values()):
                    out.append("path_not_deepest")
    elif isinstance(ev, SparseSubgraph):
        if kind != Kind.K_CONNECTED_SPARSE or ev.k != a.k:
            return ["evidence_kind_mismatch"]
        if not ev.edges <= g.edges:
            out.append("subgraph_not_contained")
        elif len(ev.edges) > a.k * (g.n - 1):
            out.append("subgraph_too_dense")
        else:
            sub = Graph(g.n, frozenset(ev.edges))
            if not vertex_connectivity_at_least(sub, a.k):
                out.append("subgraph_not_k_connected")
    elif isinstance(ev, BookEmbedding):
        expect = Kind.STACK_LEQ if ev.discipline == "stack" else Kind.QUEUE_LEQ
        if kind != expect or ev.k > a.k:
            return ["evidence_kind_mismatch"]
        if sorted(ev.spine) != list(range(g.n)):
            out.append("bad_spine")
        elif set(ev.pages) != set(g.edges):
            out.append("pages_incomplete")
        else:
            pos = {v: i for i, v in enumerate(ev.spine)}
            conflicts = (
                stack_page_conflicts
                if ev.discipline == "stack"
                else queue_page_conflicts
            )
            edges = sorted(ev.pages)
            bad = "page_conflict"
            for i, j in conflicts(pos, edges):
                if ev.pages[edges[i]] == ev.pages[edges[j]]:
                    out.append(bad)
                    break
    else:
        out.append("unknown_evidence")
    return out


def verify(c: Certificate) -> list[str]:
    return verify_faithfulness(c) + verify_evidence(c)


# ---------------------------------------------------------------------------
# mental model extraction (layout only; the matrix/book styles are read as
# the rendered grid/panels they display)

# concentric-circle radius tolerance: positions carry six decimals, so two
# points on the same ring agree to a few parts in a million
_RAD_TOL = 5e-6
_Y_TOL = 1e-6


def _strictly_inside_hull(hull_pts, p) -> bool:
    n = len(hull_pts)
    if n < 3:
        return False
    # the polygon may be listed clockwise or counter-clockwise; the point is
    # inside when it sits strictly on the same side of every edge
    side = 0
    for i in range(n):
        ax, ay = hull_pts[i]
        bx, by = hull_pts[(i + 1) % n]
        cross = (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax)
        if abs(cross) <= 1e-9:
            return False
        s = 1 if cross > 0 else -1
        if side == 0:
            side = s
        elif s != side:
            return False
    return True


def _extract_cycle_tokens(lay: NodeLinkLayout, tokens: list):
    he = lay.highlight_edges
    if not he:
        return
    deg: dict[int, list[int]] = {}
    for u, v in he:
        deg.setdefault(u, []).append(v)
        deg.setdefault(v, []).append(u)
    if any(len(ws) != 2 for ws in deg.values()) or len(he) != len(deg):
        return
    start = min(deg)
    seq = [start, min(deg[start])]
    while True:
        prev, cur = seq[-2], seq[-1]
        nxt = deg[cur][0] if deg[cur][0] != prev else deg[cur][1]
        if nxt == start:
            break
        if nxt in seq or len(seq) > len(deg):
            return
        seq.append(nxt)
    if len(seq) != len(deg):
        return
    pts = [lay.positions[v] for v in seq]
    hull = convex_hull(pts)
    if len(hull) != len(seq):
        return
    # hull order must be the cycle order up to rotation/reflection
    ring = [seq[i] for i in hull]
    double = ring + ring
    fwd = any(double[i : i + len(seq)] == seq for i in range(len(seq)))
    rev = any(
        double[i : i + len(seq)] == seq[::-1] for i in range(len(seq))
    )
    if not (fwd or rev):
        return
    others = [v for v in range(len(lay.positions)) if v not in deg]
    if any(
        not _strictly_inside_hull(pts, lay.positions[v]) for v in others
    ):
        return
    tokens.append(HighlightedConvexCycle(len(seq), not others))


def _extract_tree_tokens(lay: NodeLinkLayout, tokens: list):
    he = lay.highlight_edges
    if not he:
        # a lone highlighted point still reads as a (trivial) rooted tree
        if len(lay.positions) == 1 and lay.highlight_vertices == frozenset({0}):
            tokens.append(HighlightedTree(1, (1,), True))
        return
    verts = sorted({v for e in he for v in e})
    if len(he) != len(verts) - 1:
        return
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in he:
        adj[u].append(v)
        adj[v].append(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(verts):
        return
    pos = lay.positions
    for root in verts:
        rx, ry = pos[root]
        radius = {
            v: math.hypot(pos[v][0] - rx, pos[v][1] - ry) for v in verts
        }
        # concentric circles: cluster radii at tolerance 1e-6 and read the
        # levels off as the ranks of the distinct circles
        distinct: list[float] = []
        for r in sorted(radius.values()):
            if not distinct or r - distinct[-1] > _RAD_TOL:
                distinct.append(r)
        level = {}
        ok = True
        for v in verts:
            ranks = [
                i for i, r in enumerate(distinct)
                if abs(radius[v] - r) <= _RAD_TOL
            ]
            if len(ranks) != 1:
                ok = False
                break
            level[v] = ranks[0]
        if not ok or level[root] != 0:
            continue
        if sum(1 for v in verts if level[v] == 0) != 1:
            continue
        if any(abs(level[u] - level[v]) != 1 for u, v in he):
            continue
        depth = max(level.values())
        sizes = tuple(
            sum(1 for v in verts if level[v] == d) for d in range(depth + 1)
        )
        spanning = len(verts) == len(pos)
        tokens.append(HighlightedTree(depth + 1, sizes, spanning))
        return


def _extract_group_tokens(lay: NodeLinkLayout, tokens: list):
    pos = lay.positions
    n = len(pos)
    if n == 0:
        return
    hv = lay.highlight_vertices
    non_hv_ys = [pos[v][1] for v in range(n) if v not in hv]
    d = delta_sep(pos)
    strip: set[int] = set()
    if non_hv_ys and hv:
        floor_y = min(non_hv_ys)
        strip = {v for v in hv if pos[v][1] < floor_y - d}
    rest = [v for v in range(n) if v not in strip]
    parent = {v: v for v in rest}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for u, v in lay.drawn_edges:
        if u in parent and v in parent:
            union(u, v)
    # merge visually adjacent clusters: groups count as separated only when
    # their point sets keep a clear gap
    changed = True
    while changed:
        changed = False
        roots = sorted({find(v) for v in rest})
        clusters = {r: [v for v in rest if find(v) == r] for r in roots}
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                a, b = clusters[roots[i]], clusters[roots[j]]
                gap = min(
                    math.hypot(pos[x][0] - pos[y][0], pos[x][1] - pos[y][1])
                    for x in a
                    for y in b
                )
                if gap < max(5 * d, 1e-9):
                    union(roots[i], roots[j])
                    changed = True
        if changed:
            continue
    roots = sorted({find(v) for v in rest})
    for r in roots:
        tokens.append(SeparatedGroup(sum(1 for v in rest if find(v) == r)))
    if strip:
        tokens.append(StripVertices(len(strip)))


def _extract_level_tokens(lay: NodeLinkLayout, tokens: list):
    pos = lay.positions
    if not pos:
        return
    y_max = max(p[1] for p in pos)
    # the +0.15 offset absorbs within-level staggers up to 0.3
    level = [int(round(y_max - p[1] + 0.15)) for p in pos]
    depth = max(level)
    sizes = tuple(sum(1 for lv in level if lv == d) for d in range(depth + 1))
    skip_free = all(abs(level[u] - level[v]) <= 1 for u, v in lay.drawn_edges)
    path_bands = tuple(sorted({level[v] for v in lay.highlight_vertices}))
    tokens.append(LevelBands(sizes, path_bands, skip_free))


def _extract_subgraph_token(lay: NodeLinkLayout, tokens: list):
    he = lay.highlight_edges
    if not he:
        return
    verts = {v for e in he for v in e}
    tokens.append(
        HighlightedSubgraph(len(he), len(verts), len(verts) == len(lay.positions))
    )


def _extract_topmost(lay: NodeLinkLayout, tokens: list):
    pos = lay.positions
    if len(pos) < 3:
        return
    ys = sorted((p[1] for p in pos), reverse=True)
    top_unique = ys[0] - ys[1] > _Y_TOL
    lows = sorted(p[1] for p in pos)
    bottom_tied = lows[1] - lows[0] <= _Y_TOL
    if top_unique and bottom_tied:
        tokens.append(TopmostSingleton())


def _extract_matrix(g: Graph, lay: MatrixLayout, tokens: list):
    n = g.n
    ev_marks = {(i, j) for i, j, cls in lay.marked_cells if cls == "evidence"}
    bb_marks = {(i, j) for i, j, cls in lay.marked_cells if cls == "block-boundary"}

    def cell(i, j):
        return g.has_edge(lay.order[i], lay.order[j])

    run = 0
    while run < n - 1 and (run, run + 1) in ev_marks:
        run += 1
    if run >= 1:
        tokens.append(DiagonalRun(run, run == n - 1))
    closing = None
    if run >= 2 and (0, run) in ev_marks and (run, 0) in ev_marks:
        closing = run
        tokens.append(CornerCellPair(run))
    parity = n >= 2 and all(
        lay.row_widths[i] == (2.0 if i % 2 == 0 else 1.0) for i in range(n)
    )
    if closing is not None and parity:
        square = lay.row_widths[0] == lay.row_widths[closing]
        tokens.append(MarkedCell(filled=True, square=square))
    for i, j in sorted(bb_marks):
        if i < j and not cell(i, j):
            tokens.append(MarkedCell(filled=False, square=None))
    covered = 0
    blocks_ok = True
    for lo, hi in lay.block_bounds:
        cells = [
            cell(i, j) for i in range(lo, hi) for j in range(lo, hi) if i != j
        ]
        if not cells:
            # a 1x1 block has no off-diagonal cells: trivially full and empty
            tokens.append(FilledBlock(lo, hi - lo, hi - lo == n))
            tokens.append(EmptyBlock(lo, hi - lo, hi - lo == n))
        elif all(cells):
            tokens.append(FilledBlock(lo, hi - lo, hi - lo == n))
        elif not any(cells):
            tokens.append(EmptyBlock(lo, hi - lo, hi - lo == n))
        else:
            blocks_ok = False
        covered += hi - lo
    if lay.block_bounds:
        starts = sorted(lay.block_bounds)
        contiguous = starts[0][0] == 0 and all(
            starts[i][1] == starts[i + 1][0] for i in range(len(starts) - 1)
        )
        if blocks_ok and contiguous and starts[-1][1] == n and covered == n:
            tokens.append(BlockPartition(len(lay.block_bounds)))
        lo, hi = starts[0]
        if lo == 0 and hi <= n:
            cov = hi + sum(
                1
                for j in range(hi, n)
                if any(cell(i, j) for i in range(hi))
            )
            tokens.append(ColumnCoverage(hi, cov, n))


def _extract_book(g: Graph, lay: BookLayout, tokens: list):
    pos = {v: i for i, v in enumerate(lay.spine)}
    edges = sorted(lay.pages)
    for p in range(lay.k):
        arcs = [e for e in edges if lay.pages[e] == p]
        inter = stack_page_conflicts(pos, arcs)
        nest = queue_page_conflicts(pos, arcs)
        tokens.append(PagePanel(p, len(arcs), not inter, not nest))
    tokens.append(BookShape(len(lay.spine), len(edges)))


def extract_mental_model(c: Certificate) -> MentalModel:
    lay = c.layout
    tokens: list = []
    if isinstance(lay, NodeLinkLayout):
        _extract_cycle_tokens(lay, tokens)
        _extract_tree_tokens(lay, tokens)
        _extract_subgraph_token(lay, tokens)
        _extract_group_tokens(lay, tokens)
        _extract_level_tokens(lay, tokens)
        _extract_topmost(lay, tokens)
    elif isinstance(lay, MatrixLayout):
        _extract_matrix(c.graph, lay, tokens)
    elif isinstance(lay, BookLayout):
        _extract_book(c.graph, lay, tokens)
    else:
        raise UnrecognizedGistError("layout style matches no extraction rule")
    return MentalModel(tuple(tokens))


# ---------------------------------------------------------------------------
# the judge


def _first(m: MentalModel, cls):
    for t in m.components:
        if isinstance(t, cls):
            return t
    return None


def _all(m: MentalModel, cls):
    return [t for t in m.components if isinstance(t, cls)]


def judge(c: Certificate, m: MentalModel) -> Verdict:
    """Deterministic validation from gist tokens alone.

    Every token inspection or count unit adds one observation; the verdict
    never errs toward conviction.
    """
    a = c.assertion
    cls = PERCEPTUAL_COMPLEXITY[a.kind]

    def no(obs, *reasons):
        return Verdict(False, obs, cls, tuple(reasons))

    def yes(obs):
        return Verdict(True, obs, cls)

    kind = a.kind
    if kind == Kind.CONNECTED:
        t = _first(m, HighlightedTree)
        if t is None:
            return no(1, "gist_absent:tree")
        obs = 1 + sum(t.sizes)
        return yes(obs) if t.spanning else no(obs, "tree_not_spanning")
    if kind == Kind.NOT_CONNECTED:
        groups = _all(m, SeparatedGroup)
        strip = _first(m, StripVertices)
        obs = min(len(groups), 2) + 1
        if strip is not None:
            return no(obs, "strip_vertices_present")
        if len(groups) >= 2:
            return yes(obs)
        return no(obs, "gist_absent:separated_groups")
    if kind == Kind.NOT_K_CONNECTED:
        groups = _all(m, SeparatedGroup)
        strip = _first(m, StripVertices)
        cut = strip.count if strip else 0
        obs = min(len(groups), 2) + max(cut, 1)
        if len(groups) < 2:
            return no(obs, "gist_absent:separated_groups")
        if cut > a.k - 1:
            return no(obs, "strip_too_large")
        return yes(obs)
    if kind == Kind.K_CONNECTED_SPARSE:
        t = _first(m, HighlightedSubgraph)
        if t is None:
            return no(1, "gist_absent:subgraph")
        obs = 1 + t.edge_count
        if not t.spanning:
            return no(obs, "subgraph_not_spanning")
        if t.edge_count > a.k * (t.vertex_count - 1):
            return no(obs, "subgraph_not_sparse")
        return yes(obs)
    if kind == Kind.HAMILTONIAN_CYCLE:
        if isinstance(c.layout, MatrixLayout):
            run = _first(m, DiagonalRun)
            corner = _first(m, CornerCellPair)
            if run is None or not run.full:
                return no(1, "gist_absent:diagonal_run")
            if corner is None or corner.closing_index != run.length:
                return no(2, "gist_absent:corner_cells")
            return yes(2)
        t = _first(m, HighlightedConvexCycle)
        if t is None:
            return no(1, "gist_absent:convex_cycle")
        return yes(1) if t.spanning else no(1, "cycle_not_spanning")
    if kind == Kind.LENGTH_K_CYCLE:
        t = _first(m, HighlightedConvexCycle)
        if t is None:
            return no(1, "gist_absent:convex_cycle")
        obs = 1 + min(t.length, a.k)
        return yes(obs) if t.length == a.k else no(obs, "cycle_wrong_length")
    if kind == Kind.NOT_BIPARTITE:
        if isinstance(c.layout, MatrixLayout):
            cellt = next(
                (t for t in _all(m, MarkedCell) if t.filled and t.square), None
            )
            if cellt is None:
                return no(1, "gist_absent:square_closing_cell")
            return yes(1)
        t = _first(m, HighlightedConvexCycle)
        if t is None:
            return no(1, "gist_absent:convex_cycle")
        if _first(m, TopmostSingleton) is None:
            return no(2, "gist_absent:topmost_singleton")
        return yes(2)
    if kind == Kind.K_COLORABLE:
        part = _first(m, BlockPartition)
        empties = _all(m, EmptyBlock)
        if part is None:
            return no(1, "gist_absent:block_partition")
        obs = 1 + part.count
        if len(empties) != part.count or part.count > a.k:
            return no(obs, "blocks_not_empty_or_too_many")
        return yes(obs)
    if kind == Kind.COMPLETE:
        t = next((t for t in _all(m, FilledBlock) if t.spanning), None)
        if t is None:
            return no(1, "gist_absent:filled_matrix")
        return yes(1)
    if kind == Kind.NOT_COMPLETE:
        t = next((t for t in _all(m, MarkedCell) if not t.filled), None)
        if t is None:
            return no(1, "gist_absent:missing_cell")
        return yes(1)
    if kind == Kind.CLIQUE:
        t = next(
            (t for t in _all(m, FilledBlock) if t.start == 0 and t.size == a.k),
            None,
        )
        return yes(a.k) if t else no(min(a.k, 1), "gist_absent:filled_block")
    if kind == Kind.INDEPENDENT_SET:
        t = next(
            (t for t in _all(m, EmptyBlock) if t.start == 0 and t.size == a.k),
            None,
        )
        return yes(a.k) if t else no(min(a.k, 1), "gist_absent:empty_block")
    if kind == Kind.DOMINATING_SET:
        t = _first(m, ColumnCoverage)
        if t is None or t.k != a.k:
            return no(1, "gist_absent:column_coverage")
        obs = t.total
        return yes(obs) if t.covered == t.total else no(obs, "column_uncovered")
    if kind in (Kind.DISTANCE_EQUALS, Kind.DIAMETER_GREATER):
        t = _first(m, LevelBands)
        if t is None:
            return no(1, "gist_absent:level_bands")
        if kind == Kind.DISTANCE_EQUALS:
            obs = a.k + 2
            if not t.skip_free:
                return no(obs, "level_skip_edge")
            if t.path_bands != tuple(range(a.k + 1)):
                return no(obs, "path_band_mismatch")
            return yes(obs)
        obs = a.k + 3
        if not t.skip_free:
            return no(obs, "level_skip_edge")
        if not t.path_bands or t.path_bands != tuple(range(len(t.path_bands))):
            return no(obs, "path_band_mismatch")
        if len(t.path_bands) - 1 <= a.k:
            return no(obs, "path_too_shallow")
        return yes(obs)
    if kind in (Kind.STACK_LEQ, Kind.QUEUE_LEQ):
        panels = _all(m, PagePanel)
        shape = _first(m, BookShape)
        if shape is None or not panels:
            return no(1, "gist_absent:book_panels")
        obs = shape.spine + shape.arcs + len(panels)
        if len(panels) > a.k:
            return no(obs, "too_many_pages")
        if sum(p.arcs for p in panels) != shape.arcs:
            return no(obs, "arc_coverage_mismatch")
        flag = (
            all(p.interleave_free for p in panels)
            if kind == Kind.STACK_LEQ
            else all(p.nesting_free for p in panels)
        )
        return yes(obs) if flag else no(obs, "page_conflict_visible")
    return Verdict(False, 0, cls, ("unknown_assertion",))


# ---------------------------------------------------------------------------
# adversarial mutations

NODELINK_MUTATIONS = ("delete_evidence_edge", "occlude_vertex")
MATRIX_MUTATIONS = (
    "swap_cell_mark",
    "drop_corner_mark",
    "break_parity",
    "delete_marked_edge",
    "add_block_edge",
)
BOOK_MUTATIONS = ("drop_page", "book_conflict")


def _applicable(c: Certificate) -> list[str]:
    lay = c.layout
    g = c.graph
    out = []
    if isinstance(lay, NodeLinkLayout):
        if lay.highlight_edges:
            out.append("delete_evidence_edge")
        if any(
            w not in (u, v)
            for u, v in lay.drawn_edges
            for w in range(g.n)
        ):
            out.append("occlude_vertex")
    elif isinstance(lay, MatrixLayout):
        ev_marks = sorted(
            (i, j) for i, j, cls in lay.marked_cells if cls == "evidence"
        )
        if ev_marks and not g.is_complete():
            out.append("swap_cell_mark")
        if ev_marks:
            out.append("delete_marked_edge")
        # corner/parity mutations only wrong-ify certificates whose judge
        # script actually consumes those gists
        corner_kinds = (Kind.HAMILTONIAN_CYCLE, Kind.NOT_BIPARTITE)
        if c.assertion.kind in corner_kinds:
            run = 0
            while (run, run + 1) in set(ev_marks):
                run += 1
            if run >= 2 and (0, run) in set(ev_marks):
                out.append("drop_corner_mark")
            if any(w == 2.0 for w in lay.row_widths) and any(
                w == 1.0 for w in lay.row_widths
            ):
                out.append("break_parity")
        if c.assertion.kind in (Kind.K_COLORABLE, Kind.INDEPENDENT_SET):
            for lo, hi in lay.block_bounds:
                free = [
                    (i, j)
                    for i in range(lo, hi)
                    for j in range(i + 1, hi)
                    if not g.has_edge(lay.order[i], lay.order[j])
                ]
                if free:
                    out.append("add_block_edge")
                    break
    elif isinstance(lay, BookLayout):
        if lay.pages:
            out.append("drop_page")
        if _conflict_swap(g, lay) is not None:
            out.append("book_conflict")
    return out


def _conflict_swap(g: Graph, lay: BookLayout):
    """A spine transposition that creates a same-page conflict, if any."""
    edges = sorted(lay.pages)
    conflicts = (
        stack_page_conflicts if lay.discipline == "stack" else queue_page_conflicts
    )
    for x in range(g.n):
        for y in range(x + 1, g.n):
            spine = list(lay.spine)
            spine[x], spine[y] = spine[y], spine[x]
            pos = {v: i for i, v in enumerate(spine)}
            for i, j in conflicts(pos, edges):
                if lay.pages[edges[i]] == lay.pages[edges[j]]:
                    return tuple(spine)
    return None


def mutate_certificate(c: Certificate, mutation: str, rng: Random) -> Certificate:
    """Produce a deliberately wrong variant of the certificate."""
    g, lay = c.graph, c.layout
    if mutation not in _applicable(c):
        raise ValueError(f"mutation {mutation!r} inapplicable to this certificate")
    if mutation == "delete_evidence_edge":
        e = rng.choice(sorted(lay.highlight_edges))
        g2 = Graph(g.n, g.edges - {e})
        return Certificate(g2, c.assertion, c.evidence, lay)
    if mutation == "occlude_vertex":
        pairs = [
            (w, (u, v))
            for u, v in sorted(lay.drawn_edges)
            for w in range(g.n)
            if w not in (u, v)
        ]
        w, (u, v) = rng.choice(pairs)
        pos = list(lay.positions)
        pos[w] = (
            round((pos[u][0] + pos[v][0]) / 2, 6),
            round((pos[u][1] + pos[v][1]) / 2, 6),
        )
        lay2 = NodeLinkLayout(
            tuple(pos), lay.drawn_edges, lay.highlight_vertices, lay.highlight_edges
        )
        return Certificate(g, c.assertion, c.evidence, lay2)
    if mutation == "swap_cell_mark":
        ev_marks = sorted(
            (i, j) for i, j, cls in lay.marked_cells if cls == "evidence"
        )
        i, j = rng.choice(ev_marks)
        non_edges = [
            (x, y)
            for x in range(g.n)
            for y in range(g.n)
            if x != y and not g.has_edge(lay.order[x], lay.order[y])
        ]
        x, y = rng.choice(non_edges)
        marks = set(lay.marked_cells) - {(i, j, "evidence")} | {(x, y, "evidence")}
        lay2 = MatrixLayout(lay.order, lay.row_widths, frozenset(marks), lay.block_bounds)
        return Certificate(g, c.assertion, c.evidence, lay2)
    if mutation == "delete_marked_edge":
        ev_marks = sorted(
            (i, j) for i, j, cls in lay.marked_cells if cls == "evidence"
        )
        i, j = rng.choice(ev_marks)
        e = normalize_edge(lay.order[i], lay.order[j])
        g2 = Graph(g.n, g.edges - {e})
        return Certificate(g2, c.assertion, c.evidence, lay)
    if mutation == "drop_corner_mark":
        corners = {
            (i, j, cls)
            for i, j, cls in lay.marked_cells
            if cls == "evidence" and 0 in (i, j) and abs(i - j) >= 2
        }
        lay2 = MatrixLayout(
            lay.order,
            lay.row_widths,
            lay.marked_cells - corners,
            lay.block_bounds,
        )
        return Certificate(g, c.assertion, c.evidence, lay2)
    if mutation == "break_parity":
        widths = tuple(lay.row_widths[1:]) + (lay.row_widths[0],)
        lay2 = MatrixLayout(lay.order, widths, lay.marked_cells, lay.block_bounds)
        return Certificate(g, c.assertion, c.evidence, lay2)
    if mutation == "add_block_edge":
        options = []
        for lo, hi in lay.block_bounds:
            options.extend(
                (i, j)
                for i in range(lo, hi)
                for j in range(i + 1, hi)
                if not g.has_edge(lay.order[i], lay.order[j])
            )
        i, j = rng.choice(sorted(options))
        e = normalize_edge(lay.order[i], lay.order[j])
        g2 = Graph(g.n, g.edges | {e})
        return Certificate(g2, c.assertion, c.evidence, lay)
    if mutation == "drop_page":
        e = rng.choice(sorted(lay.pages))
        pages = dict(lay.pages)
        del pages[e]
        lay2 = BookLayout(lay.spine, pages, lay.k, lay.discipline)
        return Certificate(g, c.assertion, c.evidence, lay2)
    if mutation == "book_conflict":
        spine = _conflict_swap(g, lay)
        lay2 = BookLayout(spine, dict(lay.pages), lay.k, lay.discipline)
        ev2 = BookEmbedding(spine, dict(lay.pages), lay.k, lay.discipline)
        return Certificate(g, c.assertion, ev2, lay2)
    raise ValueError(f"unknown mutation {mutation!r}")
