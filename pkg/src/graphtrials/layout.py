"""Certificate layout synthesis: geometry that makes evidence pop out.

All constructors are deterministic.  Where a naive placement would put a
vertex too close to a non-incident edge (the occlusion check rejects that),
constructors walk a fixed ladder of small perturbations (sub-ring bumps,
rotations, level staggers) and keep the first clean placement, so output is
still a pure function of the input.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import LayoutError
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
)
from .graph import Graph, normalize_edge

SEP_FRACTION = 0.02  # delta_sep = this fraction of the bbox diagonal


# ---------------------------------------------------------------------------
# geometry helpers (shared with the verifier)


def quantize(x: float) -> float:
    v = round(x, 6)
    return 0.0 if v == 0 else v  # avoid -0.0 in serialized output


def bbox_diagonal(positions) -> float:
    xs = [p[0] for p in positions]
    ys = [p[1] for p in positions]
    if not xs:
        return 0.0
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def delta_sep(positions) -> float:
    return SEP_FRACTION * bbox_diagonal(positions)


def point_segment_distance(p, a, b) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    if L2 == 0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / L2
    t = max(0.0, min(1.0, t))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def _segments_cross(s1, s2) -> bool:
    """Proper interior crossing; shared endpoints do not count."""
    (ax, ay), (bx, by) = s1
    (cx, cy), (dx, dy) = s2

    def orient(px, py, qx, qy, rx, ry):
        return (qx - px) * (ry - py) - (qy - py) * (rx - px)

    eps = 1e-12
    o1 = orient(ax, ay, bx, by, cx, cy)
    o2 = orient(ax, ay, bx, by, dx, dy)
    o3 = orient(cx, cy, dx, dy, ax, ay)
    o4 = orient(cx, cy, dx, dy, bx, by)
    return o1 * o2 < -eps and o3 * o4 < -eps


def min_pairwise_distance(positions) -> float:
    best = math.inf
    pts = list(positions)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = math.hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1])
            if d < best:
                best = d
    return best


def separation_ok(positions) -> bool:
    if len(positions) < 2:
        return True
    return min_pairwise_distance(positions) >= delta_sep(positions)


def occlusion_ok(positions, edges) -> bool:
    """No vertex within delta_sep/2 of a non-incident edge segment."""
    limit = delta_sep(positions) / 2
    for u, v in edges:
        a, b = positions[u], positions[v]
        for w, p in enumerate(positions):
            if w in (u, v):
                continue
            if point_segment_distance(p, a, b) < limit:
                return False
    return True


def placement_ok(positions, edges) -> bool:
    return separation_ok(positions) and occlusion_ok(positions, edges)


def convex_hull(points) -> list[int]:
    """Indices of hull vertices in counter-clockwise order (monotone chain)."""
    idx = sorted(range(len(points)), key=lambda i: points[i])
    if len(idx) <= 2:
        return idx

    def cross(o, a, b):
        return (points[a][0] - points[o][0]) * (points[b][1] - points[o][1]) - (
            points[a][1] - points[o][1]
        ) * (points[b][0] - points[o][0])

    lower: list[int] = []
    for i in idx:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(idx):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


# ---------------------------------------------------------------------------
# layout types


@dataclass(frozen=True)
class NodeLinkLayout:
    style = "nodelink"
    positions: tuple[tuple[float, float], ...]
    drawn_edges: frozenset[tuple[int, int]]
    highlight_vertices: frozenset[int] = frozenset()
    highlight_edges: frozenset[tuple[int, int]] = frozenset()

    def to_json(self):
        return {
            "style": self.style,
            "positions": [[x, y] for x, y in self.positions],
            "drawn_edges": sorted(self.drawn_edges),
            "highlight_vertices": sorted(self.highlight_vertices),
            "highlight_edges": sorted(self.highlight_edges),
        }


@dataclass(frozen=True)
class MatrixLayout:
    style = "matrix"
    order: tuple[int, ...]
    row_widths: tuple[float, ...]
    # marked cells as (row index, col index, mark class)
    marked_cells: frozenset[tuple[int, int, str]] = frozenset()
    block_bounds: tuple[tuple[int, int], ...] = ()

    def to_json(self):
        return {
            "style": self.style,
            "order": list(self.order),
            "row_widths": list(self.row_widths),
            "marked_cells": [[i, j, c] for i, j, c in sorted(self.marked_cells)],
            "block_bounds": [[a, b] for a, b in self.block_bounds],
        }


@dataclass(frozen=True)
class BookLayout:
    style = "book"
    spine: tuple[int, ...]
    pages: dict[tuple[int, int], int] = field(hash=False)
    k: int = 1
    discipline: str = "stack"

    def to_json(self):
        return {
            "style": self.style,
            "spine": list(self.spine),
            "pages": [[u, v, p] for (u, v), p in sorted(self.pages.items())],
            "k": self.k,
            "discipline": self.discipline,
        }


def layout_from_json(d: dict):
    style = d.get("style")
    if style == "nodelink":
        return NodeLinkLayout(
            tuple((x, y) for x, y in d["positions"]),
            frozenset(tuple(e) for e in d["drawn_edges"]),
            frozenset(d["highlight_vertices"]),
            frozenset(tuple(e) for e in d["highlight_edges"]),
        )
    if style == "matrix":
        return MatrixLayout(
            tuple(d["order"]),
            tuple(d["row_widths"]),
            frozenset((i, j, c) for i, j, c in d["marked_cells"]),
            tuple((a, b) for a, b in d["block_bounds"]),
        )
    if style == "book":
        return BookLayout(
            tuple(d["spine"]),
            {(u, v): p for u, v, p in d["pages"]},
            d["k"],
            d["discipline"],
        )
    raise LayoutError(f"unknown layout style {style!r}")


def _freeze(points: dict[int, tuple[float, float]], n: int):
    return tuple((quantize(points[v][0]), quantize(points[v][1])) for v in range(n))


# ---------------------------------------------------------------------------
# node-link constructors


def circular_layout(g: Graph, order=None) -> NodeLinkLayout:
    """Vertices on a unit circle, slot i at angle 90 degrees minus 360 i/n."""
    if order is None:
        order = tuple(range(g.n))
    if sorted(order) != list(range(g.n)):
        raise LayoutError("order is not a permutation of the vertices")
    pts: dict[int, tuple[float, float]] = {}
    for i, v in enumerate(order):
        ang = math.pi / 2 - 2 * math.pi * i / max(g.n, 1)
        pts[v] = (math.cos(ang), math.sin(ang))
    if g.n == 1:
        pts[order[0]] = (0.0, 1.0)
    return NodeLinkLayout(_freeze(pts, g.n), g.edges)


def highlighted_subgraph_layout(g: Graph, ev: SparseSubgraph) -> NodeLinkLayout:
    """Circular layout with the sparse spanning subgraph highlighted."""
    base = circular_layout(g)
    return NodeLinkLayout(
        base.positions,
        g.edges,
        frozenset(range(g.n)),
        frozenset(ev.edges),
    )


def _circle_points(members, center, radius, rotation):
    pts = {}
    c = len(members)
    for i, v in enumerate(members):
        ang = math.pi / 2 - 2 * math.pi * i / max(c, 1) + rotation
        pts[v] = (center[0] + radius * math.cos(ang), center[1] + radius * math.sin(ang))
    if c == 1:
        pts[members[0]] = center
    return pts


def separation_layout(g: Graph, ev) -> NodeLinkLayout:
    """Two separated disks; cut vertices (if any) on a strip below both."""
    if isinstance(ev, VertexCut):
        cut, side_a, side_b = list(ev.cut), list(ev.side_a), list(ev.side_b)
    elif isinstance(ev, Partition):
        cut, side_a, side_b = [], list(ev.side_a), list(ev.side_b)
    else:
        raise LayoutError("separation layout needs a vertex cut or partition")
    if not side_a or not side_b:
        raise LayoutError("separation sides must be nonempty")
    if len(side_b) < len(side_a):
        side_a, side_b = side_b, side_a
    r_a = max(1.0, len(side_a) / 25)
    r_b = max(1.0, len(side_b) / 25)
    gap = max(r_a, r_b, 1.0)
    center_a = (-(r_a + gap / 2), 0.0)
    center_b = (r_b + gap / 2, 0.0)
    strip_y = -(max(r_a, r_b) + 1.2)
    highlight_v = frozenset(cut)
    highlight_e = frozenset(e for e in g.edges if e[0] in highlight_v or e[1] in highlight_v)
    fallback = None
    for attempt in range(200):
        # an edge between vertices two slots apart grazes the vertex in
        # between, so reshuffle each disk's circular order (and rotate)
        # until no chord passes near a third vertex
        rng = random.Random(1000003 * attempt + 17)
        order_a, order_b = list(side_a), list(side_b)
        if attempt:
            rng.shuffle(order_a)
            rng.shuffle(order_b)
        rot_a = attempt * 0.37
        rot_b = attempt * 0.53
        pts = {}
        pts.update(_circle_points(order_a, center_a, r_a, rot_a))
        pts.update(_circle_points(order_b, center_b, r_b, rot_b))
        for i, v in enumerate(cut):
            # stagger the strip vertically so arcs between cut vertices do
            # not run straight through their neighbours in the row
            y_off = 0.45 * math.sin(1.7 * i + 0.61 * attempt)
            pts[v] = (i - (len(cut) - 1) / 2 + 0.13 * attempt, strip_y - y_off)
        positions = _freeze(pts, g.n)
        if placement_ok(positions, g.edges):
            return NodeLinkLayout(positions, g.edges, highlight_v, highlight_e)
        if fallback is None and separation_ok(positions):
            fallback = positions
    if fallback is not None:
        # dense sides leave no occlusion-free rotation; keep the
        # separation-clean drawing (strict verification may still flag it)
        return NodeLinkLayout(fallback, g.edges, highlight_v, highlight_e)
    raise LayoutError("could not find an occlusion-free separation placement")


def _subtree_leaves(children, v) -> int:
    if not children.get(v):
        return 1
    return sum(_subtree_leaves(children, w) for w in children[v])


def radial_tree_layout(g: Graph, ev: SpanTree) -> NodeLinkLayout:
    """Root at the origin, depth-d vertices on (near-)radius-d circles inside
    nested angular wedges sized by subtree leaf count."""
    if set(ev.depth) != set(range(g.n)):
        raise LayoutError("spanning tree evidence does not cover all vertices")
    children: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for v, p in ev.parent.items():
        children[p].append(v)
    for v in children:
        children[v].sort()
    leaves = {v: _subtree_leaves(children, v) for v in range(g.n)}
    by_level: dict[int, list[int]] = {}
    for v, d in ev.depth.items():
        by_level.setdefault(d, []).append(v)
    tree_edges = frozenset(normalize_edge(v, p) for v, p in ev.parent.items())

    def assign_angles(frac: float, seed: int) -> dict[int, float]:
        # each child wedge nests in its parent's, capped at pi so that
        # parent-child segments stay inside a convex sector; `frac` nudges
        # every vertex off its wedge bisector (still inside the wedge) to
        # break collinearities with non-tree edges
        angle: dict[int, float] = {ev.root: math.pi / 2}
        wedge: dict[int, tuple[float, float]] = {ev.root: (0.0, 2 * math.pi)}
        stack = [ev.root]
        while stack:
            v = stack.pop()
            lo, hi = wedge[v]
            span = hi - lo
            if v != ev.root and span > math.pi:
                # cap at a convex cone, clamped inside the original wedge
                lo = min(max(lo, angle[v] - math.pi / 2), hi - math.pi)
                span = math.pi
            total = sum(leaves[w] for w in children[v])
            cursor = lo
            for w in children[v]:
                share = span * leaves[w] / total if total else 0.0
                wedge[w] = (cursor, cursor + share)
                # per-vertex sign/magnitude so siblings with equal shares
                # don't all shift in lockstep and stay collinear
                jit = ((w * 2654435761 + seed * 999331) % 997) / 498.5 - 1.0
                angle[w] = cursor + share / 2 + frac * jit * share * 0.35
                cursor += share
                stack.append(w)
        return angle

    def _respace(ws: list[tuple[float, float]], gap: float):
        # greedy left-to-right placement into disjoint ordered arcs, keeping
        # consecutive angles at least `gap` apart; retried once with the
        # first angle shifted when the wrap-around gap comes up short
        def run(first: float):
            angs = [first]
            for lo, hi in ws[1:]:
                a = max(lo, angs[-1] + gap)
                if a > hi:
                    return None
                angs.append(a)
            return angs

        lo0, hi0 = ws[0]
        angs = run(lo0)
        if angs is None:
            return None
        if angs[0] + 2 * math.pi - angs[-1] >= gap:
            return angs
        deficit = gap - (angs[0] + 2 * math.pi - angs[-1])
        angs = run(min(hi0, lo0 + deficit))
        if angs is not None and angs[0] + 2 * math.pi - angs[-1] >= gap:
            return angs
        return None

    def _max_gap_angles(ws: list[tuple[float, float]]) -> list[float]:
        if len(ws) == 1:
            return [(ws[0][0] + ws[0][1]) / 2]
        best = _respace(ws, 0.0)
        lo_g, hi_g = 0.0, 2 * math.pi / len(ws)
        for _ in range(40):
            mid = (lo_g + hi_g) / 2
            got = _respace(ws, mid)
            if got is not None:
                best, lo_g = got, mid
            else:
                hi_g = mid
        return best

    def assign_angles_respaced(
        cap: float = math.pi, clip: float | None = None
    ) -> dict[int, float]:
        # same nested wedges as assign_angles, but each depth's angles are
        # re-spaced inside their wedges to maximise the smallest circular
        # gap on that circle, so crowded levels spread as far as the wedge
        # structure (and hence tree planarity) allows
        angle: dict[int, float] = {ev.root: math.pi / 2}
        wedge: dict[int, tuple[float, float]] = {ev.root: (0.0, 2 * math.pi)}
        for d in sorted(by_level):
            if d == 0:
                continue
            for p in by_level[d - 1]:
                lo, hi = wedge[p]
                span = hi - lo
                if p != ev.root and span > cap:
                    lo = min(max(lo, angle[p] - cap / 2), hi - cap)
                    span = cap
                total = sum(leaves[w] for w in children[p])
                cursor = lo
                for w in children[p]:
                    share = span * leaves[w] / total if total else 0.0
                    wedge[w] = (cursor, cursor + share)
                    cursor += share
            members = sorted(by_level[d], key=lambda v: wedge[v][0])
            ws = []
            for v in members:
                lo, hi = wedge[v]
                pad = (hi - lo) * 1e-6
                lo2, hi2 = lo + pad, hi - pad
                if clip is not None:
                    # keep children angularly close to their parent so edges
                    # stay acute (small no-dip radius penalty)
                    aq = angle[ev.parent[v]]
                    nl, nh = max(lo2, aq - clip), min(hi2, aq + clip)
                    if nl <= nh:
                        lo2, hi2 = nl, nh
                    elif hi2 < aq - clip:
                        lo2 = hi2
                    else:
                        hi2 = lo2
                ws.append((lo2, hi2))
            for v, a in zip(members, _max_gap_angles(ws)):
                angle[v] = a
        return angle

    def min_circular_gap(angs: list[float]) -> float:
        if len(angs) < 2:
            return 2 * math.pi
        angs = sorted(a % (2 * math.pi) for a in angs)
        return min(
            (angs[(i + 1) % len(angs)] - angs[i]) % (2 * math.pi)
            for i in range(len(angs))
        )

    def place(angle: dict[int, float], rings: int):
        """Radii per vertex: each depth is a band of up to `rings` staggered
        concentric sub-circles, pushed outward until same-circle neighbours
        keep the minimum separation (which scales with the drawing extent).
        Tree edges stay inside their nested wedge cones whatever the radii,
        so they never cross."""
        def build(d_hat):
            d_gap = max(1.0, 1.1 * d_hat)
            pts = {}
            r_top = 0.0
            for d in sorted(by_level):
                members = sorted(by_level[d], key=lambda v: (angle[v] % (2 * math.pi), v))
                if d == 0:
                    for v in members:
                        pts[v] = (0.0, 0.0)
                    continue
                base = r_top + d_gap
                prev_rho = None
                for s in range(rings):
                    sub = members[s::rings]
                    if not sub:
                        continue
                    theta = min_circular_gap([angle[v] for v in sub])
                    rho = base + s * d_gap
                    if prev_rho is not None:
                        rho = max(rho, prev_rho + d_gap)
                    if 0.0 < theta < math.pi:
                        rho = max(rho, 0.55 * d_hat / math.sin(theta / 2))
                    elif theta == 0.0:
                        return None
                    for v in sub:
                        pts[v] = (
                            rho * math.cos(angle[v]),
                            rho * math.sin(angle[v]),
                        )
                    prev_rho = rho
                    r_top = max(r_top, rho)
            xs = [p[0] for p in pts.values()]
            ys = [p[1] for p in pts.values()]
            diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
            return pts, SEP_FRACTION * max(diag, 1e-9)

        # solve d_hat = SEP_FRACTION * diag(d_hat); the map is monotone and
        # piecewise linear in d_hat, so Aitken extrapolation converges fast
        # even when crowded levels put the fixed point near criticality
        d_hat = 0.1
        for _ in range(40):
            res = build(d_hat)
            if res is None or d_hat > 1e8:
                return None
            pts, d1 = res
            if abs(d1 - d_hat) <= 1e-9 * max(1.0, d_hat):
                return pts
            res = build(d1)
            if res is None:
                return None
            d2 = res[1]
            denom = d2 - 2 * d1 + d_hat
            if abs(denom) > 1e-15:
                cand = d_hat - (d1 - d_hat) ** 2 / denom
                d_hat = cand if cand > 0 else d2
            else:
                d_hat = d2
        return None

    def place_annulus(angle: dict[int, float]):
        """Last-resort placement for crowded trees: per-vertex radii, so
        neighbours that one circle cannot hold at the required separation
        stagger radially instead.  Tree edges stay planar because (a) every
        angle is inside its nested wedge, so edges of unrelated subtrees
        live in disjoint convex cones, (b) radii increase strictly along
        tree paths and each edge's radius increases monotonically (no dip
        below the parent's radius), and (c) within a family the radii do
        not increase with angular distance from the parent, so an edge
        never sweeps over a sibling subtree at the subtree's own radius."""

        def circdist(a: float, b: float) -> float:
            d = (a - b) % (2 * math.pi)
            return min(d, 2 * math.pi - d)

        def build(d_hat):
            # margins are deliberately slim: crowded instances sit close to
            # the feasibility threshold of the separation rule, and a fat
            # margin tips the radius fixed point into divergence
            d_gap = max(1.0, 1.03 * d_hat)
            sep = 1.02 * d_hat
            pts = {v: (0.0, 0.0) for v in by_level.get(0, [])}
            rho = {v: 0.0 for v in by_level.get(0, [])}
            placed: list[int] = []
            for d in sorted(by_level):
                if d == 0:
                    continue
                for q in sorted(by_level[d - 1], key=lambda p: (angle[p] % (2 * math.pi), p)):
                    if not children[q]:
                        continue
                    aq = angle[q]
                    # split the family by side of the parent's ray and walk
                    # each side from the angularly farthest child inward
                    left, right = [], []
                    for w in children[q]:
                        off = (angle[w] - aq + math.pi) % (2 * math.pi) - math.pi
                        (left if off < 0 else right).append((abs(off), w))
                    for side in (sorted(left, reverse=True), sorted(right, reverse=True)):
                        running = 0.0
                        for delta, w in side:
                            lo = rho[q] + d_gap
                            if q != ev.root:
                                if delta >= 1.5:
                                    return None
                                lo = max(lo, rho[q] * 1.0001 / math.cos(delta))
                                lo = max(lo, running)
                            aw = angle[w]
                            for u in placed:
                                phi = circdist(aw, angle[u])
                                if phi >= math.pi / 2:
                                    continue
                                cross = rho[u] * math.sin(phi)
                                if cross < sep:
                                    lo = max(
                                        lo,
                                        rho[u] * math.cos(phi)
                                        + math.sqrt(sep * sep - cross * cross),
                                    )
                            rho[w] = lo
                            pts[w] = (lo * math.cos(aw), lo * math.sin(aw))
                            placed.append(w)
                            running = max(running, lo)
                            if lo > 1e9:
                                return None
            xs = [p[0] for p in pts.values()]
            ys = [p[1] for p in pts.values()]
            diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
            return pts, SEP_FRACTION * max(diag, 1e-9)

        # plain fixed-point iteration: near-critical instances converge at a
        # ratio barely under one, and extrapolating past the fixed point can
        # land in a regime where the greedy build fails outright
        d_hat = 1.0
        for _ in range(80):
            res = build(d_hat)
            if res is None or d_hat > 1e8:
                return None
            pts, d1 = res
            if abs(d1 - d_hat) <= 1e-9 * max(1.0, d_hat):
                return pts
            d_hat = d1
        return None

    def tree_planar(positions) -> bool:
        segs = [
            (positions[u], positions[v]) for u, v in sorted(tree_edges)
        ]
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                if _segments_cross(segs[i], segs[j]):
                    return False
        return True

    def candidate_angles():
        yield assign_angles_respaced()
        yield assign_angles(0.0, 0)
        for seed in range(8):
            for frac in (0.6, -0.6, 0.3, -0.3, 0.85, 0.99):
                yield assign_angles(frac, seed)

    fallback = None
    for i, angle in enumerate(candidate_angles()):
        pts = place(angle, 1)
        if pts is None:
            if g.n > 40 and i >= 1:
                # the re-spaced attempt maximises the angular gaps; if even
                # it diverges, the jittered bisector variants will too
                break
            continue
        positions = _freeze(pts, g.n)
        if not tree_planar(positions):
            # re-spaced angles may sit far from the parent's, letting an
            # edge dip across inner circles
            continue
        if placement_ok(positions, g.edges):
            return NodeLinkLayout(
                positions, g.edges, frozenset(range(g.n)), tree_edges
            )
        if fallback is None and separation_ok(positions):
            fallback = positions
    if g.n <= 40:
        # dense small graphs: wedge bisectors leave too little angular slack,
        # so try free angles on the exact depth rings and re-check planarity
        for seed in range(2000 if g.n <= 12 else 300):
            rng = random.Random(seed)
            angle = {v: 2 * math.pi * rng.random() for v in range(g.n)}
            angle[ev.root] = math.pi / 2
            pts = place(angle, 1)
            if pts is None:
                continue
            positions = _freeze(pts, g.n)
            if tree_planar(positions) and placement_ok(positions, g.edges):
                return NodeLinkLayout(
                    positions, g.edges, frozenset(range(g.n)), tree_edges
                )
    if fallback is None:
        # crowded depths: split them across staggered sub-circles, keeping
        # only drawings whose tree edges still do not cross
        for rings in (2, 3, 4, 6, 8, 12):
            for i, angle in enumerate(candidate_angles()):
                if g.n > 40 and i >= 2:
                    break
                pts = place(angle, rings)
                if pts is None:
                    continue
                positions = _freeze(pts, g.n)
                if not tree_planar(positions):
                    continue
                if placement_ok(positions, g.edges):
                    return NodeLinkLayout(
                        positions, g.edges, frozenset(range(g.n)), tree_edges
                    )
                if fallback is None and separation_ok(positions):
                    fallback = positions
            if fallback is not None:
                break
    best = None
    if g.n <= 40:
        # dense graphs leave every wedge-nested placement with a vertex near
        # some chord; sample concentric drawings with per-level even spacing
        # (children kept near their parents' rays) until the clearance
        # floors hold.  Tree-edge crossings are tolerated as a last resort:
        # dense graphs rarely admit a crossing-free concentric drawing that
        # also keeps every vertex clear of the non-tree chords
        for seed in range(4000 if g.n <= 16 else 400):
            rng = random.Random(seed * 60013 + 7)
            theta = {v: math.pi / 2 for v in by_level.get(0, [])}
            radii: dict[int, float] = {0: 0.0}
            for d in sorted(by_level):
                if d == 0:
                    continue
                vs = by_level[d]
                rot = 2 * math.pi * rng.random()
                order = sorted(
                    vs,
                    key=lambda v: (
                        (theta[ev.parent[v]] - rot) % (2 * math.pi),
                        rng.random(),
                    ),
                )
                m = len(order)
                for i, v in enumerate(order):
                    # jitter inside the slot: edges entering the ring from
                    # outer levels must dodge the on-ring vertices, and
                    # rigid even spacing moves every entry point in lockstep
                    theta[v] = rot + 2 * math.pi * (
                        i + 0.35 * (2 * rng.random() - 1)
                    ) / m
                radii[d] = max(
                    radii[d - 1] + 0.4, d * (1.0 + 0.25 * rng.random())
                )
            pts = {
                v: (
                    radii[ev.depth[v]] * math.cos(theta[v]),
                    radii[ev.depth[v]] * math.sin(theta[v]),
                )
                for v in range(g.n)
            }
            positions = _freeze(pts, g.n)
            if placement_ok(positions, g.edges):
                if tree_planar(positions):
                    return NodeLinkLayout(
                        positions, g.edges, frozenset(range(g.n)), tree_edges
                    )
                if best is None:
                    best = positions
        if best is not None and g.n <= 16:
            # small dense graphs: a clearance-clean concentric drawing beats
            # a crossing-free one that hides a vertex behind a chord
            return NodeLinkLayout(best, g.edges, frozenset(range(g.n)), tree_edges)
    if fallback is not None:
        # no fully occlusion-free placement found; keep the separation-clean
        # drawing (strict verification may still flag occlusions)
        return NodeLinkLayout(fallback, g.edges, frozenset(range(g.n)), tree_edges)
    # trees too crowded for exact per-depth circles: let radii stagger
    # (narrow wedges keep parent-child gaps acute, so radius inflation
    # from the no-dip bound stays small)
    for cap, clip in (
        (1.0, 0.5), (0.8, 0.4), (1.2, 0.6), (0.6, 0.3), (1.0, 0.35), (1.3, 0.65)
    ):
        pts = place_annulus(assign_angles_respaced(cap=cap, clip=clip))
        if pts is None:
            continue
        positions = _freeze(pts, g.n)
        if separation_ok(positions) and tree_planar(positions):
            return NodeLinkLayout(
                positions, g.edges, frozenset(range(g.n)), tree_edges
            )
    if best is not None:
        return NodeLinkLayout(best, g.edges, frozenset(range(g.n)), tree_edges)
    raise LayoutError("could not find a separation-clean radial placement")


def cycle_outer_layout(g: Graph, ev: Cycle) -> NodeLinkLayout:
    """Cycle in convex position on the unit circle, anchored so cycle index 0
    is the unique topmost vertex; remaining vertices strictly inside."""
    cyc = list(ev.vertices)
    if len(set(cyc)) != len(cyc) or len(cyc) < 3:
        raise LayoutError("cycle evidence must list distinct vertices")
    rest = sorted(v for v in range(g.n) if v not in set(cyc))
    L = len(cyc)
    hull_pts = {}
    for i, v in enumerate(cyc):
        ang = math.pi / 2 - 2 * math.pi * i / L
        hull_pts[v] = (math.cos(ang), math.sin(ang))
    for attempt in range(40):
        pts = dict(hull_pts)
        inner_rot = 0.41 * (attempt + 1)
        for i, v in enumerate(rest):
            ang = math.pi / 2 - 2 * math.pi * i / max(len(rest), 1) + inner_rot
            pts[v] = (0.45 * math.cos(ang), 0.45 * math.sin(ang))
        if len(rest) == 1:
            pts[rest[0]] = (
                0.1 * math.cos(inner_rot),
                0.1 * math.sin(inner_rot),
            )
        positions = _freeze(pts, g.n)
        if placement_ok(positions, g.edges):
            return NodeLinkLayout(
                positions,
                g.edges,
                frozenset(cyc),
                frozenset(Cycle(tuple(cyc)).edges()),
            )
    # dense graphs: a common inner circle lines the interior vertices up
    # with the chords.  Scatter them instead (any placement strictly inside
    # the hull keeps the gist readable) and relax: push interior vertices
    # off nearby non-incident edges and apart from each other, clamped to
    # the hull polygon's incircle, until the clearance floors hold
    edges = sorted(g.edges)
    rest_set = set(rest)
    incircle = math.cos(math.pi / L)
    for seed in range(60):
        rng = random.Random(seed * 48271 + 3)
        pos = {v: list(hull_pts[v]) for v in cyc}
        for v in rest:
            rad = 0.85 * incircle * math.sqrt(rng.random())
            ang = 2 * math.pi * rng.random()
            pos[v] = [rad * math.cos(ang), rad * math.sin(ang)]
        for _ in range(200):
            positions = _freeze({v: (p[0], p[1]) for v, p in pos.items()}, g.n)
            if placement_ok(positions, g.edges):
                return NodeLinkLayout(
                    positions,
                    g.edges,
                    frozenset(cyc),
                    frozenset(Cycle(tuple(cyc)).edges()),
                )
            d = delta_sep(positions)
            for u, v in edges:
                ax, ay = pos[u]
                bx, by = pos[v]
                dx, dy = bx - ax, by - ay
                seg2 = dx * dx + dy * dy
                for w in rest:
                    if w == u or w == v:
                        continue
                    px, py = pos[w]
                    t = 0.0 if seg2 == 0 else max(
                        0.0, min(1.0, ((px - ax) * dx + (py - ay) * dy) / seg2)
                    )
                    vx, vy = px - (ax + t * dx), py - (ay + t * dy)
                    dist = math.hypot(vx, vy)
                    if dist >= 0.6 * d:
                        continue
                    if dist < 1e-12:
                        vx, vy, dist = 1.0, 0.0, 1.0
                    s = (0.6 * d - dist) * 0.8 / dist
                    pos[w][0] += vx * s
                    pos[w][1] += vy * s
            for i in range(g.n):
                for j in range(i + 1, g.n):
                    if i not in rest_set and j not in rest_set:
                        continue
                    dx = pos[i][0] - pos[j][0]
                    dy = pos[i][1] - pos[j][1]
                    dist = math.hypot(dx, dy)
                    if dist >= 1.2 * d:
                        continue
                    if dist < 1e-12:
                        dx, dy, dist = 1.0, 0.0, 1.0
                    s = (1.2 * d - dist) * 0.5 / dist
                    if i in rest_set:
                        pos[i][0] += dx * s
                        pos[i][1] += dy * s
                    if j in rest_set:
                        pos[j][0] -= dx * s
                        pos[j][1] -= dy * s
            cap = 0.93 * incircle
            for w in rest:
                r = math.hypot(pos[w][0], pos[w][1])
                if r > cap:
                    pos[w][0] *= cap / r
                    pos[w][1] *= cap / r
    raise LayoutError("could not find an occlusion-free convex-cycle placement")


# within-level vertical stagger patterns tried in order by level_layout
_STAGGERS = (
    (0.0,),
    (0.0, 0.3),
    (0.0, 0.3, 0.15),
    (0.0, 0.2, 0.3, 0.1),
    (0.0, 0.3, 0.1, 0.25),
)


def level_layout(g: Graph, ev: BfsWitness) -> NodeLinkLayout:
    """BFS level drawing: depth-d vertices near y = -d, x by tree order."""
    if set(ev.depth) != set(range(g.n)):
        raise LayoutError("BFS evidence does not cover all vertices")
    by_level: dict[int, list[int]] = {}
    for v, d in ev.depth.items():
        by_level.setdefault(d, []).append(v)
    # parent grouping: smallest-id neighbor one level up
    order_x: dict[int, float] = {ev.root: 0.0}
    ordered_levels: dict[int, list[int]] = {0: [ev.root]}
    for d in range(1, max(by_level) + 1):
        members = by_level.get(d, [])

        def parent_of(v):
            ups = [w for w in g.neighbors(v) if ev.depth.get(w) == d - 1]
            return min(ups) if ups else -1

        members = sorted(members, key=lambda v: (order_x.get(parent_of(v), 0.0), v))
        ordered_levels[d] = members
        for i, v in enumerate(members):
            order_x[v] = i - (len(members) - 1) / 2
    path_edges = frozenset(
        normalize_edge(ev.path[i], ev.path[i + 1]) for i in range(len(ev.path) - 1)
    )
    for pattern in _STAGGERS:
        pts = {}
        for d, members in ordered_levels.items():
            for i, v in enumerate(members):
                pts[v] = (order_x[v], -d + pattern[i % len(pattern)])
        positions = _freeze(pts, g.n)
        if placement_ok(positions, g.edges):
            return NodeLinkLayout(
                positions, g.edges, frozenset(ev.path), path_edges
            )
    # dense graphs: fixed grid columns line vertices up with the chords.
    # The bands only need each vertex within 0.3 above its row, so scatter
    # x (plus a small upward y jitter) and relax: push vertices off nearby
    # non-incident edges and apart, clamping y back into its band
    edges = sorted(g.edges)
    width = max(len(m) for m in ordered_levels.values())
    for seed in range(60):
        rng = random.Random(seed * 69621 + 11)
        pos = {}
        for d, members in ordered_levels.items():
            for v in members:
                pos[v] = [
                    width * (rng.random() - 0.5),
                    -d + 0.3 * rng.random(),
                ]
        for _ in range(200):
            positions = _freeze({v: (p[0], p[1]) for v, p in pos.items()}, g.n)
            if placement_ok(positions, g.edges):
                return NodeLinkLayout(
                    positions, g.edges, frozenset(ev.path), path_edges
                )
            d_sep = delta_sep(positions)
            for u, v in edges:
                ax, ay = pos[u]
                bx, by = pos[v]
                dx, dy = bx - ax, by - ay
                seg2 = dx * dx + dy * dy
                for w in pos:
                    if w == u or w == v:
                        continue
                    px, py = pos[w]
                    t = 0.0 if seg2 == 0 else max(
                        0.0, min(1.0, ((px - ax) * dx + (py - ay) * dy) / seg2)
                    )
                    vx, vy = px - (ax + t * dx), py - (ay + t * dy)
                    dist = math.hypot(vx, vy)
                    if dist >= 0.6 * d_sep:
                        continue
                    if dist < 1e-12:
                        vx, vy, dist = 1.0, 0.0, 1.0
                    s = (0.6 * d_sep - dist) * 0.8 / dist
                    pos[w][0] += vx * s
                    pos[w][1] += vy * s
            vs = list(pos)
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    a, b = vs[i], vs[j]
                    dx = pos[a][0] - pos[b][0]
                    dy = pos[a][1] - pos[b][1]
                    dist = math.hypot(dx, dy)
                    if dist >= 1.2 * d_sep:
                        continue
                    if dist < 1e-12:
                        dx, dy, dist = 1.0, 0.0, 1.0
                    s = (1.2 * d_sep - dist) * 0.5 / dist
                    pos[a][0] += dx * s
                    pos[a][1] += dy * s
                    pos[b][0] -= dx * s
                    pos[b][1] -= dy * s
            for d, members in ordered_levels.items():
                for v in members:
                    pos[v][1] = min(-d + 0.3, max(-d, pos[v][1]))
    raise LayoutError("could not find an occlusion-free level placement")


# ---------------------------------------------------------------------------
# matrix constructor


def _sym(cells):
    out = set()
    for i, j, c in cells:
        out.add((i, j, c))
        out.add((j, i, c))
    return frozenset(out)


def matrix_certificate_order(g: Graph, ev, cycle_variant: str = "auto") -> MatrixLayout:
    """Row/column order and marks that make the evidence a visual block.

    For cycle evidence, ``cycle_variant`` picks uniform widths (a spanning
    "hamiltonian" diagonal-plus-corners) or the "parity" widths that make the
    closing cell square exactly when the cycle is odd; "auto" uses uniform
    widths for spanning cycles and parity widths otherwise.
    """
    n = g.n
    uniform = tuple(1.0 for _ in range(n))
    if isinstance(ev, Cycle):
        cyc = list(ev.vertices)
        L = len(cyc)
        order = tuple(cyc + sorted(v for v in range(n) if v not in set(cyc)))
        marks = [(i, i + 1, "evidence") for i in range(L - 1)]
        marks.append((0, L - 1, "evidence"))
        if cycle_variant == "auto":
            cycle_variant = "hamiltonian" if L == n else "parity"
        if cycle_variant == "hamiltonian":
            return MatrixLayout(order, uniform, _sym(marks))
        # parity spacing: even indices thicker than odd ones
        widths = tuple(2.0 if i % 2 == 0 else 1.0 for i in range(n))
        return MatrixLayout(order, widths, _sym(marks))
    if isinstance(ev, Coloring):
        classes = ev.classes()
        order = tuple(v for cls in classes for v in cls)
        bounds = []
        lo = 0
        for cls in classes:
            bounds.append((lo, lo + len(cls)))
            lo += len(cls)
        return MatrixLayout(order, uniform, frozenset(), tuple(bounds))
    if isinstance(ev, WitnessSet):
        order = tuple(
            list(ev.vertices) + sorted(v for v in range(n) if v not in set(ev.vertices))
        )
        k = len(ev.vertices)
        if ev.kind == "clique":
            marks = [
                (i, j, "evidence") for i in range(k) for j in range(i + 1, k)
            ]
            return MatrixLayout(order, uniform, _sym(marks), ((0, k),))
        if ev.kind == "independent":
            return MatrixLayout(order, uniform, frozenset(), ((0, k),))
        # dominating: mark the coverage cells from the set rows outward
        marks = [
            (i, j, "evidence")
            for i in range(k)
            for j in range(k, n)
            if g.has_edge(order[i], order[j])
        ]
        return MatrixLayout(order, uniform, _sym(marks), ((0, k),))
    if isinstance(ev, MissingEdge):
        order = tuple(range(n))
        marks = _sym([(ev.u, ev.v, "block-boundary")])
        return MatrixLayout(order, uniform, marks)
    if isinstance(ev, CompleteWitness):
        order = tuple(range(n))
        marks = [(i, j, "evidence") for i in range(n) for j in range(i + 1, n)]
        return MatrixLayout(order, uniform, _sym(marks), ((0, n),))
    raise LayoutError(f"matrix layout does not support {type(ev).__name__} evidence")


def book_layout(g: Graph, ev: BookEmbedding) -> BookLayout:
    if sorted(ev.spine) != list(range(g.n)):
        raise LayoutError("spine is not a permutation of the vertices")
    for e in g.sorted_edges():
        if e not in ev.pages:
            raise LayoutError(f"edge {e} has no page assignment")
        if not (0 <= ev.pages[e] < ev.k):
            raise LayoutError(f"edge {e} assigned to a page outside 0..{ev.k - 1}")
    return BookLayout(ev.spine, dict(ev.pages), ev.k, ev.discipline)
