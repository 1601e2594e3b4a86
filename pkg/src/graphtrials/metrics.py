"""The eight layout aesthetic metrics, full-layout or highlight-restricted.

st stress | cn crossing count | ji neighborhood Jaccard | el edge-length
ratio | nr node resolution | ar aspect ratio | cr crossing resolution |
an angular resolution.  All but cn are invariant under translation,
rotation, and uniform scaling.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DegenerateOverlapError, GraphTrialsError
from .graph import Graph, bfs_tree
from .layout import NodeLinkLayout

METRIC_KEYS = ("st", "cn", "ji", "el", "nr", "ar", "cr", "an")


@dataclass(frozen=True)
class MetricsReport:
    st: float
    cn: int
    ji: float
    el: float
    nr: float
    ar: float
    cr: float | None  # None exactly when cn == 0
    an: float | None  # None when no vertex has degree >= 2
    scope: str

    def to_json(self) -> dict:
        d = {k: getattr(self, k) for k in METRIC_KEYS}
        d["scope"] = self.scope
        return d


def _scope_elements(layout: NodeLinkLayout, g: Graph, scope: str):
    if scope == "full":
        verts = list(range(g.n))
        edges = sorted(layout.drawn_edges)
    elif scope == "highlighted":
        if not layout.highlight_vertices and not layout.highlight_edges:
            raise GraphTrialsError("highlighted scope requires nonempty highlights")
        vs = set(layout.highlight_vertices)
        for u, v in layout.highlight_edges:
            vs.add(u)
            vs.add(v)
        verts = sorted(vs)
        edges = sorted(layout.highlight_edges)
    else:
        raise ValueError(f"unknown scope {scope!r}")
    return verts, edges


def crossing_pairs(layout: NodeLinkLayout, g: Graph, scope: str = "full"):
    """Unordered properly-crossing edge pairs with acute angles in degrees."""
    verts, edges = _scope_elements(layout, g, scope)
    if len(edges) < 2:
        return []
    index = {v: i for i, v in enumerate(verts)}
    pts = np.array([layout.positions[v] for v in verts], dtype=np.float64)
    earr = np.array([[index[u], index[v]] for u, v in edges], dtype=np.int64)
    ii, jj, angs, degenerate = _kernels.crossing_scan(pts, earr)
    if degenerate:
        raise DegenerateOverlapError(
            f"{degenerate} collinear overlapping edge pair(s); crossings undefined"
        )
    return [(edges[i], edges[j], float(a)) for i, j, a in zip(ii, jj, angs)]


def _scope_distances(verts, edges):
    sub = Graph.from_edges(max(verts) + 1 if verts else 0, edges)
    n = len(verts)
    dist = np.full((n, n), -1.0)
    index = {v: i for i, v in enumerate(verts)}
    for v in verts:
        _, depth = bfs_tree(sub, v)
        for w, d in depth.items():
            if w in index and d > 0:
                dist[index[v], index[w]] = d
    return dist


def _principal_box_sides(pts: np.ndarray) -> tuple[float, float]:
    """Side lengths of the inertia-equivalent box: the principal-axis
    standard deviations.  Rotation-equivariant (hence the ratio is
    similarity-invariant) and numerically stable, unlike boxes fitted to
    the convex hull."""
    centered = pts - pts.mean(axis=0)
    cov = centered.T @ centered / len(pts)
    eigs = np.linalg.eigvalsh(cov)
    return float(math.sqrt(max(eigs[0], 0.0))), float(math.sqrt(max(eigs[1], 0.0)))


def compute_metrics(
    layout: NodeLinkLayout, g: Graph, scope: str = "full"
) -> MetricsReport:
    verts, edges = _scope_elements(layout, g, scope)
    if len(verts) < 2:
        raise GraphTrialsError("metrics need at least two vertices in scope")
    if not edges:
        raise GraphTrialsError("metrics need at least one edge in scope")
    pts = np.array([layout.positions[v] for v in verts], dtype=np.float64)
    index = {v: i for i, v in enumerate(verts)}

    # stress with the closed-form optimal uniform scale
    dist = _scope_distances(verts, edges)
    A, B, C = _kernels.stress_terms(pts, dist)
    st = C - B * B / A if A > 0 else 0.0
    st = max(st, 0.0)

    # crossings
    pairs = crossing_pairs(layout, g, scope)
    cn = len(pairs)
    cr = min(a for _, _, a in pairs) if pairs else None

    # neighborhood Jaccard with degree-matched nearest neighbors
    nbrs: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    scores = []
    for v in verts:
        deg = len(nbrs[v])
        if deg == 0:
            continue
        others = sorted(
            (w for w in verts if w != v),
            key=lambda w: (
                math.hypot(
                    pts[index[v], 0] - pts[index[w], 0],
                    pts[index[v], 1] - pts[index[w], 1],
                ),
                w,
            ),
        )
        nn = set(others[:deg])
        scores.append(len(nbrs[v] & nn) / len(nbrs[v] | nn))
    ji = sum(scores) / len(scores)

    # edge-length and node resolution
    lengths = [
        math.hypot(
            pts[index[u], 0] - pts[index[v], 0],
            pts[index[u], 1] - pts[index[v], 1],
        )
        for u, v in edges
    ]
    el = min(lengths) / max(lengths)
    lo, hi = _kernels.pair_extremes(pts)
    nr = lo / hi if hi > 0 else 0.0

    # aspect ratio of the inertia-equivalent box (an axis-aligned bounding
    # box would break rotation invariance)
    w, h = _principal_box_sides(pts)
    short, long_ = min(w, h), max(w, h)
    ar = short / long_ if long_ > 0 else 1.0

    # angular resolution: min gap between consecutive incident edge directions
    an = None
    for v in verts:
        if len(nbrs[v]) < 2:
            continue
        angles = sorted(
            math.atan2(
                pts[index[w], 1] - pts[index[v], 1],
                pts[index[w], 0] - pts[index[v], 0],
            )
            for w in nbrs[v]
        )
        gaps = [
            angles[i + 1] - angles[i] for i in range(len(angles) - 1)
        ]
        gaps.append(2 * math.pi - (angles[-1] - angles[0]))
        g_min = math.degrees(min(gaps))
        if an is None or g_min < an:
            an = g_min
    return MetricsReport(st, cn, ji, el, nr, ar, cr, an, scope)


def _fmt(x) -> str:
    if x is None:
        return "N/A"
    if isinstance(x, int):
        return str(x)
    return f"{x:.4f}"


def format_report(full: MetricsReport, highlighted: MetricsReport | None = None) -> str:
    """Aligned plain-text table: metric rows, one column per scope."""
    header = f"{'metric':<8}{'full':>12}"
    if highlighted is not None:
        header += f"{'(highlighted)':>16}"
    lines = [header]
    for key in METRIC_KEYS:
        row = f"{key:<8}{_fmt(getattr(full, key)):>12}"
        if highlighted is not None:
            row += f"{'(' + _fmt(getattr(highlighted, key)) + ')':>16}"
        lines.append(row)
    return "\n".join(lines)


def report_json(full: MetricsReport, highlighted: MetricsReport | None = None) -> str:
    doc = {"full": full.to_json()}
    if highlighted is not None:
        doc["highlighted"] = highlighted.to_json()
    return json.dumps(doc, sort_keys=True, indent=2)
