"""Numba kernels agree with the numpy reference implementations."""

import random

import numpy as np
import pytest

from graphtrials._kernels import (
    HAVE_NUMBA,
    crossing_scan_numba,
    crossing_scan_numpy,
    pair_extremes_numba,
    pair_extremes_numpy,
    stress_terms_numba,
    stress_terms_numpy,
)

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba unavailable")


def random_instance(seed, n=12, m=20):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-5, 5, size=(n, 2))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    random.Random(seed).shuffle(pairs)
    edges = np.asarray(pairs[:m], dtype=np.int64)
    dist = rng.integers(0, 5, size=(n, n)).astype(np.float64)
    dist = np.maximum(dist, dist.T)
    np.fill_diagonal(dist, 0.0)
    return pts, edges, dist


def test_crossing_scan_basic_x():
    pts = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]])
    edges = np.array([[0, 1], [2, 3]], dtype=np.int64)
    ii, jj, angs, degen = crossing_scan_numpy(pts, edges)
    assert list(ii) == [0] and list(jj) == [1]
    assert angs[0] == pytest.approx(90.0)
    assert degen == 0


def test_crossing_scan_shared_endpoint_excluded():
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, 1.0]])
    edges = np.array([[0, 1], [0, 2], [1, 2]], dtype=np.int64)
    ii, _, _, degen = crossing_scan_numpy(pts, edges)
    assert len(ii) == 0 and degen == 0


def test_crossing_scan_collinear_overlap_degenerate():
    pts = np.array([[0.0, 0.0], [2.0, 0.0], [1.0, 0.0], [3.0, 0.0]])
    edges = np.array([[0, 1], [2, 3]], dtype=np.int64)
    ii, _, _, degen = crossing_scan_numpy(pts, edges)
    assert len(ii) == 0
    assert degen == 1


def test_crossing_scan_collinear_disjoint_ok():
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0]])
    edges = np.array([[0, 1], [2, 3]], dtype=np.int64)
    ii, _, _, degen = crossing_scan_numpy(pts, edges)
    assert len(ii) == 0 and degen == 0


def test_crossing_scan_vertical_overlap_degenerate():
    pts = np.array([[0.0, 0.0], [0.0, 2.0], [0.0, 1.0], [0.0, 3.0]])
    edges = np.array([[0, 1], [2, 3]], dtype=np.int64)
    _, _, _, degen = crossing_scan_numpy(pts, edges)
    assert degen == 1


def test_stress_terms_skips_unreachable():
    pts = np.array([[0.0, 0.0], [3.0, 0.0], [0.0, 4.0]])
    dist = np.array([[0.0, 1.0, -1.0], [1.0, 0.0, 2.0], [-1.0, 2.0, 0.0]])
    A, B, C = stress_terms_numpy(pts, dist)
    assert C == 2
    assert B == pytest.approx(3.0 / 1.0 + 5.0 / 2.0)
    assert A == pytest.approx(9.0 + 6.25)


def test_pair_extremes_fixture():
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 2.0]])
    lo, hi = pair_extremes_numpy(pts)
    assert lo == pytest.approx(1.0)
    assert hi == pytest.approx(5**0.5)


@needs_numba
@pytest.mark.parametrize("seed", range(10))
def test_crossing_scan_agreement(seed):
    pts, edges, _ = random_instance(seed)
    ref = crossing_scan_numpy(pts, edges)
    got = crossing_scan_numba(pts, edges)
    assert list(got[0]) == list(ref[0])
    assert list(got[1]) == list(ref[1])
    np.testing.assert_allclose(got[2], ref[2], atol=1e-9)
    assert got[3] == ref[3]


@needs_numba
@pytest.mark.parametrize("seed", range(10))
def test_stress_terms_agreement(seed):
    pts, _, dist = random_instance(seed)
    ref = stress_terms_numpy(pts, dist)
    got = stress_terms_numba(pts, dist)
    np.testing.assert_allclose(got, ref, rtol=1e-12)


@needs_numba
@pytest.mark.parametrize("seed", range(10))
def test_pair_extremes_agreement(seed):
    pts, _, _ = random_instance(seed)
    ref = pair_extremes_numpy(pts)
    got = pair_extremes_numba(pts)
    np.testing.assert_allclose(got, ref, rtol=1e-12)


@needs_numba
def test_crossing_scan_empty_edges():
    pts = np.zeros((3, 2))
    edges = np.empty((0, 2), dtype=np.int64)
    got = crossing_scan_numba(pts, edges)
    assert len(got[0]) == 0 and got[3] == 0
