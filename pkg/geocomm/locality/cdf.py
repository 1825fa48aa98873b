# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass

from numpy import (
    array, concatenate, float64, geomspace, percentile, searchsorted, sort,
    unique, zeros
)
from numpy.random import default_rng

from geocomm._typing import Array, AnyArray1d, FloatArray, Int
from geocomm.errors import InputError
from geocomm.graph import Network, edge_lengths
from geocomm.maps import GRID_LOW_PERCENTILE, GRID_POINTS
from geocomm.utils import (
    nb_all_pair_distances,
    nb_pair_distances,
    v_grid,
    v_sample_size,
    v_seed
)

__all__ = [
    "EmpiricalCdf",
    "all_pairs_cdf",
    "connected_pairs_cdf",
    "distance_grid",
    "mean_pair_distance",
    "sample_pair_distances",
]

logger = logging.getLogger(__name__)



@dataclass(frozen=True, eq=False)
class EmpiricalCdf:
    """Empirical CDF of distances evaluated on a breakpoint grid.

    Parameters:
        grid (Array): Strictly increasing breakpoints in km.
        values (Array): ```P(d <= grid[i])```, non-decreasing in [0, 1].
        sample_count (int): Number of distances behind the estimate.
    """
    grid: FloatArray
    values: FloatArray
    sample_count: int

    @classmethod
    def from_samples(cls, samples: AnyArray1d, grid: AnyArray1d) -> "EmpiricalCdf":
        grid = v_grid(grid)
        s = sort(array(samples, dtype=float64).ravel())
        if s.size == 0:
            raise InputError("cannot build a CDF from zero distances")
        values = searchsorted(s, grid, side="right") / s.size
        return cls(grid, values, int(s.size))


def sample_pair_distances(
    net: Network, sample_size: Int = None, seed: Int = None
) -> FloatArray:
    """Pair Distances

    Distances of unordered node pairs. When ```n(n-1)/2 <= sample_size```
    every pair is enumerated exactly once; otherwise ```sample_size```
    pairs are drawn uniformly (with replacement) by a seeded RNG.

    Parameters:
        net (Network): Network with ```n >= 2```
        sample_size (int): Pair budget. Default: ```2_000_000```
        seed (int): RNG seed. Default: ```0```

    Returns:
        (Array): Distances in km.
    """
    if net.n < 2:
        raise InputError("pair distances need at least 2 nodes")
    sample_size = v_sample_size(sample_size)
    seed = v_seed(seed)

    total = net.n * (net.n - 1) // 2
    if total <= sample_size:
        logger.debug("enumerating all %d node pairs", total)
        return nb_all_pair_distances(net.xy, net.geodesic)

    logger.debug("sampling %d of %d node pairs (seed=%d)", sample_size, total, seed)
    rng = default_rng(seed)
    v = rng.integers(0, net.n, size=sample_size)
    w = rng.integers(0, net.n - 1, size=sample_size)
    w += w >= v
    return nb_pair_distances(net.xy, v, w, net.geodesic)


def all_pairs_cdf(
    net: Network, sample_size: Int = None, seed: Int = None, grid: AnyArray1d = None
) -> EmpiricalCdf:
    """CDF of distance between any two nodes (exact or sampled).

    Without a grid, breakpoints come from ```distance_grid``` of the pair
    distances alone.
    """
    d = sample_pair_distances(net, sample_size, seed)
    grid = distance_grid(d, d) if grid is None else grid
    return EmpiricalCdf.from_samples(d, grid)


def connected_pairs_cdf(net: Network, grid: AnyArray1d = None) -> EmpiricalCdf:
    """CDF of edge lengths over all ```m``` edges."""
    if net.m < 1:
        raise InputError("connected-pair CDF needs at least one edge")
    d = edge_lengths(net)
    grid = distance_grid(d, d) if grid is None else grid
    return EmpiricalCdf.from_samples(d, grid)


def _log_breakpoints(d: FloatArray, points: int) -> FloatArray:
    positive = d[d > 0]
    if positive.size == 0:
        return zeros(0, dtype=float64)
    lo, hi = float(percentile(d, GRID_LOW_PERCENTILE)), float(d.max())
    if lo <= 0:
        lo = float(positive.min())
    if lo >= hi:
        return array([hi], dtype=float64)
    return geomspace(lo, hi, points)


def distance_grid(
    edge_distances: AnyArray1d, pair_distances: AnyArray1d, points: Int = None
) -> Array:
    """Distance Grid

    Union of two log-spaced breakpoint sets, each running from the 0.1th
    to the 100th percentile of one distance sample. Zero is added when
    either sample holds zero distances.

    Parameters:
        edge_distances (Array): Edge lengths.
        pair_distances (Array): Node pair distances.
        points (int): Breakpoints per sample. Default: ```512```

    Returns:
        (Array): Strictly increasing breakpoints.
    """
    points = GRID_POINTS if points is None else int(points)
    e = array(edge_distances, dtype=float64).ravel()
    p = array(pair_distances, dtype=float64).ravel()
    parts = [_log_breakpoints(e, points), _log_breakpoints(p, points)]
    if (e == 0).any() or (p == 0).any():
        parts.append(zeros(1, dtype=float64))
    grid = unique(concatenate(parts))
    if grid.size == 0:
        grid = zeros(1, dtype=float64)
    return grid


def mean_pair_distance(
    net: Network, sample_size: Int = None, seed: Int = None
) -> float:
    """Mean Pair Distance

    sigma: the average distance between node pairs, exact when all pairs
    fit in ```sample_size``` and a seeded sample mean otherwise.

    Returns:
        (float): km. Zero (logged as degenerate) when all nodes coincide.
    """
    sigma = float(sample_pair_distances(net, sample_size, seed).mean())
    if sigma == 0.0:
        logger.warning("[!] all nodes coincide: mean pair distance is 0 (degenerate)")
    return sigma
