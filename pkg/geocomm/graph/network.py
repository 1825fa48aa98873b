# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass
from functools import cached_property

from numpy import (
    arange, array_equal, asarray, bincount, concatenate, cumsum, diff, float64,
    int64, isfinite, lexsort, maximum, minimum, repeat, unique, zeros
)

from geocomm._typing import (
    Coordinates, Dict, IntArray, FloatArray, NamedTuple, Sequence, Tuple
)
from geocomm.errors import InputError
from geocomm.maps import Metric
from geocomm.utils import (
    nb_distance,
    nb_intersect_count,
    nb_pair_distances,
    v_metric,
    v_node
)

__all__ = [
    "GeoPoint",
    "Network",
    "common_neighbor_count",
    "distance",
    "edge_lengths",
]

logger = logging.getLogger(__name__)



class GeoPoint(NamedTuple):
    """Node location. Kilometres in planar mode, (lon, lat) degrees in
    geodesic mode."""
    x: float
    y: float


def _check_coordinates(xy: Coordinates, metric: Metric) -> None:
    if not isfinite(xy).all():
        raise InputError("coordinates must be finite")
    if metric is Metric.GEODESIC:
        lon, lat = xy[:, 0], xy[:, 1]
        if ((lon < -180) | (lon > 180)).any() or ((lat < -90) | (lat > 90)).any():
            raise InputError("geodesic coordinates must satisfy -180<=x<=180, -90<=y<=90")


@dataclass(frozen=True, eq=False)
class Network:
    """Location-tagged undirected simple graph.

    Nodes are dense indices ```0..n-1``` ordered by their external ids.
    Adjacency is stored in CSR form with each neighbour list ascending.
    All arrays are read-only, so a Network can be shared between workers.

    Parameters:
        ids (tuple of str): External node ids, index order.
        xy (Coordinates): ```(n, 2)``` float64 coordinates.
        indptr (IntArray): CSR row pointers, ```n + 1``` entries.
        indices (IntArray): CSR neighbour indices, ```2m``` entries.
        metric (Metric): Distance function. Default: ```Metric.PLANAR```

    Note:
        Build with ```Network.from_edges``` or ```load_network```; both
        drop self-loops and duplicate edges.
    """
    ids: Tuple[str, ...]
    xy: Coordinates
    indptr: IntArray
    indices: IntArray
    metric: Metric = Metric.PLANAR


    def __post_init__(self):
        for arr in (self.xy, self.indptr, self.indices):
            arr.setflags(write=False)


    @classmethod
    def from_edges(
        cls, ids: Sequence[str], xy, src, dst, metric: Metric = None
    ) -> "Network":
        """Builds a Network from endpoint index arrays.

        Self-loops and duplicate edges (in either orientation) are dropped
        with a logged warning.
        """
        metric = v_metric(metric)
        ids = tuple(str(_) for _ in ids)
        n = len(ids)
        xy = asarray(xy, dtype=float64).reshape(n, 2).copy()
        _check_coordinates(xy, metric)

        src = asarray(src, dtype=int64).ravel()
        dst = asarray(dst, dtype=int64).ravel()
        if src.size != dst.size:
            raise InputError("edge endpoint arrays differ in length")
        if src.size and (min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= n):
            raise InputError("edge endpoint index out of range")

        loops = src == dst
        if loops.any():
            logger.warning("[!] dropped %d self-loop(s)", int(loops.sum()))
        a = minimum(src, dst)[~loops]
        b = maximum(src, dst)[~loops]
        keys = unique(a * n + b)
        if keys.size < a.size:
            logger.warning("[!] dropped %d duplicate edge(s)", int(a.size - keys.size))
        a, b = keys // n, keys % n

        rows, cols = concatenate([a, b]), concatenate([b, a])
        order = lexsort((cols, rows))
        indptr = zeros(n + 1, dtype=int64)
        indptr[1:] = cumsum(bincount(rows, minlength=n))
        return cls(ids, xy, indptr, cols[order].astype(int64), metric)


    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def m(self) -> int:
        return int(self.indices.size // 2)

    @property
    def geodesic(self) -> bool:
        return self.metric is Metric.GEODESIC

    @cached_property
    def degrees(self) -> IntArray:
        k = diff(self.indptr)
        k.setflags(write=False)
        return k

    @cached_property
    def index(self) -> Dict[str, int]:
        """External id to node index."""
        return {s: i for i, s in enumerate(self.ids)}

    @cached_property
    def edge_arrays(self) -> Tuple[IntArray, IntArray]:
        """```(src, dst)``` with ```src < dst```, one entry per edge, in
        ascending ```(src, dst)``` order."""
        rows = repeat(arange(self.n, dtype=int64), diff(self.indptr))
        keep = rows < self.indices
        src, dst = rows[keep], self.indices[keep]
        src.setflags(write=False)
        dst.setflags(write=False)
        return src, dst


    def adjacency(self, v: int) -> IntArray:
        v = v_node(v, self.n)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def location(self, v: int) -> GeoPoint:
        v = v_node(v, self.n)
        return GeoPoint(float(self.xy[v, 0]), float(self.xy[v, 1]))


    def __eq__(self, other) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return (
            self.ids == other.ids and self.metric is other.metric
            and array_equal(self.xy, other.xy)
            and array_equal(self.indptr, other.indptr)
            and array_equal(self.indices, other.indices)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Network(n={self.n}, m={self.m}, metric={self.metric.value})"


def distance(net: Network, v: int, w: int) -> float:
    """Distance

    Geographic distance in kilometres between nodes ```v``` and ```w```.
    Planar: Euclidean on (x, y). Geodesic: haversine, R = 6371.0 km.

    Parameters:
        net (Network): Network
        v (int): Node index
        w (int): Node index

    Returns:
        (float): Symmetric, non-negative, zero iff identical coordinates.
    """
    v, w = v_node(v, net.n), v_node(w, net.n)
    xy = net.xy
    return float(nb_distance(xy[v, 0], xy[v, 1], xy[w, 0], xy[w, 1], net.geodesic))


def common_neighbor_count(net: Network, v: int, w: int) -> int:
    """Number of shared neighbours of two distinct nodes."""
    v, w = v_node(v, net.n), v_node(w, net.n)
    if v == w:
        raise InputError("common_neighbor_count needs two distinct nodes")
    return int(nb_intersect_count(net.adjacency(v), net.adjacency(w)))


def edge_lengths(net: Network) -> FloatArray:
    """Length in km of every edge, aligned with ```net.edge_arrays```."""
    src, dst = net.edge_arrays
    if src.size == 0:
        return zeros(0, dtype=float64)
    return nb_pair_distances(net.xy, src, dst, net.geodesic)
