# -*- coding: utf-8 -*-
import logging
from math import atan2, cos, degrees, radians, sin

from numpy import asarray, bincount, float64, int64, zeros
from numpy.random import default_rng
from pandas import DataFrame
from scipy.optimize import linear_sum_assignment

from geocomm._typing import AnyArray1d, Int, List, NamedTuple
from geocomm.errors import InputError
from geocomm.graph import GeoPoint, Network
from geocomm.modularity import Partition
from geocomm.utils import nb_distances_to, v_seed

__all__ = [
    "CommunityScore",
    "accuracy",
    "average_internal_degree",
    "centroid",
    "community_records",
    "community_scores",
    "geographic_span",
    "random_partition",
    "size_profile",
]

logger = logging.getLogger(__name__)

SCORE_COLUMNS = [
    "community", "size", "span_km", "avg_internal_degree", "centroid_x", "centroid_y"
]
PROFILE_COLUMNS = ["size", "communities", "mean_span_km", "mean_internal_degree"]



class CommunityScore(NamedTuple):
    community: int
    size: int
    span_km: float
    avg_internal_degree: float
    centroid: GeoPoint


def _members(net: Network, members: AnyArray1d):
    idx = asarray(members, dtype=int64).ravel()
    if idx.size == 0:
        raise InputError("geographic span of an empty community")
    if idx.min() < 0 or idx.max() >= net.n:
        raise InputError("community member index out of range")
    return idx


def centroid(net: Network, members: AnyArray1d) -> GeoPoint:
    """Arithmetic mean of member coordinates.

    Geodesic networks average longitudes relative to the circular mean
    longitude, so communities straddling the antimeridian stay together.
    """
    idx = _members(net, members)
    x, y = net.xy[idx, 0], net.xy[idx, 1]
    if not net.geodesic:
        return GeoPoint(float(x.mean()), float(y.mean()))

    rad = [radians(_) for _ in x.tolist()]
    ref = degrees(atan2(sum(sin(r) for r in rad), sum(cos(r) for r in rad)))
    rel = (x - ref + 180.0) % 360.0 - 180.0
    lon = (ref + float(rel.mean()) + 180.0) % 360.0 - 180.0
    return GeoPoint(lon, float(y.mean()))


def geographic_span(net: Network, members: AnyArray1d) -> float:
    """Geographic Span

    Mean distance of the members to their centroid: Euclidean in planar
    mode, haversine in geodesic mode.

    Parameters:
        net (Network): Network
        members (Array): Node indices, non-empty.

    Returns:
        (float): km, 0 for a singleton.
    """
    idx = _members(net, members)
    if idx.size == 1:
        return 0.0
    c = centroid(net, idx)
    return float(nb_distances_to(net.xy, idx, c.x, c.y, net.geodesic).mean())


def _internal_counts(net: Network, p: Partition):
    """Ordered internal adjacencies per community."""
    src, dst = net.edge_arrays
    same = p.labels[src] == p.labels[dst]
    return 2 * bincount(p.labels[src][same], minlength=p.community_count)


def average_internal_degree(net: Network, p: Partition, c: Int) -> float:
    """Mean number of same-community neighbours of the members of ```c```."""
    p.check(net.n)
    size = p.members(int(c)).size
    return float(_internal_counts(net, p)[int(c)]) / size


def community_records(net: Network, p: Partition) -> List[CommunityScore]:
    """One CommunityScore per community, in community id order."""
    p.check(net.n)
    internal = _internal_counts(net, p)
    records = []
    for c, nodes in p.communities.items():
        point = centroid(net, nodes)
        span = 0.0 if nodes.size == 1 else float(
            nb_distances_to(net.xy, nodes, point.x, point.y, net.geodesic).mean()
        )
        records.append(CommunityScore(
            c, int(nodes.size), span, float(internal[c]) / nodes.size, point
        ))
    return records


def community_scores(net: Network, p: Partition) -> DataFrame:
    """Per community: ```community, size, span_km, avg_internal_degree,
    centroid_x, centroid_y```."""
    rows = [
        (r.community, r.size, r.span_km, r.avg_internal_degree, r.centroid.x, r.centroid.y)
        for r in community_records(net, p)
    ]
    return DataFrame(rows, columns=SCORE_COLUMNS)


def size_profile(net: Network, p: Partition, scores: DataFrame = None) -> DataFrame:
    """Mean span and internal degree of communities grouped by exact size."""
    scores = community_scores(net, p) if scores is None else scores
    grouped = scores.groupby("size", sort=True).agg(
        communities=("community", "size"),
        mean_span_km=("span_km", "mean"),
        mean_internal_degree=("avg_internal_degree", "mean"),
    ).reset_index()
    return grouped[PROFILE_COLUMNS]


def accuracy(p: Partition, truth: AnyArray1d) -> float:
    """Accuracy

    Matches detected communities one-to-one to true labels so that the
    number of nodes in matched (community, label) cells is maximal.
    Unmatched communities count for nothing.

    Parameters:
        p (Partition): Detected partition.
        truth (Array): True label per node.

    Returns:
        (float): Percentage of matched nodes in [0, 100].

    Raises:
        InputError: Length mismatch.
    """
    labels = Partition.from_labels(truth)
    if labels.n != p.n:
        raise InputError(f"{labels.n} true labels for {p.n} nodes")
    if p.n == 0:
        return 0.0
    table = zeros((p.community_count, labels.community_count), dtype=float64)
    flat = bincount(p.labels * labels.community_count + labels.labels,
        minlength=table.size)
    table[:] = flat.reshape(table.shape)
    rows, cols = linear_sum_assignment(table, maximize=True)
    return 100.0 * float(table[rows, cols].sum()) / p.n


def random_partition(net: Network, community_count: Int, seed: Int = None) -> Partition:
    """Uniform, independent community labels from a seeded RNG."""
    community_count = int(community_count)
    if community_count < 1:
        raise InputError(f"community_count must be >= 1, got {community_count}")
    # Stream 2; the generator draws labels from [seed] and edges from [seed, 1, b].
    rng = default_rng([v_seed(seed), 2])
    return Partition.from_labels(rng.integers(0, community_count, size=net.n))
