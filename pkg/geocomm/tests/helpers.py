# -*- coding: utf-8 -*-
"""Small networks and a dense brute-force modularity oracle."""
from numpy import (
    array, exp, float64, int64, ones, outer, sqrt, triu_indices, zeros
)

from geocomm.graph import Network, distance
from geocomm.maps import Variant

TRIANGLE_A = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]


def make_net(coords, edges, ids=None, metric="planar") -> Network:
    n = len(coords)
    ids = ids if ids is not None else [f"n{i:03d}" for i in range(n)]
    src = array([a for a, _ in edges], dtype=int64)
    dst = array([b for _, b in edges], dtype=int64)
    return Network.from_edges(ids, array(coords, dtype=float64).reshape(n, 2), src, dst, metric)


def triangle_edges(offset=0):
    return [(offset, offset + 1), (offset + 1, offset + 2), (offset, offset + 2)]


def two_triangles(gap=0.0, bridge=True, coords=None) -> Network:
    """Nodes 0-2 and 3-5 form triangles; ```bridge``` joins 0 and 3."""
    if coords is None:
        coords = TRIANGLE_A + [(x + gap, y) for x, y in TRIANGLE_A]
    edges = triangle_edges(0) + triangle_edges(3)
    if bridge:
        edges.append((0, 3))
    return make_net(coords, edges)


def random_graph(rng, n=None, p=None, coincident=False) -> Network:
    """Random points in the unit box, each pair joined with probability
    ```p * exp(-d / 0.5)```."""
    n = int(rng.integers(5, 51)) if n is None else n
    p = float(rng.uniform(0.2, 0.9)) if p is None else p
    xy = zeros((n, 2)) + 0.5 if coincident else rng.random((n, 2))
    v, w = triu_indices(n, 1)
    d = sqrt(((xy[v] - xy[w]) ** 2).sum(axis=1))
    keep = rng.random(v.size) < p * exp(-d / 0.5)
    return Network.from_edges(
        [f"v{i:02d}" for i in range(n)], xy, v[keep], w[keep], "planar"
    )


def dense_adjacency(net: Network):
    A = zeros((net.n, net.n))
    src, dst = net.edge_arrays
    A[src, dst] = 1.0
    A[dst, src] = 1.0
    return A


def dense_distances(net: Network):
    D = zeros((net.n, net.n))
    for v in range(net.n):
        for w in range(v + 1, net.n):
            D[v, w] = D[w, v] = distance(net, v, w)
    return D


def mean_distance(net: Network) -> float:
    D = dense_distances(net)
    v, w = triu_indices(net.n, 1)
    return float(D[v, w].mean())


class Oracle:
    """Q of every variant by direct summation over all ordered pairs."""

    def __init__(self, net: Network, variant, sigma: float = None):
        variant = Variant(variant)
        A = dense_adjacency(net)
        k = A.sum(axis=1)
        two_m = k.sum()
        sigma = mean_distance(net) if sigma is None else sigma
        if variant is Variant.BASELINE or sigma == 0:
            L = ones_like(A)
        else:
            L = exp(-dense_distances(net) / sigma)
        kk = outer(k, k)

        if variant is Variant.BASELINE:
            self.M, self.norm = A - kk / two_m, two_m
        elif variant is Variant.LOCALITY:
            omega = (A * L).sum()
            self.M, self.norm = A * L - kk / two_m * L, omega
        else:
            common = A @ A
            with_deg = sqrt(kk)
            with_deg[with_deg == 0] = 1.0
            S = A * common / with_deg
            omega = (A * S * L).sum()
            tau = (k * k).sum() / (two_m * two_m)
            self.M = A * S * L - L * kk / two_m * tau * sqrt(kk)
            self.norm = 2.0 * omega
        self.sigma = sigma

    def q(self, labels) -> float:
        labels = array(labels)
        same = labels[:, None] == labels[None, :]
        return float((self.M * same).sum() / self.norm)


def ones_like(A):
    return ones(A.shape, dtype=float64)
