# -*- coding: utf-8 -*-
from math import pi

from numba import njit, prange
from numpy import arcsin, cos, empty, exp, float64, sin, sqrt, zeros

from geocomm.maps import EARTH_RADIUS_KM

__all__ = [
    "nb_all_pair_distances",
    "nb_community_null_mass",
    "nb_cross_null_mass",
    "nb_distance",
    "nb_distances_to",
    "nb_edge_similarity",
    "nb_intersect_count",
    "nb_pair_distances",
    "nb_pair_weight_stats",
]

DEG2RAD = pi / 180.0
RADIUS = EARTH_RADIUS_KM



# Planar: Euclidean on (x, y) km. Geodesic: haversine on (lon, lat) degrees.
@njit(cache=True)
def nb_distance(x1, y1, x2, y2, geodesic):
    if geodesic:
        phi1, phi2 = y1 * DEG2RAD, y2 * DEG2RAD
        dphi = (y2 - y1) * DEG2RAD
        dlmb = (x2 - x1) * DEG2RAD
        a = sin(0.5 * dphi) ** 2 + cos(phi1) * cos(phi2) * sin(0.5 * dlmb) ** 2
        if a > 1.0:
            a = 1.0
        return 2.0 * RADIUS * arcsin(sqrt(a))
    dx, dy = x1 - x2, y1 - y2
    return sqrt(dx * dx + dy * dy)


# Distances of all unordered pairs i < j, row-major.
@njit(cache=True, parallel=True)
def nb_all_pair_distances(xy, geodesic):
    n = xy.shape[0]
    result = empty(n * (n - 1) // 2, dtype=float64)
    for i in prange(n - 1):
        base = i * (2 * n - i - 1) // 2
        for j in range(i + 1, n):
            result[base + j - i - 1] = nb_distance(
                xy[i, 0], xy[i, 1], xy[j, 0], xy[j, 1], geodesic
            )
    return result


# Distances of the given pairs (v[k], w[k]).
@njit(cache=True, parallel=True)
def nb_pair_distances(xy, v, w, geodesic):
    m = v.size
    result = empty(m, dtype=float64)
    for k in prange(m):
        a, b = v[k], w[k]
        result[k] = nb_distance(xy[a, 0], xy[a, 1], xy[b, 0], xy[b, 1], geodesic)
    return result


# Size of the intersection of two ascending index arrays.
@njit(cache=True)
def nb_intersect_count(a, b):
    i, j, count = 0, 0, 0
    while i < a.size and j < b.size:
        if a[i] == b[j]:
            count += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return count


# |common neighbours| / sqrt(k_v k_w) for every edge of a CSR graph.
@njit(cache=True, parallel=True)
def nb_edge_similarity(indptr, indices, src, dst):
    m = src.size
    result = zeros(m, dtype=float64)
    for e in prange(m):
        v, w = src[e], dst[e]
        kv = indptr[v + 1] - indptr[v]
        kw = indptr[w + 1] - indptr[w]
        if kv == 0 or kw == 0:
            continue
        common = nb_intersect_count(
            indices[indptr[v]:indptr[v + 1]], indices[indptr[w]:indptr[w + 1]]
        )
        result[e] = common / sqrt(float64(kv) * float64(kw))
    return result


# Per position p of a community-sorted order: h_v^2 plus twice the sum over
# later members w of the same community (order[p + 1:ends[p]]) of
# exp(-d / sigma) * h_v * h_w. The terms sum to the ordered pair null mass.
@njit(cache=True, parallel=True)
def nb_community_null_mass(xy, h, order, ends, inv_sigma, geodesic):
    count = order.size
    result = zeros(count, dtype=float64)
    for p in prange(count):
        v = order[p]
        xv, yv, hv = xy[v, 0], xy[v, 1], h[v]
        s = 0.0
        for q in range(p + 1, ends[p]):
            w = order[q]
            d = nb_distance(xv, yv, xy[w, 0], xy[w, 1], geodesic)
            s += exp(-d * inv_sigma) * h[w]
        result[p] = hv * hv + 2.0 * hv * s
    return result


# For each node w of others: h_w times the sum over v in members of
# exp(-d / sigma) * h_v.
@njit(cache=True, parallel=True)
def nb_cross_null_mass(xy, h, members, others, inv_sigma, geodesic):
    count = others.size
    result = zeros(count, dtype=float64)
    for k in prange(count):
        w = others[k]
        xw, yw = xy[w, 0], xy[w, 1]
        s = 0.0
        for q in range(members.size):
            v = members[q]
            d = nb_distance(xy[v, 0], xy[v, 1], xw, yw, geodesic)
            s += exp(-d * inv_sigma) * h[v]
        result[k] = h[w] * s
    return result


# Row sums and row maxima over j > i of p_c(label_i, label_j) * exp(-d / omega).
@njit(cache=True, parallel=True)
def nb_pair_weight_stats(xy, labels, p_same, p_diff, inv_omega):
    n = xy.shape[0]
    row_sum = zeros(n, dtype=float64)
    row_max = zeros(n, dtype=float64)
    for i in prange(n):
        s, peak = 0.0, 0.0
        for j in range(i + 1, n):
            pc = p_same if labels[i] == labels[j] else p_diff
            dx, dy = xy[i, 0] - xy[j, 0], xy[i, 1] - xy[j, 1]
            p = pc * exp(-sqrt(dx * dx + dy * dy) * inv_omega)
            s += p
            if p > peak:
                peak = p
        row_sum[i], row_max[i] = s, peak
    return row_sum, row_max


# Distance from each listed node to the point (x0, y0).
@njit(cache=True)
def nb_distances_to(xy, members, x0, y0, geodesic):
    result = empty(members.size, dtype=float64)
    for k in range(members.size):
        v = members[k]
        result[k] = nb_distance(xy[v, 0], xy[v, 1], x0, y0, geodesic)
    return result
