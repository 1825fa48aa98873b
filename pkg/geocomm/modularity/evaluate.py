# -*- coding: utf-8 -*-
from numpy import argsort, bincount, cumsum, float64, int64

from geocomm.errors import InputError
from geocomm.graph import Network
from geocomm.maps import Variant
from geocomm.modularity.partition import Partition
from geocomm.modularity.weights import WeightContext
from geocomm.utils import nb_community_null_mass

__all__ = [
    "c_g",
    "internal_mass",
    "modularity",
    "null_mass",
    "p_g",
    "q_baseline",
    "q_locality",
    "q_similarity",
]



def _check(net: Network, ctx: WeightContext, p: Partition) -> None:
    p.check(net.n)
    if ctx.n != net.n or ctx.m != net.m:
        raise InputError("weight context was built for a different network")


def internal_mass(ctx: WeightContext, p: Partition) -> float:
    """Ordered pair sum of ```A e``` over pairs inside one community."""
    same = p.labels[ctx.src] == p.labels[ctx.dst]
    return 2.0 * float(ctx.edge_weight[same].sum())


def null_mass(net: Network, ctx: WeightContext, p: Partition) -> float:
    """Ordered pair sum of ```L h_v h_w``` over pairs inside one community,
    self pairs included."""
    if ctx.constant_locality:
        hc = bincount(p.labels, weights=ctx.h, minlength=p.community_count)
        return float((hc * hc).sum())
    order = argsort(p.labels, kind="stable").astype(int64)
    ends = cumsum(p.sizes).astype(int64)[p.labels[order]]
    per_node = nb_community_null_mass(
        net.xy, ctx.h, order, ends, ctx.inv_sigma, ctx.geodesic
    )
    return float(per_node.sum())


def q_baseline(net: Network, p: Partition) -> float:
    """Baseline Modularity

    ```Q = 1/2m * sum_vw [A_vw - k_v k_w / 2m] delta(c_v, c_w)``` over all
    ordered pairs, the diagonal included.

    Raises:
        InputError: Graph without edges, or a partition of the wrong size.
    """
    if net.m < 1:
        raise InputError("modularity is undefined for a graph without edges")
    p.check(net.n)
    two_m = 2.0 * net.m
    src, dst = net.edge_arrays
    internal = 2.0 * float((p.labels[src] == p.labels[dst]).sum())
    kc = bincount(p.labels, weights=net.degrees.astype(float64),
        minlength=p.community_count)
    return (internal - float((kc * kc).sum()) / two_m) / two_m


def c_g(net: Network, ctx: WeightContext, p: Partition) -> float:
    """Share of locality weighted edge mass inside communities."""
    ctx.require(Variant.LOCALITY)
    _check(net, ctx, p)
    return internal_mass(ctx, p) / ctx.omega


def p_g(net: Network, ctx: WeightContext, p: Partition) -> float:
    """Expected value of ```c_g``` under the degree preserving null model."""
    ctx.require(Variant.LOCALITY)
    _check(net, ctx, p)
    return null_mass(net, ctx, p) / ctx.omega


def q_locality(net: Network, ctx: WeightContext, p: Partition) -> float:
    """```c_g - p_g```"""
    return c_g(net, ctx, p) - p_g(net, ctx, p)


def q_similarity(net: Network, ctx: WeightContext, p: Partition) -> float:
    """Similarity Modularity

    ```Q = 1/2w * sum_vw [A S L - L (k_v k_w / 2m) tau sqrt(k_v k_w)] delta```
    over all ordered pairs. S is only ever evaluated on edges.
    """
    ctx.require(Variant.SIMILARITY)
    _check(net, ctx, p)
    return (internal_mass(ctx, p) - null_mass(net, ctx, p)) / ctx.norm


def modularity(net: Network, ctx: WeightContext, p: Partition) -> float:
    """Evaluates the functional of ```ctx.variant``` from scratch."""
    if ctx.variant is Variant.BASELINE:
        _check(net, ctx, p)
        return q_baseline(net, p)
    if ctx.variant is Variant.LOCALITY:
        return q_locality(net, ctx, p)
    return q_similarity(net, ctx, p)
