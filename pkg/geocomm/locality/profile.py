# -*- coding: utf-8 -*-
from numpy import arange, floor, int64, minimum
from pandas import DataFrame

from geocomm._typing import Int
from geocomm.errors import InputError
from geocomm.graph import Network, edge_lengths
from geocomm.utils import nb_edge_similarity, v_pos_default

__all__ = ["edge_similarities", "similarity_distance_profile"]



def edge_similarities(net: Network):
    """Node similarity of every edge, aligned with ```net.edge_arrays```."""
    src, dst = net.edge_arrays
    return nb_edge_similarity(net.indptr, net.indices, src, dst)


def similarity_distance_profile(net: Network, bins: Int = None) -> DataFrame:
    """Similarity Distance Profile

    Groups edges into equal-width node similarity bins over [0, 1] and
    reports the mean edge length of each. Similar pairs sitting closer
    together is what makes the similarity variant pay off.

    Parameters:
        net (Network): Network with ```m >= 1```
        bins (int): Number of bins. Default: ```10```

    Returns:
        (DataFrame): ```bin_low, bin_high, edges, mean_km```, one row per
            bin; ```mean_km``` is NaN for empty bins.
    """
    bins = int(v_pos_default(bins, 10))
    if net.m < 1:
        raise InputError("similarity profile needs at least one edge")

    s = edge_similarities(net)
    slot = minimum(floor(s * bins).astype(int64), bins - 1)
    frame = DataFrame({"slot": slot, "km": edge_lengths(net)})
    stats = frame.groupby("slot")["km"].agg(["size", "mean"])
    stats = stats.reindex(arange(bins))

    low = arange(bins) / bins
    return DataFrame({
        "bin_low": low,
        "bin_high": low + 1.0 / bins,
        "edges": stats["size"].fillna(0).astype(int64).to_numpy(),
        "mean_km": stats["mean"].to_numpy(),
    })
