# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path

from numpy import (
    arange, column_stack, concatenate, exp, float64, int64, sqrt, where, zeros
)
from numpy.random import default_rng

from geocomm._typing import FileName, FloatArray, Int, IntArray, Tuple
from geocomm.errors import InfeasibleError
from geocomm.graph import Network, write_edges, write_locations
from geocomm.maps import FILES, Metric
from geocomm.synth.config import SynthConfig
from geocomm.utils import format_key_values, nb_pair_weight_stats, v_int, write_text

__all__ = [
    "SynthNetwork",
    "assign_labels",
    "calibrate_alpha",
    "generate",
    "lattice",
    "write_synth",
]

logger = logging.getLogger(__name__)

BLOCK_ROWS = 256



@dataclass(frozen=True, eq=False)
class SynthNetwork:
    """Generated network with its planted labels and the alpha used."""
    network: Network
    true_labels: IntArray
    alpha: float
    config: SynthConfig


def lattice(cfg: SynthConfig) -> Tuple[Tuple[str, ...], FloatArray]:
    """Ids and integer grid coordinates of the first ```node_count``` cells
    in row-major order. Ids are zero padded so they sort numerically."""
    n = cfg.node_count
    v = arange(n, dtype=int64)
    xy = column_stack([v % cfg.grid_side, v // cfg.grid_side]).astype(float64)
    width = len(str(n - 1))
    return tuple(f"{i:0{width}d}" for i in range(n)), xy


def assign_labels(cfg: SynthConfig) -> IntArray:
    """Uniform labels in ```0..label_count - 1``` from ```cfg.seed```."""
    return default_rng(cfg.seed).integers(0, cfg.label_count, size=cfg.node_count)


def calibrate_alpha(cfg: SynthConfig, labels: IntArray = None) -> float:
    """Calibrate Alpha

    Solves ```sum_{v<w} p_e(alpha) * 2 / n = target_avg_degree```. The
    expected degree is linear in alpha, so the root is exact:
    ```alpha = target * n / (2 * sum_{v<w} p_c exp(-dis / omega))```.

    Parameters:
        cfg (SynthConfig): Configuration.
        labels (IntArray): Planted labels. Default: ```assign_labels(cfg)```

    Returns:
        (float): alpha, with every ```alpha * p_c * exp(-dis/omega) <= 1```.

    Raises:
        InfeasibleError: The target needs some pair probability above 1.
    """
    if cfg.target_avg_degree == 0:
        return 0.0
    labels = assign_labels(cfg) if labels is None else labels
    _, xy = lattice(cfg)
    row_sum, row_max = nb_pair_weight_stats(
        xy, labels.astype(int64), cfg.p_same, cfg.p_diff, cfg.inv_omega
    )
    total, peak = float(row_sum.sum()), float(row_max.max())
    if total <= 0.0:
        raise InfeasibleError("no node pairs to place edges on")

    alpha = cfg.target_avg_degree * cfg.node_count / (2.0 * total)
    alpha_max = 1.0 / peak
    if alpha > alpha_max:
        reachable = alpha_max * 2.0 * total / cfg.node_count
        raise InfeasibleError(
            f"target average degree {cfg.target_avg_degree} is unreachable: "
            f"at most {reachable:.3f} keeps every edge probability <= 1"
        )
    logger.debug("alpha=%.6g (alpha_max=%.6g)", alpha, alpha_max)
    return alpha


def _draw_block(args) -> Tuple[IntArray, IntArray]:
    """Edges of rows ```[lo, hi)```; block ```b``` owns RNG stream
    ```(seed, 1, b)``` so the result does not depend on worker count."""
    xy, labels, alpha, p_same, p_diff, inv_omega, seed, b, lo, hi = args
    rng = default_rng([seed, 1, b])
    n = xy.shape[0]
    src, dst = [], []
    for i in range(lo, hi):
        j = arange(i + 1, n, dtype=int64)
        if j.size == 0:
            continue
        d = sqrt(((xy[j] - xy[i]) ** 2).sum(axis=1))
        p = alpha * where(labels[j] == labels[i], p_same, p_diff) * exp(-d * inv_omega)
        hit = j[rng.random(j.size) < p]
        src.append(zeros(hit.size, dtype=int64) + i)
        dst.append(hit)
    if not src:
        return zeros(0, dtype=int64), zeros(0, dtype=int64)
    return concatenate(src), concatenate(dst)


def generate(cfg: SynthConfig = None, threads: Int = None) -> SynthNetwork:
    """Generate

    Places one node per lattice cell (unit spacing, planar km), assigns
    planted labels, calibrates alpha and draws every unordered pair as an
    independent Bernoulli edge.

    Parameters:
        cfg (SynthConfig): Default: ```SynthConfig()```
        threads (int): Worker processes for edge draws. Default: ```1```

    Returns:
        (SynthNetwork): Identical for identical ```cfg``` at any thread
            count.
    """
    cfg = SynthConfig() if cfg is None else cfg
    threads = max(v_int(threads, 1), 1)

    ids, xy = lattice(cfg)
    labels = assign_labels(cfg)
    alpha = calibrate_alpha(cfg, labels) if cfg.alpha is None else float(cfg.alpha)

    n = cfg.node_count
    jobs = [
        (xy, labels, alpha, cfg.p_same, cfg.p_diff, cfg.inv_omega, cfg.seed, b, lo,
            min(lo + BLOCK_ROWS, n))
        for b, lo in enumerate(range(0, n, BLOCK_ROWS))
    ]
    if threads > 1 and len(jobs) > 1:
        with Pool(min(threads, len(jobs))) as pool:
            parts = pool.map(_draw_block, jobs)
    else:
        parts = [_draw_block(job) for job in jobs]

    src = concatenate([p[0] for p in parts]) if parts else zeros(0, dtype=int64)
    dst = concatenate([p[1] for p in parts]) if parts else zeros(0, dtype=int64)
    net = Network.from_edges(ids, xy, src, dst, Metric.PLANAR)
    logger.info("[+] generated %s, mean degree %.3f (alpha=%.6g, omega=%s)",
        net, 2.0 * net.m / max(n, 1), alpha, cfg.omega)
    labels.setflags(write=False)
    return SynthNetwork(net, labels, alpha, cfg)


def write_synth(synth: SynthNetwork, out_dir: FileName) -> Path:
    """Writes edges, locations and labels with the config as a header."""
    out = Path(out_dir)
    header = {**synth.config.header(), "alpha": synth.alpha}
    write_edges(synth.network, out / FILES["edges"], header)
    write_locations(synth.network, out / FILES["locations"], header)
    body = "".join(
        f"{s}\t{c}\n" for s, c in zip(synth.network.ids, synth.true_labels.tolist())
    )
    write_text(out / FILES["labels"], format_key_values(header, comment=True) + body)
    return out
