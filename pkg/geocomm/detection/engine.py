# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass, field
from time import perf_counter

from numpy import arange, int64, nan
from pandas import DataFrame
from tqdm import tqdm

from geocomm._typing import FileName, Int, IntFloat, List, Optional
from geocomm.detection.ledger import DeltaQLedger, MergeRecord
from geocomm.errors import InputError
from geocomm.graph import Network
from geocomm.maps import Variant
from geocomm.modularity import Partition, WeightContext, build_context
from geocomm.utils import final_time, v_bool, v_variant, write_text

__all__ = [
    "Dendrogram",
    "detect",
    "write_dendrogram",
]

logger = logging.getLogger(__name__)

DENDROGRAM_COLUMNS = ["step", "i", "j", "deltaQ", "Q"]



@dataclass
class Dendrogram:
    """Merge history of one detection run.

    Parameters:
        merges (list): MergeRecords in order; ```j``` absorbed into ```i```.
        partition (Partition): Compacted partition after the last merge.
        q_initial (float): Q of the singleton partition (NaN without edges).
        variant (Variant): Functional that was maximised.
        n (int): Node count.
        sigma_km (float): Locality scale used (0 for baseline).
    """
    merges: List[MergeRecord]
    partition: Partition
    q_initial: float
    variant: Variant
    n: int
    sigma_km: float = 0.0
    timings: dict = field(default_factory=dict)

    @property
    def q_final(self) -> float:
        return self.merges[-1].q if self.merges else self.q_initial

    @property
    def community_count(self) -> int:
        return self.partition.community_count

    def partition_at(self, step: Int) -> Partition:
        """Partition after replaying the first ```step``` merges."""
        step = int(step)
        if not 0 <= step <= len(self.merges):
            raise InputError(f"step must be in [0, {len(self.merges)}], got {step}")
        members = {v: [v] for v in range(self.n)}
        for record in self.merges[:step]:
            members[record.i].extend(members.pop(record.j))
        labels = arange(self.n, dtype=int64)
        for c, nodes in members.items():
            labels[nodes] = c
        return Partition.from_labels(labels)

    def to_frame(self) -> DataFrame:
        return DataFrame(
            [tuple(r) for r in self.merges], columns=DENDROGRAM_COLUMNS
        ).astype({"step": int64, "i": int64, "j": int64})


def detect(
    net: Network, variant: Variant = None, sample_size: Int = None,
    seed: Int = None, sigma_km: IntFloat = None, communities: Int = None,
    debug: bool = None, resync_every: Int = None,
    ctx: Optional[WeightContext] = None, verbose: bool = None,
    calibrated: bool = None,
) -> Dendrogram:
    """Detect Communities

    Greedy agglomeration: start from singletons and repeatedly merge the
    adjacent pair with the largest modularity gain until no gain is
    positive. Deterministic for a given seed (sigma sampling) and the
    smallest-pair tie rule.

    Parameters:
        net (Network): Network to partition.
        variant (Variant): ```"baseline"```, ```"locality"``` or
            ```"similarity"```. Default: ```"similarity"```
        sample_size (int): Pair budget for sigma. Default: ```2_000_000```
        seed (int): Pair sampling seed. Default: ```0```
        sigma_km (float): Explicit locality scale. Default: mean pair
            distance.
        communities (int): Keep merging past the peak until this many
            communities remain. Default: None
        debug (bool): Check ledger symmetry after every merge and abort on
            Q drift. Default: False
        resync_every (int): Merges between from-scratch Q evaluations; 0
            disables. Default: ```1024```
        ctx (WeightContext): Reuse prebuilt weights. Default: None
        verbose (bool): Show a progress bar. Default: False
        calibrated (bool): Rescale the null term so that one community
            holding every node scores 0. Default: False

    Returns:
        (Dendrogram)

    Raises:
        InfeasibleError: Similarity variant with omega = 0.
    """
    variant = v_variant(variant if ctx is None else ctx.variant)
    verbose = v_bool(verbose, False)
    if communities is not None:
        communities = int(communities)
        if communities < 1:
            raise InputError(f"communities must be >= 1, got {communities}")

    if net.m == 0:
        logger.info("[+] no edges: every node is its own community")
        return Dendrogram([], Partition.singletons(net.n), nan, variant, net.n)

    timings = {}
    stime = perf_counter()
    if ctx is None:
        ctx = build_context(net, variant, sigma_km, sample_size, seed, calibrated)
    timings["weights"] = perf_counter() - stime

    stime = perf_counter()
    ledger = DeltaQLedger(net, ctx, debug=debug, resync_every=resync_every)
    merges: List[MergeRecord] = []
    force = communities is not None
    with tqdm(total=net.n - 1, desc=f"detect[{variant.value}]",
            disable=not verbose) as progress:
        while ledger.live > 1:
            if force and ledger.live <= communities:
                break
            record = ledger.merge_step(force=force)
            if record is None:
                break
            merges.append(record)
            progress.update(1)
    if merges and ledger.resync_every:
        ledger.resync()
        last = merges[-1]
        merges[-1] = last._replace(q=ledger.q)
    timings["merge"] = perf_counter() - stime

    logger.info("[+] %s: %d merges, %d communities, Q=%.6f in %s",
        variant.value, len(merges), ledger.live, ledger.q, final_time(stime))
    return Dendrogram(
        merges=merges, partition=ledger.partition(), q_initial=ledger.q_initial,
        variant=variant, n=net.n, sigma_km=ctx.sigma_km, timings=timings,
    )


def write_dendrogram(dendrogram: Dendrogram, path: FileName) -> None:
    """CSV with header ```step,i,j,deltaQ,Q```."""
    write_text(path, dendrogram.to_frame().to_csv(index=False, float_format="%.17g"))
