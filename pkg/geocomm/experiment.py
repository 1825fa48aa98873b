# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass, field
from itertools import product
from math import ceil, isinf, sqrt
from time import perf_counter

from pandas import DataFrame, concat
from tqdm import tqdm

from geocomm._typing import Int, List, NamedTuple, Optional, Sequence
from geocomm.detection import detect
from geocomm.errors import InfeasibleError
from geocomm.maps import OMEGA_SWEEP, Variant
from geocomm.metrics import accuracy, community_scores, size_profile
from geocomm.registry import registry
from geocomm.synth import SynthConfig, generate
from geocomm.utils import get_time

__all__ = [
    "Experiment",
    "ExperimentResult",
    "run_benchmark",
    "run_experiment",
]

logger = logging.getLogger(__name__)

METHODS = ["baseline", "locality", "similarity", "random"]
RUN_COLUMNS = [
    "omega", "seed", "method", "nodes", "edges", "communities", "accuracy",
    "mean_span_km", "mean_internal_degree", "seconds",
]



@dataclass
class Experiment:
    """Experiment DataClass
    Names and groups synthetic runs: every method on a network generated
    for every (omega, seed).

    Parameters:
        name (str): Name.
        omegas (list of float): Generator distance scales; ```inf``` allowed.
            Default: ```1, 3, 5, 10, 30, inf```
        seeds (list of int): Generator seeds. Default: ```0..4```
        methods (list of str): Registered method names.
            Default: ```baseline, locality, similarity, random```
        base (SynthConfig): Generator settings other than omega and seed.
        threads (int): Generator worker processes. Default: ```1```
        sample_size (int): Pair budget for sigma. Default: ```2_000_000```
        calibrated (bool): Detect with the calibrated null term.
            Default: False
        description (str): Description. Default: ```""```
        created (str): UTC time at creation. Default: Automatically generated.

    Note:
        The random method draws ```base.label_count``` communities.
    """
    name: str
    omegas: List[float] = field(default_factory=lambda: list(OMEGA_SWEEP))
    seeds: List[int] = field(default_factory=lambda: list(range(5)))
    methods: List[str] = field(default_factory=lambda: list(METHODS))
    base: SynthConfig = field(default_factory=SynthConfig)
    threads: Int = 1
    sample_size: Optional[Int] = None
    calibrated: bool = False
    description: str = ""
    created: str = field(default_factory=get_time)

    def __post_init__(self):
        unknown = [m for m in self.methods if m not in registry]
        if unknown:
            raise ValueError(f"unknown method(s): {', '.join(unknown)}")

    @property
    def total(self) -> int:
        return len(self.omegas) * len(self.seeds) * len(self.methods)


class ExperimentResult(NamedTuple):
    runs: DataFrame
    accuracy: DataFrame
    profiles: DataFrame


def _omega_label(omega: float) -> str:
    return "inf" if isinf(omega) else f"{omega:g}"


def run_experiment(experiment: Experiment, verbose: bool = False) -> ExperimentResult:
    """Run Experiment

    Returns the per run table, the accuracy table (rows omega, columns
    method, median over seeds) and size profiles averaged over seeds per
    (omega, method, size).
    """
    rows, profiles = [], []
    bar = tqdm(total=experiment.total, desc=f"[i] {experiment.name}", disable=not verbose)
    for omega, seed in product(experiment.omegas, experiment.seeds):
        cfg = SynthConfig.create(**{**experiment.base.model_dump(), "omega": omega,
            "seed": seed, "node_count": experiment.base.node_count})
        synth = generate(cfg, threads=experiment.threads)
        net = synth.network
        for method in experiment.methods:
            stime = perf_counter()
            try:
                p = registry.call(
                    method, net, seed=seed, sample_size=experiment.sample_size,
                    community_count=cfg.label_count, calibrated=experiment.calibrated,
                )
            except InfeasibleError as e:
                logger.warning("[!] %s at omega=%s seed=%d skipped: %s",
                    method, _omega_label(omega), seed, e)
                bar.update(1)
                continue
            seconds = perf_counter() - stime
            scores = community_scores(net, p)
            rows.append((
                _omega_label(omega), seed, method, net.n, net.m, p.community_count,
                accuracy(p, synth.true_labels), float(scores["span_km"].mean()),
                float((scores["size"] * scores["avg_internal_degree"]).sum() / net.n),
                seconds,
            ))
            profile = size_profile(net, p, scores)
            profile.insert(0, "method", method)
            profile.insert(0, "seed", seed)
            profile.insert(0, "omega", _omega_label(omega))
            profiles.append(profile)
            bar.update(1)
    bar.close()

    runs = DataFrame(rows, columns=RUN_COLUMNS)
    order = [_omega_label(o) for o in experiment.omegas]
    if runs.empty:
        table = DataFrame(index=order).rename_axis("omega")
    else:
        table = runs.pivot_table(index="omega", columns="method", values="accuracy",
            aggfunc="median").reindex(order)
        table = table[[m for m in experiment.methods if m in table.columns]]
    if profiles:
        merged = concat(profiles, ignore_index=True).groupby(
            ["omega", "method", "size"], sort=False
        ).agg(
            communities=("communities", "sum"),
            mean_span_km=("mean_span_km", "mean"),
            mean_internal_degree=("mean_internal_degree", "mean"),
        ).reset_index()
    else:
        merged = DataFrame(columns=["omega", "method", "size", "communities",
            "mean_span_km", "mean_internal_degree"])
    logger.info("[+] experiment '%s': %d runs", experiment.name, len(runs))
    return ExperimentResult(runs, table.reset_index(), merged)


def run_benchmark(
    sizes: Sequence[int], variants: Sequence[Variant] = None, seed: Int = None,
    base: SynthConfig = None, threads: Int = 1, sample_size: Int = None,
    repeats: Int = 1, verbose: bool = False,
) -> DataFrame:
    """Run Benchmark

    Times detection on synthetic networks of the given node counts
    (lattice side ```ceil(sqrt(n))```). Repeated runs on one network must
    yield identical partitions; ```identical``` records whether they did.

    Returns:
        (DataFrame): ```nodes, edges, variant, seconds, communities, q,
            identical```
    """
    variants = [Variant(v) for v in (variants or list(Variant))]
    base = base or SynthConfig()
    seed = 0 if seed is None else int(seed)
    repeats = max(int(repeats), 1)
    rows = []
    bar = tqdm(total=len(sizes) * len(variants), desc="[i] benchmark", disable=not verbose)
    for n in sizes:
        side = int(ceil(sqrt(n)))
        cfg = SynthConfig.create(**{**base.model_dump(), "grid_side": side,
            "node_count": int(n), "seed": seed})
        net = generate(cfg, threads=threads).network
        for variant in variants:
            times, partitions, q = [], [], float("nan")
            try:
                for _ in range(repeats):
                    stime = perf_counter()
                    d = detect(net, variant, sample_size=sample_size, seed=seed)
                    times.append(perf_counter() - stime)
                    partitions.append(d.partition)
                    q = d.q_final
            except InfeasibleError as e:
                logger.warning("[!] %s on %d nodes skipped: %s", variant.value, n, e)
                bar.update(1)
                continue
            rows.append((net.n, net.m, variant.value, min(times),
                partitions[0].community_count, q,
                all(p == partitions[0] for p in partitions)))
            bar.update(1)
    bar.close()
    return DataFrame(rows, columns=["nodes", "edges", "variant", "seconds",
        "communities", "q", "identical"])
