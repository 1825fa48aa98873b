# -*- coding: utf-8 -*-
import json
import logging
import sys
from dataclasses import dataclass, field
from functools import wraps
from pathlib import Path
from time import perf_counter

import click
import numba

from geocomm import version
from geocomm._typing import Any, Dict, List, Optional
from geocomm.config import get_settings
from geocomm.detection import detect, write_dendrogram
from geocomm.errors import GeoCommError
from geocomm.experiment import Experiment, run_benchmark, run_experiment
from geocomm.graph import infer_home_locations, load_checkins, load_network
from geocomm.locality import locality_report, similarity_distance_profile, write_report
from geocomm.maps import DEFAULTS, FILES, OMEGA_SWEEP, SYNTH_DEFAULTS, Metric, Variant
from geocomm.metrics import (
    accuracy,
    community_scores,
    load_labels,
    load_partition,
    size_profile,
    write_partition
)
from geocomm.synth import SynthConfig, generate, parse_omega, write_synth
from geocomm.utils import format_key_values, get_time, timed, write_text

__all__ = ["RunManifest", "cli", "main"]

logger = logging.getLogger(__name__)

settings = get_settings()
METRICS = click.Choice([m.value for m in Metric])
VARIANTS = click.Choice([v.value for v in Variant])
EXISTING = click.Path(exists=True, dir_okay=False, path_type=Path)



@dataclass
class RunManifest:
    """Everything needed to repeat a run, written as ```key=value``` text."""
    subcommand: str
    output_dir: str
    inputs: Dict[str, str] = field(default_factory=dict)
    parameters: Dict[str, Any] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)
    created: str = field(default_factory=get_time)

    def items(self) -> Dict[str, Any]:
        items = {
            "subcommand": self.subcommand,
            "geocomm_version": version,
            "created": self.created,
            "output_dir": self.output_dir,
        }
        items.update({f"input.{k}": v for k, v in self.inputs.items()})
        items.update({f"param.{k}": v for k, v in self.parameters.items()})
        items.update({f"time.{k}": f"{v:.6f}" for k, v in self.timings.items()})
        return items

    def write(self, out_dir: Path) -> Path:
        return write_text(out_dir / FILES["manifest"], format_key_values(self.items()))


def guarded(func):
    """Maps GeoCommError to its exit code with a one-line message."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except GeoCommError as e:
            logger.debug("command failed", exc_info=True)
            click.echo(f"[X] {e}", err=True)
            sys.exit(e.exit_code)
    return wrapper


def _csv_list(value: str, cast) -> List:
    try:
        return [cast(v) for v in value.split(",") if v.strip()]
    except ValueError as e:
        raise click.BadParameter(str(e)) from None


@click.group()
@click.option("--log-level", default=settings.log_level, show_default=True,
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False))
@click.option("--threads", default=settings.threads, show_default=True,
    type=click.IntRange(min=1), help="Worker cap for parallel phases.")
@click.version_option(version, prog_name="geocomm")
@click.pass_context
def cli(ctx: click.Context, log_level: str, threads: int):
    """Geography-aware community detection on location-tagged networks."""
    logging.basicConfig(
        level=log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
    ctx.ensure_object(dict)
    ctx.obj["threads"] = threads


@cli.command("generate")
@click.option("--grid-side", default=SYNTH_DEFAULTS["grid_side"], show_default=True, type=int)
@click.option("--nodes", "node_count", default=None, type=int,
    help="Node count (default grid-side squared).")
@click.option("--labels", "label_count", default=SYNTH_DEFAULTS["label_count"],
    show_default=True, type=int)
@click.option("--omega", default=str(SYNTH_DEFAULTS["omega"]), show_default=True,
    help="Distance scale in km, or 'inf'.")
@click.option("--p-same", default=SYNTH_DEFAULTS["p_same"], show_default=True, type=float)
@click.option("--p-diff", default=SYNTH_DEFAULTS["p_diff"], show_default=True, type=float)
@click.option("--avg-degree", "target_avg_degree", default=SYNTH_DEFAULTS["target_avg_degree"],
    show_default=True, type=float)
@click.option("--alpha", default=None, type=float, help="Skip calibration.")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("-o", "--out", "out_dir", required=True, type=click.Path(path_type=Path))
@click.pass_context
@guarded
def cmd_generate(ctx, out_dir: Path, omega: str, **kwargs):
    """Write a synthetic planted-partition network."""
    timings: Dict[str, float] = {}
    cfg = SynthConfig.create(omega=parse_omega(omega), **kwargs)
    with timed(timings, "generate"):
        synth = generate(cfg, threads=ctx.obj["threads"])
    write_synth(synth, out_dir)
    params = {**cfg.header(), "alpha": synth.alpha, "threads": ctx.obj["threads"]}
    RunManifest("generate", str(out_dir), parameters=params, timings=timings).write(out_dir)
    net = synth.network
    click.echo(f"nodes={net.n}\nedges={net.m}\nmean_degree={2 * net.m / net.n:.4f}"
        f"\nalpha={synth.alpha!r}")


@cli.command("analyze")
@click.argument("edges", type=EXISTING)
@click.argument("locations", type=EXISTING)
@click.option("--metric", default=Metric.PLANAR.value, show_default=True, type=METRICS)
@click.option("--sample-size", default=settings.sample_size, show_default=True,
    type=click.IntRange(min=1))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--profile-bins", default=0, type=click.IntRange(min=0),
    help="Also write the similarity/distance profile with this many bins.")
@click.option("-o", "--out", "out_dir", default=None, type=click.Path(path_type=Path))
@guarded
def cmd_analyze(edges, locations, metric, sample_size, seed, profile_bins, out_dir):
    """Report how local the network is (TVD, inflection, sigma)."""
    timings: Dict[str, float] = {}
    with timed(timings, "load"):
        net = load_network(edges, locations, metric)
    with timed(timings, "locality"):
        report = locality_report(net, sample_size, seed)
    click.echo(format_key_values(report.summary()), nl=False)

    if out_dir is not None:
        write_report(report, out_dir / FILES["report"])
        if profile_bins:
            similarity_distance_profile(net, profile_bins) \
                .to_csv(out_dir / FILES["similarity_profile"], index=False)
        RunManifest("analyze", str(out_dir),
            inputs={"edges": str(edges), "locations": str(locations)},
            parameters={"metric": metric, "sample_size": sample_size, "seed": seed},
            timings=timings).write(out_dir)


@cli.command("detect")
@click.argument("edges", type=EXISTING)
@click.argument("locations", type=EXISTING)
@click.option("--variant", default=Variant.SIMILARITY.value, show_default=True, type=VARIANTS)
@click.option("--metric", default=Metric.PLANAR.value, show_default=True, type=METRICS)
@click.option("--sample-size", default=settings.sample_size, show_default=True,
    type=click.IntRange(min=1))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--sigma", "sigma_km", default=None, type=float,
    help="Locality scale in km (default: mean pair distance).")
@click.option("--communities", default=None, type=click.IntRange(min=1),
    help="Merge until this many communities remain.")
@click.option("--resync-every", default=settings.resync_every, show_default=True,
    type=click.IntRange(min=0))
@click.option("--debug/--no-debug", default=settings.debug, show_default=True)
@click.option("--calibrated-null/--literal-null", "calibrated", default=False, show_default=True,
    help="Rescale the null term so one all-node community scores 0.")
@click.option("-o", "--out", "out_dir", required=True, type=click.Path(path_type=Path))
@guarded
def cmd_detect(edges, locations, variant, metric, sample_size, seed, sigma_km,
        communities, resync_every, debug, calibrated, out_dir):
    """Detect communities by greedy modularity agglomeration."""
    timings: Dict[str, float] = {}
    with timed(timings, "load"):
        net = load_network(edges, locations, metric)
    stime = perf_counter()
    dendrogram = detect(
        net, variant, sample_size=sample_size, seed=seed, sigma_km=sigma_km,
        communities=communities, debug=debug, resync_every=resync_every,
        calibrated=calibrated,
    )
    timings["detect"] = perf_counter() - stime
    timings.update({f"detect.{k}": v for k, v in dendrogram.timings.items()})

    write_partition(dendrogram.partition, net, out_dir / FILES["partition"])
    write_dendrogram(dendrogram, out_dir / FILES["dendrogram"])
    summary = {
        "variant": variant,
        "nodes": net.n,
        "edges": net.m,
        "sigma_km": dendrogram.sigma_km,
        "merges": len(dendrogram.merges),
        "communities": dendrogram.community_count,
        "q_initial": dendrogram.q_initial,
        "q_final": dendrogram.q_final,
    }
    write_text(out_dir / FILES["summary"], json.dumps(summary, indent=2) + "\n")
    RunManifest("detect", str(out_dir),
        inputs={"edges": str(edges), "locations": str(locations)},
        parameters={"variant": variant, "metric": metric, "sample_size": sample_size,
            "seed": seed, "sigma_km": dendrogram.sigma_km, "communities": communities,
            "resync_every": resync_every, "calibrated": calibrated},
        timings=timings).write(out_dir)
    click.echo(format_key_values(summary), nl=False)


@cli.command("evaluate")
@click.argument("partition", type=EXISTING)
@click.argument("edges", type=EXISTING)
@click.argument("locations", type=EXISTING)
@click.option("--labels", "labels_file", default=None, type=EXISTING,
    help="Ground truth '<id><TAB><label>' file.")
@click.option("--metric", default=Metric.PLANAR.value, show_default=True, type=METRICS)
@click.option("-o", "--out", "out_dir", required=True, type=click.Path(path_type=Path))
@guarded
def cmd_evaluate(partition, edges, locations, labels_file, metric, out_dir):
    """Score a partition: spans, internal degree and accuracy."""
    timings: Dict[str, float] = {}
    with timed(timings, "load"):
        net = load_network(edges, locations, metric)
        p = load_partition(partition, net)
    with timed(timings, "score"):
        scores = community_scores(net, p)
        profile = size_profile(net, p, scores)
        result: Dict[str, Any] = {"communities": p.community_count}
        if labels_file is not None:
            result["accuracy"] = accuracy(p, load_labels(labels_file, net))
        result["size_profile"] = profile.to_dict(orient="records")

    out_dir.mkdir(parents=True, exist_ok=True)
    scores[["community", "size", "span_km", "avg_internal_degree"]] \
        .to_csv(out_dir / FILES["scores"], index=False)
    write_text(out_dir / FILES["evaluation"], json.dumps(result, indent=2) + "\n")
    inputs = {"partition": str(partition), "edges": str(edges), "locations": str(locations)}
    if labels_file is not None:
        inputs["labels"] = str(labels_file)
    RunManifest("evaluate", str(out_dir), inputs=inputs,
        parameters={"metric": metric}, timings=timings).write(out_dir)
    click.echo(f"communities={p.community_count}")
    if "accuracy" in result:
        click.echo(f"accuracy={result['accuracy']:.4f}")


@cli.command("benchmark")
@click.option("--sizes", default="2500,10000,20000", show_default=True)
@click.option("--variants", default=",".join(v.value for v in Variant), show_default=True)
@click.option("--omega", default=str(SYNTH_DEFAULTS["omega"]), show_default=True)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--repeats", default=1, show_default=True, type=click.IntRange(min=1))
@click.option("--sample-size", default=settings.sample_size, show_default=True,
    type=click.IntRange(min=1))
@click.option("-o", "--out", "out_dir", required=True, type=click.Path(path_type=Path))
@click.pass_context
@guarded
def cmd_benchmark(ctx, sizes, variants, omega, seed, repeats, sample_size, out_dir):
    """Time detection over a sweep of synthetic network sizes."""
    sizes = _csv_list(sizes, int)
    variants = [Variant(v) for v in _csv_list(variants, str)]
    timings: Dict[str, float] = {}
    with timed(timings, "benchmark"):
        table = run_benchmark(
            sizes, variants, seed=seed, base=SynthConfig.create(omega=parse_omega(omega)),
            threads=ctx.obj["threads"], sample_size=sample_size, repeats=repeats,
            verbose=True,
        )
    out_dir.mkdir(parents=True, exist_ok=True)
    table.to_csv(out_dir / FILES["benchmark"], index=False)
    RunManifest("benchmark", str(out_dir), parameters={
        "sizes": ",".join(map(str, sizes)), "variants": ",".join(v.value for v in variants),
        "omega": omega, "seed": seed, "repeats": repeats, "sample_size": sample_size,
        "threads": ctx.obj["threads"]}, timings=timings).write(out_dir)
    click.echo(table.to_string(index=False))


@cli.command("experiment")
@click.option("--name", default="synthetic", show_default=True)
@click.option("--omegas", default=",".join("inf" if o == float("inf") else f"{o:g}"
    for o in OMEGA_SWEEP), show_default=True)
@click.option("--seeds", default=5, show_default=True, type=click.IntRange(min=1))
@click.option("--methods", default="baseline,locality,similarity,random", show_default=True)
@click.option("--grid-side", default=SYNTH_DEFAULTS["grid_side"], show_default=True, type=int)
@click.option("--avg-degree", "target_avg_degree", default=SYNTH_DEFAULTS["target_avg_degree"],
    show_default=True, type=float)
@click.option("--calibrated-null/--literal-null", "calibrated", default=False, show_default=True)
@click.option("--sample-size", default=settings.sample_size, show_default=True,
    type=click.IntRange(min=1))
@click.option("-o", "--out", "out_dir", required=True, type=click.Path(path_type=Path))
@click.pass_context
@guarded
def cmd_experiment(ctx, name, omegas, seeds, methods, grid_side, target_avg_degree,
        calibrated, sample_size, out_dir):
    """Accuracy table and size profiles across omega and seeds."""
    try:
        experiment = Experiment(
            name=name, omegas=_csv_list(omegas, parse_omega), seeds=list(range(seeds)),
            methods=_csv_list(methods, str),
            base=SynthConfig.create(grid_side=grid_side, target_avg_degree=target_avg_degree),
            threads=ctx.obj["threads"], sample_size=sample_size, calibrated=calibrated,
        )
    except ValueError as e:
        raise click.BadParameter(str(e)) from None
    timings: Dict[str, float] = {}
    with timed(timings, "experiment"):
        result = run_experiment(experiment, verbose=True)

    out_dir.mkdir(parents=True, exist_ok=True)
    result.runs.to_csv(out_dir / FILES["runs"], index=False)
    result.accuracy.to_csv(out_dir / FILES["accuracy"], index=False)
    result.profiles.to_csv(out_dir / FILES["profiles"], index=False)
    RunManifest("experiment", str(out_dir), parameters={
        "name": name, "omegas": omegas, "seeds": seeds, "methods": methods,
        "grid_side": grid_side, "avg_degree": target_avg_degree,
        "sample_size": sample_size, "calibrated": calibrated, "threads": ctx.obj["threads"]},
        timings=timings).write(out_dir)
    click.echo(result.accuracy.to_string(index=False))


@cli.command("homes")
@click.argument("checkins", type=EXISTING)
@click.option("--cell-km", default=DEFAULTS["cell_km"], show_default=True,
    type=click.FloatRange(min=0, min_open=True))
@click.option("-o", "--out", "out_file", required=True,
    type=click.Path(dir_okay=False, path_type=Path))
@guarded
def cmd_homes(checkins, cell_km, out_file):
    """Infer one home location per id from check-ins."""
    homes = infer_home_locations(load_checkins(checkins), cell_km)
    body = "".join(
        f"{r.id}\t{float(r.x)!r}\t{float(r.y)!r}\n" for r in homes.itertuples(index=False)
    )
    write_text(out_file, format_key_values({"cell_km": cell_km, "source": checkins},
        comment=True) + body)
    click.echo(f"homes={len(homes)}")


def main(args: Optional[List[str]] = None) -> None:
    cli.main(args=args, prog_name="geocomm", obj={})
