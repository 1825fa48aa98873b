# -*- coding: utf-8 -*-
from enum import Enum
from math import inf

from geocomm._typing import Dict, IntFloat


class Metric(str, Enum):
    """Distance function of a Network.

    ```planar``` reads (x, y) as kilometres, ```geodesic``` reads them as
    (longitude, latitude) degrees.
    """
    PLANAR = "planar"
    GEODESIC = "geodesic"


class Variant(str, Enum):
    """Modularity functional driving the agglomeration."""
    BASELINE = "baseline"
    LOCALITY = "locality"
    SIMILARITY = "similarity"


EARTH_RADIUS_KM: float = 6371.0
KM_PER_DEGREE: float = 111.195  # mean meridian degree at R = 6371 km

# Locality diagnostic
TVD_THRESHOLD: float = 0.25
GRID_POINTS: int = 512
GRID_LOW_PERCENTILE: float = 0.1

# Defaults shared by the library and the CLI
DEFAULTS: Dict[str, IntFloat] = {
    "sample_size": 2_000_000,
    "seed": 0,
    "threads": 1,
    "resync_every": 1024,
    "drift_tolerance": 1e-6,
    "cell_km": 25.0,
}

# Synthetic benchmark defaults
SYNTH_DEFAULTS: Dict[str, IntFloat] = {
    "grid_side": 50,
    "label_count": 10,
    "omega": 3.0,
    "p_same": 0.5,
    "p_diff": 0.1,
    "target_avg_degree": 15.0,
}

# Omega sweep of the accuracy table
OMEGA_SWEEP = (1.0, 3.0, 5.0, 10.0, 30.0, inf)

# Exit codes of the command line
EXIT_CODES: Dict[str, int] = {
    "ok": 0,
    "internal": 1,
    "input": 2,
    "infeasible": 3,
}

# Output file names written by the command line
FILES: Dict[str, str] = {
    "edges": "edges.tsv",
    "locations": "locations.tsv",
    "labels": "labels.tsv",
    "manifest": "manifest.txt",
    "report": "locality.txt",
    "similarity_profile": "similarity_profile.csv",
    "partition": "partition.tsv",
    "dendrogram": "dendrogram.csv",
    "summary": "summary.json",
    "scores": "scores.csv",
    "evaluation": "evaluation.json",
    "benchmark": "benchmark.csv",
    "runs": "runs.csv",
    "accuracy": "accuracy.csv",
    "profiles": "size_profiles.csv",
}
