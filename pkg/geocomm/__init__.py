# -*- coding: utf-8 -*-
version = "0.1.0"

from geocomm.maps import DEFAULTS, FILES, SYNTH_DEFAULTS, Metric, Variant
from geocomm.errors import GeoCommError, InfeasibleError, InputError, LedgerError
from geocomm.utils import *
from geocomm.utils import __all__ as utils_all

# Flat Structure. Supports geocomm.detect() or geocomm.detection.detect()
from geocomm.graph import *
from geocomm.locality import *
from geocomm.modularity import *
from geocomm.detection import *
from geocomm.synth import *
from geocomm.metrics import *
from geocomm.graph import __all__ as graph_all
from geocomm.locality import __all__ as locality_all
from geocomm.modularity import __all__ as modularity_all
from geocomm.detection import __all__ as detection_all
from geocomm.synth import __all__ as synth_all
from geocomm.metrics import __all__ as metrics_all

# Named methods for the benchmark and experiment runners
from geocomm.registry import MethodRegistry, registry
from geocomm.experiment import Experiment, run_benchmark, run_experiment

__all__ = [
    "DEFAULTS",
    "FILES",
    "SYNTH_DEFAULTS",
    "Metric",
    "Variant",
    "GeoCommError",
    "InfeasibleError",
    "InputError",
    "LedgerError",
    "version",
    "MethodRegistry",
    "registry",
    "Experiment",
    "run_benchmark",
    "run_experiment",
]

__all__ += (
    utils_all
    + graph_all
    + locality_all
    + modularity_all
    + detection_all
    + synth_all
    + metrics_all
)
