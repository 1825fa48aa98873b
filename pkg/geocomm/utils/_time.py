# -*- coding: utf-8 -*-
from contextlib import contextmanager
from datetime import datetime, timezone
from time import perf_counter

from geocomm._typing import Dict, Float

__all__ = [
    "final_time",
    "get_time",
    "timed",
]



def final_time(stime: Float) -> str:
    """Human readable elapsed time since stime (a ```perf_counter``` value)."""
    time_diff = perf_counter() - stime
    return f"{time_diff * 1000:2.4f} ms ({time_diff:2.4f} s)"


def get_time() -> str:
    """Current UTC time, ISO 8601 to the second."""
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


@contextmanager
def timed(timings: Dict[str, float], phase: str):
    """Adds the wall-clock seconds of the block to ```timings[phase]```."""
    stime = perf_counter()
    try:
        yield
    finally:
        timings[phase] = timings.get(phase, 0.0) + (perf_counter() - stime)
