# -*- coding: utf-8 -*-
from functools import partial

from numpy import asarray, diff, float64, isfinite
from numpy import integer as np_integer
from numpy import floating as np_floating

from geocomm._typing import AnyArray1d, Array, Int, IntFloat, Optional
from geocomm.errors import InputError
from geocomm.maps import DEFAULTS, Metric, Variant

__all__ = [
    "v_bool",
    "v_grid",
    "v_int",
    "v_lowerbound",
    "v_metric",
    "v_node",
    "v_pos_default",
    "v_sample_size",
    "v_seed",
    "v_variant",
]



def v_bool(var: bool, default: bool = False) -> bool:
    """Returns default if var is not a bool."""
    if isinstance(var, bool):
        return bool(var)
    return default


def v_int(var: Int, default: Int) -> int:
    """Returns default if var is not an integer (bools excluded)."""
    if isinstance(var, bool):
        return int(default)
    if isinstance(var, (int, np_integer)):
        return int(var)
    return int(default)


def v_lowerbound(
    var: IntFloat, bound: IntFloat = 0,
    default: IntFloat = 0, strict: bool = True
) -> IntFloat:
    """Returns default if var(iable) is not greater (or equal) than bound."""
    var_type = None
    if isinstance(var, (float, np_floating)): var_type = float
    if isinstance(var, (int, np_integer)) and not isinstance(var, bool):
        var_type = int

    if var_type is None:
        return default

    if strict:
        valid = var_type(var) > var_type(bound)
    else:
        valid = var_type(var) >= var_type(bound)
    return var_type(var) if valid else default


def v_pos_default(
    var: IntFloat, default: IntFloat = 0, strict: bool = True
) -> IntFloat:
    return partial(v_lowerbound, bound=0)(var=var, default=default, strict=strict)


def v_sample_size(var: Optional[Int]) -> int:
    """Pair sample size. Defaults to ```DEFAULTS["sample_size"]```; values
    below 1 are rejected."""
    size = v_int(var, DEFAULTS["sample_size"])
    if size < 1:
        raise InputError(f"sample_size must be >= 1, got {size}")
    return size


def v_seed(var: Optional[Int]) -> int:
    """RNG seed. Defaults to ```DEFAULTS["seed"]```; negatives rejected."""
    seed = v_int(var, DEFAULTS["seed"])
    if seed < 0:
        raise InputError(f"seed must be non-negative, got {seed}")
    return seed


def v_grid(grid: AnyArray1d) -> Array:
    """Distance breakpoints: non-empty, finite, strictly increasing."""
    g = asarray(grid, dtype=float64).ravel()
    if g.size == 0:
        raise InputError("distance grid is empty")
    if not isfinite(g).all():
        raise InputError("distance grid has non-finite breakpoints")
    if g.size > 1 and (diff(g) <= 0).any():
        raise InputError("distance grid must be strictly increasing")
    return g


def v_metric(var) -> Metric:
    """Accepts a Metric or its string value. Defaults to planar."""
    if var is None:
        return Metric.PLANAR
    try:
        return Metric(var)
    except ValueError:
        choices = ", ".join(m.value for m in Metric)
        raise InputError(f"unknown metric '{var}' (choose from {choices})") from None


def v_variant(var) -> Variant:
    """Accepts a Variant or its string value. Defaults to similarity."""
    if var is None:
        return Variant.SIMILARITY
    try:
        return Variant(var)
    except ValueError:
        choices = ", ".join(v.value for v in Variant)
        raise InputError(f"unknown variant '{var}' (choose from {choices})") from None


def v_node(var: Int, n: int) -> int:
    """Node index within [0, n)."""
    if isinstance(var, bool) or not isinstance(var, (int, np_integer)):
        raise InputError(f"node index must be an integer, got {var!r}")
    if not 0 <= int(var) < n:
        raise InputError(f"node index {var} out of range [0, {n})")
    return int(var)
