# -*- coding: utf-8 -*-
from pathlib import Path
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union
)

from numpy import ndarray
from numpy import floating as np_floating
from numpy import integer as np_integer
from pandas import Series



# Scalars
Int = Union[int, np_integer]
Float = Union[float, np_floating]
IntFloat = Union[Int, Float]

FileName = Union[str, Path]

# Arrays. Node indices are int64, weights and coordinates float64.
Array = ndarray
Array1d = ndarray
IntArray = ndarray
FloatArray = ndarray
Coordinates = ndarray  # (n, 2): x then y
AnyArray1d = Union[Array1d, Series, Sequence[IntFloat]]
