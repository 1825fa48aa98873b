# -*- coding: utf-8 -*-
from ._io import *
from ._numba import *
from ._time import *
from ._validate import *
from ._io import __all__ as _io_all
from ._numba import __all__ as _numba_all
from ._time import __all__ as _time_all
from ._validate import __all__ as _validate_all

__all__ = (
    _io_all
    + _numba_all
    + _time_all
    + _validate_all
)
