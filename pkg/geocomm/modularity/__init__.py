# -*- coding: utf-8 -*-
from .partition import *
from .weights import *
from .evaluate import *
from .partition import __all__ as _partition_all
from .weights import __all__ as _weights_all
from .evaluate import __all__ as _evaluate_all

__all__ = (
    _partition_all
    + _weights_all
    + _evaluate_all
)
