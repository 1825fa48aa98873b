# -*- coding: utf-8 -*-
from .scores import *
from .io import *
from .scores import __all__ as _scores_all
from .io import __all__ as _io_all

__all__ = _scores_all + _io_all
