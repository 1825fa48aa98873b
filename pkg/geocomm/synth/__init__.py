# -*- coding: utf-8 -*-
from .config import *
from .generator import *
from .config import __all__ as _config_all
from .generator import __all__ as _generator_all

__all__ = _config_all + _generator_all
