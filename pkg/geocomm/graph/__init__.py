# -*- coding: utf-8 -*-
from .network import *
from .loader import *
from .homes import *
from .network import __all__ as _network_all
from .loader import __all__ as _loader_all
from .homes import __all__ as _homes_all

__all__ = _network_all + _loader_all + _homes_all
