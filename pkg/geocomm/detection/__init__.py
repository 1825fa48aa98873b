# -*- coding: utf-8 -*-
from .ledger import *
from .engine import *
from .ledger import __all__ as _ledger_all
from .engine import __all__ as _engine_all

__all__ = _ledger_all + _engine_all
