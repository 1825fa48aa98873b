# -*- coding: utf-8 -*-
from .cdf import *
from .profile import *
from .report import *
from .cdf import __all__ as _cdf_all
from .profile import __all__ as _profile_all
from .report import __all__ as _report_all

__all__ = (
    _cdf_all
    + _profile_all
    + _report_all
)
