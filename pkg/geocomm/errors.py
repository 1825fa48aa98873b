# -*- coding: utf-8 -*-
from geocomm.maps import EXIT_CODES

__all__ = [
    "GeoCommError",
    "InfeasibleError",
    "InputError",
    "LedgerError",
]


class GeoCommError(Exception):
    """Base class. ```exit_code``` is what the command line returns."""
    exit_code: int = EXIT_CODES["internal"]


class InputError(GeoCommError, ValueError):
    """Malformed input files or invalid arguments."""
    exit_code = EXIT_CODES["input"]

    def __init__(self, message: str, path=None, line: int = None):
        self.path, self.line = path, line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{where}{message}")


class InfeasibleError(GeoCommError, ValueError):
    """The requested configuration has no defined answer (e.g. omega = 0)."""
    exit_code = EXIT_CODES["infeasible"]


class LedgerError(GeoCommError, RuntimeError):
    """The incremental ledger disagrees with itself or with the oracle."""
