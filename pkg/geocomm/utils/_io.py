# -*- coding: utf-8 -*-
from math import isfinite
from pathlib import Path

from geocomm._typing import Any, Dict, FileName, Iterable, List, Tuple
from geocomm.errors import InputError

__all__ = [
    "format_key_values",
    "parse_float",
    "read_records",
    "write_text",
]



def read_records(
    path: FileName, fields: int, what: str = "record"
) -> Iterable[Tuple[int, List[str]]]:
    """Read Records

    Yields ```(line_number, fields)``` of a tab separated UTF-8 file.
    Blank lines and lines starting with ```#``` are skipped. Extra
    trailing fields are kept.

    Parameters:
        path (FileName): File to read.
        fields (int): Minimum number of fields per line.
        what (str): Record name used in error messages.

    Raises:
        InputError: Missing file, or a line that is short or not UTF-8.
    """
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such {what} file", path=p)

    with p.open("rb") as fh:
        for line_no, data in enumerate(fh, start=1):
            try:
                line = data.decode("utf-8").rstrip("\r\n")
            except UnicodeDecodeError:
                raise InputError("not valid UTF-8", path=p, line=line_no) from None
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < fields or any(not s.strip() for s in parts[:fields]):
                raise InputError(
                    f"malformed {what}: expected {fields} tab separated fields",
                    path=p, line=line_no
                )
            yield line_no, [s.strip() for s in parts]


def parse_float(token: str, path: FileName = None, line: int = None) -> float:
    """Finite float or InputError naming the file and line."""
    try:
        value = float(token)
    except ValueError:
        raise InputError(f"not a number: '{token}'", path=path, line=line) from None
    if not isfinite(value):
        raise InputError(f"non-finite coordinate: '{token}'", path=path, line=line)
    return value


def format_key_values(items: Dict[str, Any], comment: bool = False) -> str:
    """One ```key=value``` per line, optionally as ```# ``` comments."""
    prefix = "# " if comment else ""
    return "".join(f"{prefix}{k}={v}\n" for k, v in items.items())


def write_text(path: FileName, text: str) -> Path:
    """Writes UTF-8 text, creating parent directories."""
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text, encoding="utf-8")
    return p
