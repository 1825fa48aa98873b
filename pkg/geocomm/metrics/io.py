# -*- coding: utf-8 -*-
from geocomm._typing import Dict, FileName, IntArray, Optional
from geocomm.errors import InputError
from geocomm.graph import Network
from geocomm.modularity import Partition
from geocomm.utils import format_key_values, read_records, write_text

__all__ = [
    "load_labels",
    "load_partition",
    "write_partition",
]



def _read_assignment(path: FileName, net: Network, what: str) -> list:
    """One token per node of ```net```, in node index order."""
    index = net.index
    tokens: list = [None] * net.n
    for line, (node, token, *_) in read_records(path, 2, what):
        v = index.get(node)
        if v is None:
            raise InputError(f"unknown node '{node}'", path=path, line=line)
        if tokens[v] is not None:
            raise InputError(f"node '{node}' assigned twice", path=path, line=line)
        tokens[v] = token
    missing = [net.ids[v] for v, t in enumerate(tokens) if t is None]
    if missing:
        raise InputError(f"{len(missing)} node(s) unassigned, e.g. '{missing[0]}'", path=path)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        return tokens


def load_partition(path: FileName, net: Network) -> Partition:
    """Reads ```<node id><TAB><community id>``` for every node."""
    return Partition.from_labels(_read_assignment(path, net, "partition"))


def load_labels(path: FileName, net: Network) -> IntArray:
    """Reads ```<node id><TAB><label>``` ground truth, compacted to
    ```0..k - 1```."""
    return Partition.from_labels(_read_assignment(path, net, "label")).labels


def write_partition(
    p: Partition, net: Network, path: FileName, header: Optional[Dict] = None
) -> None:
    p.check(net.n)
    body = "".join(f"{s}\t{c}\n" for s, c in zip(net.ids, p.labels.tolist()))
    write_text(path, format_key_values(header or {}, comment=True) + body)
