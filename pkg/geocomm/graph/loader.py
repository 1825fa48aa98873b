# -*- coding: utf-8 -*-
import logging

from numpy import array, float64, int64

from geocomm._typing import Dict, FileName, Optional, Tuple
from geocomm.errors import InputError
from geocomm.graph.network import Network
from geocomm.maps import Metric
from geocomm.utils import (
    format_key_values,
    parse_float,
    read_records,
    v_metric,
    write_text
)

__all__ = [
    "load_locations",
    "load_network",
    "write_edges",
    "write_locations",
]

logger = logging.getLogger(__name__)



def load_locations(
    location_file: FileName, metric: Metric = None
) -> Dict[str, Tuple[float, float]]:
    """Reads ```<id><TAB><x><TAB><y>``` rows into ```{id: (x, y)}```.

    Raises:
        InputError: Malformed line, duplicate id, non-finite value, or a
            coordinate outside [-180, 180] x [-90, 90] in geodesic mode.
    """
    metric = v_metric(metric)
    locations: Dict[str, Tuple[float, float]] = {}
    for line, (node, sx, sy, *_) in read_records(location_file, 3, "location"):
        x = parse_float(sx, location_file, line)
        y = parse_float(sy, location_file, line)
        if metric is Metric.GEODESIC and not (-180 <= x <= 180 and -90 <= y <= 90):
            raise InputError(
                f"coordinate ({x}, {y}) out of range for geodesic metric",
                path=location_file, line=line
            )
        if node in locations:
            raise InputError(f"duplicate location for node '{node}'",
                path=location_file, line=line)
        locations[node] = (x, y)
    return locations


def load_network(
    edge_file: FileName, location_file: FileName, metric: Metric = None
) -> Network:
    """Load Network

    Reads an edge list and a location file into a Network. Node indices
    follow the lexicographic order of external ids, so loading the same
    files twice yields identical networks.

    Parameters:
        edge_file (FileName): ```<id_u><TAB><id_v>``` per line.
        location_file (FileName): ```<id><TAB><x><TAB><y>``` per line.
        metric (Metric): ```"planar"``` or ```"geodesic"```.
            Default: ```"planar"```

    Returns:
        (Network): Self-loops and duplicate edges dropped with a warning;
            nodes found only in the location file are kept isolated.

    Raises:
        InputError: Malformed line (with its number), an edge endpoint
            without a location, or an out-of-range geodesic coordinate.
    """
    metric = v_metric(metric)
    locations = load_locations(location_file, metric)

    pairs = []
    for line, (u, v, *_) in read_records(edge_file, 2, "edge"):
        for node in (u, v):
            if node not in locations:
                raise InputError(f"edge endpoint '{node}' has no location",
                    path=edge_file, line=line)
        pairs.append((u, v))

    ids = sorted(locations)
    index = {s: i for i, s in enumerate(ids)}
    src = array([index[u] for u, _ in pairs], dtype=int64)
    dst = array([index[v] for _, v in pairs], dtype=int64)
    xy = array([locations[s] for s in ids], dtype=float64).reshape(len(ids), 2)

    net = Network.from_edges(ids, xy, src, dst, metric)
    logger.info("[+] loaded %s from %s", net, edge_file)
    return net


def write_edges(
    net: Network, path: FileName, header: Optional[Dict] = None
) -> None:
    """Writes the edge list, one ```id_u<TAB>id_v``` per edge."""
    src, dst = net.edge_arrays
    ids = net.ids
    body = "".join(f"{ids[a]}\t{ids[b]}\n" for a, b in zip(src.tolist(), dst.tolist()))
    write_text(path, format_key_values(header or {}, comment=True) + body)


def write_locations(
    net: Network, path: FileName, header: Optional[Dict] = None
) -> None:
    """Writes ```id<TAB>x<TAB>y``` per node using ```repr``` precision."""
    body = "".join(
        f"{s}\t{x!r}\t{y!r}\n"
        for s, (x, y) in zip(net.ids, net.xy.tolist())
    )
    write_text(path, format_key_values(header or {}, comment=True) + body)
