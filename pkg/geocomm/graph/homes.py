# -*- coding: utf-8 -*-
import logging

from numpy import clip, cos, floor, maximum, radians
from pandas import DataFrame

from geocomm._typing import FileName, IntFloat
from geocomm.errors import InputError
from geocomm.maps import DEFAULTS, KM_PER_DEGREE
from geocomm.utils import parse_float, read_records, v_pos_default

__all__ = [
    "infer_home_locations",
    "load_checkins",
]

logger = logging.getLogger(__name__)



def load_checkins(path: FileName) -> DataFrame:
    """Reads ```<id><TAB><lon><TAB><lat>[<TAB>...]``` check-in rows.

    Returns:
        (DataFrame): columns ```id, x, y```
    """
    rows = []
    for line, (node, sx, sy, *_) in read_records(path, 3, "check-in"):
        rows.append((node, parse_float(sx, path, line), parse_float(sy, path, line)))
    return DataFrame(rows, columns=["id", "x", "y"])


def infer_home_locations(
    checkins: DataFrame, cell_km: IntFloat = None
) -> DataFrame:
    """Home Locations

    Picks one home per id from its check-ins: the centre of the
    ```cell_km``` x ```cell_km``` cell holding most of them. Cells are
    latitude bands of ```cell_km / 111.195``` degrees, each cut into
    longitude slices whose width in degrees grows with ```1 / cos(lat)```
    of the band centre. Ties go to the smallest (band, slice).

    Parameters:
        checkins (DataFrame): columns ```id, x, y``` as (lon, lat) degrees
        cell_km (float): Cell side. Default: ```25```

    Returns:
        (DataFrame): columns ```id, x, y```, one row per id, sorted by id.

    Raises:
        InputError: Empty input or coordinates outside the globe.
    """
    cell_km = v_pos_default(cell_km, DEFAULTS["cell_km"])
    if checkins is None or checkins.empty:
        raise InputError("no check-ins to infer home locations from")
    lon, lat = checkins["x"].to_numpy(float), checkins["y"].to_numpy(float)
    if (abs(lon) > 180).any() or (abs(lat) > 90).any():
        raise InputError("check-in coordinates must be (lon, lat) degrees")

    lat_step = cell_km / KM_PER_DEGREE
    band = floor((lat + 90.0) / lat_step)
    lat_c = clip(-90.0 + (band + 0.5) * lat_step, -90.0, 90.0)
    lon_step = lat_step / maximum(cos(radians(lat_c)), 1e-6)
    slot = floor((lon + 180.0) / lon_step)
    lon_c = clip(-180.0 + (slot + 0.5) * lon_step, -180.0, 180.0)

    cells = DataFrame({
        "id": checkins["id"].astype(str).to_numpy(),
        "band": band.astype(int), "slot": slot.astype(int),
        "x": lon_c, "y": lat_c,
    })
    counts = cells.groupby(["id", "band", "slot"], sort=True) \
        .agg(count=("x", "size"), x=("x", "first"), y=("y", "first")) \
        .reset_index()
    counts = counts.sort_values(
        ["id", "count", "band", "slot"], ascending=[True, False, True, True],
        kind="mergesort"
    )
    homes = counts.drop_duplicates("id", keep="first")[["id", "x", "y"]]
    logger.info("[+] inferred %d home locations from %d check-ins",
        len(homes), len(checkins))
    return homes.reset_index(drop=True)
