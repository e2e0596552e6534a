"""Coamoebae of circuit polynomials: profiles, classification, rasters, systems."""

import json

from ._core import (
    CoamoebaError,
    __version__,
    area,
    classify,
    colopsided,
    critical_arguments,
    discriminant,
    fewnomial_campaign,
    in_discriminant_coamoeba,
    index_set,
    order_map,
    profile,
    raster,
    solve_system,
)
from ._core import run as _run


def report(command, **spec):
    """JSON report for a CLI subcommand, as a dict (CSV text for sweep)."""
    text = _run(command, json.dumps(spec))
    return json.loads(text) if text.startswith("{") else text


__all__ = [
    "CoamoebaError",
    "__version__",
    "area",
    "classify",
    "colopsided",
    "critical_arguments",
    "discriminant",
    "fewnomial_campaign",
    "in_discriminant_coamoeba",
    "index_set",
    "order_map",
    "profile",
    "raster",
    "report",
    "solve_system",
]
