"""Exact construction, certification and classification of rational solutions
of P(z) y'' = c y, backed by the C++ core."""

import json as _json

from ._core import (
    construct,
    f4_enclosure,
    f4_negative_roots,
    parse,
    roots,
    solves_ode,
    tables,
)
from ._core import classify_json as _classify_json
from ._core import verify_json as _verify_json

__all__ = [
    "classify",
    "construct",
    "f4_enclosure",
    "f4_negative_roots",
    "parse",
    "roots",
    "solves_ode",
    "tables",
    "verify",
]


def verify(expr: str) -> dict:
    """Hypothesis report for a rational expression in z."""
    return _json.loads(_verify_json(expr))


def classify(expr: str) -> dict:
    """Hypothesis plus family-classification report."""
    return _json.loads(_classify_json(expr))
