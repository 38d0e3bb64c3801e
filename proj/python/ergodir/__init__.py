"""Ergodic directions for strip billiards with periodic barriers.

The compiled core returns JSON text; these wrappers decode it.
"""

import json

from . import _ergodir
from ._ergodir import ArithmeticError, FormatError, block

__all__ = [
    "ArithmeticError",
    "FormatError",
    "block",
    "trace",
    "certify_fixing",
    "build",
    "verify",
    "dimension",
    "simulate",
    "surface",
    "billiard_round_trip",
]


def trace(z, word):
    return json.loads(_ergodir.trace(z, word))


def certify_fixing(r, s, q):
    return json.loads(_ergodir.certify_fixing(r, s, q))


def build(lambda_, nk="const:1", blocks=3, d_choices=()):
    """Spec JSON text; pass it to verify() or simulate(), or write it to disk."""
    return _ergodir.build(str(lambda_), nk, blocks, list(d_choices))


def verify(spec_json, horizon=3, precision=256):
    return json.loads(_ergodir.verify(spec_json, horizon, precision))


def dimension(block, b=1, c=0, budget=1_000_000):
    return json.loads(_ergodir.dimension(list(block), b, c, budget))


def simulate(spec_json, total_time="10000", grid=8, deck=16):
    """Returns (summary dict, CSV text)."""
    summary, csv = _ergodir.simulate(spec_json, str(total_time), grid, deck)
    return json.loads(summary), csv


def surface(z):
    return json.loads(_ergodir.surface(z))


def billiard_round_trip(lambda_, x, y, cx, cy):
    return _ergodir.billiard_round_trip(lambda_, x, y, cx, cy)
