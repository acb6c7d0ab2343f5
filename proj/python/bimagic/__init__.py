"""Universal bimagic squares over small digit sets."""

import json

from ._core import (
    Error,
    InputError,
    SearchFailure,
    generate,
    parse,
    run_cli,
    serialize,
    sum_targets,
    transform,
)
from . import _core

__all__ = [
    "Error",
    "InputError",
    "SearchFailure",
    "generate",
    "oracle",
    "parse",
    "run_cli",
    "serialize",
    "sum_targets",
    "sums",
    "transform",
    "verify",
]


def verify(text, blocks=None):
    """Full verification report of a grid document, as a dict."""
    return json.loads(_core.verify_json(text, blocks))


def sums(order):
    """Line constants for order 8, 9 or 16 with the published comparison."""
    return json.loads(_core.sums_json(order))


def oracle(order, alphabet, width, property, budget=200_000_000):
    """Exhaustive search for orders up to 4."""
    return json.loads(_core.oracle_json(order, alphabet, width, property, budget))
