"""Numeric-sign decoding and catalog analysis for the Old European Script."""

from ._core import (
    compare,
    evaluate,
    expressible_values,
    parse,
    render,
    stats,
    validate,
)

__all__ = [
    "compare",
    "evaluate",
    "expressible_values",
    "parse",
    "render",
    "stats",
    "validate",
]
