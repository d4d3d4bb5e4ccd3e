"""Exact checks for modular Lie algebras of simple algebraic groups."""

import json

from ._core import (
    DEFAULT_SEED,
    Algebra,
    DimensionMismatch,
    Error,
    PreconditionError,
    ResourceError,
    RootSystem,
    UnsupportedError,
    UsageError,
    __version__,
    registry,
)
from ._core import _run_json


def run(name, type=None, rank=None, p=None, seed=DEFAULT_SEED, samples=None, budget=None, cochar="highest-root"):
    """Run one registry scenario and return its report as a dict."""
    return json.loads(_run_json(name, type, rank, p, seed, samples, budget, cochar))


__all__ = [
    "Algebra",
    "DEFAULT_SEED",
    "DimensionMismatch",
    "Error",
    "PreconditionError",
    "ResourceError",
    "RootSystem",
    "UnsupportedError",
    "UsageError",
    "__version__",
    "registry",
    "run",
]
