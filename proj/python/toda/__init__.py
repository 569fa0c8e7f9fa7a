"""Toda systems of types A, B and C with singular sources."""

from ._toda import (
    ConfigError,
    ProductConditionViolation,
    TodaError,
    cartan,
    characteristic,
    config,
    delta_gamma,
    minors,
    positive_roots,
    run,
    solve,
    verify,
    wronskian_determinant,
)

__all__ = [
    "ConfigError",
    "ProductConditionViolation",
    "TodaError",
    "cartan",
    "characteristic",
    "config",
    "delta_gamma",
    "minors",
    "positive_roots",
    "run",
    "solve",
    "verify",
    "wronskian_determinant",
]
