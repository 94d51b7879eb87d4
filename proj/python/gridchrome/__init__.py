"""r-dynamic colourings of grid graphs."""

from ._core import (
    Coloring,
    ConsistencyError,
    Error,
    InputError,
    OutOfTableError,
    ParseError,
    ResourceError,
    UnsupportedInput,
    __version__,
    analyze,
    chromatic,
    chromatic_exact,
    construct,
    enumerate_colorings,
    partial_fixture,
    solve,
    table,
    validate,
)

__all__ = [
    "Coloring",
    "ConsistencyError",
    "Error",
    "InputError",
    "OutOfTableError",
    "ParseError",
    "ResourceError",
    "UnsupportedInput",
    "__version__",
    "analyze",
    "chromatic",
    "chromatic_exact",
    "construct",
    "enumerate_colorings",
    "partial_fixture",
    "solve",
    "table",
    "validate",
]
