"""Extended Hecke algebra with character twists.

Contexts bundle a root datum, a torsion level, and a diagram twist;
elements support the ring operations, the canonical basis, two-sided
cells, duality operators, and exact verification suites.
"""

from hecketwist._core import (  # noqa: F401
    ConfigError,
    Context,
    ContextMismatch,
    Elt,
    NotEpsStable,
    NotInHD,
    ParseError,
    suite_names,
)

__all__ = [
    "ConfigError",
    "Context",
    "ContextMismatch",
    "Elt",
    "NotEpsStable",
    "NotInHD",
    "ParseError",
    "suite_names",
]
