"""
rings/__init__.py

Registry of coefficient rings, keyed by the descriptor used on the command
line and in coefficient files: "Z<n>", "Z" or "LaurentZ".
"""

import re
from typing import Any

from .base import NonUnitError, Ring
from .integers import IntegerRing
from .laurent import VAR, LaurentRing
from .modular import ModularRing

__all__ = [
    "IntegerRing",
    "LaurentRing",
    "ModularRing",
    "NonUnitError",
    "Ring",
    "VAR",
    "get_ring",
    "unit_inverse",
]

_FIXED = {
    "z": IntegerRing,
    "laurentz": LaurentRing,
    "laurent": LaurentRing,
    "z[x,x^-1]": LaurentRing,
}

_MODULAR = re.compile(r"^z(\d+)$")


def get_ring(descriptor: str) -> Ring:
    """Return a ring for the given descriptor. Raises ValueError for unknown ones."""
    key = descriptor.strip().lower().replace("/", "")
    if key in _FIXED:
        return _FIXED[key]()
    match = _MODULAR.match(key)
    if match:
        return ModularRing(int(match.group(1)))
    raise ValueError(
        f"Unknown ring '{descriptor}'. Supported: Z<n> (n >= 2), Z, LaurentZ"
    )


def unit_inverse(ring: Ring, element: Any) -> Any:
    """Multiplicative inverse of a unit; NonUnitError otherwise."""
    return ring.inverse(element)
