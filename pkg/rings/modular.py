"""
rings/modular.py

Z/nZ with elements stored as residues 0..n-1.
"""

import math
from typing import Iterator

from .base import Ring


class ModularRing(Ring):
    """Integers modulo n (n >= 2). Units are the residues coprime to n."""

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError(f"Modulus must be at least 2, got {modulus}")
        self.modulus = modulus
        self.name = f"Z{modulus}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, value) -> int:
        return int(value) % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def neg(self, a: int) -> int:
        return (-a) % self.modulus

    def is_unit(self, a: int) -> bool:
        return math.gcd(a % self.modulus, self.modulus) == 1

    def _invert(self, a: int) -> int:
        return pow(a, -1, self.modulus)

    def parse(self, text: str) -> int:
        text = text.strip()
        try:
            return int(text) % self.modulus
        except ValueError:
            raise ValueError(f"'{text}' is not an element of {self.name}") from None

    def format(self, a: int) -> str:
        return str(a)

    def elements(self) -> Iterator[int]:
        return iter(range(self.modulus))
