"""
rings/integers.py

The integers. Units are +1 and -1.
"""

from .base import Ring


class IntegerRing(Ring):
    name = "Z"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, value) -> int:
        return int(value)

    def add(self, a: int, b: int) -> int:
        return a + b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def neg(self, a: int) -> int:
        return -a

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def _invert(self, a: int) -> int:
        return a

    def parse(self, text: str) -> int:
        text = text.strip()
        try:
            return int(text)
        except ValueError:
            raise ValueError(f"'{text}' is not an integer") from None

    def format(self, a: int) -> str:
        return str(a)
