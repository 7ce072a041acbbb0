"""
rings/base.py

Defines the abstract Ring interface shared by every bracket computation.
Elements are plain Python values owned by the ring (ints for Zn and Z,
expanded SymPy expressions for Laurent polynomials); the ring object does
all arithmetic so the state sums never care which carrier is underneath.
"""

from abc import ABC, abstractmethod
from typing import Any, Iterable, Iterator


class NonUnitError(ValueError):
    """Raised when an inverse is requested for an element that is not a unit."""

    def __init__(self, ring: "Ring", element: Any):
        self.ring = ring
        self.element = element
        super().__init__(f"{ring.format(element)} is not a unit in {ring.name}")


class Ring(ABC):
    """
    Commutative ring with unity.

    To add a new carrier:
      1. Subclass Ring in rings/<carrier>.py
      2. Implement the abstract methods
      3. Register its descriptor in rings/__init__.py

    Library callers may construct carriers directly; the CLI only accepts
    registered descriptors because the file formats need a fixed element syntax.
    """

    name: str = "ring"

    @property
    @abstractmethod
    def zero(self) -> Any:
        ...

    @property
    @abstractmethod
    def one(self) -> Any:
        ...

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Bring an int (or a carrier value) into canonical element form."""
        ...

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any:
        ...

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any:
        ...

    @abstractmethod
    def neg(self, a: Any) -> Any:
        ...

    @abstractmethod
    def is_unit(self, a: Any) -> bool:
        ...

    @abstractmethod
    def _invert(self, a: Any) -> Any:
        """Inverse of a known unit."""
        ...

    @abstractmethod
    def parse(self, text: str) -> Any:
        ...

    @abstractmethod
    def format(self, a: Any) -> str:
        ...

    # ------------------------------------------------------------------
    # Derived operations
    # ------------------------------------------------------------------

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    def inverse(self, a: Any) -> Any:
        if not self.is_unit(a):
            raise NonUnitError(self, a)
        return self._invert(a)

    def pow(self, a: Any, exponent: int) -> Any:
        if exponent < 0:
            return self.pow(self.inverse(a), -exponent)
        result = self.one
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def sum(self, values: Iterable[Any]) -> Any:
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def product(self, values: Iterable[Any]) -> Any:
        total = self.one
        for v in values:
            total = self.mul(total, v)
        return total

    def elements(self) -> Iterator[Any]:
        """Enumerate a finite carrier. Infinite carriers raise."""
        raise ValueError(f"{self.name} is infinite and cannot be enumerated")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"
