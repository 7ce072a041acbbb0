"""
invariants/multiset.py

Multisets of bracket values, one value per coloring, compared through
their canonical serializations.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, List, Optional, Tuple

from rings import Ring

from .freegraph import GraphPolynomial


@dataclass
class InvariantMultiset:
    """
    One bracket value per coloring. `delta` is the circle value the values
    were computed with; None when it plays no part (coloring counts).
    """
    ring: Ring
    values: List[Any] = field(default_factory=list)
    delta: Optional[Any] = None

    def circle_value(self) -> Optional[Any]:
        if self.delta is not None:
            return self.ring.coerce(self.delta)
        for v in self.values:
            if isinstance(v, GraphPolynomial):
                return v.delta
        return None

    def _text(self, value: Any) -> str:
        if isinstance(value, GraphPolynomial):
            return value.serialize()
        return self.ring.format(value)

    def counts(self) -> Counter:
        return Counter(self._text(v) for v in self.values)

    def items(self) -> List[Tuple[str, int]]:
        """(serialized value, multiplicity), sorted by value."""
        return sorted(self.counts().items())

    def serialize(self) -> str:
        return "\n".join(f"{text} # {mult}" for text, mult in self.items())

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, value: Any) -> bool:
        return self._text(value) in self.counts()

    def multiplicity(self, value: Any) -> int:
        return self.counts().get(self._text(value), 0)

    def polynomial(self, variable: str = "u") -> str:
        """Generating function Σ u^value over the scalar values."""
        parts = [f"{mult}*{variable}^({text})" for text, mult in self.items()]
        return " + ".join(parts) if parts else "0"


def compare_multisets(a: InvariantMultiset, b: InvariantMultiset) -> bool:
    """Equal as multisets of canonical values. Raises ValueError on a ring or δ mismatch."""
    if a.ring != b.ring:
        raise ValueError(f"cannot compare multisets over {a.ring.name} and {b.ring.name}")
    da, db = a.circle_value(), b.circle_value()
    if da is not None and db is not None and not a.ring.is_zero(a.ring.sub(da, db)):
        raise ValueError(
            f"cannot compare multisets with δ={a.ring.format(da)} and δ={a.ring.format(db)}"
        )
    return a.counts() == b.counts()


def parse_multiset_lines(
    lines: Iterable[str], ring: Ring, delta: Any = None, pictures: bool = True
) -> InvariantMultiset:
    """
    Read "value # multiplicity" lines back. Picture values are
    re-canonicalized, so relabelled codes compare equal.
    """
    values: List[Any] = []
    if pictures and delta is None:
        delta = ring.zero
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        text, _, mult_text = line.partition("#")
        mult = int(mult_text.strip()) if mult_text.strip() else 1
        text = text.strip()
        if pictures:
            value = GraphPolynomial.parse(text, ring, delta)
        else:
            value = ring.parse(text)
        values.extend([value] * mult)
    return InvariantMultiset(ring, values, delta)
