"""
knots/__init__.py

Gauss-code link diagrams and the oriented Reidemeister moves acting on them.
"""

from .gauss import (
    GaussCodeError,
    LinkDiagram,
    Passage,
    Ports,
    carrier_genus,
    classical_realizability,
    half_edge_mates,
    interlacement,
    label_key,
    parse_gauss_code,
    writhe,
)
from .moves import (
    MoveDescriptor,
    MoveError,
    MoveKind,
    applicable_moves,
    apply_move,
    fresh_labels,
    random_equivalent_diagram,
)

__all__ = [
    "GaussCodeError",
    "LinkDiagram",
    "MoveDescriptor",
    "MoveError",
    "MoveKind",
    "Passage",
    "Ports",
    "applicable_moves",
    "apply_move",
    "carrier_genus",
    "classical_realizability",
    "half_edge_mates",
    "fresh_labels",
    "interlacement",
    "label_key",
    "parse_gauss_code",
    "random_equivalent_diagram",
    "writhe",
]
