"""
invariants/parity.py

Z2-valued parities of crossings.

    gp         Gaussian parity: a chord is odd when it is linked with an odd
               number of chords
    component  two-component links: a crossing is odd when its strands
               belong to different components
    bp         biquandle parity read off a Z2 flip coloring
    zero       every crossing even (the parity bracket then smooths everything)
"""

import logging
from typing import Callable, Dict

from knots.gauss import LinkDiagram, interlacement, label_key
from knots.moves import INSERTIONS, MoveDescriptor, MoveKind, apply_move

from .biquandle import enumerate_colorings, get_biquandle, incoming_colors

logger = logging.getLogger("knotbracket.parity")

ParityAssignment = Dict[str, int]


def gaussian_parity(d: LinkDiagram) -> ParityAssignment:
    matrix = interlacement(d)
    return {label: sum(row) % 2 for label, row in zip(d.labels, matrix)}


def component_parity(d: LinkDiagram) -> ParityAssignment:
    if len(d.components) != 2:
        raise ValueError(
            f"component parity needs exactly 2 components, diagram has {len(d.components)}"
        )
    return {
        label: int(op[0] != up[0])
        for label, (op, up) in sorted(d.positions().items(), key=lambda kv: label_key(kv[0]))
    }


def biquandle_parity(d: LinkDiagram) -> ParityAssignment:
    """
    Color d with the Z2 flip biquandle. Colors flip at every passage, so a
    crossing is even exactly when its two incoming colors differ. Either of
    the two colorings gives the same answer.
    """
    if len(d.components) != 1:
        raise ValueError(
            f"biquandle parity is defined for knots, diagram has {len(d.components)} components"
        )
    colors = enumerate_colorings(d, get_biquandle("z2flip"))[0]
    incoming = incoming_colors(d, colors)
    return {label: int(incoming[label][0] == incoming[label][1]) for label in d.labels}


def zero_parity(d: LinkDiagram) -> ParityAssignment:
    return {label: 0 for label in d.labels}


_PARITIES: Dict[str, Callable[[LinkDiagram], ParityAssignment]] = {
    "gp":        gaussian_parity,
    "component": component_parity,
    "bp":        biquandle_parity,
    "zero":      zero_parity,
}


def get_parity(name: str) -> Callable[[LinkDiagram], ParityAssignment]:
    """Return a parity by selector name. Raises ValueError for unknown selectors."""
    key = name.lower().strip()
    if key == "comp":
        key = "component"
    if key not in _PARITIES:
        raise ValueError(f"Unknown parity '{name}'. Supported: {', '.join(_PARITIES)}")
    return _PARITIES[key]


def format_parity(p: ParityAssignment) -> str:
    return " ".join(f"{label}:{p[label]}" for label in sorted(p, key=label_key))


def check_parity_under_move(
    d: LinkDiagram,
    m: MoveDescriptor,
    parity: Callable[[LinkDiagram], ParityAssignment] = gaussian_parity,
) -> bool:
    """
    True when `parity` obeys the parity axioms across this move:
    values persist on every crossing present on both sides, a crossing
    removed (or created) by a first move is even, the two crossings of a
    second move sum to zero and the three crossings of a third move sum to zero.
    Raises MoveError if m does not apply to d.
    """
    after = apply_move(d, m)
    before_p, after_p = parity(d), parity(after)

    for label in set(before_p) & set(after_p):
        if before_p[label] != after_p[label]:
            logger.debug("parity of %s changed across %s", label, m.describe())
            return False

    if m.kind in INSERTIONS:
        involved = [after_p[label] for label in m.labels]
    else:
        involved = [before_p[label] for label in m.labels]

    if m.kind in (MoveKind.R1_INSERT, MoveKind.R1_DELETE):
        ok = involved[0] == 0
    else:
        ok = sum(involved) % 2 == 0
    if not ok:
        logger.debug("parity axiom fails for %s: %s", m.describe(), involved)
    return ok
