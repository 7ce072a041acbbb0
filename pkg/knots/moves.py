"""
knots/moves.py

Oriented Reidemeister moves on Gauss data plus the random move generator
used by every invariance test.

Gaps are insertion points: gap (c, i) sits just before passage i of
component c. A bare circle has the single gap (c, 0).

Move patterns:
  R1  insert a kink "O_n U_n" or "U_n O_n" with either sign at any gap;
      delete a label whose two passages are adjacent on one component.
  R2  the over strand gets "O_a O_b", the under strand gets "U_a U_b"
      (strands in the same direction) or "U_b U_a" (opposite directions);
      signs of a and b are opposite. Deletion is the exact inverse.
  R3  three equal-sign chords X, Y, Z in adjacent pairs
      (O_X O_Y)(U_X O_Z)(U_Y U_Z), or the reversed pairs
      (O_Y O_X)(O_Z U_X)(U_Z U_Y). The move reverses each pair.
"""

import logging
import random
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .gauss import LinkDiagram, Passage, Position, classical_realizability

logger = logging.getLogger("knotbracket.moves")


class MoveError(ValueError):
    """A move descriptor does not fit the diagram it is applied to."""


class MoveKind(str, Enum):
    R1_INSERT = "R1-insert"
    R1_DELETE = "R1-delete"
    R2_INSERT = "R2-insert"
    R2_DELETE = "R2-delete"
    R3 = "R3"


INSERTIONS = (MoveKind.R1_INSERT, MoveKind.R2_INSERT)


@dataclass(frozen=True)
class MoveDescriptor:
    """
    One elementary move at a concrete site.

    kind     which move
    gaps     R1-insert: (gap,); R2-insert: (over gap, under gap)
    labels   chord labels: new labels for insertions, existing ones otherwise
             (R3: X, Y, Z)
    sign     sign of the (first) new chord
    variant  R1: "OU" | "UO"; R2: "same" | "opposite"; R3: "P1" | "P2"
    """
    kind: MoveKind
    gaps: Tuple[Position, ...] = ()
    labels: Tuple[str, ...] = ()
    sign: int = 1
    variant: str = ""

    def describe(self) -> str:
        parts = [self.kind.value]
        if self.gaps:
            parts.append("gaps=" + ",".join(f"{c}:{i}" for c, i in self.gaps))
        if self.labels:
            parts.append("labels=" + ",".join(self.labels))
        if self.kind in INSERTIONS:
            parts.append(f"sign={'+' if self.sign > 0 else '-'}")
        if self.variant:
            parts.append(self.variant)
        return " ".join(parts)


# ─────────────────────────────────────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────────────────────────────────────

def fresh_labels(d: LinkDiagram, count: int) -> Tuple[str, ...]:
    numeric = [int(l) for l in d.signs if l.isdigit()]
    start = max(numeric, default=0) + 1
    out: List[str] = []
    n = start
    while len(out) < count:
        if str(n) not in d.signs:
            out.append(str(n))
        n += 1
    return tuple(out)


def gaps(d: LinkDiagram) -> List[Position]:
    return [(c, i) for c, comp in enumerate(d.components) for i in range(max(len(comp), 1))]


def _lists(d: LinkDiagram) -> List[List[Passage]]:
    return [list(comp) for comp in d.components]


def _adjacent(d: LinkDiagram, a: Position, b: Position) -> bool:
    """True when b immediately follows a on the same component."""
    return a[0] == b[0] and d.next_position(a) == b and a != b


def _check_gap(d: LinkDiagram, gap: Position) -> None:
    c, i = gap
    if not (0 <= c < len(d.components)) or not (0 <= i < max(len(d.components[c]), 1)):
        raise MoveError(f"gap {c}:{i} does not exist")


def _check_new(d: LinkDiagram, labels: Sequence[str], count: int) -> None:
    if len(labels) != count or len(set(labels)) != count:
        raise MoveError(f"expected {count} distinct new labels, got {list(labels)}")
    taken = [l for l in labels if l in d.signs]
    if taken:
        raise MoveError(f"labels already in use: {taken}")


def _remove(components: List[List[Passage]], doomed: Iterable[Passage]) -> List[List[Passage]]:
    doomed = set(doomed)
    return [[p for p in comp if p not in doomed] for comp in components]


# ─────────────────────────────────────────────────────────────────────────────
# R1
# ─────────────────────────────────────────────────────────────────────────────

def _r1_insert(d: LinkDiagram, m: MoveDescriptor) -> LinkDiagram:
    if len(m.gaps) != 1 or m.variant not in ("OU", "UO") or m.sign not in (1, -1):
        raise MoveError(f"malformed R1 insertion: {m.describe()}")
    _check_gap(d, m.gaps[0])
    _check_new(d, m.labels, 1)
    (label,) = m.labels
    c, i = m.gaps[0]
    first_over = m.variant == "OU"
    comps = _lists(d)
    comps[c][i:i] = [Passage(label, first_over), Passage(label, not first_over)]
    return LinkDiagram.from_passages(comps, {**d.signs, label: m.sign})


def _r1_deletable(d: LinkDiagram, label: str) -> bool:
    op, up = d.positions()[label]
    return _adjacent(d, op, up) or _adjacent(d, up, op)


def _r1_delete(d: LinkDiagram, m: MoveDescriptor) -> LinkDiagram:
    if len(m.labels) != 1 or m.labels[0] not in d.signs:
        raise MoveError(f"malformed R1 deletion: {m.describe()}")
    (label,) = m.labels
    if not _r1_deletable(d, label):
        raise MoveError(f"label {label} is not a kink")
    comps = _remove(_lists(d), [Passage(label, True), Passage(label, False)])
    signs = {k: v for k, v in d.signs.items() if k != label}
    return LinkDiagram.from_passages(comps, signs)


# ─────────────────────────────────────────────────────────────────────────────
# R2
# ─────────────────────────────────────────────────────────────────────────────

def _r2_insert(d: LinkDiagram, m: MoveDescriptor) -> LinkDiagram:
    if len(m.gaps) != 2 or m.variant not in ("same", "opposite") or m.sign not in (1, -1):
        raise MoveError(f"malformed R2 insertion: {m.describe()}")
    for g in m.gaps:
        _check_gap(d, g)
    _check_new(d, m.labels, 2)
    a, b = m.labels
    over_gap, under_gap = m.gaps
    over_seg = [Passage(a, True), Passage(b, True)]
    under_seg = [Passage(a, False), Passage(b, False)]
    if m.variant == "opposite":
        under_seg.reverse()

    comps = _lists(d)
    if over_gap == under_gap:
        c, i = over_gap
        comps[c][i:i] = over_seg + under_seg
    else:
        # insert at the later gap first so the earlier index stays valid
        for (c, i), seg in sorted([(over_gap, over_seg), (under_gap, under_seg)], reverse=True):
            comps[c][i:i] = seg
    return LinkDiagram.from_passages(comps, {**d.signs, a: m.sign, b: -m.sign})


def _r2_pair(d: LinkDiagram, a: str, b: str) -> bool:
    if d.sign(a) != -d.sign(b):
        return False
    pos = d.positions()
    (oa, ua), (ob, ub) = pos[a], pos[b]
    return _adjacent(d, oa, ob) and (_adjacent(d, ua, ub) or _adjacent(d, ub, ua))


def _r2_delete(d: LinkDiagram, m: MoveDescriptor) -> LinkDiagram:
    if len(m.labels) != 2 or any(l not in d.signs for l in m.labels):
        raise MoveError(f"malformed R2 deletion: {m.describe()}")
    a, b = m.labels
    if not _r2_pair(d, a, b):
        raise MoveError(f"labels {a}, {b} do not form an R2 pair")
    doomed = [Passage(l, role) for l in (a, b) for role in (True, False)]
    comps = _remove(_lists(d), doomed)
    signs = {k: v for k, v in d.signs.items() if k not in (a, b)}
    return LinkDiagram.from_passages(comps, signs)


# ─────────────────────────────────────────────────────────────────────────────
# R3
# ─────────────────────────────────────────────────────────────────────────────

def _r3_pairs(d: LinkDiagram, x: str, y: str, z: str, variant: str) -> Optional[List[Position]]:
    """First positions of the three adjacent pairs, or None if the pattern does not match."""
    if not (d.sign(x) == d.sign(y) == d.sign(z)) or len({x, y, z}) != 3:
        return None
    pos = d.positions()
    (ox, ux), (oy, uy), (oz, uz) = pos[x], pos[y], pos[z]
    if variant == "P1":
        pairs = [(ox, oy), (ux, oz), (uy, uz)]
    elif variant == "P2":
        pairs = [(oy, ox), (oz, ux), (uz, uy)]
    else:
        return None
    if all(_adjacent(d, p, q) for p, q in pairs):
        return [p for p, _ in pairs]
    return None


def _r3(d: LinkDiagram, m: MoveDescriptor) -> LinkDiagram:
    if len(m.labels) != 3 or any(l not in d.signs for l in m.labels):
        raise MoveError(f"malformed R3: {m.describe()}")
    starts = _r3_pairs(d, *m.labels, m.variant)
    if starts is None:
        raise MoveError(f"no third-move pattern at {m.describe()}")
    comps = _lists(d)
    for c, i in starts:
        j = (i + 1) % len(comps[c])
        comps[c][i], comps[c][j] = comps[c][j], comps[c][i]
    return LinkDiagram.from_passages(comps, d.signs)


_APPLY: Dict[MoveKind, Callable[[LinkDiagram, MoveDescriptor], LinkDiagram]] = {
    MoveKind.R1_INSERT: _r1_insert,
    MoveKind.R1_DELETE: _r1_delete,
    MoveKind.R2_INSERT: _r2_insert,
    MoveKind.R2_DELETE: _r2_delete,
    MoveKind.R3:        _r3,
}


def apply_move(d: LinkDiagram, m: MoveDescriptor) -> LinkDiagram:
    """Apply one move. Raises MoveError if the descriptor does not fit d."""
    result = _APPLY[m.kind](d, m)
    logger.debug("applied %s: %s -> %s", m.describe(), d, result)
    return result


# ─────────────────────────────────────────────────────────────────────────────
# Enumeration of applicable moves
# ─────────────────────────────────────────────────────────────────────────────

def applicable_moves(
    d: LinkDiagram, kinds: Optional[Iterable[MoveKind]] = None
) -> List[MoveDescriptor]:
    """Every applicable move of the requested kinds, in a deterministic order."""
    wanted = set(kinds) if kinds is not None else set(MoveKind)
    labels = d.labels
    moves: List[MoveDescriptor] = []

    if MoveKind.R1_INSERT in wanted:
        new = fresh_labels(d, 1)
        for g in gaps(d):
            for variant in ("OU", "UO"):
                for sign in (1, -1):
                    moves.append(MoveDescriptor(MoveKind.R1_INSERT, (g,), new, sign, variant))

    if MoveKind.R1_DELETE in wanted:
        for label in labels:
            if _r1_deletable(d, label):
                moves.append(MoveDescriptor(MoveKind.R1_DELETE, labels=(label,)))

    if MoveKind.R2_INSERT in wanted:
        new = fresh_labels(d, 2)
        all_gaps = gaps(d)
        for g1 in all_gaps:
            for g2 in all_gaps:
                for variant in ("same", "opposite"):
                    for sign in (1, -1):
                        moves.append(
                            MoveDescriptor(MoveKind.R2_INSERT, (g1, g2), new, sign, variant)
                        )

    if MoveKind.R2_DELETE in wanted:
        for a in labels:
            for b in labels:
                if a != b and _r2_pair(d, a, b):
                    moves.append(MoveDescriptor(MoveKind.R2_DELETE, labels=(a, b)))

    if MoveKind.R3 in wanted:
        for x in labels:
            for y in labels:
                for z in labels:
                    for variant in ("P1", "P2"):
                        if _r3_pairs(d, x, y, z, variant) is not None:
                            moves.append(
                                MoveDescriptor(MoveKind.R3, labels=(x, y, z), variant=variant)
                            )
    return moves


# ─────────────────────────────────────────────────────────────────────────────
# Random move sequences
# ─────────────────────────────────────────────────────────────────────────────

_GROWTH = {MoveKind.R1_INSERT: 1, MoveKind.R2_INSERT: 2}
_KEEP_CLASSICAL_ATTEMPTS = 40


def random_equivalent_diagram(
    d: LinkDiagram,
    steps: int,
    seed: int,
    max_crossings: Optional[int] = None,
    keep_classical: bool = False,
    log: Callable[[str], None] = lambda msg: None,
) -> LinkDiagram:
    """
    Apply `steps` random moves. Each step picks a move kind uniformly among
    the kinds with an applicable site, then a site uniformly.

    max_crossings   insertions that would exceed the cap are not offered
    keep_classical  reject moves that change classical realizability
    """
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    rng = random.Random(seed)
    current = d

    for step in range(steps):
        by_kind: Dict[MoveKind, List[MoveDescriptor]] = defaultdict(list)
        for m in applicable_moves(current):
            if (
                max_crossings is not None
                and current.crossing_count + _GROWTH.get(m.kind, 0) > max_crossings
            ):
                continue
            by_kind[m.kind].append(m)
        if not by_kind:
            log(f"step {step + 1}: no applicable move, skipped")
            continue

        kinds = [k for k in MoveKind if by_kind.get(k)]
        realizable = classical_realizability(current) if keep_classical else None
        chosen: Optional[LinkDiagram] = None
        for _ in range(_KEEP_CLASSICAL_ATTEMPTS if keep_classical else 1):
            kind = rng.choice(kinds)
            move = rng.choice(by_kind[kind])
            candidate = apply_move(current, move)
            if keep_classical and classical_realizability(candidate) != realizable:
                continue
            chosen = candidate
            log(f"step {step + 1}: {move.describe()}")
            break

        if chosen is None:
            log(f"step {step + 1}: no realizability-preserving move found, skipped")
            continue
        current = chosen

    return current
