"""
knots/gauss.py

Oriented virtual link diagrams stored as signed Gauss data.

A diagram is an ordered tuple of components; each component is the cyclic
sequence of passages met while walking along it. A passage is a crossing
label plus a role (over or under). Virtual crossings are never stored, so
detour-equivalent diagrams have identical representations.

Text form (one token per passage, components separated by "/"):

    O1+ U2+ O3+ U1+ O2+ U3+          right-handed trefoil
    O1+ U2+ / U1+ O2+                Hopf-type link
    ""                               unknot (one bare circle)

Semiarcs are the arcs between consecutive passages. The semiarc with id
`offset(c) + i` leaves passage i of component c. A bare circle carries a
single semiarc.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple


class GaussCodeError(ValueError):
    """Malformed or inconsistent Gauss code. `line` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class Passage(NamedTuple):
    label: str
    over: bool

    def token(self, sign: int) -> str:
        return f"{'O' if self.over else 'U'}{self.label}{'+' if sign > 0 else '-'}"


class Ports(NamedTuple):
    """Semiarc ids around one crossing."""
    over_in: int
    over_out: int
    under_in: int
    under_out: int


Position = Tuple[int, int]      # (component, index)

_TOKEN = re.compile(r"^([OU])([1-9][0-9]*|[A-Za-z_][A-Za-z0-9_]*)([+-])$")


def label_key(label: str) -> Tuple[int, int, str]:
    """Numeric labels sort numerically and come before identifiers."""
    if label.isdigit():
        return (0, int(label), "")
    return (1, 0, label)


@dataclass(frozen=True)
class LinkDiagram:
    components: Tuple[Tuple[Passage, ...], ...]
    signs: Dict[str, int] = field(hash=False)

    def __post_init__(self) -> None:
        _validate(self.components, self.signs)

    def __hash__(self) -> int:
        return hash(self.serialize())

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------

    @property
    def labels(self) -> List[str]:
        return sorted(self.signs, key=label_key)

    @property
    def crossing_count(self) -> int:
        return len(self.signs)

    def sign(self, label: str) -> int:
        return self.signs[label]

    def positions(self) -> Dict[str, Tuple[Position, Position]]:
        """label -> (over position, under position)."""
        over: Dict[str, Position] = {}
        under: Dict[str, Position] = {}
        for c, comp in enumerate(self.components):
            for i, p in enumerate(comp):
                (over if p.over else under)[p.label] = (c, i)
        return {label: (over[label], under[label]) for label in self.signs}

    def passages(self) -> Iterator[Tuple[Position, Passage]]:
        for c, comp in enumerate(self.components):
            for i, p in enumerate(comp):
                yield (c, i), p

    def next_position(self, pos: Position) -> Position:
        c, i = pos
        return (c, (i + 1) % len(self.components[c]))

    def prev_position(self, pos: Position) -> Position:
        c, i = pos
        return (c, (i - 1) % len(self.components[c]))

    def at(self, pos: Position) -> Passage:
        c, i = pos
        return self.components[c][i]

    # ------------------------------------------------------------------
    # Semiarcs
    # ------------------------------------------------------------------

    def _offsets(self) -> List[int]:
        offsets, total = [], 0
        for comp in self.components:
            offsets.append(total)
            total += max(len(comp), 1)
        return offsets

    @property
    def semiarc_count(self) -> int:
        return sum(max(len(comp), 1) for comp in self.components)

    def ports(self) -> Dict[str, Ports]:
        offsets = self._offsets()

        def after(pos: Position) -> int:
            return offsets[pos[0]] + pos[1]

        result = {}
        for label, (op, up) in self.positions().items():
            result[label] = Ports(
                over_in=after(self.prev_position(op)),
                over_out=after(op),
                under_in=after(self.prev_position(up)),
                under_out=after(up),
            )
        return result

    # ------------------------------------------------------------------
    # Text form
    # ------------------------------------------------------------------

    def serialize(self) -> str:
        parts = [" ".join(p.token(self.signs[p.label]) for p in comp) for comp in self.components]
        return " / ".join(parts).strip()

    def __str__(self) -> str:
        return self.serialize()

    @classmethod
    def from_passages(
        cls, components: List[List[Passage]], signs: Dict[str, int]
    ) -> "LinkDiagram":
        return cls(tuple(tuple(comp) for comp in components), dict(signs))


def _validate(components: Tuple[Tuple[Passage, ...], ...], signs: Dict[str, int]) -> None:
    if not components:
        raise GaussCodeError("a diagram needs at least one component")
    seen: Dict[str, List[bool]] = {}
    for comp in components:
        for p in comp:
            seen.setdefault(p.label, []).append(p.over)
    for label, roles in seen.items():
        if len(roles) != 2:
            raise GaussCodeError(f"label {label} appears {len(roles)} times, expected 2")
        if roles[0] == roles[1]:
            role = "over" if roles[0] else "under"
            raise GaussCodeError(f"label {label} has two {role} passages")
        if signs.get(label) not in (1, -1):
            raise GaussCodeError(f"label {label} has no sign")
    extra = set(signs) - set(seen)
    if extra:
        raise GaussCodeError(f"signs given for unknown labels: {sorted(extra, key=label_key)}")


# ─────────────────────────────────────────────────────────────────────────────
# Parsing
# ─────────────────────────────────────────────────────────────────────────────

def parse_gauss_code(text: str) -> LinkDiagram:
    """
    Parse Gauss code text into a validated LinkDiagram.

    Comments start with '#'. Tokens may span several lines; "/" separates
    components and an empty component is a bare circle.
    """
    components: List[List[Passage]] = [[]]
    signs: Dict[str, int] = {}
    first_line: Dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines() or [""], start=1):
        line = raw.split("#", 1)[0]
        for chunk in re.split(r"(/)", line):
            if chunk == "/":
                components.append([])
                continue
            for token in chunk.split():
                match = _TOKEN.match(token)
                if not match:
                    raise GaussCodeError(f"bad token '{token}'", lineno)
                role, label, sign_char = match.groups()
                sign = 1 if sign_char == "+" else -1
                if label in signs and signs[label] != sign:
                    raise GaussCodeError(f"inconsistent signs for label {label}", lineno)
                signs[label] = sign
                first_line.setdefault(label, lineno)
                components[-1].append(Passage(label, role == "O"))

    try:
        return LinkDiagram.from_passages(components, signs)
    except GaussCodeError as exc:
        if exc.line is None:
            label = next((l for l in first_line if f"label {l} " in str(exc)), None)
            if label is not None:
                raise GaussCodeError(str(exc), first_line[label]) from None
        raise


# ─────────────────────────────────────────────────────────────────────────────
# Elementary invariants
# ─────────────────────────────────────────────────────────────────────────────

def writhe(d: LinkDiagram) -> int:
    return sum(d.signs.values())


def _alternate(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    lo, hi = sorted(a)
    inside = sum(1 for p in b if lo < p < hi)
    return inside == 1


def interlacement(d: LinkDiagram) -> Tuple[Tuple[int, ...], ...]:
    """
    Symmetric 0/1 matrix over d.labels. Chords are linked when all four
    endpoints sit on one circle and alternate.
    """
    labels = d.labels
    pos = d.positions()
    n = len(labels)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        (ci, pi), (cj, pj) = pos[labels[i]]
        if ci != cj:
            continue
        for j in range(i + 1, n):
            (ck, pk), (cl, pl) = pos[labels[j]]
            if ck == cl == ci and _alternate((pi, pj), (pk, pl)):
                rows[i][j] = rows[j][i] = 1
    return tuple(tuple(r) for r in rows)


# ─────────────────────────────────────────────────────────────────────────────
# Realizability: Carter surface genus by face tracing
# ─────────────────────────────────────────────────────────────────────────────

# Counter-clockwise port order around a crossing, by sign.
_ROTATION = {
    1:  ("oi", "ui", "oo", "uo"),
    -1: ("oi", "uo", "oo", "ui"),
}


def _graph_components(d: LinkDiagram) -> int:
    parent = list(range(len(d.components)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (oc, _), (uc, _) in d.positions().values():
        parent[find(oc)] = find(uc)
    return len({find(c) for c, comp in enumerate(d.components) if comp})


HalfEdge = Tuple[str, str]      # (label, port), port in oi | oo | ui | uo


def half_edge_mates(d: LinkDiagram) -> Dict[HalfEdge, HalfEdge]:
    """Pairs the out-port of every passage with the in-port of the next one."""
    mate: Dict[HalfEdge, HalfEdge] = {}
    for pos, p in d.passages():
        out_port = (p.label, "oo" if p.over else "uo")
        q = d.at(d.next_position(pos))
        in_port = (q.label, "oi" if q.over else "ui")
        mate[out_port] = in_port
        mate[in_port] = out_port
    return mate


def carrier_genus(d: LinkDiagram) -> int:
    """Genus of the closed surface obtained by thickening the diagram's 4-valent graph."""
    if d.crossing_count == 0:
        return 0

    mate = half_edge_mates(d)

    def rot_next(h: HalfEdge) -> HalfEdge:
        order = _ROTATION[d.sign(h[0])]
        return (h[0], order[(order.index(h[1]) + 1) % 4])

    unvisited = set(mate)
    faces = 0
    while unvisited:
        start = unvisited.pop()
        h = rot_next(mate[start])
        while h != start:
            unvisited.discard(h)
            h = rot_next(mate[h])
        faces += 1

    v = d.crossing_count
    chi = v - 2 * v + faces
    return (2 * _graph_components(d) - chi) // 2


def classical_realizability(d: LinkDiagram) -> bool:
    return carrier_genus(d) == 0
