"""
invariants/freegraph.py

Bracket "pictures": framed 4-valent graphs written as unoriented chord
diagrams on one or more circles, and formal linear combinations of them.

A FreeGraph lists, for every circle, the chord symbols met along it. Each
chord symbol occurs exactly twice; the two occurrences are the two
straight-through passages of one vertex. Chordless circles are carried as
a count.

Pictures are taken modulo the second Reidemeister move on framed graphs
(two vertices joined by two edges that are not opposite at either vertex)
and the circle relation L ⊔ ○ = δL. The distinguished generator CIRCLE,
printed "(o)", stands for the graph with no vertices.
"""

import itertools
import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import config
from knots.gauss import LinkDiagram, half_edge_mates
from rings import Ring

logger = logging.getLogger("knotbracket.freegraph")

CIRCLE = "(o)"
_LETTERS = "abcdefghijklmnpqrstuvwxyz"      # no "o": reserved for the bare circle


class Smoothing(str, Enum):
    ORIENTED = "oriented"
    DISORIENTED = "disoriented"
    VERTEX = "vertex"


# Port pairs joined at a crossing, per local choice. VERTEX keeps the
# straight-through pairs and records the crossing as a chord endpoint.
_JOINS = {
    Smoothing.ORIENTED:    (("oi", "uo"), ("ui", "oo")),
    Smoothing.DISORIENTED: (("oi", "ui"), ("oo", "uo")),
    Smoothing.VERTEX:      (("oi", "oo"), ("ui", "uo")),
}

_PORT_ORDER = ("oi", "oo", "ui", "uo")


@dataclass(frozen=True)
class FreeGraph:
    circles: Tuple[Tuple[Hashable, ...], ...]
    free_circles: int = 0

    def __post_init__(self) -> None:
        counts = Counter(s for circle in self.circles for s in circle)
        bad = [s for s, k in counts.items() if k != 2]
        if bad:
            raise ValueError(f"chord {bad[0]} has {counts[bad[0]]} endpoints, expected 2")
        if self.free_circles < 0:
            raise ValueError("free_circles must be non-negative")

    @classmethod
    def build(cls, circles: Iterable[Sequence[Hashable]], free_circles: int = 0) -> "FreeGraph":
        """Move chordless circles into the free-circle count."""
        listed = [tuple(c) for c in circles]
        kept = tuple(c for c in listed if c)
        return cls(kept, free_circles + len(listed) - len(kept))

    @property
    def chords(self) -> List[Hashable]:
        seen: Dict[Hashable, None] = {}
        for circle in self.circles:
            for s in circle:
                seen.setdefault(s, None)
        return list(seen)

    @property
    def vertex_count(self) -> int:
        return sum(len(c) for c in self.circles) // 2

    @property
    def circle_count(self) -> int:
        return len(self.circles) + self.free_circles

    @classmethod
    def parse(cls, text: str) -> "FreeGraph":
        """Parse "(a b a b)(c c)(o)" style text; "(o)" is a chordless circle."""
        groups = re.findall(r"\(([^()]*)\)", text)
        leftover = re.sub(r"\(([^()]*)\)", "", text).strip()
        if leftover or not groups:
            raise ValueError(f"'{text}' is not a free graph code")
        circles: List[Tuple[str, ...]] = []
        free = 0
        for group in groups:
            symbols = group.split()
            if symbols == ["o"]:
                free += 1
            else:
                circles.append(tuple(symbols))
        return cls.build(circles, free)

    def __str__(self) -> str:
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.circles)
        return body + CIRCLE * self.free_circles


# ─────────────────────────────────────────────────────────────────────────────
# Smoothing a diagram
# ─────────────────────────────────────────────────────────────────────────────

def smooth_state(d: LinkDiagram, state: Mapping[str, Smoothing]) -> FreeGraph:
    """
    Resolve every crossing of d by its choice in `state` and read off the
    resulting circles. Crossings left as VERTEX become chords; bare
    components of d become free circles.
    """
    missing = [label for label in d.signs if label not in state]
    if missing:
        raise ValueError(f"state has no choice for crossing(s) {missing}")

    semi = half_edge_mates(d)
    join: Dict[Tuple[str, str], Tuple[str, str]] = {}
    through: Dict[Tuple[str, str], str] = {}
    for label in d.signs:
        choice = Smoothing(state[label])
        for p, q in _JOINS[choice]:
            join[(label, p)] = (label, q)
            join[(label, q)] = (label, p)
            if choice is Smoothing.VERTEX:
                through[(label, p)] = through[(label, q)] = label

    circles: List[Tuple[str, ...]] = []
    visited = set()
    for label in d.labels:
        for port in _PORT_ORDER:
            start = (label, port)
            if start in visited:
                continue
            symbols: List[str] = []
            h = start
            while True:
                visited.add(h)
                h = semi[h]
                visited.add(h)
                if h in through:
                    symbols.append(through[h])
                h = join[h]
                if h == start:
                    break
            circles.append(tuple(symbols))

    bare = sum(1 for comp in d.components if not comp)
    return FreeGraph.build(circles, bare)


# ─────────────────────────────────────────────────────────────────────────────
# Second Reidemeister move on pictures
# ─────────────────────────────────────────────────────────────────────────────

def _adjacencies(g: FreeGraph) -> Dict[frozenset, List[Tuple[Tuple[int, int], Tuple[int, int]]]]:
    """Unordered chord pair -> list of gaps (pairs of consecutive positions) joining them."""
    found: Dict[frozenset, List[Tuple[Tuple[int, int], Tuple[int, int]]]] = {}
    for c, circle in enumerate(g.circles):
        n = len(circle)
        steps = range(n) if n > 2 else range(n - 1)
        for i in steps:
            j = (i + 1) % n
            u, v = circle[i], circle[j]
            if u != v:
                found.setdefault(frozenset((u, v)), []).append(((c, i), (c, j)))
    return found


def removable_pairs(g: FreeGraph) -> List[Tuple[Hashable, Hashable]]:
    """Chord pairs joined by two gaps that share no endpoint."""
    pairs = []
    for key, gap_list in _adjacencies(g).items():
        for first, second in itertools.combinations(gap_list, 2):
            if not set(first) & set(second):
                u, v = sorted(key, key=str)
                pairs.append((u, v))
                break
    pairs.sort(key=lambda p: (str(p[0]), str(p[1])))
    return pairs


def remove_pair(g: FreeGraph, u: Hashable, v: Hashable) -> FreeGraph:
    circles = [tuple(s for s in circle if s not in (u, v)) for circle in g.circles]
    return FreeGraph.build(circles, g.free_circles)


def r2_reduce(g: FreeGraph, choose: Optional[Callable[[List[Tuple[Hashable, Hashable]]], Tuple[Hashable, Hashable]]] = None) -> FreeGraph:
    """
    Remove R2-removable pairs until none is left. `choose` (a callable
    picking one pair from a list) selects the order; the result's canonical
    code does not depend on it.
    """
    current = g
    while True:
        pairs = removable_pairs(current)
        if not pairs:
            return current
        u, v = choose(pairs) if choose is not None else pairs[0]
        current = remove_pair(current, u, v)


# ─────────────────────────────────────────────────────────────────────────────
# Canonical codes
# ─────────────────────────────────────────────────────────────────────────────

def _variants(circle: Tuple[Hashable, ...]) -> List[Tuple[Hashable, ...]]:
    n = len(circle)
    out = []
    for seq in (circle, circle[::-1]):
        for r in range(n):
            out.append(seq[r:] + seq[:r])
    return out


def canonical_form(g: FreeGraph) -> Tuple[Tuple[int, ...], ...]:
    """
    Lexicographically least relabelled tuple over every circle order and
    every rotation and reflection of each circle. Chords are renumbered
    0, 1, ... by first appearance. Raises RuntimeError past the configured
    variant budget.
    """
    # beam of partial encodings: (used circles, relabelling, encoded circles)
    beam: List[Tuple[frozenset, Dict[Hashable, int], Tuple[Tuple[int, ...], ...]]] = [
        (frozenset(), {}, ())
    ]
    inspected = 0
    for _ in range(len(g.circles)):
        candidates = []
        for used, mapping, code in beam:
            for idx, circle in enumerate(g.circles):
                if idx in used:
                    continue
                for variant in _variants(circle):
                    inspected += 1
                    if inspected > config.CANONICAL_LIMIT:
                        raise RuntimeError(
                            f"canonical form of {g} needs more than "
                            f"{config.CANONICAL_LIMIT} variants (KNOTBRACKET_CANONICAL_LIMIT)"
                        )
                    m = dict(mapping)
                    encoded = []
                    for s in variant:
                        if s not in m:
                            m[s] = len(m)
                        encoded.append(m[s])
                    candidates.append((tuple(encoded), used | {idx}, m, code))
        best = min(c[0] for c in candidates)
        seen = set()
        beam = []
        for encoded, used, m, code in candidates:
            if encoded != best:
                continue
            key = (used, tuple(sorted(m.items(), key=lambda kv: kv[1])))
            if key in seen:
                continue
            seen.add(key)
            beam.append((used, m, code + (encoded,)))
    logger.debug("canonical form of %s: %d variant(s) inspected", g, inspected)
    return beam[0][2] if beam else ()


def _symbol(k: int) -> str:
    if k < len(_LETTERS):
        return _LETTERS[k]
    return f"{_LETTERS[k % len(_LETTERS)]}{k // len(_LETTERS)}"


def render(form: Tuple[Tuple[int, ...], ...], free_circles: int = 0) -> str:
    body = "".join("(" + " ".join(_symbol(k) for k in circle) + ")" for circle in form)
    return body + CIRCLE * free_circles


def canonical_code(g: FreeGraph) -> str:
    """
    Code invariant under chord relabelling, circle rotation and reflection,
    and circle order. Call r2_reduce first for codes of picture classes.
    """
    if not g.circles:
        return CIRCLE * max(g.free_circles, 1)
    return render(canonical_form(g), g.free_circles)


@lru_cache(maxsize=65536)
def reduced_class(g: FreeGraph) -> Tuple[str, int]:
    """(canonical code of the chorded part or CIRCLE, free circle count) after r2_reduce."""
    r = r2_reduce(g)
    if not r.circles:
        return CIRCLE, r.free_circles
    return canonical_code(FreeGraph(r.circles)), r.free_circles


# ─────────────────────────────────────────────────────────────────────────────
# Linear combinations
# ─────────────────────────────────────────────────────────────────────────────

def _code_key(code: str) -> Tuple[int, str]:
    return (0 if code == CIRCLE else 1, code)


@dataclass
class GraphPolynomial:
    """Finite combination Σ c_i · G_i of picture classes over `ring`, with circle value `delta`."""
    ring: Ring
    delta: Any
    terms: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {k: v for k, v in self.terms.items() if not self.ring.is_zero(v)}

    def _compatible(self, other: "GraphPolynomial") -> None:
        if self.ring != other.ring or not self.ring.is_zero(self.ring.sub(self.delta, other.delta)):
            raise ValueError(
                f"cannot combine polynomials over {self.ring.name} (δ={self.ring.format(self.delta)}) "
                f"and {other.ring.name} (δ={other.ring.format(other.delta)})"
            )

    def __add__(self, other: "GraphPolynomial") -> "GraphPolynomial":
        self._compatible(other)
        terms = dict(self.terms)
        for code, c in other.terms.items():
            terms[code] = self.ring.add(terms.get(code, self.ring.zero), c)
        return GraphPolynomial(self.ring, self.delta, terms)

    def scale(self, c: Any) -> "GraphPolynomial":
        return GraphPolynomial(
            self.ring, self.delta, {k: self.ring.mul(c, v) for k, v in self.terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphPolynomial):
            return NotImplemented
        return self.ring == other.ring and self.serialize() == other.serialize()

    def __hash__(self) -> int:
        return hash(self.serialize())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def codes(self) -> List[str]:
        return sorted(self.terms, key=_code_key)

    def serialize(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for code in self.codes():
            coeff = self.ring.format(self.terms[code])
            if any(ch in coeff for ch in " /*"):
                coeff = f"({coeff})"
            parts.append(f"{coeff}*{code}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.serialize()

    def substitute_circle(self) -> Any:
        """
        The quotient ○ = δ: the scalar Σ c·δ for a combination supported on
        CIRCLE. Raises ValueError when other pictures survive.
        """
        others = [code for code in self.terms if code != CIRCLE]
        if others:
            raise ValueError(f"cannot substitute ○ = δ: pictures {others} remain")
        return self.ring.mul(self.terms.get(CIRCLE, self.ring.zero), self.delta)

    @classmethod
    def parse(cls, text: str, ring: Ring, delta: Any) -> "GraphPolynomial":
        """Read the serialized form back, re-canonicalizing every picture."""
        text = text.strip()
        if text == "0":
            return cls(ring, delta)
        pattern = re.compile(r"\s*(\([^()]*\)|[^\s*()+]+)\*((?:\([^()]*\))+)\s*(?:\+|$)")
        raw: List[Tuple[Any, FreeGraph]] = []
        pos = 0
        while pos < len(text):
            match = pattern.match(text, pos)
            if not match:
                raise ValueError(f"cannot parse graph polynomial near '{text[pos:]}'")
            coeff_text = match.group(1)
            if coeff_text.startswith("("):
                coeff_text = coeff_text[1:-1]
            raw.append((ring.parse(coeff_text), FreeGraph.parse(match.group(2))))
            pos = match.end()
        return normalize(raw, ring, delta)


def normalize(raw: Iterable[Tuple[Any, FreeGraph]], ring: Ring, delta: Any) -> GraphPolynomial:
    """
    Collect raw (coefficient, graph) terms. Each graph is R2-reduced; with c
    chordless circles a graph with vertices becomes δ^c · code and a graph
    without vertices becomes δ^(c-1) · CIRCLE.
    """
    terms: Dict[str, Any] = {}
    for coeff, g in raw:
        if ring.is_zero(coeff):
            continue
        code, c = reduced_class(g)
        if code == CIRCLE:
            if c == 0:
                raise ValueError("a picture needs at least one circle")
            c -= 1
        value = ring.mul(coeff, ring.pow(delta, c)) if c else coeff
        terms[code] = ring.add(terms.get(code, ring.zero), value)
    return GraphPolynomial(ring, delta, terms)
