"""
invariants/biquandle.py

Finite biquandles and biquandle colorings of link diagrams.

Crossing relation used throughout (one place, `_slots`):
    positive crossing, under-in x, over-in y   ->  under-out x∘y, over-out y∗x
    negative crossing, under-out x, over-out y ->  under-in  x∘y, over-in  y∗x
so a positive/negative pair of crossings composes to the identity on colors.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from knots.gauss import LinkDiagram

logger = logging.getLogger("knotbracket.biquandle")

Table = Tuple[Tuple[int, ...], ...]
Coloring = Tuple[int, ...]          # one color per semiarc id


class BiquandleError(ValueError):
    """Malformed operation tables, or an operation that needs the axioms to hold."""


@dataclass(frozen=True)
class Biquandle:
    """
    A finite set X = {0..n-1} with x∘y = circ[x][y] and x∗y = star[x][y].
    """
    circ: Table
    star: Table
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = len(self.circ)
        if n == 0:
            raise BiquandleError("a biquandle needs at least one element")
        for label, table in (("circ", self.circ), ("star", self.star)):
            if len(table) != n:
                raise BiquandleError(f"{label} has {len(table)} rows, expected {n}")
            for x, row in enumerate(table):
                if len(row) != n:
                    raise BiquandleError(f"{label} row {x} has {len(row)} entries, expected {n}")
                bad = [v for v in row if not (isinstance(v, int) and 0 <= v < n)]
                if bad:
                    raise BiquandleError(f"{label} row {x} has out-of-range entry {bad[0]}")

    @property
    def size(self) -> int:
        return len(self.circ)

    def __len__(self) -> int:
        return self.size

    @classmethod
    def from_function(
        cls,
        n: int,
        circ: Callable[[int, int], int],
        star: Callable[[int, int], int],
        name: str = "",
    ) -> "Biquandle":
        return cls(
            tuple(tuple(circ(x, y) % n for y in range(n)) for x in range(n)),
            tuple(tuple(star(x, y) % n for y in range(n)) for x in range(n)),
            name,
        )

    def to_text(self) -> str:
        lines = [f"n={self.size}", "circ:"]
        lines += [" ".join(map(str, row)) for row in self.circ]
        lines.append("star:")
        lines += [" ".join(map(str, row)) for row in self.star]
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------------
    # Derived inverse tables (need axioms R2 and R3)
    # ------------------------------------------------------------------

    @cached_property
    def circ_inv(self) -> Table:
        """circ_inv[z][y] = the x with x∘y = z."""
        return self._column_inverse(self.circ, "circ")

    @cached_property
    def star_inv(self) -> Table:
        """star_inv[z][y] = the x with x∗y = z."""
        return self._column_inverse(self.star, "star")

    @cached_property
    def s_inv(self) -> Dict[Tuple[int, int], Tuple[int, int]]:
        """Inverse of S(x, y) = (y∗x, x∘y)."""
        inverse: Dict[Tuple[int, int], Tuple[int, int]] = {}
        for x in range(self.size):
            for y in range(self.size):
                image = (self.star[y][x], self.circ[x][y])
                if image in inverse:
                    raise BiquandleError("S is not invertible")
                inverse[image] = (x, y)
        return inverse

    def _column_inverse(self, table: Table, label: str) -> Table:
        n = self.size
        inv = [[-1] * n for _ in range(n)]
        for y in range(n):
            for x in range(n):
                z = table[x][y]
                if inv[z][y] != -1:
                    raise BiquandleError(f"column {y} of {label} is not a permutation")
                inv[z][y] = x
        return tuple(tuple(row) for row in inv)


# ─────────────────────────────────────────────────────────────────────────────
# Built-in biquandles
# ─────────────────────────────────────────────────────────────────────────────

def _singleton() -> Biquandle:
    return Biquandle.from_function(1, lambda x, y: 0, lambda x, y: 0, "singleton")


def _z2flip() -> Biquandle:
    return Biquandle.from_function(2, lambda x, y: x + 1, lambda x, y: x + 1, "z2flip")


def _z3dihedral() -> Biquandle:
    return Biquandle.from_function(3, lambda x, y: x, lambda x, y: 2 * y - x, "z3dihedral")


_BIQUANDLES: Dict[str, Callable[[], Biquandle]] = {
    "singleton":  _singleton,
    "z2flip":     _z2flip,
    "z3dihedral": _z3dihedral,
}


def get_biquandle(name: str) -> Biquandle:
    """Return a built-in biquandle by name. Raises ValueError for unknown names."""
    key = name.lower().strip()
    if key not in _BIQUANDLES:
        supported = ", ".join(_BIQUANDLES)
        raise ValueError(f"Unknown biquandle '{name}'. Supported: {supported}")
    return _BIQUANDLES[key]()


def builtin_biquandles() -> List[str]:
    return list(_BIQUANDLES)


# ─────────────────────────────────────────────────────────────────────────────
# Axioms
# ─────────────────────────────────────────────────────────────────────────────

@dataclass
class AxiomViolation:
    axiom: str
    witness: Tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.axiom} witness={self.witness}: {self.detail}"


@dataclass
class AxiomReport:
    violations: List[AxiomViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> List[str]:
        return [v.axiom for v in self.violations]


def check_axioms(X: Biquandle) -> AxiomReport:
    """
    Check R1-R4 over all elements. Each violated axiom is reported once,
    with the first witness found.
    """
    n = X.size
    o, s = X.circ, X.star
    report = AxiomReport()

    for x in range(n):
        if o[x][x] != s[x][x]:
            report.violations.append(
                AxiomViolation("R1", (x,), f"{x}∘{x} = {o[x][x]} but {x}∗{x} = {s[x][x]}")
            )
            break

    for y in range(n):
        bad = None
        for label, table in (("∘", o), ("∗", s)):
            column = [table[x][y] for x in range(n)]
            if len(set(column)) != n:
                bad = label
                break
        if bad:
            report.violations.append(
                AxiomViolation("R2", (y,), f"x ↦ x{bad}{y} is not a bijection")
            )
            break

    images: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for x, y in itertools.product(range(n), repeat=2):
        image = (s[y][x], o[x][y])
        if image in images:
            px, py = images[image]
            report.violations.append(
                AxiomViolation("R3", (px, py, x, y), f"S({px},{py}) = S({x},{y}) = {image}")
            )
            break
        images[image] = (x, y)

    laws = (
        ("R4.1", lambda x, y, z: (o[o[x][z]][o[y][z]], o[o[x][y]][s[z][y]])),
        ("R4.2", lambda x, y, z: (s[o[y][z]][o[x][z]], o[s[y][x]][s[z][x]])),
        ("R4.3", lambda x, y, z: (s[s[z][x]][s[y][x]], s[s[z][y]][o[x][y]])),
    )
    for axiom, law in laws:
        for x, y, z in itertools.product(range(n), repeat=3):
            lhs, rhs = law(x, y, z)
            if lhs != rhs:
                report.violations.append(
                    AxiomViolation(axiom, (x, y, z), f"exchange law gives {lhs} != {rhs}")
                )
                break

    logger.debug("axiom check for %s: %d violation(s)", X.name or "biquandle", len(report.violations))
    return report


# ─────────────────────────────────────────────────────────────────────────────
# Colorings
# ─────────────────────────────────────────────────────────────────────────────

def _slots(d: LinkDiagram) -> List[Tuple[int, int, int, int]]:
    """
    Per crossing, semiarc ids (p, q, r, s) with r = p∘q and s = q∗p.
    """
    slots = []
    ports = d.ports()
    for label in d.labels:
        pt = ports[label]
        if d.sign(label) > 0:
            slots.append((pt.under_in, pt.over_in, pt.under_out, pt.over_out))
        else:
            slots.append((pt.under_out, pt.over_out, pt.under_in, pt.over_in))
    return slots


def _solve(X: Biquandle, slot: Tuple[int, int, int, int], colors: List[Optional[int]]) -> Optional[Tuple[int, int, int, int]]:
    """Complete one crossing from any solvable pair of known colors, or None."""
    p, q, r, s = (colors[i] for i in slot)
    if p is not None and q is not None:
        return p, q, X.circ[p][q], X.star[q][p]
    if r is not None and s is not None:
        p2, q2 = X.s_inv[(s, r)]
        return p2, q2, r, s
    if p is not None and s is not None:
        q2 = X.star_inv[s][p]
        return p, q2, X.circ[p][q2], s
    if q is not None and r is not None:
        p2 = X.circ_inv[r][q]
        return p2, q, r, X.star[q][p2]
    return None


def _propagate(X: Biquandle, slots, colors: List[Optional[int]]) -> bool:
    changed = True
    while changed:
        changed = False
        for slot in slots:
            solved = _solve(X, slot, colors)
            if solved is None:
                continue
            for idx, value in zip(slot, solved):
                if colors[idx] is None:
                    colors[idx] = value
                    changed = True
                elif colors[idx] != value:
                    return False
    return True


def enumerate_colorings(d: LinkDiagram, X: Biquandle) -> List[Coloring]:
    """
    All biquandle colorings of d by X, in lexicographic order of the semiarc
    color tuples. Backtracks over semiarcs and propagates through crossings.
    """
    slots = _slots(d)
    total = d.semiarc_count
    found: List[Coloring] = []

    def search(colors: List[Optional[int]]) -> None:
        if not _propagate(X, slots, colors):
            return
        try:
            k = colors.index(None)
        except ValueError:
            found.append(tuple(colors))  # type: ignore[arg-type]
            return
        for value in range(X.size):
            trial = list(colors)
            trial[k] = value
            search(trial)

    search([None] * total)
    found.sort()
    logger.debug("%d coloring(s) of %s by %s", len(found), d, X.name or "biquandle")
    return found


def is_coloring(d: LinkDiagram, X: Biquandle, colors: Sequence[int]) -> bool:
    for p, q, r, s in _slots(d):
        if colors[r] != X.circ[colors[p]][colors[q]] or colors[s] != X.star[colors[q]][colors[p]]:
            return False
    return True


def enumerate_colorings_bruteforce(d: LinkDiagram, X: Biquandle) -> List[Coloring]:
    """Exhaustive X^(semiarcs) oracle."""
    return [
        colors
        for colors in itertools.product(range(X.size), repeat=d.semiarc_count)
        if is_coloring(d, X, colors)
    ]


def incoming_colors(d: LinkDiagram, colors: Sequence[int]) -> Dict[str, Tuple[int, int]]:
    """label -> (under-incoming color, over-incoming color)."""
    return {
        label: (colors[pt.under_in], colors[pt.over_in])
        for label, pt in d.ports().items()
    }
