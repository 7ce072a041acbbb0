"""
invariants/relations.py

Coefficient sets for the scalar and picture-valued biquandle brackets, and
the relation systems they must satisfy.

Relations are written in a compact text form and compiled once:

    A[x,y]      table entry; indices are x, y, z, "x.y" (x∘y) or "z*y" (z∗y)
    A'[x,y]     inverse of a table entry
    d, w, W     δ, w and w⁻¹
    a = b = c   a chain of equations (a = b and b = c)

Every relation is quantified over the variables among x, y, z it mentions.
"""

import itertools
import logging
import re
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from rings import NonUnitError, Ring

from .biquandle import Biquandle

logger = logging.getLogger("knotbracket.relations")

TABLES = ("A", "B", "C", "D", "E", "F")

Cell = Tuple[str, int, int]             # ("A", x, y)


# ─────────────────────────────────────────────────────────────────────────────
# Coefficient sets
# ─────────────────────────────────────────────────────────────────────────────

def _coerce_table(ring: Ring, n: int, name: str, rows: Sequence[Sequence[Any]]) -> Tuple[Tuple[Any, ...], ...]:
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"table {name} must be {n}x{n}")
    return tuple(tuple(ring.coerce(v) for v in r) for r in rows)


@dataclass(frozen=True)
class NorCoefficients:
    """
    Scalar biquandle bracket data: unit-valued tables A, B on X×X, the
    circle value δ and the kink value w.
    """
    ring: Ring
    X: Biquandle
    A: Tuple[Tuple[Any, ...], ...]
    B: Tuple[Tuple[Any, ...], ...]
    delta: Any
    w: Any

    def __post_init__(self) -> None:
        n = self.X.size
        object.__setattr__(self, "A", _coerce_table(self.ring, n, "A", self.A))
        object.__setattr__(self, "B", _coerce_table(self.ring, n, "B", self.B))
        object.__setattr__(self, "delta", self.ring.coerce(self.delta))
        object.__setattr__(self, "w", self.ring.coerce(self.w))
        for name in ("A", "B"):
            for row in getattr(self, name):
                for v in row:
                    if not self.ring.is_unit(v):
                        raise NonUnitError(self.ring, v)
        if not self.ring.is_unit(self.w):
            raise NonUnitError(self.ring, self.w)

    @classmethod
    def derived(cls, ring: Ring, X: Biquandle, A, B) -> "NorCoefficients":
        """Fill in δ = -A B⁻¹ - A⁻¹ B and w = δ A + B from the entries at (0, 0)."""
        a = ring.coerce(A[0][0])
        b = ring.coerce(B[0][0])
        delta = ring.neg(ring.add(ring.mul(a, ring.inverse(b)), ring.mul(ring.inverse(a), b)))
        w = ring.add(ring.mul(delta, a), b)
        return cls(ring, X, A, B, delta, w)

    def lookup(self, cell: Cell) -> Any:
        name, x, y = cell
        return getattr(self, name)[x][y]


@dataclass(frozen=True)
class BracketCoefficients:
    """
    β = (A, B, C, D, E, F) over `ring` for colorings by X, with circle value
    δ and kink value w (a unit).

    A, B, C weight the oriented smoothing, the disoriented smoothing and the
    graphical vertex at positive crossings; D, E, F do the same at negative
    crossings.
    """
    ring: Ring
    X: Biquandle
    tables: Dict[str, Tuple[Tuple[Any, ...], ...]] = field(hash=False)
    delta: Any = 0
    w: Any = 1

    def __post_init__(self) -> None:
        n = self.X.size
        missing = [t for t in TABLES if t not in self.tables]
        if missing:
            raise ValueError(f"missing coefficient table(s) {missing}")
        object.__setattr__(
            self, "tables", {t: _coerce_table(self.ring, n, t, self.tables[t]) for t in TABLES}
        )
        object.__setattr__(self, "delta", self.ring.coerce(self.delta))
        object.__setattr__(self, "w", self.ring.coerce(self.w))
        if not self.ring.is_unit(self.w):
            raise NonUnitError(self.ring, self.w)

    def entry(self, name: str, x: int, y: int) -> Any:
        return self.tables[name][x][y]

    def lookup(self, cell: Cell) -> Any:
        name, x, y = cell
        return self.tables[name][x][y]

    @classmethod
    def from_nor(cls, nor: NorCoefficients) -> "BracketCoefficients":
        """β = (A, B, 0, A⁻¹, B⁻¹, 0)."""
        ring = nor.ring
        zero = tuple(tuple(ring.zero for _ in row) for row in nor.A)
        inv = lambda t: tuple(tuple(ring.inverse(v) for v in row) for row in t)
        return cls(
            ring,
            nor.X,
            {"A": nor.A, "B": nor.B, "C": zero, "D": inv(nor.A), "E": inv(nor.B), "F": zero},
            nor.delta,
            nor.w,
        )

    def with_entry(self, name: str, x: int, y: int, value: Any) -> "BracketCoefficients":
        rows = [list(r) for r in self.tables[name]]
        rows[x][y] = value
        return replace(self, tables={**self.tables, name: tuple(tuple(r) for r in rows)})


# ─────────────────────────────────────────────────────────────────────────────
# Relation compiler
# ─────────────────────────────────────────────────────────────────────────────

_VARS = ("x", "y", "z")
_FACTOR = re.compile(r"^([A-F])('?)\[([^\],]+),([^\]]+)\]$")
_INDEX = re.compile(r"^([xyz])(?:([.*])([xyz]))?$")


@dataclass(frozen=True)
class _Factor:
    kind: str                       # "cell" | "d" | "w" | "W" | "const"
    table: str = ""
    inverse: bool = False
    index: Tuple[str, str] = ("", "")
    const: int = 1


@dataclass(frozen=True)
class _Term:
    sign: int
    factors: Tuple[_Factor, ...]


@dataclass(frozen=True)
class Relation:
    """One compiled equation `lhs = rhs`, quantified over `variables`."""
    id: str
    text: str
    lhs: Tuple[_Term, ...]
    rhs: Tuple[_Term, ...]
    variables: Tuple[str, ...]

    def instances(self, X: Biquandle) -> Iterator["Instance"]:
        for values in itertools.product(range(X.size), repeat=len(self.variables)):
            env = dict(zip(self.variables, values))
            yield Instance(
                self,
                env,
                tuple(_concrete(t, env, X) for t in self.lhs),
                tuple(_concrete(t, env, X) for t in self.rhs),
            )


# (sign, const, cells, inverse cells, δ power, w power)
ConcreteTerm = Tuple[int, int, Tuple[Cell, ...], Tuple[Cell, ...], int, int]


@dataclass(frozen=True)
class Instance:
    relation: Relation
    witness: Dict[str, int] = field(hash=False)
    lhs: Tuple[ConcreteTerm, ...]
    rhs: Tuple[ConcreteTerm, ...]

    def cells(self) -> List[Cell]:
        out = []
        for term in self.lhs + self.rhs:
            out.extend(term[2])
            out.extend(term[3])
        return out

    def uses_delta(self) -> bool:
        return any(t[4] for t in self.lhs + self.rhs)

    def uses_w(self) -> bool:
        return any(t[5] for t in self.lhs + self.rhs)


def _index_value(expr: str, env: Dict[str, int], X: Biquandle) -> int:
    m = _INDEX.match(expr)
    a, op, b = m.groups()
    if op is None:
        return env[a]
    if op == ".":
        return X.circ[env[a]][env[b]]
    return X.star[env[a]][env[b]]


def _concrete(term: _Term, env: Dict[str, int], X: Biquandle) -> ConcreteTerm:
    const, cells, inv_cells, dpow, wpow = 1, [], [], 0, 0
    for f in term.factors:
        if f.kind == "const":
            const *= f.const
        elif f.kind == "d":
            dpow += 1
        elif f.kind == "w":
            wpow += 1
        elif f.kind == "W":
            wpow -= 1
        else:
            cell = (f.table, _index_value(f.index[0], env, X), _index_value(f.index[1], env, X))
            (inv_cells if f.inverse else cells).append(cell)
    return (term.sign, const, tuple(cells), tuple(inv_cells), dpow, wpow)


def _parse_factor(token: str) -> _Factor:
    if token in ("d", "w", "W"):
        return _Factor(token)
    if token.isdigit():
        return _Factor("const", const=int(token))
    m = _FACTOR.match(token)
    if not m:
        raise ValueError(f"bad relation factor '{token}'")
    table, prime, i, j = m.groups()
    for expr in (i, j):
        if not _INDEX.match(expr):
            raise ValueError(f"bad index '{expr}' in '{token}'")
    return _Factor("cell", table, bool(prime), (i, j))


def _parse_side(text: str) -> Tuple[_Term, ...]:
    terms = []
    for sign_text, body in re.findall(r"([+-]?)\s*([^+-]+)", text.strip()):
        factors = tuple(_parse_factor(tok) for tok in body.split())
        if not factors:
            continue
        terms.append(_Term(-1 if sign_text == "-" else 1, factors))
    return tuple(terms)


def compile_relations(specs: Sequence[Tuple[str, str]]) -> List[Relation]:
    """Compile (id, text) pairs; a chain a = b = c yields ids id.1, id.2 ..."""
    out: List[Relation] = []
    for rid, text in specs:
        sides = [s.strip() for s in text.split("=")]
        variables = tuple(v for v in _VARS if re.search(rf"(?<![A-Za-z]){v}(?![A-Za-z])", text))
        pairs = list(zip(sides, sides[1:]))
        for k, (lhs, rhs) in enumerate(pairs, start=1):
            out.append(
                Relation(
                    rid if len(pairs) == 1 else f"{rid}.{k}",
                    f"{lhs} = {rhs}",
                    _parse_side(lhs),
                    _parse_side(rhs),
                    variables,
                )
            )
    return out


# ─────────────────────────────────────────────────────────────────────────────
# Relation lists
# ─────────────────────────────────────────────────────────────────────────────

_NOR = [
    ("nor.i.a", "d A[x,x] + B[x,x] = w"),
    ("nor.i.b", "d A'[x,x] + B'[x,x] = W"),
    ("nor.ii",  "d = - A[x,y] B'[x,y] - A'[x,y] B[x,y]"),
    ("nor.iii.1", "A[x,y] A[y,z] A[x.y,z*y] = A[x,z] A[y*x,z*x] A[x.z,y.z]"),
    ("nor.iii.2", "A[x,y] B[y,z] B[x.y,z*y] = B[x,z] B[y*x,z*x] A[x.z,y.z]"),
    ("nor.iii.3", "B[x,y] A[y,z] B[x.y,z*y] = B[x,z] A[y*x,z*x] B[x.z,y.z]"),
    ("nor.iii.4", "A[x,y] A[y,z] B[x.y,z*y] = A[x,z] B[y*x,z*x] A[x.z,y.z] + A[x,z] A[y*x,z*x] B[x.z,y.z]"
                  " + d A[x,z] B[y*x,z*x] B[x.z,y.z] + B[x,z] B[y*x,z*x] B[x.z,y.z]"),
    ("nor.iii.5", "B[x,z] A[y*x,z*x] A[x.z,y.z] = B[x,y] A[y,z] A[x.y,z*y] + A[x,y] B[y,z] A[x.y,z*y]"
                  " + d B[x,y] B[y,z] A[x.y,z*y] + B[x,y] B[y,z] B[x.y,z*y]"),
]

_PB_FIRST_SECOND = [
    ("i.a",  "d A[x,x] + B[x,x] = w"),
    ("i.b",  "d D[x,x] + E[x,x] = W"),
    ("i.c",  "C[x,x] = F[x,x] = 0"),
    ("ii.a", "A[x,y] F[x,y] = C[x,y] D[x,y] = B[x,y] F[x,y] = C[x,y] E[x,y] = 0"),
    ("ii.b", "A[x,y] D[x,y] = B[x,y] E[x,y] = 1 - C[x,y] F[x,y]"),
    ("ii.c", "d A[x,y] D[x,y] = - A[x,y] E[x,y] - B[x,y] D[x,y]"),
    # second moves, strands in the same direction
    ("o2s.a", "A[x,y] D[x,y] + C[x,y] F[x,y] = 1"),
    ("o2s.b", "B[x,y] F[x,y] = C[x,y] E[x,y] = 0"),
    ("o2s.c", "A[x,y] F[x,y] + C[x,y] D[x,y] = A[x,y] E[x,y] + B[x,y] D[x,y] + d B[x,y] E[x,y] = 0"),
    # second moves, strands in opposite directions
    ("o2o.a", "B[x,y] E[x,y] + C[x,y] F[x,y] = 1"),
    ("o2o.b", "A[x,y] F[x,y] = C[x,y] D[x,y] = 0"),
    ("o2o.c", "B[x,y] F[x,y] + C[x,y] E[x,y] = A[x,y] E[x,y] + B[x,y] D[x,y] + d A[x,y] D[x,y] = 0"),
]

_L = "[x.y,z*y]"        # third factor on the left-hand sides
_R = "[x.z,y.z]"        # third factor on the right-hand sides
_M = "[y*x,z*x]"        # middle factor on the right-hand sides

_PB_THIRD = [
    ("iii.1",  f"A[x,y] A[y,z] A{_L} + C[x,y] C[y,z] A{_L} = A[x,z] A{_M} A{_R} + A[x,z] C{_M} C{_R}"),
    ("iii.2",  f"A[x,y] B[y,z] B{_L} + C[x,y] B[y,z] C{_L} = B[x,z] B{_M} A{_R} + C[x,z] B{_M} C{_R}"),
    ("iii.3",  f"B[x,y] A[y,z] B{_L} + B[x,y] C[y,z] C{_L} = B[x,z] A{_M} B{_R} + C[x,z] C{_M} B{_R}"),
    ("iii.4",  f"A[x,y] C[y,z] A{_L} + C[x,y] A[y,z] A{_L} = C[x,z] A{_M} A{_R}"),
    ("iii.5",  f"A[x,y] A[y,z] C{_L} = A[x,z] A{_M} C{_R} + A[x,z] C{_M} A{_R}"),
    ("iii.6",  f"A[x,y] C[y,z] B{_L} = B[x,z] B{_M} C{_R} + C[x,z] B{_M} A{_R}"),
    ("iii.7",  f"B[x,y] C[y,z] B{_L} + B[x,y] A[y,z] C{_L} = B[x,z] A{_M} C{_R}"),
    ("iii.8",  f"A[x,y] B[y,z] C{_L} + C[x,y] B[y,z] B{_L} = B[x,z] C{_M} A{_R}"),
    ("iii.9",  f"C[x,y] A[y,z] B{_L} = B[x,z] C{_M} B{_R} + C[x,z] A{_M} B{_R}"),
    ("iii.10", f"C[x,y] C[y,z] B{_L} = B[x,z] C{_M} C{_R}"),
    ("iii.11", f"A[x,y] C[y,z] C{_L} = C[x,z] C{_M} A{_R}"),
    ("iii.12", f"C[x,y] A[y,z] C{_L} = C[x,z] A{_M} C{_R}"),
    ("iii.13", f"B[x,y] C[y,z] A{_L} = C[x,y] B[y,z] A{_L} = B[x,y] B[y,z] C{_L} = C[x,y] C[y,z] C{_L} = 0"),
    ("iii.14", f"A[x,z] B{_M} C{_R} = A[x,z] C{_M} B{_R} = C[x,z] B{_M} B{_R} = C[x,z] C{_M} C{_R} = 0"),
    ("iii.15", f"A[x,y] A[y,z] B{_L} = A[x,z] B{_M} A{_R} + A[x,z] A{_M} B{_R}"
               f" + d A[x,z] B{_M} B{_R} + B[x,z] B{_M} B{_R}"),
    ("iii.16", f"B[x,z] A{_M} A{_R} = B[x,y] A[y,z] A{_L} + A[x,y] B[y,z] A{_L}"
               f" + d B[x,y] B[y,z] A{_L} + B[x,y] B[y,z] B{_L}"),
]

# Two third-move lines as printed, with first factors indexed (x,z),(y,z)
_PB_THIRD_PRINTED = {
    "iii.7": f"B[x,y] C[y,z] B{_L} + B[x,z] A[y,z] C{_L} = B[x,z] A{_M} C{_R}",
    "iii.8": f"A[x,y] B[y,z] C{_L} + C[x,z] B[y,z] B{_L} = B[x,z] C{_M} A{_R}",
}


def nor_relations() -> List[Relation]:
    return compile_relations(_NOR)


def pbbr_relations(strict_printed: bool = False) -> List[Relation]:
    """
    Union of the first-move, second-move (both figure forms) and third-move
    relations. `strict_printed` swaps in the two third-move lines exactly
    as printed instead of their consistently indexed reading.
    """
    third = [
        (rid, _PB_THIRD_PRINTED[rid] if strict_printed and rid in _PB_THIRD_PRINTED else text)
        for rid, text in _PB_THIRD
    ]
    return compile_relations(_PB_FIRST_SECOND + third)


# ─────────────────────────────────────────────────────────────────────────────
# Evaluation and verification
# ─────────────────────────────────────────────────────────────────────────────

def term_value(
    ring: Ring,
    term: ConcreteTerm,
    lookup: Callable[[Cell], Any],
    delta: Any,
    w: Any,
) -> Any:
    sign, const, cells, inv_cells, dpow, wpow = term
    value = ring.coerce(sign * const)
    for cell in cells:
        value = ring.mul(value, lookup(cell))
    for cell in inv_cells:
        value = ring.mul(value, ring.inverse(lookup(cell)))
    if dpow:
        value = ring.mul(value, ring.pow(delta, dpow))
    if wpow:
        value = ring.mul(value, ring.pow(w, wpow))
    return value


def instance_residual(ring: Ring, inst: Instance, lookup, delta, w) -> Any:
    """lhs - rhs of one relation instance."""
    lhs = ring.sum(term_value(ring, t, lookup, delta, w) for t in inst.lhs)
    rhs = ring.sum(term_value(ring, t, lookup, delta, w) for t in inst.rhs)
    return ring.sub(lhs, rhs)


@dataclass
class RelationViolation:
    id: str
    relation: str
    witness: Dict[str, int]
    failures: int = 1

    def __str__(self) -> str:
        where = " ".join(f"{k}={v}" for k, v in self.witness.items()) or "-"
        more = f" (+{self.failures - 1} more)" if self.failures > 1 else ""
        return f"{self.id}: {self.relation}  at {where}{more}"


@dataclass
class RelationReport:
    checked: int = 0
    violations: List[RelationViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def ids(self) -> List[str]:
        return [v.id for v in self.violations]


def _verify(relations: List[Relation], ring: Ring, X: Biquandle, lookup, delta, w) -> RelationReport:
    report = RelationReport()
    for rel in relations:
        first: Optional[RelationViolation] = None
        for inst in rel.instances(X):
            report.checked += 1
            if ring.is_zero(instance_residual(ring, inst, lookup, delta, w)):
                continue
            if first is None:
                first = RelationViolation(rel.id, rel.text, dict(inst.witness))
                report.violations.append(first)
            else:
                first.failures += 1
    logger.debug("%d relation instance(s) checked, %d relation(s) violated",
                 report.checked, len(report.violations))
    return report


def verify_nor_relations(nor: NorCoefficients) -> RelationReport:
    return _verify(nor_relations(), nor.ring, nor.X, nor.lookup, nor.delta, nor.w)


def verify_pbbr_relations(beta: BracketCoefficients, strict_printed: bool = False) -> RelationReport:
    return _verify(pbbr_relations(strict_printed), beta.ring, beta.X, beta.lookup, beta.delta, beta.w)
