"""
invariants/search.py

Backtracking search for parity-biquandle bracket coefficients over a small
finite ring.

Variables are assigned in a fixed order: δ, w, then for every pair (x, y)
(diagonal pairs first) the entries C, F, A, D, B, E. Every relation
instance is checked at the step where its last variable is assigned, so
whole subtrees die as soon as a relation fails.
"""

import logging
import re
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple, Union

import config
from rings import ModularRing, NonUnitError, Ring

from .biquandle import Biquandle
from .relations import TABLES, BracketCoefficients, Cell, Instance, instance_residual, pbbr_relations

logger = logging.getLogger("knotbracket.search")

Variable = Union[str, Cell]         # "delta", "w" or ("A", x, y)

_CELL_KEY = re.compile(r"^([A-F])\[(\d+),(\d+)\]$")
_TABLE_ORDER = ("C", "F", "A", "D", "B", "E")


class SearchBoundError(RuntimeError):
    """The search would exceed its configured size bounds."""


def _variable_order(n: int) -> List[Variable]:
    pairs = [(x, x) for x in range(n)] + [(x, y) for x in range(n) for y in range(n) if x != y]
    order: List[Variable] = ["delta", "w"]
    for x, y in pairs:
        order.extend((t, x, y) for t in _TABLE_ORDER)
    return order


def _expand_fix(fix: Mapping[str, Any], ring: Ring, n: int) -> Dict[Variable, Any]:
    """
    Keys: "delta", "w", a table name ("C", value a constant or n×n rows) or
    a single entry "A[0,1]".
    """
    pinned: Dict[Variable, Any] = {}
    for key, value in fix.items():
        key = key.strip()
        if key in ("delta", "w"):
            pinned[key] = ring.coerce(value)
        elif key in TABLES:
            if isinstance(value, (list, tuple)):
                if len(value) != n or any(len(row) != n for row in value):
                    raise ValueError(f"fixed table {key} must be {n}x{n}")
                for x in range(n):
                    for y in range(n):
                        pinned[(key, x, y)] = ring.coerce(value[x][y])
            else:
                for x in range(n):
                    for y in range(n):
                        pinned[(key, x, y)] = ring.coerce(value)
        else:
            m = _CELL_KEY.match(key.replace(" ", ""))
            if not m:
                raise ValueError(f"cannot fix '{key}': use delta, w, A..F or A[x,y]")
            table, x, y = m.group(1), int(m.group(2)), int(m.group(3))
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"entry {key} is outside the {n}x{n} tables")
            pinned[(table, x, y)] = ring.coerce(value)
    if "w" in pinned and not ring.is_unit(pinned["w"]):
        raise NonUnitError(ring, pinned["w"])
    return pinned


def _instance_variables(inst: Instance) -> List[Variable]:
    out: List[Variable] = list(inst.cells())
    if inst.uses_delta():
        out.append("delta")
    if inst.uses_w():
        out.append("w")
    return out


def search_coefficients(
    X: Biquandle,
    ring: Ring,
    fix: Optional[Mapping[str, Any]] = None,
    limit: Optional[int] = None,
    strict_printed: bool = False,
    log: Callable[[str], None] = lambda msg: None,
) -> List[BracketCoefficients]:
    """
    Every β over `ring` for X satisfying the full relation system, in
    lexicographic order of the variable assignment. Raises SearchBoundError
    when the ring is too large or the node budget runs out.
    """
    if not isinstance(ring, ModularRing):
        raise SearchBoundError(f"coefficient search needs a finite ring Zn, got {ring.name}")
    if ring.modulus > config.MAX_RING_SIZE:
        raise SearchBoundError(
            f"{ring.name} exceeds the search bound Z{config.MAX_RING_SIZE} "
            f"(KNOTBRACKET_MAX_RING_SIZE)"
        )
    limit = config.SEARCH_LIMIT if limit is None else limit
    n = X.size
    order = _variable_order(n)
    position = {v: i for i, v in enumerate(order)}
    pinned = _expand_fix(fix or {}, ring, n)

    # bucket relation instances by the step that completes them
    checks: Dict[int, List[Instance]] = {}
    for rel in pbbr_relations(strict_printed):
        for inst in rel.instances(X):
            step = max((position[v] for v in _instance_variables(inst)), default=-1)
            checks.setdefault(step, []).append(inst)

    values: Dict[Variable, Any] = {}

    def lookup(cell: Cell) -> Any:
        return values[cell]

    def holds(step: int) -> bool:
        for inst in checks.get(step, ()):
            if not ring.is_zero(instance_residual(ring, inst, lookup, values.get("delta"), values.get("w"))):
                return False
        return True

    if not holds(-1):
        return []

    units = [e for e in ring.elements() if ring.is_unit(e)]
    everything = list(ring.elements())
    results: List[BracketCoefficients] = []
    nodes = 0

    def domain(var: Variable) -> List[Any]:
        if var in pinned:
            return [pinned[var]]
        return units if var == "w" else everything

    def assign(step: int) -> None:
        nonlocal nodes
        if step == len(order):
            tables = {
                t: tuple(tuple(values[(t, x, y)] for y in range(n)) for x in range(n))
                for t in TABLES
            }
            results.append(BracketCoefficients(ring, X, tables, values["delta"], values["w"]))
            log(f"solution {len(results)} found after {nodes} node(s)")
            return
        var = order[step]
        for value in domain(var):
            nodes += 1
            if nodes > limit:
                raise SearchBoundError(
                    f"coefficient search exceeded {limit} nodes (KNOTBRACKET_SEARCH_LIMIT)"
                )
            values[var] = value
            if holds(step):
                assign(step + 1)
        values.pop(var, None)

    assign(0)
    logger.debug("search over %s for %s: %d node(s), %d solution(s)",
                 ring.name, X.name or "biquandle", nodes, len(results))
    return results
