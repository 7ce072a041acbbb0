"""
invariants/brackets.py

State-sum brackets of link diagrams:

  parity_bracket          smooth even crossings both ways, keep odd ones as
                          graphical vertices; Z2 coefficients, δ = 0
  biquandle bracket       scalar, two smoothings per crossing weighted by
                          coloring-dependent units A, B
  parity-biquandle        picture-valued, three choices per crossing weighted
  bracket                 by A..F (positive) or D..F (negative)

Coefficients are indexed by colors: a positive crossing by
(under-incoming, over-outgoing), a negative one by (under-outgoing,
over-incoming). A kink is then indexed (x, x) and the two crossings of a
second move share their index.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from knots.gauss import LinkDiagram, writhe
from knots.moves import random_equivalent_diagram
from rings import ModularRing, Ring

from .biquandle import Biquandle, Coloring, enumerate_colorings, get_biquandle
from .freegraph import GraphPolynomial, Smoothing, normalize, smooth_state
from .multiset import InvariantMultiset
from .parity import ParityAssignment, gaussian_parity
from .relations import BracketCoefficients, NorCoefficients

logger = logging.getLogger("knotbracket.brackets")

Option = Tuple[Smoothing, Any]


def coefficient_index(d: LinkDiagram, colors: Sequence[int]) -> Dict[str, Tuple[int, int]]:
    index = {}
    for label, pt in d.ports().items():
        if d.sign(label) > 0:
            index[label] = (colors[pt.under_in], colors[pt.over_out])
        else:
            index[label] = (colors[pt.under_out], colors[pt.over_in])
    return index


def _states(labels: List[str], options: Dict[str, List[Option]]) -> Iterator[Tuple[Dict[str, Smoothing], List[Any]]]:
    """Every combination of per-crossing options, with the chosen coefficients."""
    for combo in itertools.product(*(options[label] for label in labels)):
        yield {label: choice for label, (choice, _) in zip(labels, combo)}, [c for _, c in combo]


def _normalizer(ring: Ring, w: Any, d: LinkDiagram) -> Any:
    return ring.pow(w, -writhe(d))


# ─────────────────────────────────────────────────────────────────────────────
# Parity bracket
# ─────────────────────────────────────────────────────────────────────────────

Z2 = ModularRing(2)


def parity_bracket(
    d: LinkDiagram, parity: Callable[[LinkDiagram], ParityAssignment] = gaussian_parity
) -> GraphPolynomial:
    p = parity(d)
    options: Dict[str, List[Option]] = {}
    for label in d.labels:
        if p[label]:
            options[label] = [(Smoothing.VERTEX, 1)]
        else:
            options[label] = [(Smoothing.ORIENTED, 1), (Smoothing.DISORIENTED, 1)]
    raw = [(1, smooth_state(d, state)) for state, _ in _states(d.labels, options)]
    return normalize(raw, Z2, 0)


# ─────────────────────────────────────────────────────────────────────────────
# Scalar biquandle bracket
# ─────────────────────────────────────────────────────────────────────────────

def biquandle_bracket_value(d: LinkDiagram, colors: Coloring, nor: NorCoefficients) -> Any:
    """
    Σ over the 2^n smoothing states of the product of the crossing weights
    times δ^k (k = number of circles of the state), all times w^(-writhe).
    """
    ring = nor.ring
    index = coefficient_index(d, colors)
    options: Dict[str, List[Option]] = {}
    for label in d.labels:
        x, y = index[label]
        a, b = nor.A[x][y], nor.B[x][y]
        if d.sign(label) < 0:
            a, b = ring.inverse(a), ring.inverse(b)
        options[label] = [(Smoothing.ORIENTED, a), (Smoothing.DISORIENTED, b)]

    total = ring.zero
    for state, coeffs in _states(d.labels, options):
        circles = smooth_state(d, state).circle_count
        total = ring.add(total, ring.mul(ring.product(coeffs), ring.pow(nor.delta, circles)))
    return ring.mul(total, _normalizer(ring, nor.w, d))


def biquandle_bracket_multiset(d: LinkDiagram, nor: NorCoefficients) -> InvariantMultiset:
    values = [biquandle_bracket_value(d, f, nor) for f in enumerate_colorings(d, nor.X)]
    return InvariantMultiset(nor.ring, values, nor.delta)


def biquandle_bracket_polynomial(d: LinkDiagram, nor: NorCoefficients) -> str:
    return biquandle_bracket_multiset(d, nor).polynomial()


# ─────────────────────────────────────────────────────────────────────────────
# Parity-biquandle bracket
# ─────────────────────────────────────────────────────────────────────────────

_POSITIVE = ((Smoothing.ORIENTED, "A"), (Smoothing.DISORIENTED, "B"), (Smoothing.VERTEX, "C"))
_NEGATIVE = ((Smoothing.ORIENTED, "D"), (Smoothing.DISORIENTED, "E"), (Smoothing.VERTEX, "F"))


def pb_bracket_value(
    d: LinkDiagram,
    colors: Coloring,
    beta: BracketCoefficients,
    cache: Optional[Dict[Tuple[Smoothing, ...], Any]] = None,
) -> GraphPolynomial:
    """
    Σ over the 3^n states of the product of the crossing weights times the
    state's picture, collected in R𝔊_δ and scaled by w^(-writhe).
    `cache` may be shared between colorings of the same diagram.
    """
    ring = beta.ring
    labels = d.labels
    index = coefficient_index(d, colors)
    options: Dict[str, List[Option]] = {}
    for label in labels:
        x, y = index[label]
        table = _POSITIVE if d.sign(label) > 0 else _NEGATIVE
        options[label] = [
            (choice, beta.entry(name, x, y))
            for choice, name in table
            if not ring.is_zero(beta.entry(name, x, y))
        ]

    cache = {} if cache is None else cache
    raw = []
    for state, coeffs in _states(labels, options):
        key = tuple(state[label] for label in labels)
        if key not in cache:
            cache[key] = smooth_state(d, state)
        raw.append((ring.product(coeffs), cache[key]))
    return normalize(raw, ring, beta.delta).scale(_normalizer(ring, beta.w, d))


def pb_bracket_multiset(d: LinkDiagram, beta: BracketCoefficients) -> InvariantMultiset:
    cache: Dict[Tuple[Smoothing, ...], Any] = {}
    values = [pb_bracket_value(d, f, beta, cache) for f in enumerate_colorings(d, beta.X)]
    logger.debug("pb bracket of %s: %d coloring(s), %d distinct state(s)", d, len(values), len(cache))
    return InvariantMultiset(beta.ring, values, beta.delta)


# ─────────────────────────────────────────────────────────────────────────────
# Built-in coefficient sets
# ─────────────────────────────────────────────────────────────────────────────

def z2_parity_coefficients() -> BracketCoefficients:
    """
    Flip biquandle over Z2: smooth crossings indexed (x, x) with weight 1,
    keep crossings indexed (x, x+1) as vertices; δ = 0, w = 1.
    """
    X = get_biquandle("z2flip")
    eq = tuple(tuple(int(x == y) for y in range(2)) for x in range(2))
    ne = tuple(tuple(int(x != y) for y in range(2)) for x in range(2))
    tables = {"A": eq, "B": eq, "C": ne, "D": eq, "E": eq, "F": ne}
    return BracketCoefficients(Z2, X, tables, 0, 1)


def constant_nor(ring: Ring, X: Biquandle, a: Any, b: Any) -> NorCoefficients:
    """NOR data with constant tables A = a, B = b and δ, w derived from them."""
    n = X.size
    A = tuple(tuple(a for _ in range(n)) for _ in range(n))
    B = tuple(tuple(b for _ in range(n)) for _ in range(n))
    return NorCoefficients.derived(ring, X, A, B)


# ─────────────────────────────────────────────────────────────────────────────
# Move-equivalence runs
# ─────────────────────────────────────────────────────────────────────────────

@dataclass
class EquivalenceSample:
    seed: int
    diagram: LinkDiagram
    value: str
    equal: bool


@dataclass
class EquivalenceReport:
    baseline: str
    samples: List[EquivalenceSample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.equal for s in self.samples)

    def failures(self) -> List[EquivalenceSample]:
        return [s for s in self.samples if not s.equal]


def run_equivalence_test(
    d: LinkDiagram,
    invariant: Callable[[LinkDiagram], str],
    samples: int,
    steps: int,
    seed: int,
    max_crossings: Optional[int] = None,
    log: Callable[[str], None] = lambda msg: None,
) -> EquivalenceReport:
    """
    Compare invariant(d) with invariant(d') for `samples` random diagrams
    d' move-equivalent to d. `invariant` returns a canonical serialization.
    """
    rng = random.Random(seed)
    report = EquivalenceReport(invariant(d))
    for i in range(samples):
        sample_seed = rng.randrange(2 ** 31)
        other = random_equivalent_diagram(d, steps, sample_seed, max_crossings=max_crossings)
        value = invariant(other)
        equal = value == report.baseline
        report.samples.append(EquivalenceSample(sample_seed, other, value, equal))
        log(f"sample {i + 1}/{samples} seed={sample_seed} crossings={other.crossing_count} "
            f"{'equal' if equal else 'DIFFERENT'}")
    return report
