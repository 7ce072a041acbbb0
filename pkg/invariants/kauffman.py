"""
invariants/kauffman.py

Brute-force Kauffman bracket, kept independent of the picture machinery so
it can serve as an oracle for the singleton-biquandle brackets.

    ⟨D⟩ = Σ_states a^(#A - #B) δ^(circles),   δ = -a² - a⁻²
    f(D) = (-a³)^(-writhe) ⟨D⟩

The A-smoothing is the orientation-coherent one at positive crossings and
the other one at negative crossings.
"""

import itertools
from typing import Any, Dict, Optional

from knots.gauss import HalfEdge, LinkDiagram, half_edge_mates, writhe
from rings import Ring

from .biquandle import Biquandle, get_biquandle
from .relations import NorCoefficients

_COHERENT = (("oi", "uo"), ("ui", "oo"))
_OTHER = (("oi", "ui"), ("oo", "uo"))


def _count_circles(d: LinkDiagram, a_choice: Dict[str, bool]) -> int:
    parent: Dict[HalfEdge, HalfEdge] = {}

    def find(h: HalfEdge) -> HalfEdge:
        parent.setdefault(h, h)
        while parent[h] != h:
            parent[h] = parent[parent[h]]
            h = parent[h]
        return h

    def union(a: HalfEdge, b: HalfEdge) -> None:
        parent[find(a)] = find(b)

    for h, k in half_edge_mates(d).items():
        union(h, k)
    for label, use_a in a_choice.items():
        coherent = use_a == (d.sign(label) > 0)
        for p, q in (_COHERENT if coherent else _OTHER):
            union((label, p), (label, q))

    roots = {find(h) for h in list(parent)}
    return len(roots) + sum(1 for comp in d.components if not comp)


def kauffman_oracle(d: LinkDiagram, ring: Ring, a: Any) -> Any:
    """Normalized Kauffman bracket of d at the unit a. Raises NonUnitError otherwise."""
    a = ring.coerce(a)
    a_inv = ring.inverse(a)
    delta = ring.neg(ring.add(ring.mul(a, a), ring.mul(a_inv, a_inv)))
    labels = d.labels

    total = ring.zero
    for choice in itertools.product((True, False), repeat=len(labels)):
        n_a = sum(choice)
        weight = ring.pow(a, n_a - (len(labels) - n_a))
        circles = _count_circles(d, dict(zip(labels, choice)))
        total = ring.add(total, ring.mul(weight, ring.pow(delta, circles)))

    w = ring.neg(ring.pow(a, 3))
    return ring.mul(total, ring.pow(w, -writhe(d)))


def kauffman_coefficients(ring: Ring, a: Any, X: Optional[Biquandle] = None) -> NorCoefficients:
    """A = a, B = a⁻¹ on every pair; δ = -a² - a⁻², w = -a³."""
    if X is None:
        X = get_biquandle("singleton")
    a = ring.coerce(a)
    n = X.size
    A = tuple(tuple(a for _ in range(n)) for _ in range(n))
    B = tuple(tuple(ring.inverse(a) for _ in range(n)) for _ in range(n))
    return NorCoefficients.derived(ring, X, A, B)
