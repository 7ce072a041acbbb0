"""
test_freegraph.py

Smoothing states, second-move reduction of pictures, canonical codes and
graph polynomials.

Run:  pytest test_freegraph.py
"""

import random

import pytest

from invariants import CIRCLE, FreeGraph, GraphPolynomial, Smoothing, canonical_code, normalize, r2_reduce, smooth_state
from invariants.freegraph import remove_pair, removable_pairs
from knots import parse_gauss_code
from rings import ModularRing

Z2 = ModularRing(2)
Z5 = ModularRing(5)
ODD6_GRAPH = "(a b a c d c e f e b d f)"


# ---------------------------------------------------------------------------
# Smoothing
# ---------------------------------------------------------------------------

def test_oriented_kink_splits_the_circle():
    g = smooth_state(parse_gauss_code("O1+ U1+"), {"1": Smoothing.ORIENTED})
    assert g.vertex_count == 0
    assert g.circle_count == 2


def test_disoriented_kink_keeps_one_circle():
    g = smooth_state(parse_gauss_code("O1+ U1+"), {"1": Smoothing.DISORIENTED})
    assert g.circle_count == 1


def test_all_vertices_give_the_chord_diagram():
    d = parse_gauss_code("O1+ O2+ U1+ O3+ O4+ U3+ O5+ O6+ U5+ U2+ U4+ U6+")
    g = smooth_state(d, {label: Smoothing.VERTEX for label in d.labels})
    assert g.vertex_count == 6
    assert canonical_code(g) == canonical_code(FreeGraph.parse(ODD6_GRAPH))


def test_bare_components_become_free_circles():
    g = smooth_state(parse_gauss_code("/"), {})
    assert g.circles == ()
    assert g.free_circles == 2


# ---------------------------------------------------------------------------
# Parsing and canonical codes
# ---------------------------------------------------------------------------

def test_parse_and_print():
    g = FreeGraph.parse("(a b a b)(o)")
    assert g.free_circles == 1
    assert str(g) == "(a b a b)(o)"


@pytest.mark.parametrize("text", ["(a b a)", "a b", "(a a)(b)"])
def test_parse_rejects_bad_codes(text):
    with pytest.raises(ValueError):
        FreeGraph.parse(text)


def test_canonical_code_ignores_labels_rotation_and_reflection():
    code = canonical_code(FreeGraph.parse("(a b c a c b)"))
    assert canonical_code(FreeGraph.parse("(z y x z x y)")) == code
    assert canonical_code(FreeGraph.parse("(c b a c a b)")) == code
    assert canonical_code(FreeGraph.parse("(b c a b a c)")) == code


def test_canonical_code_ignores_circle_order():
    a = canonical_code(FreeGraph.parse("(a b)(a c c b)"))
    b = canonical_code(FreeGraph.parse("(x y y z)(z x)"))
    assert a == b


def test_canonical_code_literal():
    assert canonical_code(FreeGraph.parse("(b a b a)")) == "(a b a b)"
    assert canonical_code(FreeGraph.parse("(o)")) == CIRCLE


# ---------------------------------------------------------------------------
# Second-move reduction
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("text", ["(a b a b)", "(a b b a)", "(a a b b)", "(a b)(a b)", "(a b)(b a)"])
def test_bigons_reduce_to_circles(text):
    r = r2_reduce(FreeGraph.parse(text))
    assert r.vertex_count == 0


def test_odd6_graph_is_irreducible():
    g = FreeGraph.parse(ODD6_GRAPH)
    assert removable_pairs(g) == []
    assert r2_reduce(g) == g


def _matchings(points):
    """Every perfect matching of `points` as a list of pairs."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k, partner in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, partner)] + tail


def _graphs(chords: int, split: bool = False):
    """Chord diagrams on one circle, and with `split` every cut into two circles."""
    size = 2 * chords
    for matching in _matchings(list(range(size))):
        word = [None] * size
        for k, (i, j) in enumerate(matching):
            word[i] = word[j] = chr(ord("a") + k)
        yield FreeGraph((tuple(word),))
        if split:
            for cut in range(1, size):
                yield FreeGraph.build([word[:cut], word[cut:]])


def _outcomes(g, seen=None):
    """Canonical codes of every fully reduced graph reachable from g."""
    if seen is None:
        seen = {}
    key = str(g)
    if key not in seen:
        pairs = removable_pairs(g)
        if not pairs:
            seen[key] = {canonical_code(g)}
        else:
            seen[key] = set().union(*(_outcomes(remove_pair(g, u, v), seen) for u, v in pairs))
    return seen[key]


@pytest.mark.parametrize("chords", [1, 2, 3, 4])
def test_reduction_is_confluent_exhaustively(chords):
    for g in _graphs(chords, split=True):
        assert len(_outcomes(g)) == 1, str(g)


@pytest.mark.slow
def test_reduction_is_confluent_on_every_five_chord_graph():
    graphs = list(_graphs(5, split=True))
    assert len(graphs) == 945 * 10
    for g in graphs:
        assert len(_outcomes(g)) == 1, str(g)


def _random_graph(rng, max_chords: int) -> FreeGraph:
    chords = rng.randint(1, max_chords)
    ends = [f"c{i}" for i in range(chords)] * 2
    rng.shuffle(ends)
    cuts = sorted(rng.sample(range(1, len(ends)), min(rng.randint(0, 2), len(ends) - 1)))
    bounds = [0] + cuts + [len(ends)]
    return FreeGraph.build([ends[a:b] for a, b in zip(bounds, bounds[1:])])


@pytest.mark.parametrize("seed", range(10))
def test_reduction_is_confluent_on_random_graphs(seed):
    rng = random.Random(seed)
    g = _random_graph(rng, 7)
    codes = {canonical_code(r2_reduce(g, choose=lambda pairs: rng.choice(pairs))) for _ in range(6)}
    assert len(codes) == 1


@pytest.mark.slow
def test_reduction_is_confluent_on_a_thousand_random_graphs():
    rng = random.Random(2024)
    for _ in range(1000):
        g = _random_graph(rng, 10)
        codes = {canonical_code(r2_reduce(g, choose=lambda pairs: rng.choice(pairs))) for _ in range(4)}
        codes.add(canonical_code(r2_reduce(g, choose=lambda pairs: pairs[-1])))
        assert len(codes) == 1, str(g)


# ---------------------------------------------------------------------------
# Graph polynomials
# ---------------------------------------------------------------------------

def test_circle_relation():
    p = GraphPolynomial.parse("2*(o)(o)", Z5, 3)
    assert p.serialize() == "1*(o)"


def test_linked_bigon_is_a_circle():
    p = GraphPolynomial.parse("1*(a b a b)", Z2, 0)
    assert p.serialize() == "1*(o)"


def test_sum_and_zero_terms():
    a = GraphPolynomial.parse("1*(o) + 1*" + ODD6_GRAPH, Z2, 0)
    b = GraphPolynomial.parse("1*(o)", Z2, 0)
    total = a + b
    assert total.codes() == [canonical_code(FreeGraph.parse(ODD6_GRAPH))]
    assert GraphPolynomial.parse("0", Z2, 0).is_zero


def test_circle_comes_first():
    p = GraphPolynomial.parse("3*" + ODD6_GRAPH + " + 4*(o)", Z5, 2)
    assert p.codes()[0] == CIRCLE
    assert p.serialize().startswith("4*(o) + 3*(")


def test_substitute_circle():
    assert GraphPolynomial.parse("4*(o)", Z5, 3).substitute_circle() == 2
    with pytest.raises(ValueError):
        GraphPolynomial.parse("1*" + ODD6_GRAPH, Z5, 3).substitute_circle()


def test_mismatched_delta_cannot_be_added():
    with pytest.raises(ValueError):
        GraphPolynomial.parse("1*(o)", Z5, 1) + GraphPolynomial.parse("1*(o)", Z5, 2)


def test_normalize_powers_of_delta():
    g = FreeGraph.parse(ODD6_GRAPH + "(o)(o)")
    p = normalize([(1, g)], Z5, 2)
    assert p.terms == {canonical_code(FreeGraph.parse(ODD6_GRAPH)): 4}


def _random_polynomial(rng, ring, delta) -> GraphPolynomial:
    raw = []
    for _ in range(rng.randint(0, 4)):
        g = _random_graph(rng, 5)
        g = FreeGraph(g.circles, g.free_circles + rng.randint(0, 2))
        raw.append((rng.randrange(ring.modulus), g))
    return normalize(raw, ring, delta)


@pytest.mark.parametrize("seed", range(20))
def test_normalize_is_idempotent(seed):
    rng = random.Random(seed)
    p = _random_polynomial(rng, Z5, 2)
    again = normalize([(c, FreeGraph.parse(code)) for code, c in p.terms.items()], Z5, 2)
    assert again == p
    assert again.terms == p.terms


@pytest.mark.parametrize("seed", range(20))
def test_addition_is_associative_and_commutative(seed):
    rng = random.Random(seed)
    a, b, c = (_random_polynomial(rng, Z5, 3) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + GraphPolynomial(Z5, 3) == a
