"""
test_parity.py

Gaussian, component and biquandle parities, and the parity axioms across
every move the generator can emit.

Run:  pytest test_parity.py
"""

import itertools
import random

import pytest

from invariants import (
    biquandle_parity,
    check_parity_under_move,
    component_parity,
    format_parity,
    gaussian_parity,
    get_parity,
    parity_bracket,
    zero_parity,
)
from knots import LinkDiagram, Passage, applicable_moves, parse_gauss_code, random_equivalent_diagram

TREFOIL = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
VTREFOIL = parse_gauss_code("O1+ O2+ U1+ U2+")
ODD6 = parse_gauss_code("O1+ O2+ U1+ O3+ O4+ U3+ O5+ O6+ U5+ U2+ U4+ U6+")


def all_knot_codes(chords: int):
    """Every one-component Gauss code with the given number of chords (all signs +)."""
    labels = [str(i + 1) for i in range(chords)]
    for order in set(itertools.permutations(labels * 2)):
        seen = set()
        passages = []
        for label in order:
            passages.append(Passage(label, label not in seen))
            seen.add(label)
        yield LinkDiagram.from_passages([passages], {label: 1 for label in labels})


# ---------------------------------------------------------------------------
# Values
# ---------------------------------------------------------------------------

def test_trefoil_is_even():
    assert gaussian_parity(TREFOIL) == {"1": 0, "2": 0, "3": 0}
    assert format_parity(gaussian_parity(TREFOIL)) == "1:0 2:0 3:0"


def test_virtual_trefoil_is_odd():
    assert gaussian_parity(VTREFOIL) == {"1": 1, "2": 1}


def test_odd6_is_all_odd():
    assert set(gaussian_parity(ODD6).values()) == {1}


def test_kink_is_even():
    assert gaussian_parity(parse_gauss_code("O1+ U1+")) == {"1": 0}


@pytest.mark.parametrize("text, expected", [
    ("O1+ U2+ / U1+ O2+", {"1": 1, "2": 1}),
    ("O1+ U1+ /", {"1": 0}),
    ("O1+ / U1+", {"1": 1}),
])
def test_component_parity(text, expected):
    assert component_parity(parse_gauss_code(text)) == expected


def test_component_parity_needs_two_components():
    with pytest.raises(ValueError):
        component_parity(TREFOIL)


def test_biquandle_parity_needs_a_knot():
    with pytest.raises(ValueError):
        biquandle_parity(parse_gauss_code("O1+ U2+ / U1+ O2+"))


def test_get_parity():
    assert get_parity("gp") is gaussian_parity
    assert get_parity("comp") is component_parity
    assert get_parity("zero") is zero_parity
    with pytest.raises(ValueError, match="Unknown parity"):
        get_parity("odd")


@pytest.mark.parametrize("d", [TREFOIL, VTREFOIL, ODD6, parse_gauss_code("O1+ U2+ / U1+ O2+")])
def test_zero_parity_marks_every_crossing_even(d):
    assert zero_parity(d) == {label: 0 for label in d.labels}


def test_zero_parity_bracket_has_no_vertices():
    assert parity_bracket(ODD6, zero_parity).codes() in ([], ["(o)"])


@pytest.mark.parametrize("d", [TREFOIL, VTREFOIL])
def test_zero_parity_obeys_axioms(d):
    for m in applicable_moves(d):
        assert check_parity_under_move(d, m, zero_parity), m.describe()


@pytest.mark.parametrize("seed", range(4))
def test_zero_parity_bracket_survives_moves(seed):
    other = random_equivalent_diagram(VTREFOIL, 5, seed=seed, max_crossings=6)
    assert parity_bracket(other, zero_parity) == parity_bracket(VTREFOIL, zero_parity)


# ---------------------------------------------------------------------------
# bp = gp
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("chords", [1, 2, 3, 4])
def test_bp_equals_gp_exhaustively(chords):
    for d in all_knot_codes(chords):
        assert biquandle_parity(d) == gaussian_parity(d)


def random_knot_code(rng: random.Random, chords: int) -> LinkDiagram:
    """A one-component Gauss code with random order, over/under choice and signs."""
    labels = [str(i + 1) for i in range(chords)]
    order = labels * 2
    rng.shuffle(order)
    over_first = {label: rng.random() < 0.5 for label in labels}
    seen = set()
    passages = []
    for label in order:
        passages.append(Passage(label, over_first[label] != (label in seen)))
        seen.add(label)
    return LinkDiagram.from_passages([passages], {label: rng.choice((1, -1)) for label in labels})


@pytest.mark.parametrize("seed", range(10))
def test_bp_equals_gp_on_random_diagrams(seed):
    d = random_equivalent_diagram(ODD6 if seed % 2 else TREFOIL, 6, seed=seed, max_crossings=8)
    assert biquandle_parity(d) == gaussian_parity(d)


@pytest.mark.slow
def test_bp_equals_gp_on_500_random_codes():
    rng = random.Random(500)
    for _ in range(500):
        d = random_knot_code(rng, rng.randint(1, 8))
        assert biquandle_parity(d) == gaussian_parity(d), d.serialize()


# ---------------------------------------------------------------------------
# Parity axioms
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("d", [TREFOIL, VTREFOIL, parse_gauss_code("O1+ O2+ U1+ O3+ U2+ U3+")])
def test_gaussian_parity_obeys_axioms(d):
    for m in applicable_moves(d):
        assert check_parity_under_move(d, m), m.describe()


def test_component_parity_obeys_axioms():
    d = parse_gauss_code("O1+ U2+ / U1+ O2+")
    for m in applicable_moves(d):
        assert check_parity_under_move(d, m, component_parity), m.describe()


@pytest.mark.parametrize("seed", range(4))
def test_axioms_along_a_random_walk(seed):
    rng = random.Random(seed)
    d = VTREFOIL
    for _ in range(5):
        moves = applicable_moves(d)
        m = rng.choice(moves)
        assert check_parity_under_move(d, m)
        d = random_equivalent_diagram(d, 1, seed=rng.randrange(1000), max_crossings=6)
