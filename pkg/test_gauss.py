"""
test_gauss.py

Gauss-code parsing, semiarcs, writhe, interlacement and realizability.

Run:  pytest test_gauss.py
"""

import random

import pytest

from knots import GaussCodeError, LinkDiagram, Passage, carrier_genus, classical_realizability, interlacement, parse_gauss_code, writhe

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
VTREFOIL = "O1+ O2+ U1+ U2+"
HOPF = "O1+ U2+ / U1+ O2+"


# ---------------------------------------------------------------------------
# Parsing and serialization
# ---------------------------------------------------------------------------

def test_parse_trefoil():
    d = parse_gauss_code(TREFOIL)
    assert len(d.components) == 1
    assert d.crossing_count == 3
    assert d.labels == ["1", "2", "3"]
    assert d.serialize() == TREFOIL


def test_parse_link_and_comments():
    d = parse_gauss_code("# Hopf-type link\nO1+ U2+\n/ U1+ O2+  # second circle\n")
    assert len(d.components) == 2
    assert d.serialize() == HOPF


@pytest.mark.parametrize("text, circles", [("", 1), ("/", 2), ("O1+ U1+ /", 2)])
def test_bare_circles(text, circles):
    d = parse_gauss_code(text)
    assert len(d.components) == circles
    assert parse_gauss_code(d.serialize()) == d


def random_diagram(rng: random.Random) -> LinkDiagram:
    """Random labels, passage order, over/under roles, signs and split into components."""
    labels = rng.sample(["1", "2", "3", "5", "8", "13", "k", "x_1", "B7"], rng.randint(0, 8))
    passages = [Passage(label, over) for label in labels for over in (True, False)]
    rng.shuffle(passages)
    cuts = sorted(rng.choices(range(len(passages) + 1), k=rng.randint(0, 2)))
    bounds = [0] + cuts + [len(passages)]
    components = [passages[a:b] for a, b in zip(bounds, bounds[1:])]
    return LinkDiagram.from_passages(components, {label: rng.choice((1, -1)) for label in labels})


@pytest.mark.parametrize("seed", range(50))
def test_serialize_then_parse_gives_the_same_diagram(seed):
    d = random_diagram(random.Random(seed))
    assert parse_gauss_code(d.serialize()) == d


def test_unknot_has_one_semiarc():
    assert parse_gauss_code("").semiarc_count == 1
    assert parse_gauss_code(TREFOIL).semiarc_count == 6


def test_inconsistent_signs():
    with pytest.raises(GaussCodeError, match="inconsistent signs for label 1") as info:
        parse_gauss_code("O1+ U1-")
    assert info.value.line == 1


def test_missing_passage_reports_line():
    with pytest.raises(GaussCodeError) as info:
        parse_gauss_code("# comment\nO1+ U2+\nO2+")
    assert "label 1" in str(info.value)
    assert info.value.line == 2


@pytest.mark.parametrize("text", ["O1+ O1+", "X1+ U1+", "O1 U1"])
def test_malformed_codes(text):
    with pytest.raises(GaussCodeError):
        parse_gauss_code(text)


def test_ports_of_a_kink():
    d = parse_gauss_code("O1+ U1+")
    pt = d.ports()["1"]
    assert (pt.over_in, pt.over_out, pt.under_in, pt.under_out) == (1, 0, 0, 1)


# ---------------------------------------------------------------------------
# Writhe and interlacement
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("text, expected", [(TREFOIL, 3), ("O1- U1-", -1), ("O1+ O2- U1+ U2-", 0)])
def test_writhe(text, expected):
    assert writhe(parse_gauss_code(text)) == expected


def test_interlacement():
    assert interlacement(parse_gauss_code("O1+ U2+ U1+ O2+")) == ((0, 1), (1, 0))
    assert interlacement(parse_gauss_code("O1+ U1+ O2+ U2+")) == ((0, 0), (0, 0))


def test_interlacement_across_components_is_zero():
    assert interlacement(parse_gauss_code(HOPF)) == ((0, 0), (0, 0))


def test_interlacement_is_symmetric():
    m = interlacement(parse_gauss_code("O1+ O2+ U1+ O3+ O4+ U3+ O5+ O6+ U5+ U2+ U4+ U6+"))
    assert all(m[i][j] == m[j][i] for i in range(6) for j in range(6))


# ---------------------------------------------------------------------------
# Realizability
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("text, genus", [
    ("", 0),
    ("O1+ U1+", 0),
    (TREFOIL, 0),
    (HOPF, 0),
    (VTREFOIL, 1),
])
def test_carrier_genus(text, genus):
    d = parse_gauss_code(text)
    assert carrier_genus(d) == genus
    assert classical_realizability(d) == (genus == 0)
