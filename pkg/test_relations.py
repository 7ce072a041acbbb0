"""
test_relations.py

Relation systems for the scalar and picture-valued bracket coefficients.

Run:  pytest test_relations.py
"""

import random

import pytest

from invariants import (
    BracketCoefficients,
    NorCoefficients,
    constant_nor,
    get_biquandle,
    kauffman_coefficients,
    verify_nor_relations,
    verify_pbbr_relations,
    z2_parity_coefficients,
)
from invariants.relations import TABLES
from rings import VAR, LaurentRing, ModularRing, NonUnitError

Z5 = ModularRing(5)
Z6 = ModularRing(6)


# ---------------------------------------------------------------------------
# Scalar coefficients
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("a, b", [(2, 3), (1, 1), (3, 4)])
@pytest.mark.parametrize("name", ["singleton", "z2flip", "z3dihedral"])
def test_constant_tables_satisfy_nor(name, a, b):
    nor = constant_nor(Z5, get_biquandle(name), a, b)
    report = verify_nor_relations(nor)
    assert report.ok, report.ids()
    assert report.checked > 0


def test_laurent_kauffman_satisfies_nor():
    assert verify_nor_relations(kauffman_coefficients(LaurentRing(), VAR)).ok


def test_wrong_delta_breaks_the_second_relation():
    good = constant_nor(Z5, get_biquandle("singleton"), 2, 3)
    bad = NorCoefficients(Z5, good.X, good.A, good.B, good.delta + 1, good.w)
    assert "nor.ii" in verify_nor_relations(bad).ids()


def test_non_units_are_rejected():
    with pytest.raises(NonUnitError):
        constant_nor(Z6, get_biquandle("singleton"), 2, 1)
    X = get_biquandle("singleton")
    with pytest.raises(NonUnitError):
        NorCoefficients(Z6, X, ((1,),), ((3,),), 1, 1)


def test_table_shape_is_checked():
    with pytest.raises(ValueError, match="2x2"):
        NorCoefficients(Z5, get_biquandle("z2flip"), ((1,),), ((1,),), 1, 1)


# ---------------------------------------------------------------------------
# Parity-biquandle coefficients
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("strict", [False, True])
def test_z2_example_passes(strict):
    report = verify_pbbr_relations(z2_parity_coefficients(), strict_printed=strict)
    assert report.ok, [str(v) for v in report.violations]


@pytest.mark.parametrize("name", ["singleton", "z2flip", "z3dihedral"])
def test_scalar_coefficients_lift(name):
    beta = BracketCoefficients.from_nor(constant_nor(Z5, get_biquandle(name), 2, 3))
    assert verify_pbbr_relations(beta).ok
    assert beta.entry("D", 0, 0) == 3
    assert beta.entry("C", 0, 0) == 0


def test_vertex_on_a_kink_is_caught():
    beta = z2_parity_coefficients().with_entry("C", 0, 0, 1)
    report = verify_pbbr_relations(beta)
    assert not report.ok
    assert any(rid.startswith("i.c") for rid in report.ids())
    violation = next(v for v in report.violations if v.id.startswith("i.c"))
    assert violation.witness == {"x": 0}
    assert str(violation).startswith(violation.id + ": ")



def _corruptions(beta, seed: int, count: int = 20):
    """`count` copies of beta, each with one entry shifted by a nonzero ring element."""
    rng = random.Random(seed)
    n = beta.X.size
    nonzero = [v for v in beta.ring.elements() if not beta.ring.is_zero(v)]
    for _ in range(count):
        name = rng.choice(TABLES)
        x, y = rng.randrange(n), rng.randrange(n)
        shifted = beta.ring.add(beta.entry(name, x, y), rng.choice(nonzero))
        yield f"{name}[{x}][{y}]", beta.with_entry(name, x, y, shifted)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_single_entry_corruptions_of_the_z2_example_are_rejected(seed):
    for where, bad in _corruptions(z2_parity_coefficients(), seed):
        assert not verify_pbbr_relations(bad).ok, where


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_single_entry_corruptions_of_a_lifted_table_are_rejected(seed):
    beta = BracketCoefficients.from_nor(constant_nor(Z5, get_biquandle("z2flip"), 2, 3))
    assert verify_pbbr_relations(beta).ok
    for where, bad in _corruptions(beta, seed):
        assert not verify_pbbr_relations(bad).ok, where


def test_wrong_kink_value_is_caught():
    beta = z2_parity_coefficients()
    bad = BracketCoefficients(Z5, beta.X, beta.tables, 0, 2)
    assert "i.a" in verify_pbbr_relations(bad).ids()


def test_missing_table():
    beta = z2_parity_coefficients()
    tables = {k: v for k, v in beta.tables.items() if k != "F"}
    with pytest.raises(ValueError, match="missing"):
        BracketCoefficients(beta.ring, beta.X, tables, 0, 1)


def test_w_must_be_a_unit():
    beta = z2_parity_coefficients()
    with pytest.raises(NonUnitError):
        BracketCoefficients(beta.ring, beta.X, beta.tables, 0, 0)
