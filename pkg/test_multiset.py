"""
test_multiset.py

Invariant multisets: serialization, comparison and reading them back.

Run:  pytest test_multiset.py
"""

import pytest

from invariants import (
    FreeGraph,
    GraphPolynomial,
    InvariantMultiset,
    canonical_code,
    compare_multisets,
    parse_multiset_lines,
)
from rings import ModularRing

Z2 = ModularRing(2)
Z5 = ModularRing(5)
ODD6_GRAPH = "(a b a c d c e f e b d f)"


def test_items_are_sorted_with_multiplicities():
    ms = InvariantMultiset(Z5, [3, 1, 3, 3])
    assert ms.items() == [("1", 1), ("3", 3)]
    assert ms.serialize() == "1 # 1\n3 # 3"
    assert len(ms) == 4


def test_membership_uses_canonical_text():
    ms = InvariantMultiset(Z2, [GraphPolynomial.parse("1*(a b b a)", Z2, 0)])
    assert GraphPolynomial.parse("1*(o)", Z2, 0) in ms
    assert ms.multiplicity(GraphPolynomial.parse("1*(o)", Z2, 0)) == 1


def test_compare_ignores_order():
    assert compare_multisets(InvariantMultiset(Z5, [1, 2, 2]), InvariantMultiset(Z5, [2, 1, 2]))
    assert not compare_multisets(InvariantMultiset(Z5, [1, 2]), InvariantMultiset(Z5, [1, 2, 2]))


def test_compare_needs_one_ring():
    with pytest.raises(ValueError, match="cannot compare"):
        compare_multisets(InvariantMultiset(Z5, [1]), InvariantMultiset(ModularRing(7), [1]))


def test_polynomial():
    assert InvariantMultiset(Z5, [2, 2, 4]).polynomial() == "2*u^(2) + 1*u^(4)"
    assert InvariantMultiset(Z5, []).polynomial() == "0"


def test_read_back_pictures():
    relabelled = "(f b f c d c e a e b d a)"
    lines = ["# pb bracket", "1*(o) # 2", "", f"1*{relabelled}"]
    ms = parse_multiset_lines(lines, Z2, 0)
    code = canonical_code(FreeGraph.parse(ODD6_GRAPH))
    assert ms.items() == [(f"1*{code}", 1), ("1*(o)", 2)]


def test_read_back_scalars():
    ms = parse_multiset_lines(["3 # 2", "4"], Z5, pictures=False)
    assert compare_multisets(ms, InvariantMultiset(Z5, [3, 4, 3]))


def test_compare_needs_one_circle_value():
    a = InvariantMultiset(Z5, [GraphPolynomial.parse("1*(o)", Z5, 2)])
    b = InvariantMultiset(Z5, [GraphPolynomial.parse("1*(o)", Z5, 3)])
    assert a.circle_value() == 2
    with pytest.raises(ValueError, match="δ=2 and δ=3"):
        compare_multisets(a, b)
    with pytest.raises(ValueError, match="cannot compare"):
        compare_multisets(InvariantMultiset(Z5, [1], delta=2), InvariantMultiset(Z5, [1], delta=4))


def test_circle_value_is_only_checked_when_known():
    scalars = InvariantMultiset(Z5, [1, 2])
    assert scalars.circle_value() is None
    assert compare_multisets(scalars, InvariantMultiset(Z5, [2, 1], delta=3))


def test_read_back_keeps_the_circle_value():
    ms = parse_multiset_lines(["1*(o) # 2"], Z5, 4)
    assert ms.circle_value() == 4
    assert not compare_multisets(ms, InvariantMultiset(Z5, [], delta=4))
