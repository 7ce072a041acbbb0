"""
test_formats.py

Coefficient file reading and writing, including LaurentZ entries that
contain spaces.

Run:  pytest test_formats.py
"""

import pytest

from cli.formats import FormatError, format_coefficients, load_coefficients, load_nor_coefficients
from invariants import BracketCoefficients, kauffman_coefficients
from rings import VAR, LaurentRing, ModularRing


def write(tmp_path, text: str):
    path = tmp_path / "beta.coeffs"
    path.write_text(text, encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# Table rows
# ---------------------------------------------------------------------------

def test_whitespace_rows_over_zn(tmp_path):
    path = write(tmp_path, "ring=Z5\nX=z2flip\nA:\n1 2\n3 4\nB:\n1 1\n1 1\n")
    nor = load_nor_coefficients(path)
    assert nor.ring == ModularRing(5)
    assert nor.A == ((1, 2), (3, 4))


def test_comma_rows_hold_laurent_entries_with_spaces(tmp_path):
    path = write(tmp_path, (
        "ring=LaurentZ\n"
        "X=z2flip\n"
        "delta=-1*x^2 + -1*x^-2\n"
        "w=-1*x^3\n"
        "A:\n"
        "1*x^1, -1*x^1\n"
        "1*x^1 + 0*x^0, 1*x^1\n"
        "B:\n"
        "1*x^-1, -1*x^-1\n"
        "1*x^-1, 1*x^-1\n"
    ))
    nor = load_nor_coefficients(path)
    L = LaurentRing()
    assert nor.A[1][0] == VAR
    assert nor.B[0][1] == -VAR ** -1
    assert L.format(nor.delta) == "-1*x^2 + -1*x^-2"


def test_single_entry_row_is_read_whole(tmp_path):
    path = write(tmp_path, "ring=LaurentZ\nX=singleton\nA:\n1*x^1\nB:\n1*x^-1 + 0*x^0\n")
    nor = load_nor_coefficients(path)
    assert LaurentRing().format(nor.delta) == "-1*x^2 + -1*x^-2"
    assert LaurentRing().format(nor.w) == "-1*x^3"


def test_comma_row_with_wrong_entry_count(tmp_path):
    path = write(tmp_path, "ring=LaurentZ\nX=z2flip\nA:\n1*x^1, 1*x^1, 1*x^1\n1*x^1, 1*x^1\nB:\n1 1\n1 1\n")
    with pytest.raises(FormatError) as info:
        load_nor_coefficients(path)
    assert info.value.line == 4
    assert "expected 2 entries, got 3" in str(info.value)


def test_non_laurent_entry_is_reported_with_its_line(tmp_path):
    path = write(tmp_path, "ring=LaurentZ\nX=singleton\nA:\n1*y^1\nB:\n1*x^-1\n")
    with pytest.raises(FormatError) as info:
        load_nor_coefficients(path)
    assert info.value.line == 4


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------

def test_written_laurent_coefficients_read_back(tmp_path):
    beta = BracketCoefficients.from_nor(kauffman_coefficients(LaurentRing(), VAR))
    text = format_coefficients(beta, "singleton")
    assert "delta=-1*x^2 + -1*x^-2" in text
    loaded = load_coefficients(write(tmp_path, text))
    assert loaded.ring == beta.ring
    assert loaded.tables == beta.tables
    assert (loaded.delta, loaded.w) == (beta.delta, beta.w)
