from fractions import Fraction

import pytest

from fuzzideal import ParseError, as_residuated, format_algebra, load_fixture, parse_algebra
from fuzzideal.fixtures import NAMES, fixture_text
from fuzzideal.textio import (
    format_grades,
    format_matrix,
    parse_grade,
    parse_grades,
    parse_matrix,
)

ORDER4 = """\
kind: wajsberg
elements: 0 a b 1
circ:
1 1 1 1
b 1 b 1
a a 1 1
0 a b 1
neg: 1 b a 0
"""


@pytest.mark.parametrize("name", NAMES)
def test_fixture_roundtrip(name):
    A = parse_algebra(fixture_text(name))
    again = parse_algebra(format_algebra(A))
    assert again == A
    assert format_algebra(again) == format_algebra(A)


def test_order4_text_is_canonical():
    assert format_algebra(parse_algebra(ORDER4)) == ORDER4


def test_residuated_roundtrip():
    L = as_residuated(load_fixture("order9"))
    text = format_algebra(L)
    assert text.startswith("kind: residuated")
    assert parse_algebra(text) == L


def test_comments_and_blank_lines_ignored():
    text = "# header\n\n" + ORDER4.replace("circ:\n", "circ:\n# rows follow\n")
    assert parse_algebra(text) == parse_algebra(ORDER4)


def test_explicit_unit_line():
    assert parse_algebra(ORDER4 + "one: 1\n") == parse_algebra(ORDER4)


@pytest.mark.parametrize(
    "broken",
    [
        ORDER4.replace("b 1 b 1", "b 1 b"),  # ragged row
        ORDER4.replace("a a 1 1", "a x 1 1"),  # unknown element
        ORDER4.replace("kind: wajsberg", "kind: lattice"),
        ORDER4.replace("neg: 1 b a 0\n", ""),
        ORDER4.replace("neg: 1 b a 0", "neg: 1 b a"),
        ORDER4 + "bottom: 0\n",
        ORDER4 + "colour: red\n",
        ORDER4 + "neg: 1 b a 0\n",
        "\n".join(ORDER4.splitlines()[:5]),  # truncated block
    ],
)
def test_strict_parser(broken):
    with pytest.raises(ParseError):
        parse_algebra(broken)


def test_grades_roundtrip():
    elements = "0 a b 1".split()
    text = "0 = 1\na = 1/2\nb = 1/3\n1 = 0\n"
    grades = parse_grades(text, elements)
    assert grades == (1, Fraction(1, 2), Fraction(1, 3), 0)
    assert format_grades(elements, grades) == text


def test_grades_order_free():
    elements = "0 a".split()
    assert parse_grades("a = 2/4\n0 = 1", elements) == (1, Fraction(1, 2))


@pytest.mark.parametrize(
    "text",
    ["0 = 1\na = 3/2\nb = 0\n1 = 0", "0 = 1\na = -1/2\nb = 0\n1 = 0",
     "0 = 1\na = 0\nb = 0", "0 = 1\na = 0\nb = 0\n1 = 0\nz = 0",
     "0 = 1\n0 = 1\na = 0\nb = 0\n1 = 0", "0 1\na = 0\nb = 0\n1 = 0",
     "0 = one\na = 0\nb = 0\n1 = 0", "0 = 1/0\na = 0\nb = 0\n1 = 0"],
)
def test_bad_grades(text):
    with pytest.raises(ParseError):
        parse_grades(text, "0 a b 1".split())


def test_grade_parser():
    assert parse_grade(" 3/6 ") == Fraction(1, 2)
    assert parse_grade("1") == 1
    with pytest.raises(ParseError):
        parse_grade("2")


def test_matrix_roundtrip():
    M = ((1, 1, 0, 0), (1, 0, 1, 0))
    assert parse_matrix(format_matrix(M)) == M
    with_header = format_matrix(M, header=True)
    assert with_header.splitlines()[0] == "# rows=2 cols=4"
    assert parse_matrix(with_header) == M


@pytest.mark.parametrize("text", ["", "# only a header\n", "1100\n101\n", "1120\n", "1 1 0 0\n"])
def test_bad_matrix(text):
    with pytest.raises(ParseError):
        parse_matrix(text)
