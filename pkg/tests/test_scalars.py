from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from preproj.scalars import (
    Gaussian,
    compare,
    format_scalar,
    gauss,
    parse_scalar,
    precedes,
    scalar_from_json,
    scalar_to_json,
    to_scalar,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(gauss, rationals, rationals)


def test_order_examples():
    assert compare(1, 2) == -1
    assert precedes(0, gauss(0, 1))
    assert not precedes(gauss(0, 1), 0)
    assert compare(gauss(1, -1), gauss(0, 1)) == 1


def test_real_results_collapse_to_fraction():
    z = gauss(1, 2) * gauss(1, -2)
    assert isinstance(z, Fraction) and z == 5
    assert isinstance(gauss(3, 0), Fraction)


def test_i_squared():
    i = gauss(0, 1)
    assert i * i == -1
    assert 1 / i == gauss(0, -1)


@given(scalars, scalars, scalars)
def test_field_laws(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    if y != 0:
        assert (x / y) * y == x


@given(scalars, scalars, scalars)
def test_order_is_total_and_translation_invariant(x, y, z):
    c = compare(x, y)
    assert c == -compare(y, x)
    assert (c == 0) == (x == y)
    assert compare(x + z, y + z) == c


@given(scalars)
def test_json_and_text_roundtrip(x):
    assert scalar_from_json(scalar_to_json(x)) == x
    assert parse_scalar(format_scalar(x)) == x


@pytest.mark.parametrize(
    "text,value",
    [("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), ("i", gauss(0, 1)), ("1/2-3i", gauss(Fraction(1, 2), -3)), ("2/3*i", gauss(0, Fraction(2, 3)))],
)
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "1.5", "x", "1//2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_to_scalar_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        to_scalar(0.5)
    with pytest.raises(TypeError):
        to_scalar(True)
    with pytest.raises(ValueError):
        scalar_from_json([1, 0, 0, 1])


def test_gaussian_is_immutable():
    z = Gaussian(1, 1)
    with pytest.raises(AttributeError):
        z.re = 2
