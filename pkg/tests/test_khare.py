from fractions import Fraction

import pytest

from preproj.classification import interval_conditions
from preproj.khare import CasimirPolynomial, VrsModule, casimir_scalar, enumerate_Vrs, khare_lambda, morita_params
from preproj.quiver import DimVector, build_quiver
from preproj.roots import weight_dot

A = build_quiver("A_plus_inf")


def test_casimir_scalars():
    assert [casimir_scalar(i) for i in range(3)] == [0, Fraction(3, 8), 1]
    with pytest.raises(ValueError):
        casimir_scalar(-1)


def test_khare_lambda_examples():
    assert [khare_lambda([])[i] for i in range(4)] == [1, 2, 3, 4]
    lam = khare_lambda([0, -4])
    assert (lam[0], lam[1]) == (1, -1)
    assert khare_lambda([0, -1])[2] == 0


def test_enumerate_examples():
    assert enumerate_Vrs([], 20) == []
    assert VrsModule(0, 1) in enumerate_Vrs([0, -4], 20)
    assert enumerate_Vrs([-1], 0) == [VrsModule(0, 0)]
    assert VrsModule(0, 1).dimension == 3


def test_pairing_is_the_khare_sum():
    f = [Fraction(1, 2), Fraction(-3), Fraction(1, 4)]
    lam = khare_lambda(f)
    for s in range(5):
        for r in range(s, 8):
            want = sum((i + 1) * (1 + CasimirPolynomial(tuple(f))(casimir_scalar(i))) for i in range(s, r + 1))
            assert weight_dot(lam, DimVector.interval(s, r)) == want


def test_interval_conditions_agree_on_a_family():
    for c in range(-12, 1):
        f = [0, Fraction(c, 2)]
        got = {(m.s, m.r) for m in enumerate_Vrs(f, 12)}
        want = {(s, r) for r in range(13) for s in range(r + 1) if interval_conditions(A, khare_lambda(f), s, r)}
        assert got == want


def test_parse_keeps_constant_separate():
    assert CasimirPolynomial.parse("-4,0").coeffs == (0, -4, 0)
    assert CasimirPolynomial.parse("1/2", constant=-1).coeffs == (-1, Fraction(1, 2))
    assert not CasimirPolynomial.parse("-4").has_constant_term


def test_morita_params():
    lam, nu = morita_params([1], 0)
    assert nu == 0
    lam, nu = morita_params([1], Fraction(1, 2))
    assert nu == 1 and [lam[i] for i in range(3)] == [1, 2, 3]
    lam, nu = morita_params([1, -4], 1)
    assert nu == 2 and (lam[0], lam[1]) == (1, -1)
    with pytest.raises(ValueError):
        morita_params([1], 1, group="GL1")
