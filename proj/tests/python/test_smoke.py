from fractions import Fraction

import pytest

import fatflats as ff


def test_condition_counts():
    assert ff.conditions_count(3, 1, 4, 5) == 40
    assert ff.hilbert_function(3, 1, 4, 6) == [1, 4, 10, 20, 30, 40]


def test_hilbert_polynomials():
    coeffs = ff.hilbert_poly(3, 1, 6, 7)
    assert sum(c * 27**i for i, c in enumerate(coeffs)) == 28
    assert ff.hilbert_poly_mixed(3, 1, [4, 3, 3, 3, 3, 3], 12) == -5


def test_lambda_and_g():
    assert ff.lambda_poly(3, 1, 6) == [Fraction(2), Fraction(-3), Fraction(0), Fraction(1, 6)]
    g = ff.g_value(3, 1, 6, "1e-6")
    assert abs(float(g["lo"]) - 3.8587) < 1e-3
    assert ff.g_value(11, 2, 729)["exact"] == 3


def test_waldschmidt():
    w = ff.e_empirical(3, 1, 6, 50)
    assert (w["t"], w["m"], w["ratio"]) == (27, 7, Fraction(27, 7))
    cert = ff.e_certify(3, 0, 4, "3/2")
    assert cert["certified"] and cert["ratio"] == Fraction(3, 2)
    b = ff.bounds(3, 0, 4)
    assert b["gamma"] == Fraction(4, 3) and b["e"] == Fraction(3, 2) and not b["e_exceeds_g"]
    assert ff.gamma_points(3, 6) == Fraction(12, 7)


def test_cremona():
    c, res = ff.cremona_transform(3, 3, [3, 3, 3, 3], [0, 1, 2, 3])
    assert c == -6 and res == {"n": 3, "d": -3, "mults": [-3, -3, -3, -3]}
    assert ff.reduce(3, 7, [6, 6, 6, 6])["verdict"] == "empty"


def test_intersection_and_verifier():
    assert ff.self_intersection(5, 2, 2) == [-12, 30, -20, 0, 0, 1]
    assert ff.identity_check(7, 3, 5)
    rep = ff.nosymetry(9)
    assert rep["cases_by_d"][2] == 3 and rep["violations"] == 0
    assert all(ff.replay(i) for i in ff.appendix_ids())


def test_domain_errors_raise_value_error():
    with pytest.raises(ValueError):
        ff.conditions_count(3, 1, 4, 3)
    with pytest.raises(ValueError):
        ff.replay("no-such-id")
