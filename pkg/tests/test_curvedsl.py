from fractions import Fraction

import pytest

from spectralrec.curvedsl import (
    BUILTINS,
    builtin,
    curve_file,
    load_curve,
    order_formula_check,
    parse_curve,
    parse_expression,
)
from spectralrec.errors import CurveRejected, CurveSyntaxError
from spectralrec.exact import INF, RationalFunction, substitute

z = RationalFunction.gen("z")


def test_weber_data(weber_curve):
    c = weber_curve
    assert c.sigma == 1 / z
    assert c.R == (Fraction(-1), Fraction(1))
    assert c.R_star == c.R
    assert c.P_text() == "y^2 - 1/4*x^2 + 1"
    assert c.singular_data.B == (Fraction(0), INF)
    assert c.singular_data.B1 == ()


@pytest.mark.parametrize("name", ["airy", "bessel"])
def test_infinity_is_ineffective(name):
    c = builtin(name)
    assert c.sigma == -z
    assert c.R == (Fraction(0), INF)
    assert c.R_star == (Fraction(0),)
    assert c.ineffective == (INF,)
    inf = [rp for rp in c.ramification if rp.location is INF][0]
    assert inf.kind == "double-pole-of-x"


def test_sigma_is_an_involution_preserving_x():
    for name in BUILTINS:
        c = builtin(name)
        assert substitute(c.sigma, c.sigma) == z
        assert substitute(c.x, c.sigma) == c.x


def test_index_rho_and_order_formula():
    c = builtin("weber")
    assert c.singular_data.rho[INF] == -6
    assert c.singular_data.rho[Fraction(2)] == 1
    for name in BUILTINS:
        assert order_formula_check(builtin(name)) == []


def test_regular_singular_point_data():
    c = parse_curve("x = z^2; y = z/(z^2 - 1)")
    sd = c.singular_data
    assert sd.sing2 == (Fraction(1),)
    assert sd.B1 == (Fraction(-1), Fraction(1))
    assert sd.C == {Fraction(-1): -2, Fraction(1): 2}


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_curve_files_round_trip(name):
    from_file = load_curve(str(curve_file(name)))
    assert from_file == builtin(name)
    assert parse_curve(builtin(name).to_text()) == builtin(name)


def test_nodal_cubic_rejected():
    with pytest.raises(CurveRejected) as info:
        load_curve(str(curve_file("nodal_cubic")))
    assert info.value.assumption == "(AQ2)"
    assert set(info.value.witness) == {Fraction(-1), Fraction(1)}


def test_aq2_witness_for_unshifted_parametrization():
    with pytest.raises(CurveRejected, match=r"\(AQ2\) violated") as info:
        parse_curve("x = z^2; y = z^3 - z")
    assert Fraction(1) in info.value.witness


def test_degree_of_x_checked():
    with pytest.raises(CurveRejected, match="degree of x"):
        parse_curve("x = z^3; y = z")


def test_syntax_error_reports_position():
    with pytest.raises(CurveSyntaxError) as info:
        parse_curve("x = z^2; y = z $ 1")
    assert info.value.position == 15


def test_comments_and_whitespace():
    text = "# Airy\n  x =   z ^ 2 ;   # square\ny = z;\n"
    assert parse_curve(text) == builtin("airy")


def test_rational_literals():
    assert parse_expression("3/4 - 1/4*z^-2", {"z": z}) == Fraction(3, 4) - z ** (-2) / 4
