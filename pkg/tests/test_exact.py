import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import poly_to_sympy, rf_to_sympy, sympy_equal
from spectralrec.curvedsl import parse_expression
from spectralrec.errors import DivergentEndpoint, LogObstruction
from spectralrec.exact import (
    INF,
    LogPolynomial,
    Polynomial,
    RationalFunction,
    antiderivative,
    bernoulli_number,
    bernoulli_polynomial,
    definite_integral_0_to_inf,
    laurent_expand,
    limit_at,
    nu_symbol,
    order_at,
    partial_fractions,
    poly_gcd,
    residue_at,
    substitute,
)

Z = sympy.Symbol("z")
z = RationalFunction.gen("z")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, min_size=0, max_size=6).map(lambda c: Polynomial(c, "z"))
nonzero_polys = polys.filter(lambda p: bool(p))


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_poly_ring_ops_match_sympy(a, b):
    A, B = poly_to_sympy(a, Z), poly_to_sympy(b, Z)
    assert sympy.expand(poly_to_sympy(a * b, Z) - A * B) == 0
    assert sympy.expand(poly_to_sympy(a + b, Z) - (A + B)) == 0
    assert sympy.expand(poly_to_sympy(a.derivative(), Z) - sympy.diff(A, Z)) == 0


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_division_with_remainder(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree or not r


@settings(max_examples=40, deadline=None)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_against_sympy(a, b, c):
    g = poly_gcd(a * c, b * c)
    expected = sympy.Poly(sympy.gcd(poly_to_sympy(a * c, Z), poly_to_sympy(b * c, Z)), Z, domain="QQ").monic()
    assert sympy.expand(poly_to_sympy(g.monic(), Z) - expected.as_expr()) == 0


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_ratfunc_is_reduced(a, b):
    f = RationalFunction(a, b)
    assert sympy_equal(rf_to_sympy(f), poly_to_sympy(a, Z) / poly_to_sympy(b, Z))
    if f:
        assert poly_gcd(f.num, f.den).degree == 0
        assert f.den.lc == 1


def _random_rf(rng):
    poles = rng.sample([Fraction(k, d) for k in range(-4, 5) for d in (1, 2, 3)], rng.randint(1, 3))
    den = Polynomial([1], "z")
    for p in poles:
        den = den * Polynomial([-p, 1], "z") ** rng.randint(1, 3)
    num = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(1, den.degree + 3))], "z")
    return RationalFunction(num, den)


def test_partial_fractions_reassemble_1000():
    rng = random.Random(20240611)
    for _ in range(1000):
        f = _random_rf(rng)
        assert partial_fractions(f).reassemble() == f


def test_partial_fractions_known_case():
    pf = partial_fractions(z**3 / (z * z - 1) ** 2)
    terms = {(p, k): c for p, k, c in pf.terms}
    assert terms[(Fraction(-1), 2)] == Fraction(-1, 4)
    assert terms[(Fraction(1), 2)] == Fraction(1, 4)
    assert terms[(Fraction(-1), 1)] == Fraction(1, 2)
    assert terms[(Fraction(1), 1)] == Fraction(1, 2)
    expected = sympy.apart(Z**3 / (Z**2 - 1) ** 2, Z)
    assert sympy_equal(rf_to_sympy(pf.reassemble()), expected)


@pytest.mark.parametrize("point", [Fraction(0), Fraction(1), Fraction(-1, 2)])
def test_laurent_matches_sympy(point):
    f = (z**3 + 2) / ((z - 1) ** 2 * z * (z + Fraction(1, 2)) ** 3)
    ser = laurent_expand(f, point, 4)
    t = sympy.Symbol("t")
    F = rf_to_sympy(f).subs(Z, t + sympy.Rational(point.numerator, point.denominator))
    ref = sympy.series(F, t, 0, 5).removeO()
    for k in range(ser.val, 5):
        c = ser.coeff(k)
        assert sympy.Rational(c.numerator, c.denominator) == ref.coeff(t, k)


def test_laurent_at_infinity():
    ser = laurent_expand(z**2 / (z + 1), INF, 2)
    # z - 1 + 1/z - 1/z^2 + ... in t = 1/z
    assert [ser.coeff(k) for k in range(-1, 3)] == [1, -1, 1, -1]


def test_residues_match_sympy():
    f = (z**4 + 3) / ((z - 2) ** 3 * (z + 1))
    for p in (Fraction(2), Fraction(-1)):
        ref = sympy.residue(rf_to_sympy(f), Z, int(p))
        assert residue_at(f, p) == Fraction(int(sympy.numer(ref)), int(sympy.denom(ref)))
    total = residue_at(f, Fraction(2)) + residue_at(f, Fraction(-1)) + residue_at(f, INF)
    assert total == 0


def test_order_at():
    f = z**2 / (z - 1) ** 3
    assert order_at(f, Fraction(0)) == 2
    assert order_at(f, Fraction(1)) == -3
    assert order_at(f, INF) == 1


def test_antiderivative_and_logs():
    f = 1 / (z * (z + 1)) + 1 / (z - 2) ** 2
    ad = antiderivative(f)
    assert ad.derivative() == f
    assert ad.log_coeff(Fraction(0)) == 1
    assert ad.log_coeff(Fraction(-1)) == -1


def test_definite_integrals():
    assert definite_integral_0_to_inf(1 / (z + 1) ** 2) == 1
    assert definite_integral_0_to_inf(z / (z + 1) ** 3) == Fraction(1, 2)
    with pytest.raises(LogObstruction):
        definite_integral_0_to_inf(1 / ((z + 1) * (z + 2)))
    with pytest.raises(DivergentEndpoint):
        definite_integral_0_to_inf(1 / z**2)
    assert limit_at(z / (2 * z + 1), INF) == Fraction(1, 2)


def test_bernoulli_against_sympy():
    X = sympy.Symbol("X")
    for n in range(0, 17):
        b = bernoulli_number(n)
        ref = sympy.bernoulli(n) if n != 1 else sympy.Rational(-1, 2)
        assert sympy.Rational(b.numerator, b.denominator) == ref
    for n in range(0, 10):
        ref = sympy.bernoulli(n, X)
        assert sympy.expand(poly_to_sympy(bernoulli_polynomial(n), X) - ref) == 0


def test_parameter_field():
    nu = nu_symbol()
    assert (nu * nu - 1) / (nu - 1) == nu + 1
    f = (z - nu) / (z * z - nu * nu)
    assert f == 1 / (z + nu)
    assert substitute(f, 1 / z) == z / (1 + nu * z)


def test_log_polynomial_derivative():
    lam = RationalFunction.gen("lam")
    F = LogPolynomial([lam * lam * Fraction(-3, 4), lam * lam / 2])
    assert F.derivative(2) == LogPolynomial([0, 1])


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_text_form_reparses(a, b):
    f = RationalFunction(a, b)
    assert parse_expression(str(f), {"z": z}) == f


def test_nu_text_reparses():
    nu = nu_symbol()
    f = (nu * nu - 4) / (z * z - 4) ** 3 * Fraction(3, 7) + nu / 2
    assert parse_expression(str(f), {"z": z, "nu": nu}) == f
