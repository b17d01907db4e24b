from fractions import Fraction

import pytest

from spectralrec.exact import bernoulli_polynomial
from spectralrec.voros import (
    free_energy_values,
    nu_reflection_ok,
    regularized_voros,
    verify_difference_equations,
    verify_main_relation,
    voros_closed_form,
    voros_closed_series,
    voros_coefficients,
)


def test_nu_zero_values():
    vs = voros_coefficients(M=4, nu=0)
    assert vs.coeffs == {1: Fraction(-1, 24), 2: 0, 3: Fraction(7, 2880), 4: 0}
    assert vs.lines()[0] == "V[1] = -1/24 * lam^-1"


def test_third_coefficient_from_bernoulli():
    # B_4(1/2)/12 is an independent route to V_3 at nu = 0
    assert bernoulli_polynomial(4)(Fraction(1, 2)) / 12 == Fraction(7, 2880)
    assert voros_closed_form(3, 0) == Fraction(7, 2880)
    assert voros_closed_form(1, 1) == Fraction(1, 12)


def test_symbolic_nu_matches_closed_form():
    vs = voros_coefficients(M=5)
    assert vs.coeffs == voros_closed_series(5).coeffs


def test_specialized_nu_matches_closed_form():
    nu = Fraction(2, 7)
    vs = voros_coefficients(M=4, nu=nu)
    for m in range(1, 5):
        assert vs.coeffs[m] == voros_closed_form(m, nu)


def test_reflection_sign():
    vs = voros_closed_series(6)
    assert nu_reflection_ok(vs)


def test_regularized_head():
    head = regularized_voros(voros_coefficients(M=2, nu=0)).head
    assert str(head[0]) == "-lam + lam*log(lam)"
    assert not head[1]


def test_main_relation_low_order():
    rep = verify_main_relation(4, nu=0)
    assert rep.ok, rep.lines()


def test_difference_equations_low_order():
    shift, three = verify_difference_equations(4)
    assert shift.ok and three.ok


def test_corrupted_free_energy_is_detected():
    rep = verify_main_relation(4, nu=0, F_overrides={2: Fraction(-1, 239)}, source="closed")
    assert not rep.ok
    assert rep.first_failure[0] == 3


def test_free_energy_values_sources():
    assert free_energy_values(3, source="closed") == {2: Fraction(-1, 240), 3: Fraction(1, 1008)}


def test_closed_form_needs_positive_m():
    with pytest.raises(ValueError):
        voros_closed_form(0)
