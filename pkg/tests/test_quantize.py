from fractions import Fraction

import pytest

from spectralrec.curvedsl import parse_curve
from spectralrec.exact import INF, RationalFunction, nu_symbol
from spectralrec.quantize import DivisorWeights, quantize, sigma_invariance_report, sl_form, u1_identity

x = RationalFunction.gen("x")


def test_airy_quantum_curve(airy_curve):
    qc = quantize(airy_curve)
    assert not qc.q0 and not qc.q1
    assert qc.r0 == -x
    assert not qc.r1 and not qc.r2
    assert qc.operator_text() == "hbar^2*d^2/dx^2 + (-x)"
    assert sl_form(qc).text() == "x"


def test_weber_symbolic_nu(weber_curve):
    nu = nu_symbol()
    qc = quantize(weber_curve)
    assert not qc.q0 and not qc.q1
    assert qc.r0 == 1 - x * x / 4
    assert qc.r1 == -nu / 2
    assert not qc.r2
    Q = sl_form(qc)
    # x^2/4 - lam-hat with lam-hat = 1 - hbar nu/2
    assert Q.Q0 == x * x / 4 - 1
    assert Q.Q1 == nu / 2
    assert not Q.Q2


@pytest.mark.parametrize("nu", [0, 1, Fraction(-3, 5)])
def test_weber_specialized_nu(weber_curve, nu):
    qc = quantize(weber_curve, DivisorWeights.default(weber_curve, nu))
    assert qc.r1 == RationalFunction.const(-Fraction(nu) / 2, "x")


def test_bessel_quantum_curve(bessel_curve):
    qc = quantize(bessel_curve)
    assert qc.q1 == 1 / x
    assert qc.r0 == -1 / x
    Q = sl_form(qc)
    assert Q.Q0 == 1 / x
    assert not Q.Q1
    assert Q.Q2 == -1 / (4 * x * x)


def test_u1_identity_and_invariance(weber_curve, airy_curve, bessel_curve):
    for c in (weber_curve, airy_curve, bessel_curve):
        qc = quantize(c)
        assert u1_identity(c, qc)
        assert all(sigma_invariance_report(c, qc).values())


def test_regular_singular_point_gets_r2():
    c = parse_curve("x = z^2; y = z/(z^2 - 1)")
    w = DivisorWeights({Fraction(-1): Fraction(1, 3), Fraction(1): Fraction(1, 6), INF: Fraction(1, 2)})
    qc = quantize(c, w)
    # Delta * sum nu nu_sigma / C / (z - beta) over B1, divided by x'
    assert qc.r2 == 1 / (18 * (x - 1) ** 2)
    assert u1_identity(c, qc)


def test_weights_validated(weber_curve):
    with pytest.raises(ValueError, match="sum to 1"):
        DivisorWeights({Fraction(0): Fraction(1, 2), INF: Fraction(1, 3)})
    with pytest.raises(ValueError):
        quantize(weber_curve, DivisorWeights({Fraction(0): Fraction(1)}))


def test_swapped_weights_flip_nu(weber_curve):
    w = DivisorWeights.default(weber_curve, Fraction(1, 3))
    swapped = w.swapped(weber_curve)
    assert swapped[Fraction(0)] == w[INF]
    assert quantize(weber_curve, swapped).r1 == -quantize(weber_curve, w).r1
