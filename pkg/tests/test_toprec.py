from fractions import Fraction

import pytest
import sympy

from conftest import rf_to_sympy
from spectralrec.curvedsl import parse_expression, weber
from spectralrec.errors import CapExceeded, IneffectivePoint
from spectralrec.exact import INF, RationalFunction, residue_at
from spectralrec.toprec import (
    MultiDifferential,
    TopologicalRecursion,
    bergman,
    check_properties,
    correlation,
    engine_for,
    free_energy,
    free_energy_closed_form,
    homogeneity_checks,
    integrate_0_to_inf,
    recursion_kernel,
    verify_variational,
)

z = RationalFunction.gen("z")


def test_weber_w11(weber_curve):
    W = correlation(weber_curve, 1, 1)
    assert W.as_rational() == -(z**3) / (z * z - 1) ** 4
    assert W.text() == "-z^3/(z^2 - 1)^4 dz"


def test_weber_w21(weber_curve):
    W = correlation(weber_curve, 2, 1)
    expected = -21 * (z**11 + 3 * z**9 + z**7) / (z * z - 1) ** 10
    assert W.as_rational() == expected


def test_weber_w03(weber_curve):
    W = correlation(weber_curve, 0, 3)
    pts = (Fraction(2), Fraction(3), Fraction(-5, 2))

    def closed(a, b, c):
        plus = 1 / ((a + 1) * (b + 1) * (c + 1)) ** 2
        minus = 1 / ((a - 1) * (b - 1) * (c - 1)) ** 2
        return (plus - minus) / 2

    assert W.evaluate(pts) == closed(*pts)
    assert W.max_pole_order() == {Fraction(-1): 2, Fraction(1): 2}


def test_airy_low_correlators(airy_curve):
    assert correlation(airy_curve, 1, 1).as_rational() == -1 / (16 * z**4)
    W03 = correlation(airy_curve, 0, 3)
    assert W03.poles() == [Fraction(0)]
    assert W03.evaluate((Fraction(1), Fraction(2), Fraction(3))) == Fraction(-1, 72)


def test_bessel_w03_vanishes(bessel_curve):
    assert len(correlation(bessel_curve, 0, 3)) == 0
    assert correlation(bessel_curve, 0, 3).text() == "0"


def test_w11_residue_oracle(weber_curve):
    """Hand-rolled residue of K(z0, z) * B(z, sigma z) at the two ramification points."""
    Z0, Zs = sympy.symbols("z0 z")
    x = Zs + 1 / Zs
    y = (Zs - 1 / Zs) / 2
    ys = (1 / Zs - Zs) / 2
    dx = sympy.diff(x, Zs)
    K = (1 / (Z0 - Zs) - 1 / (Z0 - 1 / Zs)) / (2 * (y - ys) * dx)
    Bdiag = -1 / Zs**2 / (Zs - 1 / Zs) ** 2
    total = 0
    for r in (1, -1):
        total += sympy.residue(sympy.together(K * Bdiag), Zs, r)
    W = correlation(weber_curve, 1, 1)
    assert sympy.simplify(total - rf_to_sympy(W.as_rational().with_var("z0"), Z0)) == 0


def test_symmetry_of_w12(weber_curve):
    W = correlation(weber_curve, 1, 2)
    a, b = Fraction(3), Fraction(-7, 3)
    assert W.evaluate((a, b)) == W.evaluate((b, a))


def test_bergman_kernel():
    B = bergman()
    assert B.evaluate((Fraction(3), Fraction(1))) == Fraction(1, 4)
    assert B.variables == ["z1", "z2"]


def test_recursion_kernel(weber_curve, airy_curve):
    K = recursion_kernel(weber_curve, Fraction(1))
    z0, zz = Fraction(3), Fraction(2)
    y = lambda t: (t - 1 / t) / 2  # noqa: E731
    dx = 1 - 1 / zz**2
    expected = (1 / (z0 - zz) - 1 / (z0 - 1 / zz)) / (2 * (y(zz) - y(1 / zz)) * dx)
    assert K(z0, zz) == expected
    with pytest.raises(IneffectivePoint):
        recursion_kernel(airy_curve, INF)


def test_cap_enforced():
    eng = TopologicalRecursion(weber(), cap=5)
    with pytest.raises(CapExceeded):
        eng.W(2, 2)


@pytest.mark.parametrize("name", ["weber", "airy", "bessel"])
def test_properties_small(name):
    from spectralrec.curvedsl import builtin

    checks = check_properties(builtin(name), 5)
    assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


def test_including_ineffective_points_changes_nothing(airy_curve):
    a = engine_for(airy_curve)
    b = engine_for(airy_curve, include_ineffective=True)
    for g, n in ((0, 3), (1, 1), (1, 2), (2, 1)):
        assert a.W(g, n) == b.W(g, n)


def test_homogeneity():
    assert all(c.ok for c in homogeneity_checks())


@pytest.mark.parametrize("g", [2, 3])
def test_free_energy_matches_bernoulli(weber_curve, g):
    F = free_energy(weber_curve, g)
    assert F.value == free_energy_closed_form(g)
    assert F.exponent == 2 - 2 * g
    assert F.discrepancy == 0


def test_free_energy_base_point_independent(weber_curve):
    assert free_energy(weber_curve, 2, phi_shift=17).value == Fraction(-1, 240)
    assert free_energy(weber_curve, 2).text() == "-1/(240*lam^2)"


def test_bessel_free_energy_vanishes(bessel_curve):
    assert free_energy(bessel_curve, 2).value == 0


def test_integral_of_w21():
    assert integrate_0_to_inf(correlation(weber(), 2, 1)) == Fraction(1, 120)


@pytest.mark.parametrize("g,n", [(1, 1), (0, 4), (1, 2)])
def test_variational(g, n):
    assert verify_variational(g, n).ok


def test_from_rational_round_trip():
    f = 3 / (z - 2) ** 2 + z
    W = MultiDifferential.from_rational(f)
    assert W.as_rational() == f
    assert parse_expression(W.body_text(), {"z": z}) == f
    assert residue_at(W.as_rational(), Fraction(2)) == 0
