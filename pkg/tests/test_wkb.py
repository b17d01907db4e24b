from fractions import Fraction

import pytest

from spectralrec.curvedsl import parse_curve
from spectralrec.errors import InternalInconsistency
from spectralrec.exact import INF, RationalFunction, nu_symbol
from spectralrec.quantize import DivisorWeights, quantize
from spectralrec.wkb import (
    GIntegralTable,
    decay_orders,
    even_odd_split,
    riccati_expand,
    t_hat,
    verify_thm31,
)

x = RationalFunction.gen("x")
z = RationalFunction.gen("z")


@pytest.fixture(scope="module")
def weber_expansion(weber_curve):
    return riccati_expand(quantize(weber_curve), weber_curve, 3)


def test_leading_terms(weber_curve, weber_expansion):
    T = weber_expansion.T
    assert T[-1] == weber_curve.y * weber_curve.xprime
    nu = nu_symbol()
    w = DivisorWeights.default(weber_curve)
    assert T[0] == t_hat(weber_curve, w, 0)
    s0 = even_odd_split(T[0], weber_curve, 0)
    assert s0.A == -x / (2 * (x * x - 4))
    assert s0.B == nu / (x * x - 4)


def test_split_of_leading_order(weber_curve, weber_expansion):
    s = even_odd_split(weber_expansion.T[-1], weber_curve, -1)
    assert not s.A
    assert s.B == 1


def test_decay(weber_curve, weber_expansion):
    assert decay_orders(weber_curve, weber_expansion) == {1: (1, 3), 2: (3, 5), 3: (5, 7)}


def test_opposite_branch(weber_curve):
    exp = riccati_expand(quantize(weber_curve), weber_curve, 1, branch=-1)
    assert exp.T[-1] == weber_curve.y_sigma * weber_curve.xprime
    with pytest.raises(ValueError):
        riccati_expand(quantize(weber_curve), weber_curve, 1, branch=2)


@pytest.mark.parametrize("name", ["airy", "bessel"])
def test_oracle_on_other_curves(name):
    from spectralrec.curvedsl import builtin

    assert all(ok for _, ok in verify_thm31(builtin(name), 3))


def test_oracle_with_regular_singular_point():
    c = parse_curve("x = z^2; y = z/(z^2 - 1)")
    w = DivisorWeights({Fraction(-1): Fraction(1, 3), Fraction(1): Fraction(1, 6), INF: Fraction(1, 2)})
    assert all(ok for _, ok in verify_thm31(c, 2, w))


def test_antisymmetry(weber_curve):
    table = GIntegralTable(weber_curve, DivisorWeights.default(weber_curve, 0))
    for g, n in ((0, 3), (1, 1), (1, 2)):
        assert table.antisymmetric(g, n)


def test_g02_closed_form(weber_curve):
    table = GIntegralTable(weber_curve, DivisorWeights.default(weber_curve, Fraction(1, 3)))
    # nu_0 = 1/3 and nu_oo = 2/3; only the finite point contributes
    assert table.g02(3, 2) == 1 - Fraction(1, 3) / 3


def test_wrong_branch_data_is_caught(weber_curve):
    qc = quantize(weber_curve)
    qc.chart = dict(qc.chart, V0=qc.chart["V0"] + 1)
    with pytest.raises(InternalInconsistency):
        riccati_expand(qc, weber_curve, 1)
