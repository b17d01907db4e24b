"""Descent of conjugation-invariant rational functions of z to rational functions of x."""

from fractions import Fraction

from ..errors import DescentFailure, NotSigmaInvariant
from ..exact import Polynomial, RationalFunction, substitute
from ..exact.linalg import nullspace


def descend_to_x(f, x: RationalFunction, sigma: RationalFunction, xvar: str = "x") -> RationalFunction:
    """Return g with g(x(z)) = f(z).

    Writes g = A/B with deg A, deg B <= deg(f)/2 and solves the linear
    system A(x(z)) * den(f) = num(f) * B(x(z)) after clearing the powers of
    den(x); the result is checked by pulling it back.
    """
    if not isinstance(f, RationalFunction):
        f = RationalFunction.const(f, x.var)
    fs = substitute(f, sigma)
    if fs != f:
        raise NotSigmaInvariant("function is not invariant under the conjugate map", (f - fs) / 2)
    if f.is_constant():
        return RationalFunction.const(f.constant_value(), xvar)
    deg = max(f.num.degree, f.den.degree)
    if deg % 2:
        raise DescentFailure("odd degree cannot come from a degree-two cover")
    e = deg // 2
    N, D = x.num, x.den
    npow = [Polynomial([1], x.var)]
    dpow = [Polynomial([1], x.var)]
    for _ in range(e):
        npow.append(npow[-1] * N)
        dpow.append(dpow[-1] * D)
    basis = [npow[i] * dpow[e - i] for i in range(e + 1)]  # x^i * D^e
    cols = [b * f.den for b in basis] + [-(b * f.num) for b in basis]
    nrows = max(len(c.c) for c in cols)
    rows = [[c.coeff(r) for c in cols] for r in range(nrows)]
    ns = nullspace(rows, 2 * (e + 1))
    if not ns:
        raise DescentFailure("no rational function of x matches")
    v = ns[0]
    A = Polynomial(v[: e + 1], xvar)
    B = Polynomial(v[e + 1 :], xvar)
    if not B:
        raise DescentFailure("degenerate descent solution")
    g = RationalFunction(A, B)
    if substitute(g.with_var(x.var), x) != f:
        raise DescentFailure("descended function does not pull back to the input")
    return g


def pullback(g: RationalFunction, x: RationalFunction) -> RationalFunction:
    """g(x(z))."""
    return substitute(g.with_var(x.var), x)
