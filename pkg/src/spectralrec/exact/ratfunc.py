"""Rational functions in one variable, kept in lowest terms with monic denominator."""

from fractions import Fraction

from ..errors import ParameterDegeneracy
from .polynomial import Polynomial, poly_gcd, rank_of, to_scalar, var_rank


class RationalFunction:
    """num/den over the scalar tower.

    Normalization: gcd(num, den) = 1 and den monic, so two equal rational
    functions always have identical representations.

    >>> z = RationalFunction.gen("z")
    >>> (z + 1 / z).num
    Polynomial([Fraction(1, 1), Fraction(0, 1), Fraction(1, 1)], 'z')
    """

    __slots__ = ("num", "den", "var", "_rank")

    def __init__(self, num, den=None, var: str = None, _normalized=False):
        if not isinstance(num, Polynomial):
            var = var or getattr(den, "var", None) or "z"
            num = Polynomial([num], var)
        var = num.var
        if den is None:
            den = Polynomial._raw((Fraction(1),), var, num._rank)
        elif not isinstance(den, Polynomial):
            den = Polynomial([den], var)
        if den.var != var:
            raise TypeError("numerator and denominator variables differ")
        if not den.c:
            raise ParameterDegeneracy("zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self.var = var
        self._rank = num._rank

    @classmethod
    def gen(cls, var: str = "z"):
        return cls(Polynomial([0, 1], var), _normalized=True)

    @classmethod
    def const(cls, v, var: str = "z"):
        return cls(Polynomial([v], var), _normalized=True)

    @classmethod
    def from_poly(cls, p: Polynomial):
        return cls(p, _normalized=True)

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.c

    def __bool__(self):
        return bool(self.num.c)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.constant_value()

    def is_rational(self) -> bool:
        return self.num.is_rational() and self.den.is_rational()

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.var == self.var:
                return other
        elif isinstance(other, Polynomial):
            if other.var == self.var:
                return RationalFunction(other, _normalized=True)
        elif type(other) in (int, Fraction):
            return RationalFunction(Polynomial([other], self.var), _normalized=True)
        r = rank_of(other)
        if r < self._rank:
            return RationalFunction(Polynomial._raw((other,) if other else (), self.var, self._rank), _normalized=True)
        if r > self._rank:
            return NotImplemented
        raise TypeError(f"cannot combine rational functions in {self.var!r} and {other.var!r}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__add__(self) if type(other) is RationalFunction else o
        if not o.num.c:
            return self
        if not self.num.c:
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        if self.den.degree == 0:
            return RationalFunction(self.num * o.den + o.num, o.den, _normalized=True)
        if o.den.degree == 0:
            return RationalFunction(self.num + o.num * self.den, self.den, _normalized=True)
        g = poly_gcd(self.den, o.den)
        if g.degree == 0:
            return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den, _normalized=True)
        d1 = self.den.exact_div(g)
        d2 = o.den.exact_div(g)
        return RationalFunction(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__rsub__(self) if type(other) is RationalFunction else o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__sub__(self) if type(other) is RationalFunction else o
        return o + (-self)

    def scale(self, s):
        if not s:
            return RationalFunction(Polynomial._raw((), self.var, self._rank), _normalized=True)
        return RationalFunction(self.num.scale(s), self.den, _normalized=True)

    def __mul__(self, other):
        if type(other) in (int, Fraction) or (
            not isinstance(other, (Polynomial, RationalFunction)) and rank_of(other) < self._rank
        ):
            return self.scale(to_scalar(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__mul__(self) if type(other) is RationalFunction else o
        if not o.num.c or not self.num.c:
            return self.scale(0)
        # cross-cancel to keep gcds small
        g1 = poly_gcd(self.num, o.den) if o.den.degree > 0 and self.num.degree > 0 else None
        g2 = poly_gcd(o.num, self.den) if self.den.degree > 0 and o.num.degree > 0 else None
        n1, d2 = self.num, o.den
        if g1 is not None and g1.degree > 0:
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        n2, d1 = o.num, self.den
        if g2 is not None and g2.degree > 0:
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        num = n1 * n2
        den = d1 * d2
        lead = den.c[-1]
        if lead != 1:
            inv = 1 / lead
            num, den = num.scale(inv), den.scale(inv)
        return RationalFunction(num, den, _normalized=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.c:
            raise ParameterDegeneracy("inverse of zero rational function")
        lead = self.num.c[-1]
        inv = 1 / lead
        return RationalFunction(self.den.scale(inv), self.num.scale(inv), _normalized=True)

    def __truediv__(self, other):
        if type(other) in (int, Fraction) or (
            not isinstance(other, (Polynomial, RationalFunction)) and rank_of(other) < self._rank
        ):
            if not other:
                raise ParameterDegeneracy("division by zero scalar")
            return self.scale(1 / to_scalar(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__rtruediv__(self) if type(other) is RationalFunction else o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__truediv__(self) if type(other) is RationalFunction else o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, _normalized=True)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            if other.var != self.var:
                # the lower-rank side is a scalar of the higher-rank field
                if other._rank < self._rank:
                    return self.is_constant() and self.num.constant_value() == other
                if other._rank > self._rank:
                    return other == self
                return self.is_constant() and other.is_constant() and self.num.constant_value() == other.num.constant_value()
            return self.num == other.num and self.den == other.den
        if isinstance(other, Polynomial) and other.var == self.var:
            return self.den.degree == 0 and self.num == other
        if rank_of(other) < self._rank or isinstance(other, Polynomial):
            return self.is_constant() and self.num.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.constant_value())
        return hash((self.var, self.num.c, self.den.c))

    # -- evaluation and calculus ----------------------------------------------

    def __call__(self, v):
        d = self.den(v)
        if not d:
            raise ParameterDegeneracy(f"denominator of {self} vanishes at {self.var} = {v}")
        return self.num(v) / d

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        if d.degree == 0:
            return RationalFunction(n.derivative(), d, _normalized=True)
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def map_coeffs(self, f) -> "RationalFunction":
        return RationalFunction(self.num.map_coeffs(f), self.den.map_coeffs(f))

    def with_var(self, var: str) -> "RationalFunction":
        return RationalFunction(self.num.with_var(var), self.den.with_var(var), _normalized=True)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        from .render import ratfunc_text

        return ratfunc_text(self)


def _normalize(num: Polynomial, den: Polynomial):
    if not num.c:
        return num, Polynomial._raw((Fraction(1),), den.var, den._rank)
    if den.degree > 0 and num.degree >= 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    lead = den.c[-1]
    if lead != 1:
        inv = 1 / lead
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def nu_symbol() -> RationalFunction:
    """The transcendental parameter nu as a scalar of the tower."""
    return RationalFunction.gen("nu")


def lam_symbol() -> RationalFunction:
    return RationalFunction.gen("lam")


def as_ratfunc(v, var: str = "z") -> RationalFunction:
    if isinstance(v, RationalFunction) and v.var == var:
        return v
    if isinstance(v, Polynomial) and v.var == var:
        return RationalFunction(v, _normalized=True)
    return RationalFunction(Polynomial([v], var), _normalized=True)


__all__ = ["RationalFunction", "nu_symbol", "lam_symbol", "as_ratfunc", "var_rank"]
