"""Dense univariate polynomials over an exact scalar tower.

Scalars are ``Fraction`` or polynomials/rational functions in a variable of
lower *rank*.  The rank decides which object acts as the scalar when two
tower elements meet: ``nu`` (rank 0) sits below ``lam`` (rank 1), which sits
below every curve variable (rank 10).
"""

from fractions import Fraction
from math import gcd as igcd

VAR_RANK = {"nu": 0, "lam": 1}
DEFAULT_RANK = 10


def var_rank(var: str) -> int:
    return VAR_RANK.get(var, DEFAULT_RANK)


def rank_of(obj) -> int:
    return getattr(obj, "_rank", -1)


def to_scalar(v):
    if type(v) is int:
        return Fraction(v)
    return v


class Polynomial:
    """Polynomial with coefficients stored low degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.

    >>> p = Polynomial([-1, 0, 1])
    >>> p(Fraction(3))
    Fraction(8, 1)
    """

    __slots__ = ("c", "var", "_rank")

    def __init__(self, coeffs=(), var: str = "z"):
        c = [to_scalar(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)
        self.var = var
        self._rank = var_rank(var)

    @classmethod
    def _raw(cls, c, var, rank):
        # trusted constructor: c already stripped and coerced
        p = cls.__new__(cls)
        p.c = c
        p.var = var
        p._rank = rank
        return p

    @classmethod
    def monomial(cls, k: int, coeff=1, var: str = "z"):
        return cls([0] * k + [coeff], var)

    @classmethod
    def gen(cls, var: str = "z"):
        return cls([0, 1], var)

    @classmethod
    def const(cls, v, var: str = "z"):
        return cls([v], var)

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1] if self.c else Fraction(0)

    def coeff(self, k: int):
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.c

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def constant_value(self):
        return self.c[0] if self.c else Fraction(0)

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def terms(self):
        """Yield (exponent, coefficient) pairs for nonzero coefficients."""
        for k, v in enumerate(self.c):
            if v:
                yield k, v

    def is_rational(self) -> bool:
        """True when every coefficient is a plain rational number."""
        return all(type(v) is Fraction for v in self.c)

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.var == self.var:
                return other
        elif type(other) in (int, Fraction):
            return Polynomial._raw((Fraction(other),) if other else (), self.var, self._rank)
        r = rank_of(other)
        if r < self._rank:
            return Polynomial._raw((other,) if other else (), self.var, self._rank)
        if r > self._rank or getattr(other, "var", None) == self.var:
            return NotImplemented
        raise TypeError(f"cannot combine polynomials in {self.var!r} and {other.var!r}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__add__(self) if type(other) is Polynomial else o
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, v in enumerate(b):
            c[i] = c[i] + v
        while c and not c[-1]:
            c.pop()
        return Polynomial._raw(tuple(c), self.var, self._rank)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-v for v in self.c), self.var, self._rank)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__rsub__(self) if type(other) is Polynomial else o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__sub__(self) if type(other) is Polynomial else o
        return o + (-self)

    def scale(self, s):
        if not s:
            return Polynomial._raw((), self.var, self._rank)
        return Polynomial._raw(tuple(v * s for v in self.c), self.var, self._rank)

    def __mul__(self, other):
        if type(other) in (int, Fraction) or (
            not isinstance(other, Polynomial) and rank_of(other) < self._rank
        ):
            return self.scale(other)
        o = self._coerce(other)
        if o is NotImplemented:
            return other.__mul__(self) if type(other) is Polynomial else o
        a, b = self.c, o.c
        if not a or not b:
            return Polynomial._raw((), self.var, self._rank)
        c = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                c[i + j] += ai * bj
        c = [to_scalar(v) for v in c]
        while c and not c[-1]:
            c.pop()
        return Polynomial._raw(tuple(c), self.var, self._rank)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial._raw((Fraction(1),), self.var, self._rank)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial) and other.var == self.var:
            from .ratfunc import RationalFunction

            return RationalFunction(self, other)
        if rank_of(other) < self._rank:
            if not other:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return self.scale(1 / to_scalar(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if rank_of(other) < self._rank:
            from .ratfunc import RationalFunction

            return RationalFunction(self._coerce(other), self)
        return NotImplemented

    def divmod(self, other: "Polynomial"):
        """Euclidean division over the coefficient field."""
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        if len(self.c) < len(other.c):
            return Polynomial._raw((), self.var, self._rank), self
        r = list(self.c)
        db = len(other.c) - 1
        inv = 1 / other.c[-1]
        q = [Fraction(0)] * (len(r) - db)
        b = other.c
        for k in range(len(r) - 1, db - 1, -1):
            coef = r[k]
            if not coef:
                continue
            coef = coef * inv
            q[k - db] = coef
            for i in range(db + 1):
                r[k - db + i] = r[k - db + i] - coef * b[i]
        r = r[:db]
        while r and not r[-1]:
            r.pop()
        while q and not q[-1]:
            q.pop()
        return (
            Polynomial._raw(tuple(q), self.var, self._rank),
            Polynomial._raw(tuple(r), self.var, self._rank),
        )

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if r.c:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Polynomial":
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(1 / self.c[-1])

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            if other.var != self.var:
                return len(self.c) <= 1 and len(other.c) <= 1 and self.constant_value() == other.constant_value()
            return self.c == other.c
        if rank_of(other) < self._rank:
            return len(self.c) <= 1 and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if len(self.c) <= 1:
            return hash(self.constant_value())
        return hash((self.var, self.c))

    # -- calculus and evaluation ------------------------------------------

    def __call__(self, v):
        """Horner evaluation; ``v`` may be any ring element."""
        if not self.c:
            return Fraction(0)
        acc = self.c[-1]
        for a in reversed(self.c[:-1]):
            acc = acc * v + a
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial._raw(
            tuple(k * v for k, v in enumerate(self.c) if k) if len(self.c) > 1 else (),
            self.var,
            self._rank,
        )

    def integral(self) -> "Polynomial":
        return Polynomial([0] + [v / (k + 1) for k, v in enumerate(self.c)], self.var)

    def compose(self, other: "Polynomial") -> "Polynomial":
        return self(other) if self.c else self

    def taylor_shift(self, a) -> "Polynomial":
        """Return p(z + a)."""
        if not a or len(self.c) <= 1:
            return self
        c = list(self.c)
        n = len(c)
        # repeated synthetic division
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                c[k] = c[k] + a * c[k + 1]
        return Polynomial(c, self.var)

    def reversed(self, n: int = None) -> "Polynomial":
        """Return z^n p(1/z) with n defaulting to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        c = list(self.c) + [Fraction(0)] * (n + 1 - len(self.c))
        return Polynomial(c[::-1], self.var)

    def valuation(self) -> int:
        """Order of vanishing at 0; a large sentinel for the zero polynomial."""
        for k, v in enumerate(self.c):
            if v:
                return k
        return 1 << 30

    def shift_down(self, k: int) -> "Polynomial":
        return Polynomial._raw(self.c[k:], self.var, self._rank)

    def with_var(self, var: str) -> "Polynomial":
        return Polynomial(self.c, var)

    def map_coeffs(self, f) -> "Polynomial":
        return Polynomial([f(v) for v in self.c], self.var)

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({list(self.c)!r}, {self.var!r})"

    def __str__(self):
        from .render import poly_text

        return poly_text(self)


# -- gcd machinery -----------------------------------------------------------


def _int_primitive(c):
    """Scale rational coefficients to coprime integers (positive leading)."""
    den = 1
    for v in c:
        den = den * v.denominator // igcd(den, v.denominator)
    ints = [int(v * den) for v in c]
    g = 0
    for v in ints:
        g = igcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = [v // g for v in ints]
    if ints and ints[-1] < 0:
        ints = [-v for v in ints]
    return ints


def _int_content_strip(a):
    g = 0
    for v in a:
        g = igcd(g, v)
        if g == 1:
            return a
    return [v // g for v in a] if g > 1 else a


def _int_prem(a, b):
    """Pseudo-remainder of integer coefficient lists, followed by content removal."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [v * lb for v in a]
        for i, bi in enumerate(b):
            a[i + shift] -= la * bi
        while a and a[-1] == 0:
            a.pop()
        a = _int_content_strip(a)
    return a


def _gcd_rational(a: Polynomial, b: Polynomial) -> Polynomial:
    x = _int_primitive(a.c)
    y = _int_primitive(b.c)
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _int_prem(x, y)
        x, y = y, r
    lead = x[-1]
    return Polynomial([Fraction(v, lead) for v in x], a.var)


def _split_parameter(p: Polynomial):
    """Write p = L(v)^{-1} * sum_j v^j P_j(z) with P_j rational polynomials.

    Coefficients of ``p`` are rationals or rank-0 rational functions with
    rational coefficients.  Returns the list of P_j.
    """
    from .ratfunc import RationalFunction

    lcm = None
    for v in p.c:
        if isinstance(v, RationalFunction) and v.den.degree > 0:
            lcm = v.den if lcm is None else (lcm * v.den).exact_div(poly_gcd(lcm, v.den))
    parts = {}
    for k, v in enumerate(p.c):
        if isinstance(v, RationalFunction):
            num = v.num * (lcm.exact_div(v.den)) if lcm is not None else v.num
            coeffs = num.c
        elif isinstance(v, Polynomial):
            coeffs = (v * lcm).c if lcm is not None else v.c
        else:
            coeffs = (lcm * v).c if lcm is not None else (v,)
        for j, cj in enumerate(coeffs):
            if cj:
                parts.setdefault(j, [Fraction(0)] * len(p.c))[k] = cj
    return [Polynomial(v, p.var) for v in parts.values()]


def _coeffs_are_base(p: Polynomial) -> bool:
    """Coefficients live one level down and that level is itself over Q."""
    for v in p.c:
        if type(v) is Fraction:
            continue
        if not hasattr(v, "num"):
            return False
        if not (v.num.is_rational() and v.den.is_rational()):
            return False
    return True


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    if not a.c:
        return b.monic()
    if not b.c:
        return a.monic()
    if len(a.c) == 1 or len(b.c) == 1:
        return Polynomial._raw((Fraction(1),), a.var, a._rank)
    ra, rb = a.is_rational(), b.is_rational()
    if ra and rb:
        return _gcd_rational(a, b)
    if (ra or rb) and _coeffs_are_base(a if rb else b):
        g = a if ra else b
        for part in _split_parameter(b if ra else a):
            g = _gcd_rational(g, part)
            if g.degree == 0:
                break
        return g
    x, y = a, b
    if len(x.c) < len(y.c):
        x, y = y, x
    while y.c:
        x, y = y, x.divmod(y)[1]
        if y.c:
            y = y.monic()
    return x.monic()
