"""The log algebra Q(lam, nu)[log lam] and truncated hbar-series over it."""

from fractions import Fraction
from math import factorial

from .polynomial import Polynomial
from .ratfunc import RationalFunction, as_ratfunc

LAM = "lam"


def _lam(v) -> RationalFunction:
    return as_ratfunc(v, LAM)


def lam_power(k: int, coeff=1) -> RationalFunction:
    """coeff * lam^k for any integer k."""
    if k >= 0:
        return RationalFunction(Polynomial.monomial(k, coeff, LAM), _normalized=True)
    return RationalFunction(Polynomial([coeff], LAM), Polynomial.monomial(-k, 1, LAM))


class LogPolynomial:
    """sum_k c_k(lam, nu) * (log lam)^k with rational-function coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [_lam(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def log(cls):
        return cls([0, 1])

    @classmethod
    def const(cls, v):
        return cls([v])

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def coeff(self, k: int) -> RationalFunction:
        return self.c[k] if 0 <= k < len(self.c) else _lam(0)

    def _coerce(self, other):
        if isinstance(other, LogPolynomial):
            return other
        return LogPolynomial([other])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.c), len(o.c))
        return LogPolynomial([self.coeff(k) + o.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return LogPolynomial([-v for v in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, LogPolynomial):
            return LogPolynomial([v * other for v in self.c])
        if not self.c or not other.c:
            return LogPolynomial()
        out = [_lam(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            for j, b in enumerate(other.c):
                out[i + j] = out[i + j] + a * b
        return LogPolynomial(out)

    __rmul__ = __mul__

    def derivative(self, k: int = 1) -> "LogPolynomial":
        """d/dlam; d(log lam)^j = j (log lam)^(j-1) / lam."""
        p = self
        inv_lam = lam_power(-1)
        for _ in range(k):
            out = [v.derivative() for v in p.c]
            for j in range(1, len(p.c)):
                out[j - 1] = out[j - 1] + p.c[j] * inv_lam * j
            p = LogPolynomial(out)
        return p

    def map_scalars(self, f) -> "LogPolynomial":
        """Apply f to every lam-coefficient (e.g. a substitution in nu)."""
        return LogPolynomial([v.map_coeffs(f) for v in self.c])

    def __eq__(self, other):
        if not isinstance(other, LogPolynomial):
            other = LogPolynomial([other])
        return self.c == other.c

    __hash__ = None

    def __repr__(self):
        return f"LogPolynomial({[str(v) for v in self.c]})"

    def __str__(self):
        from .render import logpoly_text

        return logpoly_text(self)


class HbarSeries:
    """sum_e hbar^e * terms[e], exact for exponents <= order."""

    __slots__ = ("terms", "order")

    def __init__(self, terms=None, order: int = 8):
        t = {}
        for e, v in (terms or {}).items():
            if e > order:
                continue
            v = v if isinstance(v, LogPolynomial) else LogPolynomial([v])
            if v:
                t[e] = v
        self.terms = t
        self.order = order

    @property
    def leading_exponent(self):
        return min(self.terms) if self.terms else self.order + 1

    def coeff(self, e: int) -> LogPolynomial:
        if e > self.order:
            raise ValueError(f"hbar^{e} is beyond the truncation order {self.order}")
        return self.terms.get(e, LogPolynomial())

    def __add__(self, other):
        order = min(self.order, other.order)
        out = dict(self.terms)
        for e, v in other.terms.items():
            out[e] = out[e] + v if e in out else v
        return HbarSeries(out, order)

    def __neg__(self):
        return HbarSeries({e: -v for e, v in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "HbarSeries":
        return HbarSeries({e: v * s for e, v in self.terms.items()}, self.order)

    def __mul__(self, other):
        if not isinstance(other, HbarSeries):
            return self.scale(other)
        va, vb = self.leading_exponent, other.leading_exponent
        order = min(self.order + vb, other.order + va)
        out = {}
        for e1, a in self.terms.items():
            for e2, b in other.terms.items():
                e = e1 + e2
                if e <= order:
                    out[e] = out[e] + a * b if e in out else a * b
        return HbarSeries(out, order)

    __rmul__ = __mul__

    def hbar_shift(self, k: int) -> "HbarSeries":
        """Multiply by hbar^k."""
        return HbarSeries({e + k: v for e, v in self.terms.items()}, self.order + k)

    def derivative(self, k: int = 1) -> "HbarSeries":
        return HbarSeries({e: v.derivative(k) for e, v in self.terms.items()}, self.order)

    def lam_shift(self, c) -> "HbarSeries":
        """F(lam + c*hbar) = sum_k (c hbar)^k / k! * d^k F, truncated at the same order."""
        out = {}
        for e, v in self.terms.items():
            d = v
            ck = Fraction(1)
            for k in range(self.order - e + 1):
                if k:
                    d = d.derivative()
                    ck = ck * c
                if not d:
                    break
                term = d * (ck / factorial(k))
                out[e + k] = out[e + k] + term if (e + k) in out else term
        return HbarSeries(out, self.order)

    def map_scalars(self, f) -> "HbarSeries":
        return HbarSeries({e: v.map_scalars(f) for e, v in self.terms.items()}, self.order)

    def truncate(self, order: int) -> "HbarSeries":
        return HbarSeries(self.terms, min(order, self.order))

    def first_difference(self, other, order=None):
        """Lowest exponent where the two series differ, or None."""
        top = min(self.order, other.order) if order is None else order
        exps = sorted(set(self.terms) | set(other.terms))
        for e in exps:
            if e <= top and self.coeff(e) != other.coeff(e):
                return e
        return None

    def __eq__(self, other):
        if not isinstance(other, HbarSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{e}: {v}" for e, v in sorted(self.terms.items()))
        return f"HbarSeries({{{body}}}, order={self.order})"
