"""Truncated Laurent series and expansion of rational functions at points."""

from fractions import Fraction

from ..errors import ParameterDegeneracy
from .points import INF, point_str
from .polynomial import Polynomial, to_scalar

_ZERO = Fraction(0)


class LaurentSeries:
    """sum_i coeffs[i] * t^(val + i) + O(t^prec), with prec = val + len(coeffs).

    Precision is tracked relative to ``val``: multiplying two series keeps the
    shorter length, which is the right rule when ``val`` is a lower bound for
    the true order of each factor.
    """

    __slots__ = ("val", "coeffs", "var", "point")

    def __init__(self, val: int, coeffs, var: str = "t", point=0):
        self.val = val
        self.coeffs = [to_scalar(c) for c in coeffs]
        self.var = var
        self.point = point

    @classmethod
    def _raw(cls, val, coeffs, var="t", point=0):
        s = cls.__new__(cls)
        s.val = val
        s.coeffs = coeffs
        s.var = var
        s.point = point
        return s

    @property
    def prec(self) -> int:
        return self.val + len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def coeff(self, k: int):
        i = k - self.val
        if i < 0:
            return _ZERO
        if i >= len(self.coeffs):
            raise ValueError(f"coefficient of {self.var}^{k} is beyond the truncation order {self.prec}")
        return self.coeffs[i]

    def __getitem__(self, k):
        return self.coeff(k)

    def order(self) -> int:
        """Exponent of the first nonzero coefficient (prec if none is known)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.val + i
        return self.prec

    @property
    def leading_exponent(self) -> int:
        return self.order()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def normalized(self) -> "LaurentSeries":
        """Drop leading zeros so that ``val`` is the true order."""
        k = 0
        while k < len(self.coeffs) and not self.coeffs[k]:
            k += 1
        if k == 0:
            return self
        return LaurentSeries._raw(self.val + k, self.coeffs[k:], self.var, self.point)

    def truncate(self, prec: int) -> "LaurentSeries":
        n = max(0, prec - self.val)
        if n >= len(self.coeffs):
            return self
        return LaurentSeries._raw(self.val, self.coeffs[:n], self.var, self.point)

    def with_length(self, n: int) -> "LaurentSeries":
        if n > len(self.coeffs):
            raise ValueError("cannot extend a truncated series")
        return LaurentSeries._raw(self.val, self.coeffs[:n], self.var, self.point)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries._raw(0, [to_scalar(other)], self.var, self.point).pad_to(self.prec)
        prec = min(self.prec, other.prec)
        val = min(self.val, other.val)
        out = [_ZERO] * max(0, prec - val)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                j = s.val + i - val
                if j >= len(out):
                    break
                out[j] = out[j] + c
        return LaurentSeries._raw(val, out, self.var, self.point)

    __radd__ = __add__

    def pad_to(self, prec: int) -> "LaurentSeries":
        """Treat the series as exact and extend it with zeros up to prec."""
        if prec <= self.prec:
            return self.truncate(prec)
        return LaurentSeries._raw(self.val, self.coeffs + [_ZERO] * (prec - self.prec), self.var, self.point)

    def __neg__(self):
        return LaurentSeries._raw(self.val, [-c for c in self.coeffs], self.var, self.point)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "LaurentSeries":
        return LaurentSeries._raw(self.val, [c * s for c in self.coeffs], self.var, self.point)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        return LaurentSeries._raw(self.val + k, self.coeffs, self.var, self.point)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        n = min(len(a), len(b))
        out = [_ZERO] * n
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return LaurentSeries._raw(self.val + other.val, out, self.var, self.point)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentSeries":
        s = self.normalized()
        if not s.coeffs or not s.coeffs[0]:
            raise ZeroDivisionError("inverse of a series with no known nonzero term")
        a = s.coeffs
        n = len(a)
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, n):
            acc = _ZERO
            for j in range(1, k + 1):
                if a[j]:
                    acc += a[j] * out[k - j]
            out.append(-acc * inv0)
        return LaurentSeries._raw(-s.val, out, self.var, self.point)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        return self.scale(1 / to_scalar(other))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentSeries._raw(0, [Fraction(1)] + [_ZERO] * (len(self.coeffs) - 1), self.var, self.point)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self) -> "LaurentSeries":
        return LaurentSeries._raw(
            self.val - 1, [c * (self.val + i) for i, c in enumerate(self.coeffs)], self.var, self.point
        )

    def compose(self, s: "LaurentSeries", powers=None) -> "LaurentSeries":
        """Substitute t -> s(t) where s has order exactly 1.

        ``powers`` may supply a dict k -> s^k to reuse across calls.
        """
        n = len(self.coeffs)
        acc = None
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.val + i
            p = powers[k] if powers is not None else s ** k
            term = p.with_length(min(n, len(p))).scale(c)
            acc = term if acc is None else acc + term
        if acc is None:
            return LaurentSeries._raw(self.val, [_ZERO] * n, self.var, self.point)
        return acc.truncate(self.val + n)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        return all(self._get(k) == other._get(k) for k in range(lo, prec))

    def _get(self, k):
        i = k - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    __hash__ = None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c})*{self.var}^{self.val + i}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.var}^{self.prec})  [at {point_str(self.point)}]"


def _split_valuation(p: Polynomial):
    k = p.valuation()
    return k, p.c[k:]


def series_quotient(num_c, den_c, n: int):
    """First n power-series coefficients of num/den, den[0] != 0."""
    d0 = den_c[0]
    inv = 1 / d0
    out = []
    ld = len(den_c)
    ln = len(num_c)
    for k in range(n):
        acc = num_c[k] if k < ln else _ZERO
        for j in range(1, min(k, ld - 1) + 1):
            dj = den_c[j]
            if dj:
                acc = acc - dj * out[k - j]
        out.append(acc * inv)
    return out


def _local_parts(f, p):
    """Numerator and denominator of f in the local coordinate at p."""
    num, den = f.num, f.den
    if p is INF:
        d = max(num.degree, den.degree)
        return num.reversed(d), den.reversed(d)
    return num.taylor_shift(p), den.taylor_shift(p)


def laurent_expand(f, p, order: int, var: str = "t") -> LaurentSeries:
    """Expand rational f at point p with terms through t^order.

    The local coordinate is t = z - p for finite p and t = 1/z at infinity.
    """
    if isinstance(f, Polynomial):
        from .ratfunc import RationalFunction

        f = RationalFunction(f, _normalized=True)
    n, d = _local_parts(f, p)
    if not d.c:
        raise ParameterDegeneracy("denominator vanishes identically after specialization")
    if not n.c:
        return LaurentSeries._raw(order + 1, [], var, p)
    a, nc = _split_valuation(n)
    b, dc = _split_valuation(d)
    val = a - b
    length = order + 1 - val
    if length <= 0:
        return LaurentSeries._raw(order + 1, [], var, p)
    return LaurentSeries._raw(val, series_quotient(nc, dc, length), var, p)


def laurent_expand_length(f, p, length: int, var: str = "t") -> LaurentSeries:
    """Expansion with a given number of terms starting at the true order."""
    n, d = _local_parts(f, p)
    if not n.c:
        return LaurentSeries._raw(0, [_ZERO] * length, var, p)
    a, nc = _split_valuation(n)
    b, dc = _split_valuation(d)
    return LaurentSeries._raw(a - b, series_quotient(nc, dc, length), var, p)


def order_at(f, p) -> int:
    """ord_p of a nonzero rational function (finite p or infinity)."""
    if p is INF:
        return f.den.degree - f.num.degree
    if not f.num.c:
        raise ValueError("order of the zero function")
    return f.num.taylor_shift(p).valuation() - f.den.taylor_shift(p).valuation()
