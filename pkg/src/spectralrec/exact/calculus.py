"""Residues, partial fractions, antiderivatives and definite integrals of rational differentials.

A rational differential f(z) dz is represented by its coefficient ``f``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as igcd

from ..errors import DivergentEndpoint, LogObstruction, NonSplitDenominator, ParameterDegeneracy
from .laurent import laurent_expand
from .points import INF, point_key
from .polynomial import Polynomial, _int_primitive
from .ratfunc import RationalFunction, as_ratfunc


def residue_at(f, p):
    """Coefficient of (z-p)^-1 dz, or the residue at infinity for p = INF."""
    f = as_ratfunc(f) if not isinstance(f, RationalFunction) else f
    if p is INF:
        # z = 1/w, dz = -dw/w^2: the residue is minus the w^1 coefficient of f(1/w)
        return -laurent_expand(f, INF, 1).coeff(1)
    return laurent_expand(f, p, -1).coeff(-1)


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Polynomial):
    """Rational roots of a polynomial over Q with multiplicities, ascending."""
    if not p.is_rational():
        raise NonSplitDenominator("root finding needs rational coefficients")
    roots = []
    k = p.valuation()
    if k and p.c:
        roots.append((Fraction(0), k))
        p = p.shift_down(k)
    if p.degree <= 0:
        return roots
    ints = _int_primitive(p.c)
    a0, an = ints[0], ints[-1]
    cands = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            if igcd(num, den) == 1:
                cands.add(Fraction(num, den))
                cands.add(Fraction(-num, den))
    q = Polynomial(ints, p.var)
    for r in sorted(cands):
        if q.degree <= 0:
            break
        m = 0
        lin = Polynomial([-r, 1], p.var)
        while q.degree > 0 and not q(r):
            q = q.exact_div(lin)
            m += 1
        if m:
            roots.append((r, m))
    roots.sort(key=lambda t: t[0])
    return roots


def split_roots(den: Polynomial, roots=None):
    """Roots of den with multiplicities; all roots must be known and rational."""
    if roots is None:
        if not den.is_rational():
            raise NonSplitDenominator(f"denominator {den} has parameter-dependent coefficients")
        roots = rational_roots(den)
    total = sum(m for _, m in roots)
    if total != den.degree:
        raise NonSplitDenominator(f"denominator {den} does not split into rational linear factors")
    return roots


@dataclass
class PartialFractions:
    """f = poly + sum coeff / (z - pole)^order."""

    poly: Polynomial
    terms: list = field(default_factory=list)  # (pole, order, coeff)
    var: str = "z"

    def reassemble(self) -> RationalFunction:
        z = RationalFunction.gen(self.var)
        acc = RationalFunction(self.poly, _normalized=True)
        for p, k, c in self.terms:
            acc = acc + (z - p) ** (-k) * c
        return acc

    def residue(self, p):
        return sum((c for q, k, c in self.terms if q == p and k == 1), Fraction(0))


def partial_fractions(f, roots=None) -> PartialFractions:
    f = as_ratfunc(f) if not isinstance(f, RationalFunction) else f
    q, r = f.num.divmod(f.den)
    terms = []
    if r.c:
        rf = RationalFunction(r, f.den, _normalized=True)
        for p, m in split_roots(f.den, roots):
            ser = laurent_expand(rf, p, -1)
            for k in range(m, 0, -1):
                c = ser.coeff(-k)
                if c:
                    terms.append((p, k, c))
    terms.sort(key=lambda t: (point_key(t[0]), t[1]))
    return PartialFractions(q, terms, f.var)


@dataclass
class Antiderivative:
    """rational + sum coeff * log(z - pole)."""

    rational: RationalFunction
    logs: list = field(default_factory=list)  # (pole, coeff)

    def derivative(self) -> RationalFunction:
        z = RationalFunction.gen(self.rational.var)
        acc = self.rational.derivative()
        for p, c in self.logs:
            acc = acc + (z - p).inverse() * c
        return acc

    def log_coeff(self, p):
        return sum((c for q, c in self.logs if q == p), Fraction(0))


def antiderivative(f, roots=None) -> Antiderivative:
    f = as_ratfunc(f) if not isinstance(f, RationalFunction) else f
    pf = partial_fractions(f, roots)
    var = f.var
    z = RationalFunction.gen(var)
    rat = RationalFunction(pf.poly.integral(), _normalized=True)
    logs = []
    for p, k, c in pf.terms:
        if k == 1:
            logs.append((p, c))
        else:
            rat = rat + (z - p) ** (1 - k) * (-c / (k - 1))
    return Antiderivative(rat, logs)


def limit_at(f: RationalFunction, p):
    """Finite limit of f at p, or DivergentEndpoint."""
    if p is INF:
        dn, dd = f.num.degree, f.den.degree
        if dn > dd:
            raise DivergentEndpoint(f"{f} diverges at infinity")
        if dn < dd:
            return Fraction(0)
        return f.num.lc / f.den.lc
    d = f.den(p)
    if not d:
        raise DivergentEndpoint(f"{f} has a pole at {p}")
    return f.num(p) / d


def definite_integral(f, a, b, roots=None):
    """Integral of f dz from a to b via a rational antiderivative."""
    ad = antiderivative(f, roots)
    live = [(p, c) for p, c in ad.logs if c]
    if live:
        raise LogObstruction(f"antiderivative has logarithmic terms {live}", live)
    return limit_at(ad.rational, b) - limit_at(ad.rational, a)


def definite_integral_0_to_inf(f, roots=None):
    return definite_integral(f, Fraction(0), INF, roots)


def substitute(f, m) -> RationalFunction:
    """Composition f(m(z)) for rational f and non-constant rational m."""
    f = as_ratfunc(f) if not isinstance(f, RationalFunction) else f
    m = as_ratfunc(m, f.var) if not isinstance(m, RationalFunction) else m
    a, b = m.num, m.den
    dn, dd = f.num.degree, f.den.degree
    d = max(dn, dd)
    # powers of a and b, then homogenize: N(a/b) b^d = sum n_i a^i b^(d-i)
    apow = [Polynomial([1], a.var)]
    bpow = [Polynomial([1], a.var)]
    for _ in range(d):
        apow.append(apow[-1] * a)
        bpow.append(bpow[-1] * b)

    def homog(p):
        acc = Polynomial([], a.var)
        for i, c in p.terms():
            acc = acc + (apow[i] * bpow[d - i]).scale(c)
        return acc

    num, den = homog(f.num), homog(f.den)
    if not den.c:
        raise ParameterDegeneracy("composition lands on a pole identically")
    return RationalFunction(num, den)


def mobius(a, b, c, d, var: str = "z") -> RationalFunction:
    """The map z -> (a z + b) / (c z + d)."""
    return RationalFunction(Polynomial([b, a], var), Polynomial([d, c], var))


def apply_map(m: RationalFunction, p):
    """Image of a point of P^1 under a rational map."""
    if p is INF:
        dn, dd = m.num.degree, m.den.degree
        if dn > dd:
            return INF
        if dn < dd:
            return Fraction(0)
        return m.num.lc / m.den.lc
    d = m.den(p)
    if not d:
        return INF
    return m.num(p) / d


def preimages(m: RationalFunction, v):
    """Points z with m(z) = v, with multiplicity, as (point, mult)."""
    if v is INF:
        out = [(r, k) for r, k in split_roots(m.den)] if m.den.degree else []
        ddeg = m.num.degree - m.den.degree
        if ddeg > 0:
            out.append((INF, ddeg))
        return out
    p = m.num - m.den.scale(v)
    out = list(split_roots(p)) if p.degree > 0 else []
    missing = max(m.num.degree, m.den.degree) - p.degree
    if missing > 0:
        out.append((INF, missing))
    return out
