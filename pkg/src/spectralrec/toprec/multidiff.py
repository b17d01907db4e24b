"""Symmetric multidifferentials in a pole basis.

A label ``(p, k)`` stands for the one-form dz/(z - p)^k when p is finite and
for z^k dz when p is infinity.  A multidifferential with ``n`` variables is

    sum over ordered label tuples (l1, ..., ln) of c[sorted(l)] * prod_i e_{l_i}(z_i),

so the coefficient dictionary is keyed by sorted label tuples and symmetry
under permuting variables holds by construction.  Linear independence of the
labels makes this a canonical form.
"""

from collections import Counter
from fractions import Fraction
from math import factorial

from ..exact import INF, Polynomial, RationalFunction, partial_fractions, point_key, point_str

def label_key(label):
    p, k = label
    return (point_key(p), k)


def sort_labels(labels):
    return tuple(sorted(labels, key=label_key))


def label_rf(label, var: str = "z") -> RationalFunction:
    p, k = label
    if p is INF:
        return RationalFunction(Polynomial.monomial(k, 1, var), _normalized=True)
    return RationalFunction(Polynomial([1], var), Polynomial([-p, 1], var) ** k)


def rf_to_labels(f: RationalFunction, roots=None):
    """Decompose a one-variable rational function into label coefficients."""
    pf = partial_fractions(f, roots)
    out = {}
    for k, c in pf.poly.terms():
        out[(INF, k)] = c
    for p, k, c in pf.terms:
        out[(p, k)] = c
    return out


def _label_eval(label, v):
    p, k = label
    if p is INF:
        return v ** k
    return (v - p) ** (-k)


def multinomial(counts) -> int:
    total = sum(counts)
    out = factorial(total)
    for c in counts:
        out //= factorial(c)
    return out


class MultiDifferential:
    """W(z1, ..., zn) dz1...dzn.

    ``kind`` is ``"poles"`` (label dictionary), ``"ydx"`` (one-variable
    rational function) or ``"bergman"`` (dz1 dz2/(z1 - z2)^2).
    """

    def __init__(self, n: int, terms=None, kind: str = "poles", rf=None, g=None):
        self.n = n
        self.kind = kind
        self.g = g
        self.rf = rf
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[sort_labels(key)] = Fraction(c) if isinstance(c, int) else c

    @classmethod
    def bergman(cls):
        return cls(2, kind="bergman", g=0)

    @classmethod
    def from_rational(cls, f: RationalFunction, g=None, roots=None):
        return cls(1, {(lab,): c for lab, c in rf_to_labels(f, roots).items()}, g=g)

    @classmethod
    def ydx(cls, f: RationalFunction):
        return cls(1, kind="ydx", rf=f, g=0)

    @property
    def variables(self):
        return ["z"] if self.n == 1 else [f"z{i + 1}" for i in range(self.n)]

    # -- evaluation --------------------------------------------------------------

    def evaluate(self, values):
        """Coefficient of dz1...dzn at exact points (all off the poles)."""
        if len(values) != self.n:
            raise ValueError("wrong number of points")
        if self.kind == "ydx":
            return self.rf(values[0])
        if self.kind == "bergman":
            return 1 / (values[0] - values[1]) ** 2
        total = Fraction(0)
        for key, c in self.terms.items():
            for perm in _distinct_perms(key):
                term = c
                for lab, v in zip(perm, values):
                    term = term * _label_eval(lab, v)
                total += term
        return total

    def as_rational(self, var: str = "z") -> RationalFunction:
        """One-variable case as a single rational function."""
        if self.n != 1:
            raise ValueError("as_rational needs a one-variable differential")
        if self.kind == "ydx":
            return self.rf
        acc = RationalFunction(Polynomial([], var), _normalized=True)
        for (lab,), c in self.terms.items():
            acc = acc + label_rf(lab, var) * c
        return acc

    # -- structure ---------------------------------------------------------------

    def poles(self):
        """Points carrying labels (for one variable, by symmetry the same for all)."""
        return sorted({lab[0] for key in self.terms for lab in key}, key=point_key)

    def max_pole_order(self):
        best = {}
        for key in self.terms:
            for p, k in key:
                if p is not INF:
                    best[p] = max(best.get(p, 0), k)
        return best

    def has_residue_labels(self) -> bool:
        return any(k == 1 for key in self.terms for p, k in key if p is not INF)

    def ordered_terms(self):
        """Yield (ordered label tuple, coefficient) over all distinct orderings."""
        for key, c in self.terms.items():
            for perm in _distinct_perms(key):
                yield perm, c

    def __eq__(self, other):
        if not isinstance(other, MultiDifferential):
            return NotImplemented
        if self.kind != other.kind or self.n != other.n:
            return False
        if self.kind == "ydx":
            return self.rf == other.rf
        return self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    # -- rendering ---------------------------------------------------------------

    def text(self) -> str:
        if self.kind == "ydx":
            return f"{self.rf} dz"
        if self.kind == "bergman":
            return "dz1*dz2/(z1 - z2)^2"
        if not self.terms:
            return "0"
        if self.n == 1:
            return f"{self.as_rational()} dz"
        vars_ = self.variables
        dz = "*".join(f"d{v}" for v in vars_)
        return f"({monomial_sum_text(self, vars_)}) {dz}"

    def body_text(self) -> str:
        """The coefficient of dz1...dzn as a parseable expression."""
        if self.kind == "ydx":
            return str(self.rf)
        if self.kind == "bergman":
            return "1/(z1 - z2)^2"
        if self.n == 1:
            return str(self.as_rational())
        return monomial_sum_text(self, self.variables)

    def __repr__(self):
        return f"MultiDifferential(n={self.n}, {len(self.terms)} terms, kind={self.kind})"


def _factor(label, var):
    p, k = label
    if p is INF:
        return "1" if k == 0 else (var if k == 1 else f"{var}^{k}")
    if p == 0:
        base = var
    elif p > 0:
        base = f"({var} - {p})"
    else:
        base = f"({var} + {-p})"
    return f"{base}^-{k}" if k > 1 or base != var else f"{var}^-1"


def monomial_sum_text(md: MultiDifferential, vars_) -> str:
    parts = []
    for perm, c in sorted(md.ordered_terms(), key=lambda t: tuple(label_key(l) for l in t[0])):
        facs = [_factor(lab, v) for lab, v in zip(perm, vars_)]
        facs = [f for f in facs if f != "1"]
        coef = c
        body = "*".join(facs)
        if coef == 1 and body:
            parts.append(("+", body))
        elif coef == -1 and body:
            parts.append(("-", body))
        else:
            sign = "-" if coef < 0 else "+"
            mag = -coef if coef < 0 else coef
            parts.append((sign, f"{mag}*{body}" if body else str(mag)))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out


def _distinct_perms(key):
    """Distinct orderings of a sorted multiset tuple."""
    cnt = Counter(key)
    items = sorted(cnt, key=label_key)
    n = len(key)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for it in items:
            if cnt[it]:
                cnt[it] -= 1
                prefix.append(it)
                rec(prefix)
                prefix.pop()
                cnt[it] += 1

    rec([])
    return out


def describe_label(label) -> str:
    p, k = label
    return f"z^{k}" if p is INF else f"(z-{point_str(p)})^-{k}"
