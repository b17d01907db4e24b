"""Free energies F_g and the variational check for Weber."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from ..errors import InternalInconsistency, NotAvailable
from ..exact import (
    INF,
    Antiderivative,
    LaurentSeries,
    LogPolynomial,
    antiderivative,
    bernoulli_number,
    definite_integral_0_to_inf,
    lam_power,
    laurent_expand,
    order_at,
    point_str,
    residue_at,
)
from .engine import engine_for
from .multidiff import _distinct_perms, label_rf


@dataclass
class FreeEnergy:
    """F_g(lam) = value * lam^(2 - 2g)."""

    g: int
    value: Fraction
    all_R_value: Fraction = None
    per_point: dict = field(default_factory=dict)

    @property
    def exponent(self) -> int:
        return 2 - 2 * self.g

    @property
    def discrepancy(self):
        if self.all_R_value is None:
            return Fraction(0)
        return self.all_R_value - self.value

    def at(self, lam=None):
        """As a rational function of lam, or its value at a given lam."""
        if lam is None:
            return lam_power(self.exponent, self.value)
        return self.value * Fraction(lam) ** self.exponent

    def text(self) -> str:
        v = self.value
        e = -self.exponent
        if not v:
            return "0"
        sign = "-" if v < 0 else ""
        a = abs(v)
        den = a.denominator
        lam = "lam" if e == 1 else f"lam^{e}"
        return f"{sign}{a.numerator}/({den}*{lam})" if den != 1 else f"{sign}{a.numerator}/{lam}"


def _log_series(base, r, order):
    """log(z - base) around r without its constant term, through t^order.

    The log(t) piece at base == r (or at infinity) is dropped: paired with a
    residue-free differential it is re-anchored by parts and contributes
    nothing.
    """
    if r is INF:
        # log(1/t - p) = -log t + log(1 - p t)
        coeffs = [Fraction(0)] + [-(base ** j) / j for j in range(1, order + 1)]
        return LaurentSeries._raw(0, coeffs[: order + 1] or [Fraction(0)])
    if base == r:
        return LaurentSeries._raw(0, [Fraction(0)] * (order + 1))
    a = r - base
    coeffs = [Fraction(0)] + [Fraction((-1) ** (j + 1), j) / a ** j for j in range(1, order + 1)]
    return LaurentSeries._raw(0, coeffs)


def _local_residue(phi, W, r):
    """Res_r of Phi * W dz where Phi = rational + logs."""
    if residue_at(W, r):
        raise InternalInconsistency(f"W has a residue at z = {point_str(r)}; the pairing with Phi is ill defined")
    pv = order_at(phi.rational, r) if phi.rational else 0
    wtop = max(-1 - min(pv, 0), -2)
    if r is INF:
        # dz = -dt/t^2 with t = 1/z
        wser = laurent_expand(W, INF, wtop + 2).shift(-2).scale(-1)
    else:
        wser = laurent_expand(W, r, wtop)
    wv = wser.val
    top = -1 - wv
    rat = laurent_expand(phi.rational, r, max(top, 0))
    total = Fraction(0)
    for k in range(wv, -rat.val):
        total += wser.coeff(k) * rat.coeff(-1 - k)
    if top >= 1:
        for base, c in phi.logs:
            ls = _log_series(base, r, top)
            for k in range(wv, -1):
                total += c * wser.coeff(k) * ls.coeff(-1 - k)
    return total


def free_energy(curve, g: int, phi_shift=0, engine=None) -> FreeEnergy:
    """F_g = (2 - 2g)^-1 sum_r Res_r Phi W_{g,1} for g >= 2."""
    if g < 2:
        raise ValueError("free_energy needs g >= 2; use weber_low_genus for g = 0, 1")
    eng = engine or engine_for(curve, cap=max(2 * g + 1, 9))
    W = eng.W(g, 1).as_rational(curve.var)
    phi = antiderivative(curve.y * curve.xprime)
    if phi_shift:
        phi = Antiderivative(phi.rational + phi_shift, phi.logs)
    per = {r: _local_residue(phi, W, r) for r in curve.R}
    scale = Fraction(1, 2 - 2 * g)
    star = sum((per[r] for r in curve.R_star), Fraction(0)) * scale
    allR = sum(per.values(), Fraction(0)) * scale
    return FreeEnergy(g, star, allR, {r: v * scale for r, v in per.items()})


def free_energy_closed_form(g: int):
    """Weber: F_g(1) = B_2g / (2g (2g - 2)) for g >= 2."""
    if g < 2:
        raise ValueError("closed form applies for g >= 2")
    return bernoulli_number(2 * g) / (2 * g * (2 * g - 2))


def _is_weber(curve) -> bool:
    return curve is None or str(curve.tag).startswith("weber")


def weber_low_genus(curve=None):
    """(F0, F1) for Weber as log-polynomials in lam."""
    if not _is_weber(curve):
        raise NotAvailable("not available: general F0/F1 out of scope")
    F0 = LogPolynomial([lam_power(2, Fraction(-3, 4)), lam_power(2, Fraction(1, 2))])
    F1 = LogPolynomial([0, Fraction(-1, 12)])
    return F0, F1


def weber_free_energy_derivative(g: int, n: int):
    """d^n/dlam^n F_g at lam = 1 from the closed forms."""
    if g <= 1:
        F = weber_low_genus()[g].derivative(n)
        return F.coeff(0)(Fraction(1)) if F else Fraction(0)
    c = free_energy_closed_form(g)
    e = 2 - 2 * g
    return c * prod(e - i for i in range(n))


@dataclass
class VariationalReport:
    g: int
    n: int
    integral: Fraction
    expected: Fraction

    @property
    def ok(self) -> bool:
        return self.integral == self.expected

    def __bool__(self):
        return self.ok


def integrate_0_to_inf(W) -> Fraction:
    """n-fold integral over (0, oo) in every variable of a pole-basis differential."""
    cache = {}

    def one(lab):
        if lab not in cache:
            cache[lab] = definite_integral_0_to_inf(label_rf(lab))
        return cache[lab]

    total = Fraction(0)
    for M, c in W.terms.items():
        nperm = len(_distinct_perms(M))
        total += c * nperm * prod((one(lab) for lab in M), start=Fraction(1))
    return total


def verify_variational(g: int, n: int, curve=None) -> VariationalReport:
    """Compare the (0, oo)^n integral of W_{g,n} with d^n F_g at lam = 1."""
    from ..curvedsl import weber

    if 2 * g + n < 3:
        raise ValueError("needs 2g + n >= 3")
    curve = curve or weber()
    if curve.tag != "weber":
        raise NotAvailable("the variational check is wired to the lam = 1 Weber curve")
    W = engine_for(curve, cap=max(9, 2 * g + n)).W(g, n)
    return VariationalReport(g, n, integrate_0_to_inf(W), weber_free_energy_derivative(g, n))
