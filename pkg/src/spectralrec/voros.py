"""Voros coefficients of the quantum Weber curve and the identities tying them to F_g.

All computations run at lam = 1; lam is restored through the homogeneity
exponents (V_m ~ lam^-m, F_g ~ lam^(2-2g)) when series in hbar are built.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    HbarSeries,
    LogPolynomial,
    RationalFunction,
    bernoulli_polynomial,
    definite_integral_0_to_inf,
    lam_power,
    nu_symbol,
    substitute,
)
from .quantize import DivisorWeights, quantize
from .toprec import free_energy, free_energy_closed_form, weber_low_genus
from .wkb import riccati_expand

DEFAULT_M = 6


def _nu_value(nu):
    return nu_symbol() if nu is None else Fraction(nu)


@dataclass
class VorosSeries:
    """V_m(lam, nu) = lam^-m * coeffs[m]; ``head`` holds (V_-1, V_0) once regularized."""

    coeffs: dict
    nu: object = None  # None means symbolic
    head: tuple = None
    source: str = "integral"

    @property
    def M(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def __getitem__(self, m):
        return self.coeffs[m]

    def as_hbar_series(self, order=None, with_head=False) -> HbarSeries:
        order = self.M if order is None else order
        terms = {m: LogPolynomial([lam_power(-m, v)]) for m, v in self.coeffs.items() if m <= order}
        if with_head and self.head:
            terms[-1], terms[0] = self.head
        return HbarSeries(terms, order)

    def lines(self):
        out = []
        if self.head:
            out.append(f"V[-1] = {self.head[0]}")
            out.append(f"V[0] = {self.head[1]}")
        for m in sorted(self.coeffs):
            v = self.coeffs[m]
            out.append(f"V[{m}] = {_scalar_text(v)}" + ("" if not v else f" * lam^-{m}"))
        return out


def _scalar_text(v) -> str:
    s = str(v)
    if isinstance(v, RationalFunction) and not v.is_constant():
        return f"({s})"
    return s


def voros_coefficients(curve=None, M: int = DEFAULT_M, nu=None, expansion=None) -> VorosSeries:
    """V_m = integral from z = 0 to z = oo of T_m dz for 1 <= m <= M."""
    from .curvedsl import weber

    curve = curve or weber()
    if expansion is None:
        weights = DivisorWeights.default(curve, nu)
        expansion = riccati_expand(quantize(curve, weights), curve, M)
    coeffs = {}
    for m in range(1, M + 1):
        v = definite_integral_0_to_inf(expansion.T[m])
        coeffs[m] = _simplify(v)
    return VorosSeries(coeffs, nu)


def _simplify(v):
    """Constants of the nu-field become plain rationals."""
    while isinstance(v, RationalFunction) and v.is_constant():
        v = v.constant_value()
    return v


def voros_closed_form(m: int, nu=None):
    """B_{m+1}((nu + 1)/2) / (m (m + 1)) at lam = 1."""
    if m < 1:
        raise ValueError("m >= 1")
    X = (_nu_value(nu) + 1) / 2
    return _simplify(bernoulli_polynomial(m + 1)(X) / (m * (m + 1)))


def voros_closed_series(M: int = DEFAULT_M, nu=None) -> VorosSeries:
    return VorosSeries({m: voros_closed_form(m, nu) for m in range(1, M + 1)}, nu, source="closed form")


def regularized_voros(vs: VorosSeries) -> VorosSeries:
    """Attach V_-1 = dF0/dlam and V_0 = -(nu/2) d^2F0/dlam^2."""
    F0, _ = weber_low_genus()
    nu = _nu_value(vs.nu)
    head = (F0.derivative(), F0.derivative(2) * (-nu / 2))
    return VorosSeries(dict(vs.coeffs), vs.nu, head, vs.source)


# -- free energy as an hbar series ----------------------------------------------------


def free_energy_values(gmax: int, source: str = "engine", overrides=None):
    """g -> F_g(1) for 2 <= g <= gmax from the engine or the closed form."""
    from .curvedsl import weber

    out = {}
    for g in range(2, gmax + 1):
        if source == "engine":
            out[g] = free_energy(weber(), g).value
        else:
            out[g] = free_energy_closed_form(g)
    out.update(overrides or {})
    return out


def free_energy_series(order: int, values: dict) -> HbarSeries:
    """F(lam; hbar) = sum_g hbar^(2g-2) F_g(lam) through hbar^order."""
    F0, F1 = weber_low_genus()
    terms = {-2: F0, 0: F1}
    for g, v in values.items():
        if 2 * g - 2 <= order:
            terms[2 * g - 2] = LogPolynomial([lam_power(2 - 2 * g, v)])
    return HbarSeries(terms, order)


@dataclass
class RelationReport:
    name: str
    ok: bool
    orders: list = field(default_factory=list)  # (order, ok)
    first_failure: tuple = None  # (order, lhs, rhs)

    def lines(self):
        out = [f"{self.name}: {'pass' if self.ok else 'FAIL'}"]
        for e, ok in self.orders:
            out.append(f"  hbar^{e}: {'ok' if ok else 'mismatch'}")
        if self.first_failure:
            e, lhs, rhs = self.first_failure
            out.append(f"  first failure at hbar^{e}: lhs = {lhs}, rhs = {rhs}")
        return out


def _compare(name, lhs: HbarSeries, rhs: HbarSeries, lo: int, hi: int) -> RelationReport:
    orders = []
    first = None
    for e in range(lo, hi + 1):
        a, b = lhs.coeff(e), rhs.coeff(e)
        ok = a == b
        orders.append((e, ok))
        if not ok and first is None:
            first = (e, str(a), str(b))
    return RelationReport(name, first is None, orders, first)


def _needed_genus(M: int, shift_order: int = 1) -> int:
    """Largest g whose F_g reaches hbar^M after a shift of the given leading order.

    hbar^(2g-2) F_g shifted in lam first enters at hbar^(2g-2+shift_order).
    """
    return max((M + 2 - shift_order) // 2, 1)


def verify_main_relation(M: int = DEFAULT_M, nu=None, F_overrides=None, source="engine", voros=None) -> RelationReport:
    """V = F(lam-hat + hbar/2) - F(lam-hat - hbar/2) - hbar^-1 dF0 + (nu/2) d^2F0 through hbar^M."""
    v = _nu_value(nu)
    F = free_energy_series(M, free_energy_values(_needed_genus(M, 1), source, F_overrides))
    a = (1 - v) / 2
    b = -(1 + v) / 2
    F0, _ = weber_low_genus()
    head = HbarSeries({-1: F0.derivative(), 0: F0.derivative(2) * (-v / 2)}, M)
    lhs = F.lam_shift(a) - F.lam_shift(b) - head
    vs = voros or voros_coefficients(M=M, nu=nu)
    return _compare("main relation", lhs, vs.as_hbar_series(M), -2, M)


def verify_difference_equations(M: int = DEFAULT_M, nu=None, F_overrides=None, source="engine", voros=None):
    """(i) V(nu + 2) - V(nu) = -log(1 - (nu + 1) hbar/(2 lam)); (ii) second difference of F is log lam."""
    reports = []
    vs = voros or voros_coefficients(M=M, nu=None)
    nu_sym = nu_symbol()
    shifted = {m: substitute(_as_nu_rf(c), nu_sym + 2) for m, c in vs.coeffs.items()}
    diff = HbarSeries({m: LogPolynomial([lam_power(-m, shifted[m] - _as_nu_rf(c))]) for m, c in vs.coeffs.items()}, M)
    u = (nu_sym + 1) / 2
    log_series = HbarSeries({k: LogPolynomial([lam_power(-k, u ** k / k)]) for k in range(1, M + 1)}, M)
    if nu is not None:
        at = Fraction(nu)
        diff = diff.map_scalars(lambda c: _eval_nu(c, at))
        log_series = log_series.map_scalars(lambda c: _eval_nu(c, at))
    reports.append(_compare("nu-shift relation", diff, log_series, 1, M))
    F = free_energy_series(M, free_energy_values(_needed_genus(M, 2), source, F_overrides))
    second = F.lam_shift(1) - F.scale(2) + F.lam_shift(-1)
    F0, _ = weber_low_genus()
    target = HbarSeries({0: F0.derivative(2)}, M)
    reports.append(_compare("three-term relation", second.truncate(M), target, -2, M))
    return reports


def _as_nu_rf(c):
    return c if isinstance(c, RationalFunction) else RationalFunction.const(c, "nu")


def _eval_nu(c, at):
    return c(at) if isinstance(c, RationalFunction) and c.var == "nu" else c


def verify_free_energies(gmax: int = 4):
    """Engine F_g against the Bernoulli closed form for 2 <= g <= gmax."""
    from .curvedsl import weber

    return [(g, free_energy(weber(), g).value, free_energy_closed_form(g)) for g in range(2, gmax + 1)]


def nu_reflection_ok(vs: VorosSeries) -> bool:
    """V_m(-nu) = (-1)^(m+1) V_m(nu), from B_k(1 - X) = (-1)^k B_k(X)."""
    nu_sym = nu_symbol()
    for m, c in vs.coeffs.items():
        f = _as_nu_rf(c)
        if substitute(f, -nu_sym) != f * (-1) ** (m + 1):
            return False
    return True
