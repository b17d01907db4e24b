"""WKB expansion of the quantum curve in the z-chart, and its reconstruction from W_{g,n}.

With S = sum hbar^m S_m the log-derivative of a WKB solution and
T_m(z) = S_m(x(z)) x'(z), the Riccati equation becomes, for m >= -1,

    (2 T_-1 + U0) T_{m+1} + (U1 - x''/x') T_m + sum_{j=0}^{m} T_j T_{m-j} + T_m' + V_{m+2} = 0

where U = x' q and V = x'^2 r are pulled back to z.  The same T_m are
reassembled from correlation differentials integrated over the divisor
[z] - sum nu_beta [beta].
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .curvedsl.descent import descend_to_x
from .errors import InternalInconsistency
from .exact import INF, RationalFunction, antiderivative, limit_at, order_at, substitute
from .quantize import DivisorWeights, QuantumCurve, quantize
from .toprec import engine_for
from .toprec.multidiff import label_rf, multinomial
from .toprec.engine import _sub_multiset


@dataclass
class RiccatiExpansion:
    branch: int
    T: dict  # m -> RationalFunction in z
    chart: dict = field(default_factory=dict, repr=False)

    @property
    def M(self) -> int:
        return max(self.T)

    def __getitem__(self, m):
        return self.T[m]


def riccati_expand(qc: QuantumCurve, curve, M: int, branch: int = 1) -> RiccatiExpansion:
    """T_-1 .. T_M; ``branch=1`` starts from y x', ``branch=-1`` from y(sigma z) x'."""
    if branch not in (1, -1):
        raise ValueError("branch is 1 or -1")
    xp = curve.xprime
    xpp = xp.derivative()
    U0, U1 = qc.chart["U0"], qc.chart["U1"]
    V = {0: qc.chart["V0"], 1: qc.chart["V1"], 2: qc.chart["V2"]}
    T = {-1: (curve.y if branch == 1 else curve.y_sigma) * xp}
    if T[-1] * T[-1] + U0 * T[-1] + V[0]:
        raise InternalInconsistency("leading Riccati equation fails for the chosen branch")
    lead = T[-1] * 2 + U0
    if not lead:
        raise InternalInconsistency("degenerate branch: 2 T_-1 + U0 vanishes")
    if lead != curve.delta_dx * branch:
        raise InternalInconsistency("2 T_-1 + U0 differs from x' Delta")
    inv_lead = lead.inverse()
    drift = U1 - xpp / xp
    for m in range(-1, M):
        acc = drift * T[m] + T[m].derivative()
        for j in range(0, m + 1):
            acc = acc + T[j] * T[m - j]
        v = V.get(m + 2)
        if v is not None:
            acc = acc + v
        T[m + 1] = -acc * inv_lead
    return RiccatiExpansion(branch, T, {"U0": U0, "U1": U1, **{f"V{k}": v for k, v in V.items()}})


@dataclass
class SplitS:
    """S_m(x) = A(x) + B(x) sqrt(Q0(x)) on the first sheet."""

    m: int
    A: RationalFunction
    B: RationalFunction


def even_odd_split(Tm: RationalFunction, curve, m: int = None) -> SplitS:
    """Split T_m/x' into conjugation-even and -odd parts and descend both to x."""
    f = Tm / curve.xprime
    fs = substitute(f, curve.sigma)
    even = (f + fs) / 2
    odd = (f - fs) / 2
    A = descend_to_x(even, curve.x, curve.sigma)
    B = descend_to_x(odd * 2 / curve.delta, curve.x, curve.sigma)
    back = substitute(A.with_var(curve.var), curve.x) + substitute(B.with_var(curve.var), curve.x) * curve.delta / 2
    if back != f:
        raise InternalInconsistency("even/odd split does not reassemble")
    return SplitS(m, A, B)


class GIntegralTable:
    """G_{g,n}(z0; z1..z_{n-1}) = W_{g,n} with trailing variables integrated over [z] - sum nu_beta [beta]."""

    def __init__(self, curve, weights: DivisorWeights, engine=None):
        self.curve = curve
        self.weights = weights
        self.engine = engine or engine_for(curve)
        self._prim = {}
        self._one = {}
        self._diag = {}

    def primitive(self, label) -> RationalFunction:
        """Divisor integral of one label: F(z) - sum nu_beta F(beta)."""
        out = self._prim.get(label)
        if out is None:
            ad = antiderivative(label_rf(label, self.curve.var))
            if any(c for _, c in ad.logs):
                raise InternalInconsistency(f"label {label} has a logarithmic primitive")
            F = ad.rational
            out = F
            for beta, v in self.weights.items():
                if v:
                    out = out - limit_at(F, beta) * v
            self._prim[label] = out
        return out

    def one_form(self, label) -> RationalFunction:
        out = self._one.get(label)
        if out is None:
            out = self._one[label] = label_rf(label, self.curve.var)
        return out

    def diagonal(self, g: int, n: int) -> RationalFunction:
        """G_{g,n}(z, z, ..., z)."""
        key = (g, n)
        if key in self._diag:
            return self._diag[key]
        W = self.engine.W(g, n)
        z = self.curve.var
        acc = RationalFunction.const(0, z)
        for M, c in W.terms.items():
            for l0 in set(M):
                J = _sub_multiset(M, (l0,))
                counts = [J.count(lab) for lab in set(J)]
                term = self.one_form(l0) * (c * multinomial(counts))
                for lab in J:
                    term = term * self.primitive(lab)
                acc = acc + term
        self._diag[key] = acc
        return acc

    def first_slot(self, g: int, n: int):
        """J -> sum_l0 c e_l0(z0), grouping by the trailing labels."""
        W = self.engine.W(g, n)
        out = {}
        for M, c in W.terms.items():
            for l0 in set(M):
                J = _sub_multiset(M, (l0,))
                f = self.one_form(l0) * c
                out[J] = out[J] + f if J in out else f
        return out

    def antisymmetric(self, g: int, n: int) -> bool:
        """G(sigma z0, ...) = -G(z0, ...) for 2g + n >= 3."""
        sig = self.curve.sigma
        sp = sig.derivative()
        return all(substitute(f, sig) * sp == -f for f in self.first_slot(g, n).values())

    def g02(self, z0, z1):
        """Closed form 1/(z0 - z1) - sum nu_beta/(z0 - beta) at exact points."""
        acc = 1 / (Fraction(z0) - z1)
        for beta, v in self.weights.items():
            if beta is not INF and v:
                acc -= v / (Fraction(z0) - beta)
        return acc


def t_hat(curve, weights: DivisorWeights, m: int, table: GIntegralTable = None) -> RationalFunction:
    """T-hat_m from correlation differentials."""
    z = RationalFunction.gen(curve.var)
    if m == -1:
        return curve.y * curve.xprime
    if m == 0:
        sig = curve.sigma
        acc = (z - sig).inverse()
        for beta, v in weights.items():
            sb = curve.point_image(beta)
            if sb is not INF and v:
                acc = acc - (z - sb).inverse() * v
        return -acc
    table = table or GIntegralTable(curve, weights)
    acc = RationalFunction.const(0, curve.var)
    for g in range(0, m // 2 + 2):
        n = m + 2 - 2 * g
        if n < 1:
            continue
        acc = acc + table.diagonal(g, n) / factorial(n - 1)
    return acc


def decay_orders(curve, exp: RiccatiExpansion):
    """(ord_0 T_m, ord_oo T_m) for m >= 1."""
    return {m: (order_at(T, Fraction(0)), order_at(T, INF)) for m, T in exp.T.items() if m >= 1 and T}


def verify_thm31(curve, M: int = 3, weights=None):
    """T_m == T-hat_m for -1 <= m <= M; returns list of (m, ok)."""
    weights = weights or DivisorWeights.default(curve)
    qc = quantize(curve, weights)
    exp = riccati_expand(qc, curve, M)
    table = GIntegralTable(curve, weights)
    return [(m, exp.T[m] == t_hat(curve, weights, m, table)) for m in range(-1, M + 1)]
