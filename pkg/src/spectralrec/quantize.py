"""Quantum curves: the operator hbar^2 d^2/dx^2 + q hbar d/dx + r built from a spectral curve.

The corrections q1, r1, r2 are first assembled as rational functions of z
from Delta, the conjugate map and the divisor weights, then descended to the
x-line.  Terms attached to a divisor point at infinity vanish.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .curvedsl.descent import descend_to_x
from .errors import DescentFailure, NotSigmaInvariant
from .exact import INF, RationalFunction, nu_symbol, point_key, point_str, substitute


@dataclass
class DivisorWeights:
    """beta -> nu_beta on the divisor set B; the weights sum to one."""

    weights: dict

    def __post_init__(self):
        total = sum(self.weights.values(), Fraction(0))
        if total != 1:
            raise ValueError(f"divisor weights must sum to 1, got {total}")

    @classmethod
    def default(cls, curve, nu=None):
        """Forced weight for |B| = 1; for B = {beta, sigma beta} use nu = nu_sigma(beta) - nu_beta.

        ``nu=None`` keeps nu symbolic.
        """
        B = curve.singular_data.B
        if len(B) == 1:
            return cls({B[0]: Fraction(1)})
        if len(B) == 2 and curve.point_image(B[0]) == B[1]:
            v = nu_symbol() if nu is None else Fraction(nu)
            return cls({B[0]: (1 - v) / 2, B[1]: (1 + v) / 2})
        raise ValueError(f"B has {len(B)} points; pass explicit weights")

    def __getitem__(self, beta):
        return self.weights[beta]

    def items(self):
        return sorted(self.weights.items(), key=lambda kv: point_key(kv[0]))

    def swapped(self, curve):
        """Exchange nu_beta and nu_sigma(beta)."""
        return DivisorWeights({curve.point_image(b): v for b, v in self.weights.items()})

    def text(self) -> str:
        return ", ".join(f"nu_{point_str(b)} = {v}" for b, v in self.items())


@dataclass
class QuantumCurve:
    """Coefficients of hbar^2 d^2/dx^2 + (q0 + hbar q1) hbar d/dx + (r0 + hbar r1 + hbar^2 r2)."""

    q0: RationalFunction
    q1: RationalFunction
    r0: RationalFunction
    r1: RationalFunction
    r2: RationalFunction
    weights: DivisorWeights = None
    # z-chart data: U = x' q(x(z)), V = x'^2 r(x(z))
    chart: dict = field(default_factory=dict, repr=False)

    @property
    def q(self):
        return (self.q0, self.q1)

    @property
    def r(self):
        return (self.r0, self.r1, self.r2)

    def operator_text(self) -> str:
        parts = ["hbar^2*d^2/dx^2"]
        qt = _hbar_sum([(self.q0, 0), (self.q1, 1)])
        if qt:
            parts.append(f"({qt})*hbar*d/dx")
        rt = _hbar_sum([(self.r0, 0), (self.r1, 1), (self.r2, 2)])
        if rt:
            parts.append(f"({rt})")
        return " + ".join(parts)

    def as_dict(self):
        return {k: str(getattr(self, k)) for k in ("q0", "q1", "r0", "r1", "r2")}


def _hbar_sum(items):
    out = []
    for f, k in items:
        if not f:
            continue
        h = "" if k == 0 else ("hbar" if k == 1 else f"hbar^{k}")
        s = str(f)
        if h:
            if s == "1":
                s = h
            elif s.startswith("(") and s.endswith(")") and s.count("(") == 1:
                s = f"{s}*{h}"
            else:
                s = f"({s})*{h}"
        out.append(s)
    return " + ".join(out)


def _sum_over(points, coeff_of, z):
    """sum of coeff(beta)/(z - beta) over finite beta; infinite beta contributes 0."""
    acc = RationalFunction.const(0, z.var)
    for beta in points:
        if beta is INF:
            continue
        c = coeff_of(beta)
        if c:
            acc = acc + (z - beta).inverse() * c
    return acc


def _descend(f, curve, name):
    try:
        return descend_to_x(f, curve.x, curve.sigma)
    except (NotSigmaInvariant, DescentFailure) as e:
        raise DescentFailure(f"{name} does not descend to a rational function of x: {e}") from e


def quantize(curve, weights: DivisorWeights = None) -> QuantumCurve:
    """Quantum curve for the divisor [z] - sum nu_beta [beta]."""
    sd = curve.singular_data
    weights = weights or DivisorWeights.default(curve)
    if set(weights.weights) != set(sd.B):
        raise ValueError("weights must be given on exactly the divisor set B")
    z = RationalFunction.gen(curve.var)
    sig = curve.sigma
    xp, D = curve.xprime, curve.delta
    nu = weights.weights

    def nsig(b):
        return nu[curve.point_image(b)]

    U1 = -D.derivative() / D + (z - sig).inverse() * 2 - _sum_over(sd.B, lambda b: nu[b] + nsig(b), z)
    q1_z = U1 / xp
    q0_z = curve.q0_z
    xr1 = (
        q0_z.derivative() / 2
        + xp * q0_z * q1_z / 2
        + D * _sum_over(sd.B, lambda b: nu[b] - nsig(b), z) / 2
    )
    r1_z = xr1 / xp
    xr2 = D * _sum_over(sd.B1, lambda b: nu[b] * nsig(b) / sd.C[b], z)
    r2_z = xr2 / xp
    q1 = _descend(q1_z, curve, "q1")
    r1 = _descend(r1_z, curve, "r1")
    r2 = _descend(r2_z, curve, "r2")
    chart = {
        "U0": xp * q0_z,
        "U1": U1,
        "V0": xp * xp * curve.r0_z,
        "V1": xp * xr1,
        "V2": xp * xr2,
    }
    return QuantumCurve(curve.q0, q1, curve.r0, r1, r2, weights, chart)


@dataclass
class SLPotential:
    """Q(x, hbar) = Q0 + hbar Q1 + hbar^2 Q2; psi'' = hbar^-2 Q psi after removing the first-order term."""

    Q0: RationalFunction
    Q1: RationalFunction
    Q2: RationalFunction

    def coeffs(self):
        return (self.Q0, self.Q1, self.Q2)

    def text(self) -> str:
        return _hbar_sum([(self.Q0, 0), (self.Q1, 1), (self.Q2, 2)]) or "0"


def sl_form(qc: QuantumCurve) -> SLPotential:
    """Q = q^2/4 - r + (hbar/2) dq/dx expanded through hbar^2."""
    q0, q1 = qc.q0, qc.q1
    Q0 = q0 * q0 / 4 - qc.r0
    Q1 = q0 * q1 / 2 - qc.r1 + q0.derivative() / 2
    Q2 = q1 * q1 / 4 - qc.r2 + q1.derivative() / 2
    return SLPotential(Q0, Q1, Q2)


def u1_identity(curve, qc: QuantumCurve) -> bool:
    """x' q1 = -Delta'/Delta + G02(sigma z, z) + G02(z, sigma z) with the same weights.

    G02 is a one-form in its first slot, so the sigma z slot carries sigma'(z).
    """
    z = RationalFunction.gen(curve.var)
    sig = curve.sigma
    nu = qc.weights.weights

    def G02(a, b):
        acc = (a - b).inverse()
        for beta, v in nu.items():
            if beta is not INF and v:
                acc = acc - (a - beta).inverse() * v
        return acc

    rhs = -curve.delta.derivative() / curve.delta + G02(sig, z) * sig.derivative() + G02(z, sig)
    return substitute(qc.q1, curve.x) * curve.xprime == rhs


def sigma_invariance_report(curve, qc: QuantumCurve):
    """The right sides divided by x' are conjugation invariant (descent precondition)."""
    out = {}
    xp = curve.xprime
    for name, key, pw in (("q1", "U1", 1), ("r1", "V1", 2), ("r2", "V2", 2)):
        f = qc.chart[key] / xp ** pw
        out[name] = substitute(f, curve.sigma) == f
    return out
