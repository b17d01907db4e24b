"""Bergman kernel, recursion kernel and the structural checks on W_{g,n}."""

from dataclasses import dataclass
from fractions import Fraction

from ..exact import point_str, substitute
from .engine import TopologicalRecursion, _sub_multiset, engine_for, refuse_ineffective
from .multidiff import MultiDifferential, label_rf, rf_to_labels


def bergman() -> MultiDifferential:
    """dz0 dz1/(z0 - z1)^2."""
    return MultiDifferential.bergman()


class RecursionKernel:
    """k(z0, z) = [1/(z0 - z) - 1/(z0 - sigma(z))] / (2 Delta(z) x'(z)); K = k dz0/dz."""

    def __init__(self, curve, r):
        refuse_ineffective(curve, r)
        self.curve = curve
        self.r = r
        self.sigma = curve.sigma
        self.weight = (curve.delta * curve.xprime * 2).inverse()

    def __call__(self, z0, z):
        z0, z = Fraction(z0), Fraction(z)
        return (1 / (z0 - z) - 1 / (z0 - self.sigma(z))) * self.weight(z)

    def text(self) -> str:
        return f"(1/(z0 - z) - 1/(z0 - ({self.sigma}))) * ({self.weight})"

    def __str__(self):
        return self.text()


def recursion_kernel(curve, r) -> RecursionKernel:
    return RecursionKernel(curve, r)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def pullback_label(curve, label):
    """sigma^* of a label one-form, as a label dictionary."""
    f = substitute(label_rf(label, curve.var), curve.sigma) * curve.sigma.derivative()
    return rf_to_labels(f)


def reflection_defect(curve, W: MultiDifferential):
    """Label dictionary of W(z1, ...) + W(sigma z1, ...); empty when the identity holds."""
    pulled = {}
    out = {}
    for M, c in W.terms.items():
        for lab in set(M):
            J = _sub_multiset(M, (lab,))
            if lab not in pulled:
                pulled[lab] = pullback_label(curve, lab)
            for lab2, c2 in [(lab, Fraction(1))] + list(pulled[lab].items()):
                key = (lab2, J)
                out[key] = out.get(key, Fraction(0)) + c * c2
    return {k: v for k, v in out.items() if v}


def bergman_reflection_ok(curve, samples=9) -> bool:
    """B(z0, z1) + B(sigma z0, z1) = dx dx/(x - x)^2 on a grid of exact points."""
    sig, x, xp = curve.sigma, curve.x, curve.xprime
    sp = sig.derivative()
    pts = [Fraction(k + 2, 3 * k + 7) for k in range(samples)] + [Fraction(-7 - k, 5) for k in range(samples)]
    for a in pts:
        for b in pts:
            if a == b or sig(a) == b:
                continue
            lhs = 1 / (a - b) ** 2 + sp(a) / (sig(a) - b) ** 2
            rhs = xp(a) * xp(b) / (x(a) - x(b)) ** 2
            if lhs != rhs:
                return False
    return True


def check_properties(curve, max_total: int = 6, engine=None):
    """Symmetry, pole, reflection, ineffective-point and classification checks."""
    eng = engine or engine_for(curve, cap=max(9, max_total))
    checks = []
    for rp in curve.ramification:
        state = "effective" if rp.effective else "ineffective"
        checks.append(Check(f"{point_str(rp.location)} {state}", True, f"ord(Delta dx) = {rp.order}"))
    checks.append(Check("bergman symmetric", bergman().evaluate([Fraction(2), Fraction(5)]) == bergman().evaluate([Fraction(5), Fraction(2)])))
    checks.append(Check("bergman reflection", bergman_reflection_ok(curve)))
    keys = [(g, n) for g in range(max_total) for n in range(1, max_total + 1) if 3 <= 2 * g + n <= max_total]
    star = set(curve.R_star)
    for g, n in keys:
        W = eng.W(g, n)  # symmetry is asserted inside the engine
        checks.append(Check(f"W_{g},{n} symmetric", True, f"{len(W)} terms"))
        bad = [p for p in W.poles() if p not in star]
        checks.append(Check(f"W_{g},{n} poles in R*", not bad, ", ".join(point_str(p) for p in bad)))
        checks.append(Check(f"W_{g},{n} residue-free", not W.has_residue_labels()))
        defect = reflection_defect(curve, W)
        checks.append(Check(f"W_{g},{n} reflection", not defect, f"{len(defect)} nonzero coefficients" if defect else ""))
    if curve.ineffective:
        full = TopologicalRecursion(curve, cap=eng.cap, include_ineffective=True)
        same = all(full.W(g, n) == eng.W(g, n) for g, n in keys)
        pts = ", ".join(point_str(r) for r in curve.ineffective)
        checks.append(Check(f"ineffective points {{{pts}}} contribute nothing", same))
    return checks


def homogeneity_checks(keys=((0, 3), (1, 1))):
    """Weber at lam = 1 rescaled by lam^(2-2g-n) against the lam = 4 curve."""
    from ..curvedsl import weber

    w1, w4 = weber(), weber(4)
    e1, e4 = engine_for(w1), engine_for(w4)
    out = []
    for g, n in keys:
        scale = Fraction(4) ** (2 - 2 * g - n)
        a = e1.W(g, n)
        b = e4.W(g, n)
        scaled = MultiDifferential(n, {k: c * scale for k, c in a.terms.items()})
        out.append(Check(f"W_{g},{n} homogeneity", scaled == b))
    return out


__all__ = [
    "Check", "RecursionKernel", "bergman", "bergman_reflection_ok", "check_properties",
    "homogeneity_checks", "pullback_label", "recursion_kernel", "reflection_defect",
]
