"""Validated genus-0 spectral curves with deg x = 2.

A ``CurveModel`` bundles the parametrization, the conjugate involution,
ramification data and (lazily) the singular-set data that the quantum-curve
construction needs.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from random import Random

from ..errors import CurveRejected, InternalInconsistency, NonSplitDenominator
from ..exact import (
    INF,
    Polynomial,
    RationalFunction,
    apply_map,
    laurent_expand,
    order_at,
    point_key,
    point_str,
    preimages,
    rational_roots,
    residue_at,
    substitute,
)
from .descent import descend_to_x
from .parser import parse_statements

XVAR = "x"


@dataclass(frozen=True)
class RamPoint:
    location: object  # Fraction or INF
    kind: str  # "zero-of-dx" or "double-pole-of-x"
    effective: bool
    order: int  # ord of (y - y o sigma) dx at the point

    def __str__(self):
        flag = "effective" if self.effective else "ineffective"
        return f"{point_str(self.location)} ({self.kind}, {flag}, ord Δdx = {self.order})"


@dataclass(frozen=True)
class SingularData:
    sing: tuple  # points of the x-plane
    sing2: tuple
    B: tuple  # points of the z-plane
    B1: tuple
    C: dict  # beta -> Res_beta (Δ dx)
    rho: dict  # x0 -> index for every pole/zero of Q0 and infinity


def differential_order(f: RationalFunction, p) -> int:
    """Order of the differential f(z) dz at p (the chart w = 1/z at infinity)."""
    if not f:
        raise ValueError("order of the zero differential")
    return order_at(f, p) - 2 if p is INF else order_at(f, p)


def conjugate_map(x: RationalFunction) -> RationalFunction:
    """The global involution with x o sigma = x for a degree-two x."""
    N, D = x.num, x.den
    if max(N.degree, D.degree) != 2:
        raise CurveRejected("(AQ1)", "degree of x(z) is not two")
    n = [N.coeff(i) for i in range(3)]
    d = [D.coeff(i) for i in range(3)]

    def c(i, j):
        return n[i] * d[j] - n[j] * d[i]

    # N(z)D(w) - N(w)D(z) = (z - w) * L(z, w) with L bilinear; sigma solves L(z, .) = 0
    c01, c02, c12 = c(0, 1), c(0, 2), c(1, 2)
    sigma = RationalFunction(Polynomial([-c01, -c02], x.var), Polynomial([c02, c12], x.var))
    z = RationalFunction.gen(x.var)
    if sigma.num.degree > 1 or sigma.den.degree > 1 or sigma == z:
        raise InternalInconsistency("conjugate cofactor is not bilinear")
    if substitute(sigma, sigma) != z:
        raise InternalInconsistency("conjugate map is not an involution")
    if substitute(x, sigma) != x:
        raise InternalInconsistency("conjugate map does not preserve x")
    return sigma


def fixed_points(sigma: RationalFunction):
    """Fixed points of a Mobius involution (z -> (a z + b)/(c z + d))."""
    b, a = sigma.num.coeff(0), sigma.num.coeff(1)
    d, c = sigma.den.coeff(0), sigma.den.coeff(1)
    # c z^2 + (d - a) z - b = 0
    quad = Polynomial([-b, d - a, c], sigma.var)
    pts = []
    if quad.degree == 2:
        roots = rational_roots(quad)
        if sum(m for _, m in roots) != 2:
            raise NonSplitDenominator("ramification points are not rational")
        pts = [r for r, m in roots for _ in range(m)]
    elif quad.degree == 1:
        pts = [-quad.coeff(0) / quad.coeff(1), INF]
    else:
        raise InternalInconsistency("conjugate map has no isolated fixed points")
    if len(set(pts)) != 2:
        raise CurveRejected("(A3)", "ramification point is not simple")
    return sorted(pts, key=point_key)


class CurveModel:
    """A validated spectral curve; construct with ``CurveModel.from_xy`` or ``parse_curve``."""

    def __init__(self, x, y, tag="custom", homogeneity=None, source=None, check=True):
        self.x = x
        self.y = y
        self.tag = tag
        self.var = x.var
        self.homogeneity = homogeneity  # lam-restoration metadata for built-ins
        self.source = source
        self.sigma = conjugate_map(x)
        self.xprime = x.derivative()
        self.y_sigma = substitute(y, self.sigma)
        self.delta = y - self.y_sigma
        if not self.delta:
            raise CurveRejected("(A1)", "y(z) is invariant under the conjugate map, so C(x, y) != C(z)")
        self.delta_dx = self.delta * self.xprime
        self.R = tuple(fixed_points(self.sigma))
        self.ramification = tuple(self._classify(r) for r in self.R)
        self.R_star = tuple(r.location for r in self.ramification if r.effective)
        self.q0_z = -(y + self.y_sigma)
        self.r0_z = y * self.y_sigma
        self.q0 = descend_to_x(self.q0_z, self.x, self.sigma, XVAR)
        self.r0 = descend_to_x(self.r0_z, self.x, self.sigma, XVAR)
        self.P = self._defining_polynomial()
        if check:
            self.validate()

    # -- construction ------------------------------------------------------------

    @classmethod
    def from_xy(cls, x, y, tag="custom", homogeneity=None):
        return cls(x, y, tag=tag, homogeneity=homogeneity)

    def _classify(self, r) -> RamPoint:
        xr = apply_map(self.x, r)
        kind = "double-pole-of-x" if xr is INF else "zero-of-dx"
        o = differential_order(self.delta_dx, r)
        eff = o >= 0
        if not eff and o > -2:
            raise InternalInconsistency(f"ineffective ramification point {point_str(r)} with ord Δdx = {o}")
        return RamPoint(r, kind, eff, o)

    def _defining_polynomial(self):
        """p0 y^2 + p1 y + p2 with p0 monic: clear denominators of y^2 + q0 y + r0."""
        den = self.q0.den
        g = _lcm(den, self.r0.den)
        p0 = g
        p1 = (self.q0 * RationalFunction(g, _normalized=True)).num
        p2 = (self.r0 * RationalFunction(g, _normalized=True)).num
        return (p0, p1, p2)

    # -- validation ----------------------------------------------------------------

    def validate(self):
        z = self.var
        # dx and dy must not vanish together
        dy = self.y.derivative()
        for r in self.R:
            if apply_map(self.x, r) is not INF and dy and differential_order(dy, r) >= 1:
                raise CurveRejected("(Def)", f"dx and dy vanish simultaneously at z = {point_str(r)}", [r])
        # (A2)
        for rp in self.ramification:
            if rp.kind != "double-pole-of-x":
                continue
            Y = -(self.x * self.x) * self.y
            if not Y:
                continue
            if rp.location is INF:
                ordY = order_at(Y, INF)
            else:
                ordY = order_at(Y, rp.location)
            if ordY >= 0:
                ser = laurent_expand(Y, rp.location, 1)
                if not ser.coeff(1):
                    raise CurveRejected("(A2)", f"dY vanishes at the ramification point {point_str(rp.location)}", [rp.location])
        # (A4)
        branch = [apply_map(self.x, r) for r in self.R]
        if len(set(branch)) != len(branch):
            raise CurveRejected("(A4)", "branch points are not distinct")
        # (AQ2): zeros of Δ dx off R
        witness = []
        num = self.delta_dx.num
        for r in self.R:
            if r is INF:
                continue
            lin = Polynomial([-r, 1], z)
            while num.degree > 0 and not num(r):
                num = num.exact_div(lin)
        if num.degree > 0:
            try:
                witness = [p for p, _ in rational_roots(num)]
            except NonSplitDenominator:
                witness = []
            if not witness:
                witness = ["irrational zero"]
        if INF not in self.R and differential_order(self.delta_dx, INF) > 0:
            witness.append(INF)
        if witness:
            pts = ", ".join(f"z={point_str(w)}" if w is INF or isinstance(w, Fraction) else str(w) for w in witness)
            raise CurveRejected("(AQ2)", f"Δ·dx vanishes off R (witness {pts})", witness)

    # -- derived data --------------------------------------------------------------

    @cached_property
    def Q0(self) -> RationalFunction:
        return self.q0 * self.q0 / 4 - self.r0

    def index_rho(self, x0) -> int:
        return index_rho(self.Q0, x0)

    @cached_property
    def singular_data(self) -> SingularData:
        return singular_sets(self)

    @property
    def ineffective(self):
        return tuple(r.location for r in self.ramification if not r.effective)

    def point_image(self, p):
        return apply_map(self.sigma, p)

    def x_at(self, p):
        return apply_map(self.x, p)

    @property
    def curve_id(self) -> str:
        return f"x = {self.x}; y = {self.y}"

    def to_text(self) -> str:
        return f"# {self.tag} spectral curve\nx = {self.x};\ny = {self.y};\n"

    def P_text(self) -> str:
        p0, p1, p2 = self.P
        parts = []
        for poly, ytxt in ((p0, "y^2"), (p1, "y"), (p2, "")):
            if not poly:
                continue
            ptxt = str(poly)
            if ytxt:
                if ptxt == "1":
                    parts.append(ytxt)
                elif ptxt == "-1":
                    parts.append(f"-{ytxt}")
                elif sum(1 for v in poly.c if v) > 1:
                    parts.append(f"({ptxt})*{ytxt}")
                else:
                    parts.append(f"{ptxt}*{ytxt}")
            else:
                parts.append(ptxt)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __eq__(self, other):
        if not isinstance(other, CurveModel):
            return NotImplemented
        return (
            self.x == other.x
            and self.y == other.y
            and self.sigma == other.sigma
            and self.P == other.P
            and self.ramification == other.ramification
        )

    def __hash__(self):
        return hash(self.curve_id)

    def __repr__(self):
        return f"CurveModel({self.tag}: {self.curve_id})"

    def describe(self) -> str:
        lines = [
            f"curve: {self.tag}",
            f"x(z) = {self.x}",
            f"y(z) = {self.y}",
            f"P(x, y) = {self.P_text()}",
            f"sigma(z) = {self.sigma}",
            "R = {" + ", ".join(point_str(r) for r in self.R) + "}",
            "R* = {" + ", ".join(point_str(r) for r in self.R_star) + "}",
        ]
        for rp in self.ramification:
            lines.append(f"  ramification point {rp}")
        return "\n".join(lines)


def _lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    from ..exact import poly_gcd

    return (a * b).exact_div(poly_gcd(a, b)).monic()


def index_rho(Q0: RationalFunction, x0) -> int:
    """ord of Q0 at a finite x0; at infinity, ord_0 of Q0(1/x)/x^4."""
    if x0 is INF:
        return order_at(Q0, INF) - 4
    return order_at(Q0, x0)


def singular_sets(curve: CurveModel) -> SingularData:
    Q0 = curve.Q0
    pts = []
    for poly in (Q0.num, Q0.den):
        if poly.degree > 0:
            roots = rational_roots(poly)
            if sum(m for _, m in roots) != poly.degree:
                raise NonSplitDenominator("Q0 has irrational zeros or poles")
            pts.extend(r for r, _ in roots)
    pts = sorted(set(pts), key=point_key) + [INF]
    rho = {p: index_rho(Q0, p) for p in pts}
    sing = tuple(p for p in pts if rho[p] <= -2)
    sing2 = tuple(p for p in pts if rho[p] == -2)

    def fiber(b):
        return sorted({p for p, _ in preimages(curve.x, b)}, key=point_key)

    B = tuple(sorted({p for b in sing for p in fiber(b)}, key=point_key))
    B1 = tuple(sorted({p for b in sing2 for p in fiber(b)}, key=point_key))
    for b in B1:
        if b in curve.R:
            raise InternalInconsistency(f"Sing2 at a ramification point {point_str(b)}")
    C = {b: residue_at(curve.delta_dx, b) for b in B1}
    data = SingularData(sing, sing2, B, B1, C, rho)
    _cross_check(curve, data)
    return data


def pole_set(f: RationalFunction):
    """Poles of the differential f dz as (point, order)."""
    out = []
    if f.den.degree > 0:
        for r, _ in rational_roots(f.den):
            out.append((r, -differential_order(f, r)))
    o = differential_order(f, INF)
    if o < 0:
        out.append((INF, -o))
    return sorted(out, key=lambda t: point_key(t[0]))


def _cross_check(curve, data: SingularData):
    poles = pole_set(curve.delta_dx)
    if tuple(p for p, _ in poles) != data.B:
        raise InternalInconsistency(f"B = {data.B} differs from the pole set of Δdx {poles}")
    if tuple(p for p, k in poles if k == 1) != data.B1:
        raise InternalInconsistency("B1 differs from the simple poles of Δdx")
    for b in data.B:
        if curve.point_image(b) not in data.B:
            raise InternalInconsistency("B is not closed under the conjugate map")
    for b in data.B1:
        if data.C[curve.point_image(b)] != -data.C[b]:
            raise InternalInconsistency("C_sigma(beta) != -C_beta")
        if not data.C[b]:
            raise InternalInconsistency("C_beta vanishes")


def order_formula_check(curve: CurveModel, samples: int = 20, seed: int = 7):
    """Compare ord Δdx with rho/2 off R and rho + 1 on R; returns list of mismatches."""
    rng = Random(seed)
    pts = list(curve.R) + list(curve.singular_data.B)
    while len(pts) < len(curve.R) + len(curve.singular_data.B) + samples:
        pts.append(Fraction(rng.randint(-50, 50), rng.randint(1, 13)))
    bad = []
    for a in pts:
        xa = curve.x_at(a)
        rho = curve.index_rho(xa)
        o = differential_order(curve.delta_dx, a)
        expected = rho + 1 if a in curve.R else Fraction(rho, 2)
        if o != expected:
            bad.append((a, o, expected))
    return bad


def parse_curve(text: str, tag: str = "custom") -> CurveModel:
    z = RationalFunction.gen("z")
    vals = parse_statements(text, {"z": z})
    x, y = vals["x"], vals["y"]
    x = x if isinstance(x, RationalFunction) else RationalFunction.const(x)
    y = y if isinstance(y, RationalFunction) else RationalFunction.const(y)
    if max(x.num.degree, x.den.degree) != 2:
        raise CurveRejected("(AQ1)", "degree of x(z) is not two")
    if y.is_constant():
        raise CurveRejected("(Def)", "y(z) must be a non-constant rational function")
    return CurveModel(x, y, tag=tag, source=text)


# -- built-in curves ---------------------------------------------------------------

WEBER_HOMOGENEITY = {
    "lambda": "Weber at lambda = 1; restore lambda by homogeneity",
    "W": "lam^(2-2g-n)",
    "F": "lam^(2-2g)",
    "V": "lam^(-m)",
    "q": "lam^(1/2)",
    "r": "lam",
}


def weber(lam: int = 1) -> CurveModel:
    """x = sqrt(lam)(z + 1/z), y = sqrt(lam)(z - 1/z)/2 for a perfect-square lam."""
    s = Fraction(_isqrt(lam))
    z = RationalFunction.gen("z")
    x = (z + z.inverse()) * s
    y = (z - z.inverse()) * (s / 2)
    return CurveModel(x, y, tag="weber" if lam == 1 else f"weber[lam={lam}]", homogeneity=WEBER_HOMOGENEITY)


def airy() -> CurveModel:
    z = RationalFunction.gen("z")
    return CurveModel(z * z, z, tag="airy")


def bessel() -> CurveModel:
    z = RationalFunction.gen("z")
    return CurveModel(z * z, z.inverse(), tag="bessel")


def _isqrt(n: int) -> int:
    from math import isqrt

    r = isqrt(n)
    if r * r != n:
        raise ValueError("lam must be a perfect square to keep the parametrization rational")
    return r


BUILTINS = {"weber": weber, "airy": airy, "bessel": bessel}


def builtin(name: str) -> CurveModel:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ValueError(f"unknown built-in curve {name!r}") from None


def load_curve(selector: str) -> CurveModel:
    """A built-in name or a path to a curve file."""
    if selector in BUILTINS:
        return builtin(selector)
    with open(selector, encoding="utf-8") as fh:
        text = fh.read()
    return parse_curve(text)
