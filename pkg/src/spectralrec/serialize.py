"""Exact JSON encoding of the library's objects.

Rationals are strings ``"p/q"``, polynomials are exponent -> coefficient maps
and every composite object carries a ``"type"`` tag so ``decode`` can rebuild
it.  ``canonical`` gives the byte-stable form used by the on-disk cache.
"""

import json
from fractions import Fraction

from .exact import INF, LogPolynomial, Polynomial, RationalFunction, as_point, point_str
from .quantize import DivisorWeights, QuantumCurve, SLPotential
from .toprec import FreeEnergy, MultiDifferential
from .voros import VorosSeries
from .wkb import RiccatiExpansion


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# -- scalars and functions ------------------------------------------------------------


def enc_scalar(v):
    if isinstance(v, int) and not isinstance(v, bool):
        v = Fraction(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, RationalFunction):
        return enc_ratfunc(v)
    if isinstance(v, Polynomial):
        return enc_poly(v)
    raise TypeError(f"cannot encode scalar {v!r}")


def dec_scalar(d):
    if isinstance(d, str):
        return Fraction(d)
    if d.get("type") == "ratfunc":
        return dec_ratfunc(d)
    if d.get("type") == "poly":
        return dec_poly(d)
    raise ValueError(f"unknown scalar payload {d!r}")


def enc_poly(p: Polynomial):
    return {
        "type": "poly",
        "var": p.var,
        "coeffs": {str(k): enc_scalar(c) for k, c in enumerate(p.c) if c},
    }


def dec_poly(d) -> Polynomial:
    items = {int(k): dec_scalar(v) for k, v in d["coeffs"].items()}
    n = max(items) + 1 if items else 0
    return Polynomial([items.get(k, Fraction(0)) for k in range(n)], d["var"])


def enc_ratfunc(f: RationalFunction):
    return {"type": "ratfunc", "num": enc_poly(f.num), "den": enc_poly(f.den)}


def dec_ratfunc(d) -> RationalFunction:
    return RationalFunction(dec_poly(d["num"]), dec_poly(d["den"]))


def enc_point(p):
    return point_str(p) if p is INF else str(p)


def dec_point(s):
    return as_point(s)


def enc_logpoly(lp: LogPolynomial):
    return {"type": "logpoly", "coeffs": [enc_ratfunc(c) for c in lp.c]}


def dec_logpoly(d) -> LogPolynomial:
    return LogPolynomial([dec_ratfunc(c) for c in d["coeffs"]])


# -- composite objects --------------------------------------------------------------


def enc_multidiff(w: MultiDifferential):
    out = {"type": "multidiff", "n": w.n, "g": w.g, "kind": w.kind, "variables": w.variables}
    if w.kind == "ydx":
        out["rf"] = enc_ratfunc(w.rf)
    elif w.kind == "poles":
        out["terms"] = [
            {"labels": [[enc_point(p), k] for p, k in key], "coeff": enc_scalar(c)} for key, c in w.terms.items()
        ]
    return out


def dec_multidiff(d) -> MultiDifferential:
    if d["kind"] == "ydx":
        return MultiDifferential.ydx(dec_ratfunc(d["rf"]))
    if d["kind"] == "bergman":
        return MultiDifferential.bergman()
    terms = {tuple((dec_point(p), k) for p, k in t["labels"]): dec_scalar(t["coeff"]) for t in d["terms"]}
    return MultiDifferential(d["n"], terms, g=d["g"])


def enc_free_energy(F: FreeEnergy):
    return {"type": "free_energy", "g": F.g, "value": enc_scalar(F.value), "lambda_exponent": F.exponent}


def dec_free_energy(d) -> FreeEnergy:
    return FreeEnergy(d["g"], dec_scalar(d["value"]))


def enc_weights(w: DivisorWeights):
    return [[enc_point(b), enc_scalar(v)] for b, v in w.items()]


def dec_weights(d) -> DivisorWeights:
    return DivisorWeights({dec_point(b): dec_scalar(v) for b, v in d})


def enc_quantum_curve(qc: QuantumCurve):
    out = {"type": "quantum_curve"}
    for k in ("q0", "q1", "r0", "r1", "r2"):
        out[k] = enc_ratfunc(getattr(qc, k))
    out["weights"] = enc_weights(qc.weights) if qc.weights else None
    return out


def dec_quantum_curve(d) -> QuantumCurve:
    parts = {k: dec_ratfunc(d[k]) for k in ("q0", "q1", "r0", "r1", "r2")}
    w = dec_weights(d["weights"]) if d.get("weights") else None
    return QuantumCurve(weights=w, **parts)


def enc_sl(Q: SLPotential):
    return {"type": "sl_potential", "Q": [enc_ratfunc(c) for c in Q.coeffs()]}


def dec_sl(d) -> SLPotential:
    return SLPotential(*[dec_ratfunc(c) for c in d["Q"]])


def enc_voros(vs: VorosSeries):
    return {
        "type": "voros",
        "nu": None if vs.nu is None else enc_scalar(Fraction(vs.nu)),
        "coeffs": {str(m): enc_scalar(v) for m, v in vs.coeffs.items()},
        "lambda_exponents": {str(m): -m for m in vs.coeffs},
        "head": [enc_logpoly(h) for h in vs.head] if vs.head else None,
        "source": vs.source,
    }


def dec_voros(d) -> VorosSeries:
    head = tuple(dec_logpoly(h) for h in d["head"]) if d.get("head") else None
    nu = None if d["nu"] is None else Fraction(d["nu"])
    return VorosSeries({int(m): dec_scalar(v) for m, v in d["coeffs"].items()}, nu, head, d.get("source", "integral"))


def enc_riccati(e: RiccatiExpansion):
    return {"type": "riccati", "branch": e.branch, "T": {str(m): enc_ratfunc(t) for m, t in e.T.items()}}


def dec_riccati(d) -> RiccatiExpansion:
    return RiccatiExpansion(d["branch"], {int(m): dec_ratfunc(t) for m, t in d["T"].items()})


_ENCODERS = [
    (MultiDifferential, enc_multidiff),
    (FreeEnergy, enc_free_energy),
    (QuantumCurve, enc_quantum_curve),
    (SLPotential, enc_sl),
    (VorosSeries, enc_voros),
    (RiccatiExpansion, enc_riccati),
    (LogPolynomial, enc_logpoly),
    (RationalFunction, enc_ratfunc),
    (Polynomial, enc_poly),
]

_DECODERS = {
    "multidiff": dec_multidiff,
    "free_energy": dec_free_energy,
    "quantum_curve": dec_quantum_curve,
    "sl_potential": dec_sl,
    "voros": dec_voros,
    "riccati": dec_riccati,
    "logpoly": dec_logpoly,
    "ratfunc": dec_ratfunc,
    "poly": dec_poly,
}


def encode(obj):
    for cls, fn in _ENCODERS:
        if isinstance(obj, cls):
            return fn(obj)
    return enc_scalar(obj)


def decode(d):
    if isinstance(d, str):
        return dec_scalar(d)
    return _DECODERS[d["type"]](d)


def dumps(obj) -> str:
    return canonical(encode(obj))


def loads(text: str):
    return decode(json.loads(text))
