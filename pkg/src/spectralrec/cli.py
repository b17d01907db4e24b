"""Command-line entry point: ``spectralrec <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 rejected input,
3 cap exceeded, 4 internal inconsistency.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import serialize
from .curvedsl import load_curve
from .errors import (
    CapExceeded,
    CurveRejected,
    CurveSyntaxError,
    DescentFailure,
    IneffectivePoint,
    InternalInconsistency,
    NotAvailable,
    NotSigmaInvariant,
    SpectralRecError,
)
from .toprec import DEFAULT_CAP, engine_for

EXIT_OK, EXIT_FAIL, EXIT_REJECT, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4

SUITES = ("thm3.1", "thm4.2", "lemma4.3", "thm4.4", "thm4.5", "thm4.6", "variational", "properties")

LAMBDA_NOTE = "λ=1"
_UNSET = object()


class Rejected(SpectralRecError):
    """Invalid job configuration."""


# -- configuration --------------------------------------------------------------------


def _nu_arg(text):
    if text == "symbolic":
        return None
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--nu takes 'symbolic' or a rational literal, not {text!r}") from None


def _common(p: argparse.ArgumentParser):
    p.add_argument("--curve", default="weber", help="weber | airy | bessel | path to a curve file")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--cap-override", type=int, default=None, metavar="CAP", help=f"raise the 2g+n cap (default {DEFAULT_CAP})")
    p.add_argument("--nu", type=_nu_arg, default=_UNSET, help="'symbolic' or a rational value")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectralrec", description="Exact topological recursion on genus-0 spectral curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wgn", help="correlation differential W_{g,n}, or a table with --gmax/--nmax")
    _common(p)
    p.add_argument("-g", type=int)
    p.add_argument("-n", type=int)
    p.add_argument("--gmax", type=int)
    p.add_argument("--nmax", type=int)

    p = sub.add_parser("free-energy", help="free energy F_g")
    _common(p)
    p.add_argument("-g", type=int)
    p.add_argument("--gmax", type=int)

    p = sub.add_parser("quantize", help="quantum curve and its Schrödinger form")
    _common(p)

    p = sub.add_parser("wkb", help="WKB coefficients T_m in the z-chart")
    _common(p)
    p.add_argument("-M", type=int, default=3)

    p = sub.add_parser("voros", help="Voros coefficients of the quantum Weber curve")
    _common(p)
    p.add_argument("-M", type=int, default=6)

    p = sub.add_parser("verify", help="run a verification suite")
    _common(p)
    p.add_argument("suite", choices=SUITES)
    p.add_argument("-M", type=int, default=None)
    p.add_argument("--gmax", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None, help="properties: largest 2g+n checked")
    return parser


def _cap(args):
    return DEFAULT_CAP if args.cap_override is None else args.cap_override


def _engine(curve, args):
    eng = engine_for(curve, cap=_cap(args))
    from .toprec.cache import load_into

    load_into(eng)
    return eng


def _persist(curve):
    from .toprec.cache import save_from

    for flag in (False, True):
        from .toprec.engine import _ENGINES

        eng = _ENGINES.get((curve.curve_id, flag))
        if eng is not None:
            save_from(eng)


def _is_weber(curve):
    from .curvedsl import weber

    return curve == weber()


def _weights(curve, args):
    from .quantize import DivisorWeights

    nu = None if args.nu is _UNSET else args.nu
    if len(curve.singular_data.B) != 2:
        if args.nu is not _UNSET:
            raise Rejected("--nu applies only when the divisor set has two conjugate points")
        return DivisorWeights.default(curve)
    return DivisorWeights.default(curve, nu)


def _nu_value(args):
    return None if args.nu is _UNSET else args.nu


# -- rendering ------------------------------------------------------------------------


def latex(text: str) -> str:
    """Best-effort LaTeX from the plain-text rendering."""
    s = text.replace("hbar^2*d^2/dx^2", r"\hbar^2\frac{d^2}{dx^2}").replace("hbar*d/dx", r"\hbar\frac{d}{dx}")
    s = re.sub(r"(?<![\w/])(\d+)/(\d+)(?![\d^])", r"\\frac{\1}{\2}", s)
    s = re.sub(r"\^(-?\d+)", r"^{\1}", s)
    s = re.sub(r"(?<!\\)\bhbar\b", r"\\hbar", s)
    s = re.sub(r"\bnu\b", r"\\nu", s)
    s = re.sub(r"\blam\b", r"\\lambda", s).replace("λ", r"\lambda")
    return s.replace("*", " ")


def _greek(text: str) -> str:
    return re.sub(r"\blam\b", "λ", text)


def _emit(args, lines, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    elif args.format == "latex":
        for line in lines:
            print(latex(line))
    else:
        for line in lines:
            print(line)


# -- commands -------------------------------------------------------------------------


def _wgn_line(curve, g, n, W):
    line = f"W[{g},{n}] = {W.text()}"
    if _is_weber(curve):
        line += f"  ({LAMBDA_NOTE}; scale by λ^{{{2 - 2 * g - n}}})"
    return line


def cmd_wgn(args, curve):
    if args.g is not None or args.n is not None:
        if args.g is None or args.n is None:
            raise Rejected("wgn needs both -g and -n, or --gmax/--nmax")
        keys = [(args.g, args.n)]
    else:
        gmax = 2 if args.gmax is None else args.gmax
        nmax = 3 if args.nmax is None else args.nmax
        keys = [(g, n) for g in range(gmax + 1) for n in range(1, nmax + 1)]
    cap = _cap(args)
    for g, n in keys:
        if g < 0 or n < 1:
            raise Rejected(f"(g, n) = ({g}, {n}) needs g >= 0 and n >= 1")
        if 2 * g + n > cap:
            raise CapExceeded(f"2g + n = {2 * g + n} exceeds the cap {cap}; raise it with --cap-override")
    eng = _engine(curve, args)
    lines, items = [], []
    for g, n in keys:
        W = eng.W(g, n)
        lines.append(_wgn_line(curve, g, n, W))
        rec = {"g": g, "n": n, "value": serialize.encode(W)}
        if _is_weber(curve):
            rec["lambda_exponent"] = 2 - 2 * g - n
        items.append(rec)
    payload = {"curve": curve.curve_id, "lambda": 1, "results": items}
    _emit(args, lines, payload)
    return EXIT_OK


def _low_genus_text(g, lp):
    return f"F[{g}] = {_greek(str(lp))}"


def cmd_free_energy(args, curve):
    from .toprec import free_energy, weber_low_genus

    if args.g is None and args.gmax is None:
        raise Rejected("free-energy needs -g or --gmax")
    gs = [args.g] if args.g is not None else list(range(2, args.gmax + 1))
    cap = _cap(args)
    for g in gs:
        if g < 0:
            raise Rejected("g must be non-negative")
        if g >= 2 and 2 * g + 1 > cap:
            raise CapExceeded(f"F_{g} needs W_{{{g},1}}: 2g + 1 = {2 * g + 1} exceeds the cap {cap}; use --cap-override")
    eng = None
    lines, items = [], []
    for g in gs:
        if g < 2:
            lp = weber_low_genus(curve)[g]
            lines.append(_low_genus_text(g, lp))
            items.append({"g": g, "value": serialize.encode(lp)})
            continue
        eng = eng or _engine(curve, args)
        F = free_energy(curve, g, engine=eng)
        exp = F.exponent
        text = str(F.value) if not _is_weber(curve) or not F.value else f"{F.value} * λ^{exp}"
        lines.append(text if len(gs) == 1 else f"F[{g}] = {text}")
        rec = serialize.encode(F)
        rec["all_R_discrepancy"] = str(F.discrepancy)
        items.append(rec)
    payload = {"curve": curve.curve_id, "lambda": 1, "results": items}
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_quantize(args, curve):
    from .quantize import quantize, sl_form

    weights = _weights(curve, args)
    qc = quantize(curve, weights)
    Q = sl_form(qc)
    lines = [
        f"operator: {qc.operator_text()}",
        f"Schrödinger form: hbar^2*d^2/dx^2 - ({Q.text()})",
        f"divisor weights: {weights.text()}",
    ]
    if _is_weber(curve):
        lines.append(f"({LAMBDA_NOTE}; restore λ by homogeneity, the ħ^1 term shifts λ to λ - ħν/2)")
    payload = {
        "curve": curve.curve_id,
        "lambda": 1,
        "quantum_curve": serialize.encode(qc),
        "sl_potential": serialize.encode(Q),
    }
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_wkb(args, curve):
    from .quantize import quantize
    from .wkb import even_odd_split, riccati_expand

    if args.M < 0:
        raise Rejected("-M must be non-negative")
    qc = quantize(curve, _weights(curve, args))
    exp = riccati_expand(qc, curve, args.M)
    lines = [f"T[{m}] = {exp.T[m]}" for m in sorted(exp.T)]
    splits = []
    for m in sorted(exp.T):
        s = even_odd_split(exp.T[m], curve, m)
        lines.append(f"S[{m}] = A + B*sqrt(Q0): A = {s.A}, B = {s.B}")
        splits.append({"m": m, "A": serialize.encode(s.A), "B": serialize.encode(s.B)})
    payload = {"curve": curve.curve_id, "lambda": 1, "riccati": serialize.encode(exp), "split": splits}
    _emit(args, lines, payload)
    return EXIT_OK


def _require_weber(curve, what):
    if not _is_weber(curve):
        raise Rejected(f"{what} is defined for the Weber curve only")


def cmd_voros(args, curve):
    from .voros import voros_coefficients

    _require_weber(curve, "voros")
    if args.M < 1:
        raise Rejected("-M must be at least 1")
    vs = voros_coefficients(curve, M=args.M, nu=_nu_value(args))
    lines = [_greek(line) for line in vs.lines()] + [f"({LAMBDA_NOTE} in the computation; powers of λ restored by homogeneity)"]
    _emit(args, lines, {"curve": curve.curve_id, "voros": serialize.encode(vs)})
    return EXIT_OK


# -- verification ---------------------------------------------------------------------


def _report(name, ok, detail=""):
    return {"name": name, "ok": bool(ok), "detail": detail}


def _suite_checks(args, curve):
    suite = args.suite
    if suite == "thm3.1":
        from .wkb import verify_thm31

        M = 3 if args.M is None else args.M
        weights = _weights(curve, args)
        return [_report(f"T[{m}] == T-hat[{m}]", ok) for m, ok in verify_thm31(curve, M, weights)]
    if suite in ("thm4.2", "lemma4.3", "thm4.4"):
        from .voros import verify_difference_equations, verify_main_relation

        _require_weber(curve, suite)
        M = 6 if args.M is None else args.M
        if suite == "thm4.2":
            rep = verify_main_relation(M, nu=_nu_value(args))
        else:
            reports = verify_difference_equations(M, nu=_nu_value(args))
            rep = reports[0] if suite == "lemma4.3" else reports[1]
        checks = [_report(f"{rep.name} at hbar^{e}", ok) for e, ok in rep.orders]
        if rep.first_failure:
            e, lhs, rhs = rep.first_failure
            checks.append(_report(f"{rep.name} first failure", False, f"hbar^{e}: lhs = {lhs}, rhs = {rhs}"))
        return checks
    if suite == "thm4.5":
        from .voros import verify_free_energies

        _require_weber(curve, suite)
        gmax = 4 if args.gmax is None else args.gmax
        if 2 * gmax + 1 > _cap(args):
            raise CapExceeded(f"F_{gmax} needs 2g + 1 = {2 * gmax + 1} above the cap {_cap(args)}; use --cap-override")
        _engine(curve, args)
        return [
            _report(f"F[{g}] == B_{2 * g}/({2 * g}*{2 * g - 2})", got == want, f"computed {got}, closed form {want}")
            for g, got, want in verify_free_energies(gmax)
        ]
    if suite == "thm4.6":
        from .voros import voros_closed_form, voros_coefficients

        _require_weber(curve, suite)
        M = 8 if args.M is None else args.M
        nu = _nu_value(args)
        vs = voros_coefficients(curve, M=M, nu=nu)
        out = []
        for m in range(1, M + 1):
            want = voros_closed_form(m, nu)
            got = vs.coeffs[m]
            out.append(_report(f"V[{m}] == B_{m + 1}((nu+1)/2)/({m}*{m + 1})", got == want, f"computed {got}, closed form {want}"))
        return out
    if suite == "variational":
        from .toprec import verify_variational

        _require_weber(curve, suite)
        out = []
        for g, n in ((2, 1), (0, 3), (1, 2)):
            r = verify_variational(g, n, curve)
            out.append(_report(f"variation ({g},{n})", r.ok, f"integral {r.integral}, expected {r.expected}"))
        return out
    if suite == "properties":
        from .toprec import check_properties

        top = 7 if args.nmax is None else args.nmax
        if top > _cap(args):
            raise CapExceeded(f"2g + n = {top} exceeds the cap {_cap(args)}; use --cap-override")
        return [_report(c.name, c.ok, c.detail) for c in check_properties(curve, top, engine=_engine(curve, args))]
    raise Rejected(f"unknown suite {suite!r}")


def cmd_verify(args, curve):
    checks = _suite_checks(args, curve)
    ok = all(c["ok"] for c in checks)
    first = next((c for c in checks if not c["ok"]), None)
    lines = [("PASS " if c["ok"] else "FAIL ") + c["name"] + (f": {c['detail']}" if c["detail"] else "") for c in checks]
    lines.append(f"{args.suite}: {'pass' if ok else 'FAIL'}")
    payload = {"suite": args.suite, "curve": curve.curve_id, "ok": ok, "checks": checks, "first_failure": first}
    _emit(args, lines, payload)
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "wgn": cmd_wgn,
    "free-energy": cmd_free_energy,
    "quantize": cmd_quantize,
    "wkb": cmd_wkb,
    "voros": cmd_voros,
    "verify": cmd_verify,
}

REJECTIONS = (
    Rejected,
    CurveRejected,
    CurveSyntaxError,
    DescentFailure,
    NotSigmaInvariant,
    IneffectivePoint,
    NotAvailable,
    ValueError,
    OSError,
)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        curve = load_curve(args.curve)
        code = COMMANDS[args.command](args, curve)
        _persist(curve)
        return code
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except InternalInconsistency as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except REJECTIONS as e:
        print(f"rejected: {e}", file=sys.stderr)
        return EXIT_REJECT


if __name__ == "__main__":
    sys.exit(main())
