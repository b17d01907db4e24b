"""Plain-text rendering that the expression parser reads back.

Denominators are shown square-free factored, numerators with their rational
content pulled out, e.g. ``-21*(z^11 + 3*z^9 + z^7)/(z^2 - 1)^10``.
"""

from fractions import Fraction

from .polynomial import Polynomial, _int_primitive, poly_gcd

DISPLAY = {}


def set_display_names(names):
    """Replace variable names on output, e.g. {'lam': 'λ'}; pass {} to reset."""
    DISPLAY.clear()
    DISPLAY.update(names)


def _name(var):
    return DISPLAY.get(var, var)


def scalar_text(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return str(c)


def _is_atomic(s: str) -> bool:
    body = s[1:] if s.startswith("-") else s
    return not any(ch in body for ch in "+-/ ")


def _coeff_factor(c):
    """(sign, text) for a coefficient multiplying a monomial; text '' means 1."""
    if isinstance(c, Fraction):
        if c < 0:
            return "-", ("" if c == -1 else str(-c))
        return "+", ("" if c == 1 else str(c))
    s = scalar_text(c)
    if _is_atomic(s):
        if s.startswith("-"):
            return "-", s[1:]
        return "+", s
    return "+", f"({s})"


def poly_text(p: Polynomial) -> str:
    if not p.c:
        return "0"
    if len(p.c) == 1:
        return scalar_text(p.c[0])
    v = _name(p.var)
    parts = []
    for k in range(len(p.c) - 1, -1, -1):
        c = p.c[k]
        if not c:
            continue
        sign, ctext = _coeff_factor(c)
        if k == 0:
            mono = ctext or "1"
        else:
            zk = v if k == 1 else f"{v}^{k}"
            mono = f"{ctext}*{zk}" if ctext else zk
        parts.append((sign, mono))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, mono in parts[1:]:
        out += f" {sign} {mono}"
    return out


def squarefree_factors(f: Polynomial):
    """Yun's algorithm: monic f = prod a_i^i, returned as [(a_i, i)]."""
    f = f.monic()
    if f.degree <= 0:
        return []
    fp = f.derivative()
    g = poly_gcd(f, fp)
    b = f.exact_div(g)
    c = fp.exact_div(g)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def _factor_text(a: Polynomial, k: int) -> str:
    base = poly_text(a)
    if len(a.c) > 1 and sum(1 for v in a.c if v) > 1:
        base = f"({base})"
    return base if k == 1 else f"{base}^{k}"


def _demote(p: Polynomial) -> Polynomial:
    """Replace coefficients that are constants of a parameter field by plain rationals."""
    if p.is_rational():
        return p
    out = []
    for v in p.c:
        while not isinstance(v, Fraction):
            if not v.is_constant():
                return p
            v = v.constant_value()
        out.append(v)
    return Polynomial(out, p.var)


def ratfunc_text(f) -> str:
    num, den = _demote(f.num), _demote(f.den)
    if den.degree <= 0:
        return poly_text(num)
    dscale = 1
    if num.is_rational() and num.c:
        ints = _int_primitive(num.c)
        content = num.c[-1] / ints[-1]
        # the denominator of the content joins the denominator
        dscale = content.denominator
        content = content.numerator
        prim = Polynomial(ints, num.var)
        nterms = sum(1 for v in prim.c if v)
        ptext = poly_text(prim)
        if content == 1:
            ntext = f"({ptext})" if nterms > 1 else ptext
        elif content == -1:
            ntext = f"-({ptext})" if nterms > 1 else f"-{ptext}"
        else:
            ntext = f"{content}*({ptext})" if nterms > 1 else (str(content) if ptext == "1" else f"{content}*{ptext}")
    else:
        ntext = poly_text(num)
        if not _is_atomic(ntext):
            ntext = f"({ntext})"
    if den.is_rational():
        dparts = [_factor_text(a, k) for a, k in squarefree_factors(den)]
    else:
        dparts = [f"({poly_text(den)})"]
    if dscale != 1:
        dparts.insert(0, str(dscale))
    dtext = "*".join(dparts)
    if len(dparts) > 1:
        dtext = f"({dtext})"
    return f"{ntext}/{dtext}"


def logpoly_text(lp) -> str:
    if not lp.c:
        return "0"
    lam = _name("lam")
    parts = []
    for k, c in enumerate(lp.c):
        if not c:
            continue
        ctext = str(c)
        if k == 0:
            parts.append(ctext)
            continue
        logk = f"log({lam})" if k == 1 else f"log({lam})^{k}"
        if ctext == "1":
            parts.append(logk)
        elif ctext == "-1":
            parts.append(f"-{logk}")
        elif _is_atomic(ctext):
            parts.append(f"{ctext}*{logk}")
        else:
            parts.append(f"({ctext})*{logk}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
