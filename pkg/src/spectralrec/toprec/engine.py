"""Topological recursion in a pole basis.

Every W_{g,n} with 2g + n >= 3 is a finite combination of products of the
one-forms dz/(z - r)^k (r an effective ramification point, k >= 2), or z^k dz
when r is infinity.  The recursion therefore reduces to local expansions at
each r: the kernel is expanded in 1/(z0 - r)^(m+1) (or z0^m at infinity), the
spectator variables stay symbolic as labels, and each residue is a single
coefficient extraction from truncated Laurent series.
"""

import threading
from collections import Counter, defaultdict
from fractions import Fraction
from math import comb

from ..errors import CapExceeded, InternalInconsistency, IneffectivePoint
from ..exact import INF, LaurentSeries, RationalFunction, order_at, point_str, substitute
from ..exact.laurent import laurent_expand_length
from .multidiff import MultiDifferential, label_key, label_rf, sort_labels

DEFAULT_CAP = 9

_ZERO = Fraction(0)


def _exact_series(val, length, coeff=1):
    """coeff * t^val as a series known to relative length ``length``."""
    return LaurentSeries._raw(val, [Fraction(coeff)] + [_ZERO] * (length - 1))


def _residue(a: LaurentSeries, b: LaurentSeries):
    """Coefficient of t^-1 in a*b, checking both factors are known far enough."""
    total = _ZERO
    ai = a.val
    need_a = -1 - b.val
    need_b = -1 - a.val
    if need_a >= a.prec or need_b >= b.prec:
        raise InternalInconsistency("series truncated too early for an exact residue")
    for i, c in enumerate(a.coeffs):
        e = ai + i
        if e > need_a:
            break
        if c:
            j = -1 - e - b.val
            if 0 <= j < len(b.coeffs):
                total += c * b.coeffs[j]
    return total


class LocalChart:
    """Expansions around one ramification point r in the coordinate t.

    z = r + t for finite r and z = 1/t at infinity; ``s(t)`` is the
    coordinate of the conjugate point sigma(z).
    """

    def __init__(self, curve, r):
        self.curve = curve
        self.r = r
        self.finite = r is not INF
        t = RationalFunction.gen("t")
        if self.finite:
            self.zeta = t + r
            self.dzeta = RationalFunction.const(1, "t")
        else:
            self.zeta = t.inverse()
            self.dzeta = -(t * t).inverse()
        sig_t = substitute(curve.sigma.with_var("t"), self.zeta)
        self.s_rf = sig_t - r if self.finite else sig_t.inverse()
        X = substitute(curve.x.with_var("t"), self.zeta)
        D = substitute(curve.delta.with_var("t"), self.zeta)
        self.Q_rf = (D * X.derivative() * 2).inverse()
        self.qv = order_at(self.Q_rf, 0)
        self._len = 0
        self._label_cache = {}
        self._sigma_cache = {}
        self._kernel_cache = {}
        self._bergman_cache = {}

    # -- cached building blocks --------------------------------------------------

    def ensure(self, L: int):
        if L <= self._len:
            return
        L = max(L, 2 * self._len)
        self._len = L
        self.s = laurent_expand_length(self.s_rf, 0, L + 2)
        if self.s.val != 1:
            raise InternalInconsistency("conjugate map is not a local involution at a ramification point")
        self.ds = self.s.derivative()
        self.Q = laurent_expand_length(self.Q_rf, 0, L + 2)
        self.spow = {0: _exact_series(0, L + 2), 1: self.s}
        self._sinv = self.s.inverse()
        self._label_cache.clear()
        self._sigma_cache.clear()
        self._kernel_cache.clear()
        self._bergman_cache.clear()
        self.diag = (self.ds * ((_exact_series(1, L + 2) - self.s) ** -2))

    def s_power(self, k: int) -> LaurentSeries:
        p = self.spow.get(k)
        if p is None:
            if k > 0:
                p = self.s_power(k - 1) * self.s
            else:
                p = self.s_power(k + 1) * self._sinv
            self.spow[k] = p
        return p

    def label_val(self, label) -> int:
        p, k = label
        if self.finite:
            if p is INF:
                return 0
            return -k if p == self.r else 0
        if p is INF:
            return -k - 2
        return k - 2

    def label(self, label, L: int) -> LaurentSeries:
        """e_label(zeta(t)) * zeta'(t) with relative length L."""
        self.ensure(L)
        return self._label_full(label).with_length(L)

    def _label_full(self, label) -> LaurentSeries:
        ser = self._label_cache.get(label)
        if ser is None:
            p, k = label
            full = self._len + 2
            if self.finite and p == self.r:
                ser = _exact_series(-k, full)
            elif not self.finite and p is INF:
                ser = _exact_series(-k - 2, full, -1)
            else:
                f = substitute(label_rf(label, self.curve.var).with_var("t"), self.zeta) * self.dzeta
                ser = laurent_expand_length(f, 0, full)
            self._label_cache[label] = ser
        return ser

    def label_sigma(self, label, L: int) -> LaurentSeries:
        """Same one-form pulled back to the conjugate sheet: e(s(t)) s'(t)."""
        self.ensure(L)
        ser = self._sigma_cache.get(label)
        if ser is None:
            base = self._label_full(label)
            for k in range(base.val, base.val + len(base.coeffs)):
                self.s_power(k)
            ser = base.compose(self.s, self.spow) * self.ds
            self._sigma_cache[label] = ser
        return ser.with_length(L)

    def bergman_labels(self, sheet: int, kmax: int, L: int):
        """B(u, z) expanded in labels at r, u = t (sheet 0) or s(t) (sheet 1)."""
        self.ensure(L)
        key = (sheet, kmax)
        out = self._bergman_cache.get(key)
        if out is None:
            out = {}
            full = self._len + 2
            for k in range(2 if self.finite else 0, kmax + 1):
                if self.finite:
                    lab, e, c = (self.r, k), k - 2, k - 1
                else:
                    lab, e, c = (INF, k), k, -(k + 1)
                if sheet == 0:
                    ser = _exact_series(e, full, c)
                else:
                    ser = (self.s_power(e) * self.ds).scale(c)
                out[(lab,)] = ser
            self._bergman_cache[key] = out
        return {k: v.with_length(L) for k, v in out.items()}

    def kernel(self, m: int, L: int):
        """Coefficient of the kernel on the label attached to index m."""
        self.ensure(L)
        ser = self._kernel_cache.get(m)
        if ser is None:
            full = self._len + 2
            if self.finite:
                lab = (self.r, m + 1)
                base = _exact_series(m, full) - self.s_power(m)
            else:
                lab = (INF, m)
                base = self.s_power(m + 1) - _exact_series(m + 1, full)
            ser = (lab, base * self.Q)
            self._kernel_cache[m] = ser
        lab, ser = ser
        return lab, ser.with_length(L)

    def bergman_diag(self, L: int) -> LaurentSeries:
        """B(t, s(t)) as a one-form in t: s'/(t - s)^2."""
        self.ensure(L)
        return self.diag.with_length(L)


def _sub_multiset(M, remove):
    c = Counter(M)
    for x in remove:
        c[x] -= 1
        if c[x] < 0:
            return None
    return sort_labels(c.elements())


def _merge(J1, J2):
    return sort_labels(J1 + J2)


def _split_multiplicity(J, J1):
    cj = Counter(J)
    c1 = Counter(J1)
    out = 1
    for lab, m in c1.items():
        out *= comb(cj[lab], m)
    return out


class TopologicalRecursion:
    """Memoized W_{g,n} for one curve.

    ``include_ineffective`` adds the ineffective ramification points to the
    residue sum; the result must not change.
    """

    def __init__(self, curve, cap: int = DEFAULT_CAP, include_ineffective: bool = False, check: bool = True):
        self.curve = curve
        self.cap = cap
        self.check = check
        self.include_ineffective = include_ineffective
        self.points = tuple(curve.R if include_ineffective else curve.R_star)
        self.charts = {r: LocalChart(curve, r) for r in self.points}
        self.memo = {}
        self._lock = threading.Lock()
        self.stats = defaultdict(int)

    # -- public --------------------------------------------------------------------

    def W(self, g: int, n: int) -> MultiDifferential:
        if n < 1 or g < 0 or 2 * g + n < 1:
            raise ValueError(f"no W_{{{g},{n}}}: need n >= 1 and 2g + n >= 1")
        if g == 0 and n == 1:
            return MultiDifferential.ydx(self.curve.y * self.curve.xprime)
        if g == 0 and n == 2:
            return MultiDifferential.bergman()
        if 2 * g + n > self.cap:
            raise CapExceeded(f"2g + n = {2 * g + n} exceeds the cap {self.cap}; raise it with --cap-override")
        return MultiDifferential(n, self._terms(g, n), g=g)

    def _terms(self, g, n):
        key = (g, n)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        terms = self._compute(g, n)
        with self._lock:
            self.memo.setdefault(key, terms)
        return self.memo[key]

    # -- local data ----------------------------------------------------------------

    def _pole(self, chart, g, n):
        """Upper bound on -val of the localized W_{g,n} at chart.r."""
        if g == 0 and n == 2:
            return 0
        worst = 0
        for M in self._terms(g, n):
            for lab in M:
                worst = max(worst, -chart.label_val(lab))
        return worst

    def _localize(self, chart, g, n, sheet, L, kmax):
        """Dict J -> series for W_{g,n}(u, J) with u on the given sheet."""
        if g == 0 and n == 2:
            return chart.bergman_labels(sheet, kmax, L)
        get = chart.label if sheet == 0 else chart.label_sigma
        out = {}
        for M, c in self._terms(g, n).items():
            for lab in set(M):
                J = _sub_multiset(M, (lab,))
                term = get(lab, L).scale(c)
                prev = out.get(J)
                out[J] = term if prev is None else prev + term
        return out

    # -- recursion -------------------------------------------------------------------

    def _compute(self, g, n):
        table = defaultdict(lambda: _ZERO)
        for r in self.points:
            self._residues_at(self.charts[r], g, n, table)
        return self._assemble(table, g, n)

    def _residues_at(self, chart, g, n, table):
        qv = chart.qv
        splits = []
        for g1 in range(g + 1):
            for n1 in range(n):
                g2, n2 = g - g1, n - 1 - n1
                if (g1, n1) == (0, 0) or (g2, n2) == (0, 0):
                    continue
                splits.append((g1, n1 + 1, g2, n2 + 1))
        # pole bounds decide the truncation length
        P_I = 0
        if g >= 1:
            P_I = 2 if (g - 1, n + 1) == (0, 2) else 2 * self._pole(chart, g - 1, n + 1)
        for g1, m1, g2, m2 in splits:
            P_I = max(P_I, self._pole(chart, g1, m1) + self._pole(chart, g2, m2))
        L = max(P_I - qv + 3, 4)
        chart.ensure(L)

        I = {}

        def add(J, ser):
            prev = I.get(J)
            I[J] = ser if prev is None else prev + ser

        if g >= 1:
            if (g - 1, n + 1) == (0, 2):
                add((), chart.bergman_diag(L))
            else:
                loc = self._localize(chart, g - 1, n + 1, 0, L, 0)
                for Jp, ser in loc.items():
                    for lab in set(Jp):
                        J = _sub_multiset(Jp, (lab,))
                        add(J, ser * chart.label_sigma(lab, L))
                        self.stats["mul"] += 1
        for g1, m1, g2, m2 in splits:
            P1 = self._pole(chart, g1, m1)
            P2 = self._pole(chart, g2, m2)
            loc1 = self._localize(chart, g1, m1, 0, L, P2 - qv + 1)
            loc2 = self._localize(chart, g2, m2, 1, L, P1 - qv + 1)
            for J1, a in loc1.items():
                for J2, b in loc2.items():
                    J = _merge(J1, J2)
                    mult = _split_multiplicity(J, J1)
                    prod = a * b
                    self.stats["mul"] += 1
                    add(J, prod if mult == 1 else prod.scale(mult))
        for J, ser in I.items():
            ser_v = ser.val
            mtop = -1 - qv - ser_v
            for m in range(mtop + 1):
                lab, K = chart.kernel(m, L)
                if K.val + ser_v > -1:
                    continue
                res = _residue(K, ser)
                if res:
                    table[(lab, J)] += res

    def _assemble(self, table, g, n):
        terms = {}
        for (l0, J), c in table.items():
            if c:
                key = sort_labels((l0,) + J)
                terms.setdefault(key, c)
        if self.check:
            for key, c in terms.items():
                for l0 in set(key):
                    J = _sub_multiset(key, (l0,))
                    other = table.get((l0, J), _ZERO)
                    if other != c:
                        raise InternalInconsistency(
                            f"W_{{{g},{n}}} is not symmetric: coefficient of {key} differs when {l0} is the first variable"
                        )
        return {k: terms[k] for k in sorted(terms, key=lambda M: tuple(label_key(l) for l in M))}


# -- module-level memo ----------------------------------------------------------------

_ENGINES = {}
_ENGINES_LOCK = threading.Lock()


def engine_for(curve, include_ineffective: bool = False, cap: int = DEFAULT_CAP) -> TopologicalRecursion:
    """Shared engine per curve (get-or-compute); the cap may only grow."""
    key = (curve.curve_id, include_ineffective)
    with _ENGINES_LOCK:
        eng = _ENGINES.get(key)
        if eng is None:
            eng = TopologicalRecursion(curve, cap=cap, include_ineffective=include_ineffective)
            _ENGINES[key] = eng
        elif cap > eng.cap:
            eng.cap = cap
    return eng


def clear_memo():
    with _ENGINES_LOCK:
        _ENGINES.clear()


def refuse_ineffective(curve, r):
    for rp in curve.ramification:
        if rp.location == r and not rp.effective:
            raise IneffectivePoint(
                f"the residue at the ineffective point z = {point_str(r)} vanishes; no kernel is built there"
            )
