"""Points of the projective line: exact scalars plus a single point at infinity."""

from fractions import Fraction


class _Infinity:
    """The point at infinity. Orders after every finite rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self):
        return hash("spectralrec-infinity")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinity()


def is_inf(p) -> bool:
    return p is INF


def as_point(p):
    """Coerce ints, strings and Fractions to a canonical point."""
    if p is INF:
        return p
    if isinstance(p, str):
        if p.strip() in ("oo", "inf", "INF", "∞"):
            return INF
        return Fraction(p)
    if isinstance(p, int):
        return Fraction(p)
    return p


def point_key(p):
    """Sort key giving the canonical point order: finite rationals by value, then infinity."""
    return (1, 0) if p is INF else (0, p)


def point_str(p) -> str:
    return "oo" if p is INF else str(p)
