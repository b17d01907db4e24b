"""Bernoulli numbers and polynomials from the generating function w/(e^w - 1)."""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .polynomial import Polynomial


@lru_cache(maxsize=None)
def _bernoulli_table(n: int):
    # w/(e^w - 1) = 1 / sum_k w^k/(k+1)!; invert the series, then B_k = k! * coeff
    a = [Fraction(1, factorial(k + 1)) for k in range(n + 1)]
    inv = [Fraction(1)]
    for k in range(1, n + 1):
        inv.append(-sum(a[j] * inv[k - j] for j in range(1, k + 1)))
    return tuple(inv[k] * factorial(k) for k in range(n + 1))


def bernoulli_number(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _bernoulli_table(max(n, 16))[n]


def bernoulli_polynomial(n: int, var: str = "X") -> Polynomial:
    """B_n(X) = sum_k C(n, k) B_k X^(n-k), the coefficients of w e^(Xw)/(e^w - 1)."""
    return Polynomial([comb(n, n - j) * bernoulli_number(n - j) for j in range(n + 1)], var)
