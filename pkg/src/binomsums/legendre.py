"""Legendre polynomials at rational arguments, all exact.

The three-term recurrence (n+1) P_{n+1}(x) = (2n+1) x P_n(x) - n P_{n-1}(x)
is the reference evaluator; the two summation representations below are
verified against it, never the other way around.  Both are stated at the
argument (t^2+1)/(2t), which is where a rational t gives a rational
argument covering [1, inf) and (-inf, -1]; t = 0 is excluded.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import binom_int, central_binomial

__all__ = [
    "legendre",
    "legendre_inversion_check",
    "legendre_new_repr",
    "legendre_product_form",
]


def legendre(n: int, x: Fraction) -> Fraction:
    """P_n(x) by the three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    prev, cur = Fraction(1), x
    if n == 0:
        return prev
    for m in range(1, n):
        prev, cur = cur, ((2 * m + 1) * x * cur - m * prev) / (m + 1)
    return cur


def _check_t(t: Fraction) -> None:
    if t == 0:
        raise ValueError("t must be nonzero")


def legendre_product_form(n: int, t: Fraction) -> Fraction:
    """(1/4^n) sum_k binom(2k,k) binom(2n-2k,n-k) t^(2k).

    Equals t^n * P_n((t^2+1)/(2t)); the classical even-power expansion.
    """
    _check_t(t)
    t2 = t * t
    power = Fraction(1)
    total = Fraction(0)
    for k in range(n + 1):
        total += central_binomial(k) * central_binomial(n - k) * power
        power *= t2
    return total / 4**n


def legendre_new_repr(n: int, t: Fraction) -> Fraction:
    """(1/t^n) sum_k binom(n,k) binom(2k,k) ((t^2-1)/4)^k.

    Equals P_n((t^2+1)/(2t)) exactly; at t = 1 only the k = 0 term
    survives, giving P_n(1) = 1.
    """
    _check_t(t)
    q = (t * t - 1) / 4
    power = Fraction(1)
    total = Fraction(0)
    for k in range(n + 1):
        total += binom_int(n, k) * central_binomial(k) * power
        power *= q
    return total / t**n


def legendre_inversion_check(n: int, t: Fraction) -> tuple[Fraction, Fraction]:
    """Both sides of the inverted representation, computed independently:

        sum_k (-1)^k binom(n,k) P_k((t^2+1)/(2t)) t^k
            =  binom(2n,n) ((1-t^2)/4)^n.

    The left side uses the recurrence evaluator, the right side is a closed
    form; they are returned as a pair and equal exactly on success.
    """
    _check_t(t)
    x = (t * t + 1) / (2 * t)
    lhs = Fraction(0)
    power = Fraction(1)
    for k in range(n + 1):
        term = binom_int(n, k) * legendre(k, x) * power
        lhs += -term if k % 2 else term
        power *= t
    rhs = central_binomial(n) * ((1 - t * t) / 4) ** n
    return lhs, rhs
