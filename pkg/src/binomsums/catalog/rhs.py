"""Right-hand-side evaluators, one per catalog entry.

Implemented from the displayed right sides only; see lhs.py for the
independence convention and the C(n, p) normalization of ID07/ID19.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact import (
    binom_int,
    binom_poly,
    binom_upper_shift,
    central_binomial,
    digamma_diff,
    harmonic,
)
from ..legendre import legendre_new_repr

F = Fraction


def id01(n, a):
    x1 = a["x"] + 1
    total = F(0)
    for k in range(n + 1):
        term = binom_int(n, k) * binom_int(n + k, k) * x1**k
        total += -term if (n + k) % 2 else term
    return total


def _binom_row(s, n):
    """[C(s, 0), C(s, 1), ..., C(s, n)] by the falling-factorial recurrence."""
    row = [F(1)]
    for m in range(1, n + 1):
        row.append(row[-1] * (s - m + 1) / m)
    return row


def id02(n, a):
    alpha, beta, x, y = a["alpha"], a["beta"], a["x"], a["y"]
    bg = _binom_row(beta - alpha + n, n)   # C(beta-alpha+n, m)
    xy = x + y
    total = F(0)
    bb = F(1)                      # C(beta+k, k)
    for k in range(n + 1):
        if k:
            bb = bb * (beta + k) / k
        term = bg[n - k] * bb * xy**k * y ** (n - k)
        total += -term if (n + k) % 2 else term
    return total


def id03(n, a):
    alpha, beta, x = a["alpha"], a["beta"], a["x"]
    bg = _binom_row(beta - alpha + n, n)
    x1 = x + 1
    total = F(0)
    bb = F(1)
    for j in range(n + 1):
        if j:
            bb = bb * (beta + j) / j
        term = bg[n - j] * bb * x1**j
        total += -term if (n + j) % 2 else term
    return total


def id04(n, a):
    alpha, beta, j = a["alpha"], a["beta"], int(a["j"])
    value = binom_poly(beta + j, j) * binom_poly(beta - alpha + n, n - j)
    return -value if (n + j) % 2 else value


def id05(n, a):
    lam = a["lam"]
    half = F(1, 2)
    total = F(0)
    top = F(1)                     # C(n - lam - 1/2, k)
    for k in range(n + 1):
        if k:
            top = top * (n - lam - half - k + 1) / k
        total += binom_int(n, k) * top / binom_poly(k - lam - half, k)
    return binom_poly(2 * lam, n) * total


def id06(n, a):
    s, t = a["s"], a["t"]
    value = s * 0 + 1
    for i in range(1, n + 1):
        value = value * (s + t + i) / (t + i)
    return value


def id07(n, a):
    return binom_poly(a["s"] + a["p"], n)


def id08(n, a):
    beta, x1 = a["beta"], a["x"] + 1
    total = beta * 0
    for k in range(n + 1):
        term = binom_int(n, k) * binom_poly(beta + k, n) * x1**k
        total = total + (-term if (n + k) % 2 else term)
    return total


def id09(n, a):
    return F(-1 if n % 2 else 1)


def id10(n, a):
    value = binom_poly(a["beta"], n)
    return -value if n % 2 else value


def id11(n, a):
    total = F(0)
    for k in range(n + 1):
        term = binom_int(n, k) * binom_int(n + k, k) * harmonic(n + k)
        total += -term if (n + k) % 2 else term
    return total / 2


def id12(n, a):
    x1 = a["x"] + 1
    total = F(0)
    for k in range(n + 1):
        total += central_binomial(k) * central_binomial(n - k) * x1**k
    return total / 4**n


def id13(n, a):
    return legendre_new_repr(n, a["t"])


def id14(n, a):
    t = a["t"]
    return central_binomial(n) * ((1 - t * t) / 4) ** n


def id15(n, a):
    s = a["s"]
    return binom_poly(s, n) * (harmonic(n) + digamma_diff(s, n))


def id16(n, a):
    total = F(0)
    for k in range(1, n + 1):
        term = binom_int(n, k) * binom_int(n + k, k) * harmonic(k)
        total += -term if (n + k) % 2 else term
    return total / 2


def id17(n, a):
    return central_binomial(n) * (harmonic(n) - harmonic(2 * n)) / F(2 ** (2 * n - 1))


def id18(n, a):
    total = F(0)
    for k in range(n + 1):
        h = harmonic(k)
        term = binom_int(n, k) * binom_int(n + k, k) * (h * h + harmonic(k, 2))
        total += -term if (n + k) % 2 else term
    return total / 4


def id19(n, a):
    return binom_poly(a["s"] + n, n)


def id20(n, a):
    return F(binom_int(4 * n, 2 * n)) / central_binomial(n)


def id20e(n, a):
    return F(binom_int(4 * n, 2 * n))


def id21(n, a):
    s = a["s"]
    return central_binomial(n) * binom_upper_shift(2 * s + 1, 2 * n) / binom_poly(n + s, n)


def id22(n, a):
    return ((2 * n + 1) * central_binomial(n)
            * (2 * harmonic(2 * n + 1) - harmonic(n) - 2) / F(4**n))


def id23(n, a):
    return F(n) * central_binomial(n) / 2


def id24(n, a):
    return central_binomial(n) * (2 * harmonic(n) - harmonic(2 * n))


def id25(n, a):
    d = harmonic(2 * n) - 2 * harmonic(n)
    return central_binomial(n) * (d * d + harmonic(n, 2) - harmonic(2 * n, 2))


def id26(n, a):
    d = harmonic(2 * n) - 2 * harmonic(n)
    return central_binomial(n) * (d * d + 2 * harmonic(n, 2) - harmonic(2 * n, 2))
