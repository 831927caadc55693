"""Exact rational building blocks.

All scalars in this package are ``fractions.Fraction``.  Parameters range
over the rationals: every identity verified here is a rational-function
identity, so rational inputs are dense enough to pin it down, and no
floating-point value ever appears.  The digamma and trigamma functions enter
only through the differences psi(s+1) - psi(s-n+1) and psi'(s+1) -
psi'(s-n+1), which are rational in s, so the constants gamma, pi^2 and ln 2
never enter the value domain.

Rendering convention (used by the CLI and all JSON output): lowest terms
with positive denominator, ``p/q``, or just ``p`` when the denominator is 1,
with a leading ``-`` on the numerator.  ``parse_rational`` accepts exactly
this format and nothing else (no floats, no exponents, no whitespace).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "DigammaPole",
    "TrigammaPole",
    "HarmonicCache",
    "binom_int",
    "binom_poly",
    "binom_upper_shift",
    "central_binomial",
    "digamma_diff",
    "harmonic",
    "parse_rational",
    "render_rational",
    "trigamma_diff",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DigammaPole(ZeroDivisionError):
    """Raised when psi(s+1) - psi(s-n+1) is evaluated at s in {0, .., n-1}."""

    def __init__(self, index: int):
        super().__init__(f"digamma pole: s - {index} vanishes")
        self.index = index


class TrigammaPole(ZeroDivisionError):
    """Raised when psi'(s+1) - psi'(s-n+1) is evaluated at s in {0, .., n-1}."""

    def __init__(self, index: int):
        super().__init__(f"trigamma pole: s - {index} vanishes")
        self.index = index


# ---------------------------------------------------------------------------
# Rendering / parsing
# ---------------------------------------------------------------------------

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?\Z")


def render_rational(q: Fraction) -> str:
    """Render in the canonical ``p/q`` / ``p`` format."""
    return str(q)


def parse_rational(text: str) -> Fraction:
    """Parse the canonical format back; inverse of :func:`render_rational`."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


# ---------------------------------------------------------------------------
# Harmonic numbers
# ---------------------------------------------------------------------------

class HarmonicCache:
    """Growable table of generalized harmonic numbers H_n^(m) for fixed m.

    Entry n holds H_n^(m) = sum_{i=1..n} 1/i^m, with H_0 = 0.  The table
    only ever grows; warm it once with :meth:`grow_to` before sharing
    read-only across workers.
    """

    __slots__ = ("order", "_values")

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("harmonic order must be >= 1")
        self.order = order
        self._values = [_ZERO]

    def grow_to(self, n: int) -> None:
        values = self._values
        m = self.order
        while len(values) <= n:
            i = len(values)
            values.append(values[-1] + Fraction(1, i**m))

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError("harmonic numbers are indexed by n >= 0")
        if n >= len(self._values):
            self.grow_to(n)
        return self._values[n]

    def __len__(self) -> int:
        return len(self._values)


_CACHES: dict[int, HarmonicCache] = {}


def harmonic_cache(order: int) -> HarmonicCache:
    """The shared harmonic table for a given order."""
    cache = _CACHES.get(order)
    if cache is None:
        cache = _CACHES[order] = HarmonicCache(order)
    return cache


def harmonic(n: int, order: int = 1) -> Fraction:
    """H_n^(order) = sum_{i=1..n} 1/i^order, with H_0 = 0."""
    return harmonic_cache(order)[n]


# ---------------------------------------------------------------------------
# Binomial coefficients
# ---------------------------------------------------------------------------

def binom_int(n: int, k: int) -> int:
    """Plain integer binomial; 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


_CENTRAL: list[int] = [1]


def central_binomial(k: int) -> int:
    """binom(2k, k) with a growable cache."""
    while len(_CENTRAL) <= k:
        m = len(_CENTRAL)
        _CENTRAL.append(_CENTRAL[-1] * (2 * m) * (2 * m - 1) // (m * m))
    return _CENTRAL[k]


def binom_poly(s, k: int):
    """binom(s, k) for integer lower index, as the degree-k polynomial in s:

        s (s-1) ... (s-k+1) / k!

    Returns 0 for k < 0 (the boundary convention that makes the summation
    identities run over k = 0..n with out-of-support terms vanishing).  The
    upper argument may be a Fraction or any value supporting ring arithmetic
    with Fractions (e.g. a Jet2), since the product form is polynomial in s.
    """
    if isinstance(s, int):
        s = Fraction(s)
    if k < 0:
        return s * 0          # zero of the same ring as s
    if k == 0:
        return s * 0 + 1
    if isinstance(s, Fraction) and s.denominator == 1 and s >= 0:
        return Fraction(binom_int(int(s), k))
    out = s
    for i in range(1, k):
        out = out * (s - i)
    return out / factorial(k)


def binom_upper_shift(b, m: int):
    """binom(b + m, m)  =  prod_{i=1..m} (b + i) / m!   for integer m >= 0.

    This is the one upper-shifted shape with a non-integer lower index that
    the identity catalog needs; it is rational (indeed polynomial) in b and
    therefore lifts to jets unchanged.
    """
    if m < 0:
        raise ValueError("upper shift must be non-negative")
    if isinstance(b, int):
        b = Fraction(b)
    if m == 0:
        return b * 0 + 1
    out = b + 1
    for i in range(2, m + 1):
        out = out * (b + i)
    return out / factorial(m)


# ---------------------------------------------------------------------------
# Digamma / trigamma differences
# ---------------------------------------------------------------------------

def digamma_diff(s, n: int):
    """psi(s+1) - psi(s-n+1)  =  sum_{i=0..n-1} 1/(s-i).

    Rational in s; equals H_n at s = n.  Raises :class:`DigammaPole` when s
    is one of 0, 1, ..., n-1 (for jets: when the base point is).
    """
    total = _ZERO
    for i in range(n):
        try:
            total = total + 1 / (s - i)
        except ZeroDivisionError as exc:
            raise DigammaPole(i) from exc
    return total


def trigamma_diff(s, n: int):
    """psi'(s+1) - psi'(s-n+1)  =  -sum_{i=0..n-1} 1/(s-i)^2.

    Rational in s; equals -H_n^(2) at s = n.
    """
    total = _ZERO
    for i in range(n):
        d = s - i
        try:
            total = total + 1 / (d * d)
        except ZeroDivisionError as exc:
            raise TrigammaPole(i) from exc
    return -total
