"""The polynomial-shift route to the two-parameter transform identity.

f(x) = sum_k C(alpha, n-k) C(beta+k, k) x^k is a polynomial of degree n, so
re-expanding it around x = -1 and comparing coefficients of (x+1)^j against
(-1)^(n+j) C(beta+j, j) C(beta-alpha+n, n-j) for every j proves the
transform.  Both coefficient lists are computed exactly and independently:
the left by the basis change x^k = ((x+1) - 1)^k, the right from its closed
form.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact import binom_int, binom_poly

__all__ = ["taylor_route_check", "taylor_shift_coefficients"]


def taylor_shift_coefficients(coeffs: list[Fraction]) -> list[Fraction]:
    """Coefficients in the (x+1)-basis of the polynomial sum c_k x^k."""
    n = len(coeffs) - 1
    out = []
    for j in range(n + 1):
        total = Fraction(0)
        for k in range(j, n + 1):
            term = coeffs[k] * binom_int(k, j)
            total += -term if (k - j) % 2 else term
        out.append(total)
    return out


def taylor_route_check(n: int, alpha: Fraction, beta: Fraction) -> bool:
    """True iff every (x+1)-coefficient matches the closed form."""
    coeffs = [binom_poly(alpha, n - k) * binom_poly(beta + k, k)
              for k in range(n + 1)]
    shifted = taylor_shift_coefficients(coeffs)
    for j in range(n + 1):
        target = binom_poly(beta + j, j) * binom_poly(beta - alpha + n, n - j)
        if (n + j) % 2:
            target = -target
        if shifted[j] != target:
            return False
    return True
