"""Structured hypergeometric terms with exact shift ratios.

A :class:`HyperTerm` is

    constant * (-1)^sign(vars) * prod_i binom(top_i, bottom_i)^(+1|-1)

where sign, top_i and bottom_i are affine forms in the catalog variables
with integer variable coefficients (so that shifting any variable by one
moves every binomial argument by an integer).  Two primitives are exposed:

* ``evaluate`` -- the exact rational value at a concrete assignment.  A
  factor is evaluable when its lower argument is an integer (polynomial
  falling-factorial form) or when top - bottom is an integer m, in which
  case binom(top, bottom) = binom(bottom + m, m) (zero for negative m).

* ``shift_ratio`` -- T(v+1)/T(v) as a canonical rational function, built
  factor by factor from the ratio rule Gamma(x+m)/Gamma(x) =
  prod_{i=0..m-1}(x+i).  This is the bridge from hypergeometric terms to
  the rational-function algebra in which certificates are verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .expr import Add, Div, Expr, IntLit, Mul, Neg, Pow, Sub, Var
from .exact import binom_poly, binom_upper_shift
from .poly import MultiPoly, RatFunc

__all__ = [
    "AffineForm",
    "HyperTerm",
    "HyperTermPole",
    "NonHypergeometricShift",
]


class NonHypergeometricShift(ValueError):
    """A unit shift moved a binomial argument by a non-integer."""


class HyperTermPole(ZeroDivisionError):
    """A denominator binomial vanished at the assignment."""


@dataclass(frozen=True)
class AffineForm:
    """constant + sum coeff_v * v, with rational constant.

    Variable coefficients are normally integers (a requirement for shift
    ratios, enforced there); the constant may be any rational.
    """

    constant: Fraction
    coeffs: tuple[tuple[str, Fraction], ...]

    @classmethod
    def make(cls, constant, coeffs: dict[str, Fraction] | None = None) -> "AffineForm":
        items = tuple(sorted(
            (name, Fraction(c)) for name, c in (coeffs or {}).items() if c
        ))
        return cls(Fraction(constant), items)

    @classmethod
    def from_expr(cls, e: Expr) -> "AffineForm":
        const, coeffs = _affine_parts(e)
        return cls.make(const, coeffs)

    def coeff(self, name: str) -> Fraction:
        for var, c in self.coeffs:
            if var == name:
                return c
        return Fraction(0)

    def evaluate(self, assign) -> Fraction:
        total = self.constant
        for name, c in self.coeffs:
            total += c * assign[name]
        return total

    def to_poly(self) -> MultiPoly:
        poly = MultiPoly.const(self.constant)
        for name, c in self.coeffs:
            poly = poly + MultiPoly.var(name) * c
        return poly

    def render(self) -> str:
        parts = []
        for name, c in self.coeffs:
            if c == 1:
                parts.append(f"+{name}")
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{'+' if c > 0 else '-'}{abs(c)}*{name}")
        if self.constant or not parts:
            parts.append(f"{'+' if self.constant >= 0 else '-'}{abs(self.constant)}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def _affine_parts(e: Expr) -> tuple[Fraction, dict[str, Fraction]]:
    if isinstance(e, IntLit):
        return Fraction(e.value), {}
    if isinstance(e, Var):
        return Fraction(0), {e.name: Fraction(1)}
    if isinstance(e, Neg):
        const, coeffs = _affine_parts(e.operand)
        return -const, {v: -c for v, c in coeffs.items()}
    if isinstance(e, (Add, Sub)):
        lc, lv = _affine_parts(e.left)
        rc, rv = _affine_parts(e.right)
        if isinstance(e, Sub):
            rc, rv = -rc, {v: -c for v, c in rv.items()}
        out = dict(lv)
        for v, c in rv.items():
            out[v] = out.get(v, Fraction(0)) + c
        return lc + rc, out
    if isinstance(e, Mul):
        lc, lv = _affine_parts(e.left)
        rc, rv = _affine_parts(e.right)
        if lv and rv:
            raise ValueError("not an affine expression (product of variables)")
        if lv:
            return lc * rc, {v: c * rc for v, c in lv.items()}
        return lc * rc, {v: c * lc for v, c in rv.items()}
    if isinstance(e, Div):
        rc, rv = _affine_parts(e.right)
        if rv or rc == 0:
            raise ValueError("not an affine expression (non-constant divisor)")
        lc, lv = _affine_parts(e.left)
        return lc / rc, {v: c / rc for v, c in lv.items()}
    if isinstance(e, Pow):
        if e.exponent == 0:
            return Fraction(1), {}
        if e.exponent == 1:
            return _affine_parts(e.base)
        raise ValueError("not an affine expression (exponent > 1)")
    raise TypeError(f"not an Expr node: {e!r}")


@dataclass(frozen=True)
class HyperTerm:
    """constant * (-1)^sign * prod binom(top, bottom)^exp."""

    constant: Fraction
    sign: AffineForm
    factors: tuple[tuple[AffineForm, AffineForm, int], ...]

    def __post_init__(self):
        for top, bottom, exp in self.factors:
            if exp not in (1, -1):
                raise ValueError("factor exponent must be +1 or -1")

    # -- exact evaluation ---------------------------------------------------

    def evaluate(self, assign, cache: dict | None = None) -> Fraction:
        """Exact value at an assignment of Fractions to every variable used."""
        sign_val = self.sign.evaluate(assign)
        if sign_val.denominator != 1:
            raise ValueError("sign exponent is not an integer at this assignment")
        value = -self.constant if int(sign_val) % 2 else self.constant
        for top, bottom, exp in self.factors:
            t = top.evaluate(assign)
            b = bottom.evaluate(assign)
            f = _eval_binomial(t, b, cache)
            if exp == 1:
                value *= f
            else:
                if f == 0:
                    raise HyperTermPole(
                        f"binom({top.render()},{bottom.render()}) vanished in a denominator")
                value /= f
        return value

    # -- shift ratio ----------------------------------------------------------

    def shift_ratio(self, name: str) -> RatFunc:
        """T(name+1)/T(name) as a canonical rational function."""
        delta_sign = self.sign.coeff(name)
        if delta_sign.denominator != 1:
            raise NonHypergeometricShift(
                f"sign exponent moves by {delta_sign} under a unit shift of {name}")
        ratio = RatFunc.const(-1 if int(delta_sign) % 2 else 1)
        for top, bottom, exp in self.factors:
            a = top.coeff(name)
            b = bottom.coeff(name)
            if a.denominator != 1 or b.denominator != 1:
                raise NonHypergeometricShift(
                    f"binom({top.render()},{bottom.render()}) shifts by a non-integer in {name}")
            a, b = int(a), int(b)
            if a == 0 and b == 0:
                continue
            top_poly = top.to_poly()
            bottom_poly = bottom.to_poly()
            contrib = _gamma_ratio(top_poly + 1, a)
            contrib = contrib / _gamma_ratio(bottom_poly + 1, b)
            contrib = contrib / _gamma_ratio(top_poly - bottom_poly + 1, a - b)
            ratio = ratio * contrib if exp == 1 else ratio / contrib
        return ratio

    def render(self) -> str:
        parts = []
        if self.sign.coeffs or self.sign.constant:
            parts.append(f"sign({self.sign.render()})")
        if self.constant != 1 or not self.factors:
            parts.append(str(self.constant))
        for top, bottom, exp in self.factors:
            suffix = "" if exp == 1 else "^-1"
            parts.append(f"binom({top.render()},{bottom.render()}){suffix}")
        return " * ".join(parts)


def _eval_binomial(t: Fraction, b: Fraction, cache: dict | None) -> Fraction:
    """binom(t, b) for arguments where it is a rational number.

    With Gamma(t+1)/(Gamma(b+1) Gamma(t-b+1)) as the reference meaning:
    a pole below the bar alone gives 0, a pole above *and* below is a
    genuine indeterminacy (raised as a pole, so callers can skip the draw),
    and the two regular shapes are the falling-factorial form (integer b)
    and the upper-shift product (integer t - b >= 0).
    """
    if b.denominator == 1:
        if b < 0:
            if t.denominator == 1 and t < 0:
                raise HyperTermPole(
                    f"binom({t},{b}) is indeterminate (0/0 ratio of poles)")
            return Fraction(0)
        key = (t, int(b))
        if cache is not None and key in cache:
            return cache[key]
        value = binom_poly(t, int(b))
    else:
        diff = t - b
        if diff.denominator != 1:
            raise ValueError(
                f"binom({t},{b}) is not rational (neither the lower index nor "
                "the upper shift is an integer)")
        m = int(diff)
        if m < 0:
            # Gamma(t-b+1) has a pole below the bar, so the coefficient is 0
            return Fraction(0)
        key = (b, m, "up")
        if cache is not None and key in cache:
            return cache[key]
        value = binom_upper_shift(b, m)
    if cache is not None:
        cache[key] = value
    return value


def _gamma_ratio(x: MultiPoly, m: int) -> RatFunc:
    """Gamma(x+m)/Gamma(x): prod_{i=0..m-1}(x+i), or its reciprocal shape."""
    out = RatFunc.const(1)
    if m >= 0:
        for i in range(m):
            out = out * RatFunc.from_poly(x + i)
    else:
        for i in range(1, -m + 1):
            out = out / RatFunc.from_poly(x - i)
    return out
