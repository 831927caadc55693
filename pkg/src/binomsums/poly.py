"""Sparse multivariate polynomials and canonical rational functions over Q.

The variable list is fixed and ordered once for the whole package:

    n, k, j, alpha, beta, s, t, p

Exponent vectors are 8-tuples over this list, monomials are ordered
graded-lexicographically (total degree first, then the exponent tuple with
earlier variables weighing more), and that order is what "leading term"
means everywhere below.  Fixing the order globally makes canonical forms
byte-stable: two RatFunc values are equal as functions iff they are equal
as data.

Canonical form of a RatFunc: numerator and denominator coprime (their gcd
is a unit), denominator primitive with integer coefficients and positive
leading coefficient.  Subtraction therefore normalizes to the zero RatFunc
exactly when the two sides agree as functions, which is the zero-test the
certificate verification reduces to.

GCDs are computed by the integer-evaluation heuristic (evaluate all but
finitely many variables at a large integer, take the gcd one level down,
reconstruct coefficients from balanced base-xi digits, and certify the
candidate by exact trial division), with a content/primitive-part
pseudo-remainder sequence as the fallback when the heuristic fails to
certify.  Certificate residual arithmetic produces inputs around total
degree 12 in four or five variables, which is exactly where plain primitive
PRS drowns in coefficient swell but the verified heuristic stays quick.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd as int_gcd
from typing import Mapping

__all__ = [
    "VARS",
    "MultiPoly",
    "RatFunc",
    "RatFuncPole",
    "ZeroDenominator",
    "poly_gcd",
]

VARS = ("n", "k", "j", "alpha", "beta", "s", "t", "p")
_INDEX = {name: i for i, name in enumerate(VARS)}
_NVARS = len(VARS)
_ZERO_EXP = (0,) * _NVARS

_F0 = Fraction(0)
_F1 = Fraction(1)


class ZeroDenominator(ZeroDivisionError):
    """A rational function was built with the zero polynomial below the bar."""


class RatFuncPole(ZeroDivisionError):
    """Evaluation hit a zero of the denominator."""


def _grlex_key(exp: tuple[int, ...]) -> tuple:
    return (sum(exp), exp)


class MultiPoly:
    """Sparse polynomial: map from exponent 8-tuple to nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        if terms:
            self.terms = {exp: c for exp, c in terms.items() if c}
        else:
            self.terms = {}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def const(cls, value) -> "MultiPoly":
        return cls({_ZERO_EXP: Fraction(value)})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        if name not in _INDEX:
            raise ValueError(f"unknown variable {name!r}; known: {', '.join(VARS)}")
        exp = [0] * _NVARS
        exp[_INDEX[name]] = 1
        return cls({tuple(exp): _F1})

    # -- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def variables(self) -> set[str]:
        out: set[str] = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    out.add(VARS[i])
        return out

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """(exponent, coefficient) of the graded-lex leading term."""
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    # -- ring operations --------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in o.terms.items():
            v = out.get(exp, _F0) + c
            if v:
                out[exp] = v
            elif exp in out:
                del out[exp]
        res = MultiPoly.__new__(MultiPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = MultiPoly.__new__(MultiPoly)
        res.terms = {exp: -c for exp, c in self.terms.items()}
        return res

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(exp, _F0) + c1 * c2
                if v:
                    out[exp] = v
                elif exp in out:
                    del out[exp]
        res = MultiPoly.__new__(MultiPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial power needs a non-negative integer")
        out = MultiPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    __hash__ = None

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, assign: Mapping[str, Fraction]) -> Fraction:
        total = _F0
        for exp, c in self.terms.items():
            val = c
            for i, e in enumerate(exp):
                if e:
                    val *= assign[VARS[i]] ** e
            total += val
        return total

    def shift(self, name: str, delta: int) -> "MultiPoly":
        """Substitute name -> name + delta, expanding (x+delta)^e binomially."""
        if delta == 0:
            return self
        idx = _INDEX[name]
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            e = exp[idx]
            for i in range(e + 1):
                new_exp = list(exp)
                new_exp[idx] = i
                key = tuple(new_exp)
                coeff = c * comb(e, i) * Fraction(delta) ** (e - i)
                v = out.get(key, _F0) + coeff
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        res = MultiPoly.__new__(MultiPoly)
        res.terms = out
        return res

    # -- content / primitive part -------------------------------------------

    def content_primitive(self) -> tuple[Fraction, "MultiPoly"]:
        """Split into content * primitive part.

        The primitive part has coprime integer coefficients and a positive
        leading coefficient; the content carries the sign.  Zero splits as
        (1, 0).
        """
        if not self.terms:
            return _F1, self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = int_gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        if self.leading()[1] < 0:
            content = -content
        prim = MultiPoly.__new__(MultiPoly)
        prim.terms = {exp: c / content for exp, c in self.terms.items()}
        return content, prim

    def divexact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; raises ArithmeticError if not exact."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        d_exp, d_coeff = divisor.leading()
        rem = self
        out: dict[tuple[int, ...], Fraction] = {}
        while not rem.is_zero:
            r_exp, r_coeff = rem.leading()
            q_exp = tuple(a - b for a, b in zip(r_exp, d_exp))
            if any(e < 0 for e in q_exp):
                raise ArithmeticError("polynomial division is not exact")
            q_coeff = r_coeff / d_coeff
            out[q_exp] = q_coeff
            rem = rem - MultiPoly({q_exp: q_coeff}) * divisor
        res = MultiPoly.__new__(MultiPoly)
        res.terms = out
        return res

    # -- display ----------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[exp]
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(VARS[i])
                elif e > 1:
                    factors.append(f"{VARS[i]}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text

    def __repr__(self):
        return f"MultiPoly({self.render()})"


# ---------------------------------------------------------------------------
# GCD
# ---------------------------------------------------------------------------

def _coeffs_in(a: MultiPoly, idx: int) -> dict[int, MultiPoly]:
    """View a as univariate in VARS[idx] with MultiPoly coefficients."""
    out: dict[int, MultiPoly] = {}
    for exp, c in a.terms.items():
        e = exp[idx]
        stripped = list(exp)
        stripped[idx] = 0
        key = tuple(stripped)
        coeff = out.setdefault(e, MultiPoly.zero())
        out[e] = coeff + MultiPoly({key: c})
    return {e: p for e, p in out.items() if not p.is_zero}


def _prem(a: MultiPoly, b: MultiPoly, idx: int) -> MultiPoly:
    """Pseudo-remainder of a by b in VARS[idx] (up to a content factor)."""
    cb = _coeffs_in(b, idx)
    db = max(cb)
    lb = cb[db]
    var_mono = MultiPoly.var(VARS[idx])
    rem = a
    while not rem.is_zero:
        cr = _coeffs_in(rem, idx)
        dr = max(cr)
        if dr < db:
            break
        lr = cr[dr]
        rem = rem * lb - b * lr * var_mono ** (dr - db)
    return rem


def _primitive_in(a: MultiPoly, idx: int) -> MultiPoly:
    """Divide out the content with respect to VARS[idx]."""
    coeffs = _coeffs_in(a, idx)
    cont = MultiPoly.zero()
    for p in coeffs.values():
        cont = poly_gcd(cont, p)
    return a.divexact(cont)


def _prs_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Primitive pseudo-remainder sequence gcd (fallback path)."""
    used = a.variables() | b.variables()
    if not used:
        return MultiPoly.const(1)
    idx = min(_INDEX[name] for name in used)

    ca_map = _coeffs_in(a, idx)
    cb_map = _coeffs_in(b, idx)
    cont_a = MultiPoly.zero()
    for p in ca_map.values():
        cont_a = poly_gcd(cont_a, p)
    cont_b = MultiPoly.zero()
    for p in cb_map.values():
        cont_b = poly_gcd(cont_b, p)
    cont_g = poly_gcd(cont_a, cont_b)

    pa = a.divexact(cont_a)
    pb = b.divexact(cont_b)
    if max(ca_map) < max(cb_map):
        pa, pb = pb, pa
    while not pb.is_zero:
        rem = _prem(pa, pb, idx)
        if rem.is_zero:
            pa, pb = pb, rem
        else:
            pa, pb = pb, _primitive_in(rem, idx)
    pp_g = _primitive_in(pa, idx)
    return (cont_g * pp_g).content_primitive()[1]


class _HeuristicFailed(Exception):
    pass


def _int_norm(a: MultiPoly) -> int:
    return max(abs(c.numerator) for c in a.terms.values())


def _eval_var_int(a: MultiPoly, idx: int, point: int) -> MultiPoly:
    out: dict[tuple[int, ...], Fraction] = {}
    for exp, c in a.terms.items():
        e = exp[idx]
        key = exp
        if e:
            stripped = list(exp)
            stripped[idx] = 0
            key = tuple(stripped)
            c = c * point**e
        v = out.get(key, _F0) + c
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    res = MultiPoly.__new__(MultiPoly)
    res.terms = out
    return res


def _divides(candidate: MultiPoly, a: MultiPoly) -> bool:
    try:
        a.divexact(candidate)
    except ArithmeticError:
        return False
    return True


def _interpolate_digits(values: MultiPoly, idx: int, point: int) -> MultiPoly:
    """Rebuild a polynomial in VARS[idx] from its balanced base-point digits."""
    half = point // 2
    out: dict[tuple[int, ...], Fraction] = {}
    power = 0
    current = values
    while not current.is_zero:
        rest: dict[tuple[int, ...], Fraction] = {}
        for exp, c in current.terms.items():
            digit = c.numerator % point
            if digit > half:
                digit -= point
            if digit:
                placed = list(exp)
                placed[idx] = power
                out[tuple(placed)] = Fraction(digit)
            carry = (c - digit) / point
            if carry:
                rest[exp] = carry
        nxt = MultiPoly.__new__(MultiPoly)
        nxt.terms = rest
        current = nxt
        power += 1
    res = MultiPoly.__new__(MultiPoly)
    res.terms = out
    return res


def _int_content(a: MultiPoly) -> int:
    out = 0
    for c in a.terms.values():
        out = int_gcd(out, c.numerator)
        if out == 1:
            return 1
    return out


def _heugcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Heuristic gcd of two nonzero integer-coefficient polynomials.

    The integer-content gcd is split off at every level and multiplied back
    at the end: the content of the evaluated images carries the point-power
    factors that encode monomial divisibility, so it must survive the
    recursion.  Candidates are certified by trial division; raises
    _HeuristicFailed when six evaluation points in a row fail to certify.
    """
    used = a.variables() | b.variables()
    if not used:
        return MultiPoly.const(int_gcd(int(_int_norm(a)), int(_int_norm(b))))
    ca, cb = _int_content(a), _int_content(b)
    content = int_gcd(ca, cb)
    if ca > 1:
        a = a * Fraction(1, ca)
    if cb > 1:
        b = b * Fraction(1, cb)
    idx = min(_INDEX[name] for name in used)
    point = 2 * min(_int_norm(a), _int_norm(b)) + 29
    for _ in range(6):
        aa = _eval_var_int(a, idx, point)
        bb = _eval_var_int(b, idx, point)
        if not aa.is_zero and not bb.is_zero:
            sub = _heugcd(aa, bb)
            candidate = _interpolate_digits(sub, idx, point).content_primitive()[1]
            if not candidate.is_zero and _divides(candidate, a) and _divides(candidate, b):
                return candidate * content
        point = point * 73794 // 27011 + 1
    raise _HeuristicFailed


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """The gcd of a and b over Q, primitive with positive leading coeff.

    gcd(0, 0) = 0; otherwise the result divides both arguments exactly and
    every common divisor divides it (certified by trial division on the
    heuristic path, by the PRS theory on the fallback path).
    """
    if a.is_zero and b.is_zero:
        return MultiPoly.zero()
    if a.is_zero:
        return b.content_primitive()[1]
    if b.is_zero:
        return a.content_primitive()[1]
    pa = a.content_primitive()[1]
    pb = b.content_primitive()[1]
    if len(pa.terms) == 1 and len(pb.terms) == 1:
        exp = tuple(min(e1, e2) for e1, e2 in zip(*pa.terms, *pb.terms))
        return MultiPoly({exp: _F1})
    try:
        return _heugcd(pa, pb)
    except _HeuristicFailed:
        return _prs_gcd(pa, pb)


# ---------------------------------------------------------------------------
# Canonical rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """Quotient of MultiPolys in canonical form (see module docstring)."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        if den.is_zero:
            raise ZeroDenominator("zero denominator expression")
        if num.is_zero:
            self.num = MultiPoly.zero()
            self.den = MultiPoly.const(1)
            return
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num = num.divexact(g)
            den = den.divexact(g)
        c, prim_den = den.content_primitive()
        self.den = prim_den
        self.num = num * (1 / c)

    @classmethod
    def const(cls, value) -> "RatFunc":
        return cls(MultiPoly.const(value), MultiPoly.const(1))

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return cls(MultiPoly.var(name), MultiPoly.const(1))

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RatFunc":
        return cls(p, MultiPoly.const(1))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerced(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero:
            raise ZeroDenominator("zero denominator expression")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return RatFunc.const(1) / self ** (-exponent)
        return RatFunc(self.num**exponent, self.den**exponent)

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    __hash__ = None

    def evaluate(self, assign: Mapping[str, Fraction]) -> Fraction:
        den = self.den.evaluate(assign)
        if den == 0:
            raise RatFuncPole("pole at assignment")
        return self.num.evaluate(assign) / den

    def shift(self, name: str, delta: int) -> "RatFunc":
        """Substitute name -> name + delta."""
        return RatFunc(self.num.shift(name, delta), self.den.shift(name, delta))

    def render(self) -> str:
        if self.den == MultiPoly.const(1):
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self):
        return f"RatFunc({self.render()})"
