"""Certificate pairs and their verification.

A pair couples a hypergeometric term T(n, k) with a certificate ratio
c(n, k) = G(n, k)/T(n, k) and an orientation sigma in {+1, -1} such that

    sigma * (T(n+1, k) - T(n, k)) = G(n, k+1) - G(n, k).

Dividing that difference equation by T(n, k) turns it into an identity of
rational functions:

    sigma * (r_n - 1) - c(n, k+1) * r_k + c(n, k) = 0

with r_n = T(n+1,k)/T(n,k) and r_k = T(n,k+1)/T(n,k); the left-hand side is
:func:`certificate_residual`, and the pair is certified symbolically when
the residual normalizes to the zero rational function.  This sidesteps the
removable 0*inf points of G itself (e.g. at k = n+1) that a pointwise check
would trip over.

Verification of a pair combines
  (a) the symbolic residual check,
  (b) boundary vanishing G(n, 0) = G(n, n+2) = 0, evaluated exactly on
      seeded random parameter draws, which is what collapses the telescoped
      sum, and
  (c) the base and edge values T(0, 0) = 1 and T(n, n+1) = 0 that convert
      "the sum is constant" into "the sum is 1".

The three shipped pairs live as plain-text fixtures next to this module;
each file carries exactly the lines

    term: sign(<affine>) * <rational> * binom(<affine>,<affine>)^<+1|-1> * ...
    certificate: <expression>
    orientation: +1|-1

with '#' comments allowed, affine/expression syntax as in
:mod:`binomsums.expr`, the sign(...) and constant parts optional, and '^+1'
omissible.  Parse errors report line and column.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Iterable

from .expr import ExprSyntaxError, parse_expr, to_ratfunc
from .hyperterm import AffineForm, HyperTerm, HyperTermPole
from .poly import RatFunc, RatFuncPole

__all__ = [
    "CheckRow",
    "VerificationReport",
    "WZFixtureError",
    "WZPair",
    "builtin_pairs",
    "certificate_residual",
    "draw_rationals",
    "parse_term_spec",
    "parse_pair_file",
    "telescoping_sum_check",
    "verify_wz_pair",
]

PAIR_NAMES = ("thm1", "thm2", "thm3")


class WZFixtureError(ValueError):
    """Malformed certificate fixture; carries line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class WZPair:
    """A term, its certificate ratio, and bookkeeping for checking it."""

    name: str
    term: HyperTerm
    certificate: RatFunc
    orientation: int
    param_names: tuple[str, ...]
    reject: Callable[[int, dict], str | None]
    extra_index: str | None = None   # inner summation index (ranges 0..n)

    def scaled(self, factor: Fraction) -> "WZPair":
        """Copy with the certificate multiplied by a constant (negative control)."""
        return WZPair(self.name, self.term, self.certificate * factor,
                      self.orientation, self.param_names, self.reject,
                      self.extra_index)

    def with_certificate(self, certificate: RatFunc) -> "WZPair":
        return WZPair(self.name, self.term, certificate, self.orientation,
                      self.param_names, self.reject, self.extra_index)


# ---------------------------------------------------------------------------
# Fixture parsing
# ---------------------------------------------------------------------------

def _scan_balanced(text: str, start: int, line: int, col0: int) -> int:
    """Index just past the ')' matching the '(' at ``start``."""
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i + 1
    raise WZFixtureError("unbalanced parentheses", line, col0 + start + 1)


def _split_top_level(text: str, sep: str) -> list[tuple[int, str]]:
    """Split on a separator outside parentheses; keeps piece offsets."""
    pieces = []
    depth = 0
    begin = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            pieces.append((begin, text[begin:i]))
            begin = i + 1
    pieces.append((begin, text[begin:]))
    return pieces


def _parse_affine(text: str, line: int, col0: int) -> AffineForm:
    try:
        return AffineForm.from_expr(parse_expr(text))
    except ExprSyntaxError as exc:
        raise WZFixtureError(exc.reason, line, col0 + exc.offset + 1) from exc
    except ValueError as exc:
        raise WZFixtureError(str(exc), line, col0 + 1) from exc


def parse_term_spec(text: str, line: int = 1, col0: int = 0) -> HyperTerm:
    """Parse the product form ``sign(...) * const * binom(a,b)^e * ...``."""
    constant = Fraction(1)
    sign = AffineForm.make(0)
    factors: list[tuple[AffineForm, AffineForm, int]] = []
    seen_sign = False
    for offset, piece in _split_top_level(text, "*"):
        at = offset + col0
        chunk = piece.strip()
        pad = offset + (len(piece) - len(piece.lstrip()))
        if not chunk:
            raise WZFixtureError("empty factor", line, at + 1)
        if chunk.startswith("sign"):
            if seen_sign:
                raise WZFixtureError("duplicate sign(...) factor", line, at + 1)
            inner = chunk[4:].strip()
            if not inner.startswith("(") or not inner.endswith(")"):
                raise WZFixtureError("sign needs a parenthesized argument", line, at + 1)
            sign = _parse_affine(inner[1:-1], line, col0 + pad + chunk.find("(") + 1)
            if sign.constant.denominator != 1:
                raise WZFixtureError("sign exponent must have an integer constant",
                                     line, at + 1)
            seen_sign = True
            continue
        if chunk.startswith("binom"):
            rest = chunk[5:].strip()
            if not rest.startswith("("):
                raise WZFixtureError("binom needs '('", line, at + 1)
            close = _scan_balanced(rest, 0, line, col0 + pad)
            args = rest[1:close - 1]
            tail = rest[close:].strip()
            split = _split_top_level(args, ",")
            if len(split) != 2:
                raise WZFixtureError("binom needs exactly two arguments", line, at + 1)
            arg_col = col0 + pad + chunk.find("(") + 1
            top = _parse_affine(split[0][1], line, arg_col + split[0][0])
            bottom = _parse_affine(split[1][1], line, arg_col + split[1][0])
            if tail in ("", "^1", "^+1"):
                exp = 1
            elif tail == "^-1":
                exp = -1
            else:
                raise WZFixtureError(f"bad binomial exponent {tail!r}", line, at + 1)
            factors.append((top, bottom, exp))
            continue
        # bare rational constant
        form = _parse_affine(chunk, line, col0 + pad)
        if form.coeffs:
            raise WZFixtureError("constant factor contains variables", line, at + 1)
        constant *= form.constant
    return HyperTerm(constant, sign, tuple(factors))


def parse_pair_file(text: str) -> tuple[HyperTerm, RatFunc, int]:
    """Parse a fixture file body into (term, certificate, orientation)."""
    fields: dict[str, tuple[str, int, int]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            raise WZFixtureError("expected 'key: value'", line_no, 1)
        key, value = line.split(":", 1)
        key = key.strip()
        if key not in ("term", "certificate", "orientation"):
            raise WZFixtureError(f"unknown key {key!r}", line_no, 1)
        if key in fields:
            raise WZFixtureError(f"duplicate key {key!r}", line_no, 1)
        fields[key] = (value, line_no, line.index(":") + 1)
    for key in ("term", "certificate", "orientation"):
        if key not in fields:
            raise WZFixtureError(f"missing {key!r} line", len(text.splitlines()) + 1, 1)

    value, line_no, col0 = fields["term"]
    term = parse_term_spec(value, line_no, col0)

    value, line_no, col0 = fields["certificate"]
    try:
        certificate = to_ratfunc(parse_expr(value))
    except ExprSyntaxError as exc:
        raise WZFixtureError(exc.reason, line_no, col0 + exc.offset + 1) from exc

    value, line_no, col0 = fields["orientation"]
    orientation_text = value.strip()
    if orientation_text not in ("+1", "-1"):
        raise WZFixtureError("orientation must be +1 or -1", line_no, col0 + 1)
    return term, certificate, int(orientation_text)


# ---------------------------------------------------------------------------
# The three shipped pairs
# ---------------------------------------------------------------------------

def _is_nonneg_int(q: Fraction) -> bool:
    return q.denominator == 1 and q >= 0


def _is_neg_int(q: Fraction) -> bool:
    return q.denominator == 1 and q < 0


def _reject_thm1(n_max: int, a: dict) -> str | None:
    if _is_neg_int(a["alpha"]) or _is_neg_int(a["beta"]):
        return "negative integer parameter"
    if (a["beta"] - a["alpha"]).denominator == 1:
        return "beta - alpha is an integer (boundary binomials may vanish)"
    return None


def _reject_thm2(n_max: int, a: dict) -> str | None:
    if _is_neg_int(a["s"]) or _is_neg_int(a["t"]):
        return "negative integer parameter"
    if (a["s"] + a["t"]).denominator == 1 and a["s"] + a["t"] < 0:
        return "s + t is a negative integer (denominator products vanish)"
    return None


def _reject_thm3(n_max: int, a: dict) -> str | None:
    if _is_neg_int(a["s"]) or _is_neg_int(a["p"]):
        return "negative integer parameter"
    if _is_nonneg_int(a["s"] + a["p"]):
        return "s + p is a non-negative integer (normalizing binomial may vanish)"
    return None


_PAIR_INFO = {
    "thm1": (("alpha", "beta"), _reject_thm1, "j"),
    "thm2": (("s", "t"), _reject_thm2, None),
    "thm3": (("s", "p"), _reject_thm3, None),
}

_CACHED_PAIRS: dict[str, WZPair] = {}


def load_pair(name: str) -> WZPair:
    """Load one of the shipped pairs (thm1, thm2, thm3) from its fixture."""
    if name in _CACHED_PAIRS:
        return _CACHED_PAIRS[name]
    if name not in _PAIR_INFO:
        raise KeyError(f"unknown pair {name!r}; known: {', '.join(PAIR_NAMES)}")
    text = resources.files("binomsums.fixtures").joinpath(f"{name}.wz").read_text()
    term, certificate, orientation = parse_pair_file(text)
    params, reject, extra = _PAIR_INFO[name]
    pair = WZPair(name, term, certificate, orientation, params, reject, extra)
    _CACHED_PAIRS[name] = pair
    return pair


def builtin_pairs() -> dict[str, WZPair]:
    return {name: load_pair(name) for name in PAIR_NAMES}


# ---------------------------------------------------------------------------
# Symbolic residual
# ---------------------------------------------------------------------------

def certificate_residual(pair: WZPair) -> RatFunc:
    """sigma*(r_n - 1) - c(n, k+1)*r_k + c(n, k); zero iff the pair verifies."""
    r_n = pair.term.shift_ratio("n")
    r_k = pair.term.shift_ratio("k")
    c = pair.certificate
    return pair.orientation * (r_n - 1) - c.shift("k", 1) * r_k + c


# ---------------------------------------------------------------------------
# Random parameter draws
# ---------------------------------------------------------------------------

def draw_rationals(rng: random.Random, names: Iterable[str],
                   reject: Callable[[int, dict], str | None],
                   n_max: int, bound: int = 100, max_tries: int = 1000) -> dict | None:
    """One assignment with numerators/denominators bounded, redrawing until
    the rejection predicate accepts; None after max_tries."""
    names = tuple(names)
    for _ in range(max_tries):
        assign = {name: Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
                  for name in names}
        if reject(n_max, assign) is None:
            return assign
    return None


# ---------------------------------------------------------------------------
# Verification report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckRow:
    check: str
    n: int | None
    params: dict
    ok: bool
    detail: str = ""


@dataclass
class VerificationReport:
    pair: str
    seed: int
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)

    def failures(self) -> list[CheckRow]:
        return [row for row in self.rows if not row.ok]


def _certified_companion(pair: WZPair, n: int, k: int, assign: dict,
                         cache: dict | None = None) -> Fraction:
    values = dict(assign)
    values["n"] = Fraction(n)
    values["k"] = Fraction(k)
    return pair.certificate.evaluate(values) * pair.term.evaluate(values, cache)


def verify_wz_pair(pair: WZPair, n_max: int = 10, samples: int = 20,
                   seed: int = 0) -> VerificationReport:
    """Symbolic, boundary, and base/edge checks; failures are recorded rows."""
    report = VerificationReport(pair.name, seed)
    residual = certificate_residual(pair)
    report.rows.append(CheckRow(
        "symbolic-residual", None, {}, residual.is_zero,
        "residual = 0" if residual.is_zero else f"residual = {residual.render()}"))

    rng = random.Random(f"{seed}:wz:{pair.name}")
    for index in range(samples):
        assign = draw_rationals(rng, pair.param_names, pair.reject, n_max)
        if assign is None:
            report.rows.append(CheckRow(
                f"draw-{index}", None, {}, False, "could not draw parameters"))
            continue
        shown = {k: str(v) for k, v in assign.items()}
        cache: dict = {}
        boundary_ok, base_ok = True, True
        detail = ""
        try:
            for n in range(n_max + 1):
                js = range(n + 1) if pair.extra_index else (None,)
                for j in js:
                    values = dict(assign)
                    if j is not None:
                        values[pair.extra_index] = Fraction(j)
                    for k in (0, n + 2):
                        if _certified_companion(pair, n, k, values, cache) != 0:
                            boundary_ok = False
                            detail = f"G({n},{k}) != 0"
            # base and edge values of the term itself
            base = dict(assign)
            if pair.extra_index:
                base[pair.extra_index] = Fraction(0)
            base["n"] = Fraction(0)
            base["k"] = Fraction(0)
            if pair.term.evaluate(base, cache) != 1:
                base_ok = False
                detail = "T(0,0) != 1"
            for n in range(n_max + 1):
                js = range(n + 1) if pair.extra_index else (None,)
                for j in js:
                    values = dict(assign)
                    if j is not None:
                        values[pair.extra_index] = Fraction(j)
                    values["n"] = Fraction(n)
                    values["k"] = Fraction(n + 1)
                    if pair.term.evaluate(values, cache) != 0:
                        base_ok = False
                        detail = f"T({n},{n+1}) != 0"
        except (HyperTermPole, RatFuncPole, ZeroDivisionError) as exc:
            report.rows.append(CheckRow(
                f"draw-{index}", None, shown, False, f"unexpected pole: {exc}"))
            continue
        report.rows.append(CheckRow(
            "boundary", None, shown, boundary_ok,
            detail if not boundary_ok else "G(n,0) = G(n,n+2) = 0"))
        report.rows.append(CheckRow(
            "base-edge", None, shown, base_ok,
            detail if not base_ok else "T(0,0) = 1, T(n,n+1) = 0"))
    return report


# ---------------------------------------------------------------------------
# Telescoping sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TelescopeResult:
    params: dict
    ok: bool | None      # None means skipped
    reason: str = ""


def telescoping_sum_check(pair: WZPair, n_max: int,
                          param_draws: list[dict]) -> list[TelescopeResult]:
    """Check sum_{k=0..n} T(n,k) == 1 for every n <= n_max and every draw.

    For a pair with an inner index the check runs for every value of that
    index in 0..n.  A draw that lands on a pole is reported as skipped, not
    failed.
    """
    results = []
    for assign in param_draws:
        shown = {k: str(v) for k, v in assign.items()}
        cache: dict = {}
        try:
            for n in range(n_max + 1):
                js = range(n + 1) if pair.extra_index else (None,)
                for j in js:
                    values = dict(assign)
                    if j is not None:
                        values[pair.extra_index] = Fraction(j)
                    values["n"] = Fraction(n)
                    total = Fraction(0)
                    for k in range(n + 1):
                        values["k"] = Fraction(k)
                        total += pair.term.evaluate(values, cache)
                    if total != 1:
                        results.append(TelescopeResult(
                            shown, False,
                            f"sum at n={n}" + (f", j={j}" if j is not None else "")
                            + f" is {total}"))
                        raise StopIteration
        except StopIteration:
            continue
        except (HyperTermPole, ZeroDivisionError) as exc:
            results.append(TelescopeResult(shown, None, f"skipped: pole ({exc})"))
            continue
        results.append(TelescopeResult(shown, True))
    return results
