"""Certificate pairs: symbolic residuals, reports, telescoping, fixtures."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from binomsums.expr import parse_expr, to_ratfunc
from binomsums.hyperterm import HyperTerm
from binomsums.wz import (
    PAIR_NAMES,
    WZFixtureError,
    builtin_pairs,
    certificate_residual,
    draw_rationals,
    load_pair,
    parse_pair_file,
    parse_term_spec,
    telescoping_sum_check,
    verify_wz_pair,
)

F = Fraction


# ---------------------------------------------------------------------------
# Fixture parsing
# ---------------------------------------------------------------------------

def test_parse_term_spec_full_shape():
    term = parse_term_spec(
        "sign(n+k) * 3/2 * binom(beta+k,k) * binom(alpha,n-k)^-1")
    assert term.constant == F(3, 2)
    assert term.sign.coeff("n") == 1 and term.sign.coeff("k") == 1
    assert len(term.factors) == 2
    assert term.factors[0][2] == 1
    assert term.factors[1][2] == -1


def test_parse_term_spec_errors_carry_position():
    with pytest.raises(WZFixtureError) as exc:
        parse_term_spec("binom(n,k)^2", line=3)
    assert exc.value.line == 3
    with pytest.raises(WZFixtureError):
        parse_term_spec("binom(n)")
    with pytest.raises(WZFixtureError):
        parse_term_spec("sign(n*k)")
    with pytest.raises(WZFixtureError):
        parse_term_spec("n+k")       # bare non-constant factor


def test_parse_pair_file_round_trip():
    body = """
    # comment
    term: binom(n,k) * binom(t+k,k)^-1
    certificate: k/(k-n-1)
    orientation: +1
    """
    term, cert, orientation = parse_pair_file(body)
    assert orientation == 1
    assert len(term.factors) == 2
    assert cert == to_ratfunc(parse_expr("k/(k-n-1)"))


def test_parse_pair_file_missing_key():
    with pytest.raises(WZFixtureError):
        parse_pair_file("term: binom(n,k)\norientation: +1\n")


def test_parse_pair_file_bad_orientation():
    with pytest.raises(WZFixtureError):
        parse_pair_file("term: binom(n,k)\ncertificate: k\norientation: 2\n")


def test_builtin_pairs_load():
    pairs = builtin_pairs()
    assert set(pairs) == set(PAIR_NAMES)
    assert pairs["thm1"].extra_index == "j"
    assert pairs["thm2"].orientation == +1
    assert pairs["thm3"].orientation == -1


# ---------------------------------------------------------------------------
# Symbolic residuals (the core certification)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("name", PAIR_NAMES)
def test_certificate_residual_is_zero(name):
    assert certificate_residual(load_pair(name)).is_zero


def test_scaled_certificate_fails_symbolically():
    pair = load_pair("thm1").scaled(F(2))
    residual = certificate_residual(pair)
    assert not residual.is_zero
    # and the residual is genuinely nonzero at a pole-free rational point
    assign = {"n": F(5), "k": F(2), "j": F(1), "alpha": F(1, 2), "beta": F(1, 3),
              "s": F(0), "t": F(0), "p": F(0)}
    assert residual.evaluate(assign) != 0


def test_perturbed_certificate_fails_symbolically():
    pair = load_pair("thm2")
    bumped = pair.with_certificate(pair.certificate + to_ratfunc(parse_expr("1/(n+1)")))
    report = verify_wz_pair(bumped, n_max=4, samples=2, seed=0)
    symbolic = [row for row in report.rows if row.check == "symbolic-residual"]
    assert symbolic and not symbolic[0].ok
    assert not report.passed


def _flip_factor(pair, index):
    factors = list(pair.term.factors)
    top, bottom, exp = factors[index]
    factors[index] = (top, bottom, -exp)
    term = HyperTerm(pair.term.constant, pair.term.sign, tuple(factors))
    return type(pair)(pair.name, term, pair.certificate, pair.orientation,
                      pair.param_names, pair.reject, pair.extra_index)


def test_mutated_pairs_fail():
    # Ten seeded mutations per pair.  Flipping a factor that moves under the
    # n/k shifts, or scaling the certificate, breaks the symbolic residual.
    # A factor free of n and k (thm1's inner-index normalizer) leaves the
    # recurrence intact, so that flip is caught by the telescoping sum
    # instead.
    rng = random.Random(43)
    for name in PAIR_NAMES:
        pair = load_pair(name)
        shifting = [i for i, (top, bottom, _) in enumerate(pair.term.factors)
                    if any(f.coeff(v) for f in (top, bottom) for v in ("n", "k"))]
        static = [i for i in range(len(pair.term.factors)) if i not in shifting]
        mutations = 0
        while mutations < 10:
            kind = rng.randrange(3)
            if kind == 0:
                scale = F(rng.randint(2, 9), rng.randint(1, 4))
                if scale == 1:
                    continue
                assert not certificate_residual(pair.scaled(scale)).is_zero
            elif kind == 1:
                flipped = _flip_factor(pair, rng.choice(shifting))
                assert not certificate_residual(flipped).is_zero
            else:
                if not static:
                    continue
                flipped = _flip_factor(pair, rng.choice(static))
                assert certificate_residual(flipped).is_zero
                results = telescoping_sum_check(
                    flipped, 4, [{"alpha": F(1, 2), "beta": F(1, 3)}])
                assert results[0].ok is False
            mutations += 1


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("name", PAIR_NAMES)
def test_verify_report_all_pass(name):
    report = verify_wz_pair(load_pair(name), n_max=10, samples=20, seed=0)
    assert report.passed
    checks = {row.check for row in report.rows}
    assert "symbolic-residual" in checks
    assert "boundary" in checks
    assert "base-edge" in checks


def test_verify_is_deterministic():
    a = verify_wz_pair(load_pair("thm2"), n_max=6, samples=5, seed=7)
    b = verify_wz_pair(load_pair("thm2"), n_max=6, samples=5, seed=7)
    assert a.rows == b.rows


# ---------------------------------------------------------------------------
# Telescoping sums
# ---------------------------------------------------------------------------

def test_telescoping_thm1_spot():
    pair = load_pair("thm1")
    results = telescoping_sum_check(pair, 6, [{"alpha": F(1, 2), "beta": F(1, 3)}])
    assert results[0].ok is True
    # the unnormalized coefficient identity at n=1, j=0: both sides -5/6
    from binomsums.exact import binom_poly
    lhs = sum((-1) ** k * binom_poly(F(1, 3) + k, k) * binom_poly(F(k), 0)
              * binom_poly(F(1, 2), 1 - k) for k in range(2))
    rhs = -binom_poly(F(1, 3), 0) * binom_poly(F(1, 3) - F(1, 2) + 1, 1)
    assert lhs == rhs == F(-5, 6)


def test_telescoping_thm2_small_n():
    pair = load_pair("thm2")
    results = telescoping_sum_check(pair, 5, [{"s": F(1, 2), "t": F(1, 3)}])
    assert results[0].ok is True


def test_telescoping_thm3_spot():
    pair = load_pair("thm3")
    results = telescoping_sum_check(pair, 4, [{"s": F(1, 2), "p": F(1)}])
    assert results[0].ok is True
    # unnormalized spot value at n=2: both sides of the un-divided identity = 3/4
    from binomsums.exact import binom_poly
    s, p = F(1, 2), 1
    lhs = sum((-1) ** k * binom_poly(F(2), k) * binom_poly(s + k, k)
              * binom_poly(F(k), p) for k in range(3))
    rhs = binom_poly(F(2), p) * binom_poly(s + p, 2)
    assert lhs == rhs == F(3, 4)


def test_telescoping_random_draws():
    for name in PAIR_NAMES:
        pair = load_pair(name)
        rng = random.Random(f"44:{name}")
        draws = []
        while len(draws) < 5:
            d = draw_rationals(rng, pair.param_names, pair.reject, 8, bound=40)
            assert d is not None
            draws.append(d)
        results = telescoping_sum_check(pair, 8, draws)
        assert all(r.ok is True for r in results)


def test_telescoping_pole_is_skipped():
    pair = load_pair("thm2")
    results = telescoping_sum_check(pair, 4, [{"s": F(1, 2), "t": F(-2)}])
    assert results[0].ok is None
    assert "pole" in results[0].reason
