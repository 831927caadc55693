"""The jet oracle: derivative coefficients of base identities reproduce the
harmonic corollaries along an independent path."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from binomsums.catalog.entries import REGISTRY, check_identity, draw_for_entry
from binomsums.catalog.jets_oracle import (
    DerivSpec,
    derived_identity_via_jets,
    general_s_second_derivative,
    lift_sides,
    oracle,
)
from binomsums.exact import harmonic

F = Fraction


def test_order_zero_equals_plain_evaluation():
    # zeroth-order lifting is plain evaluation, for every catalog entry
    for entry in REGISTRY.values():
        for draw in draw_for_entry(entry, seed=3, samples=2, n_max=8):
            for n in (0, 3, 7):
                values = dict(draw)
                if entry.inner_index:
                    values[entry.inner_index] = n          # one inner slice
                left, right = derived_identity_via_jets(entry.id, DerivSpec(),
                                                        n, values)
                assert left == right, (entry.id, n)
                direct = check_identity(entry.id, n, draw)
                assert direct.status == "pass"
                if not entry.inner_index:
                    assert left == direct.lhs and right == direct.rhs


def test_spec_validation():
    with pytest.raises(ValueError):
        DerivSpec((("s", 2), ("t", 1)))
    with pytest.raises(ValueError):
        DerivSpec((("s", 1), ("t", 1), ("p", 1)))
    with pytest.raises(ValueError):
        lift_sides("ID07", DerivSpec((("p", 1),), rescale="nope"), 2,
                   {"s": F(1), "p": F(0)})


def test_id15_reconstruction_spot():
    pair = derived_identity_via_jets(
        "ID07", DerivSpec((("p", 1),), rescale="binom_n_p"), 2,
        {"s": F(1, 2), "p": F(0)})
    assert pair == (F(-3, 16), F(-3, 16))


def test_base_jets_agree_on_all_coefficients():
    # all six jet coefficients of both sides match: the base identities hold
    # identically in a neighborhood, not just to the extracted order
    rng = random.Random(81)
    for n in (1, 4, 9):
        s = F(rng.randint(-30, 30), rng.randint(2, 9))
        t = F(rng.randint(1, 30), rng.randint(1, 9))
        jl, jr = lift_sides("ID06", DerivSpec((("s", 1), ("t", 1))), n,
                            {"s": s, "t": t})
        assert jl == jr
        p0 = F(0)
        jl, jr = lift_sides("ID07", DerivSpec((("p", 2),)), n, {"s": s, "p": p0})
        assert jl == jr


@pytest.mark.parametrize("entry_id", ["ID11", "ID16", "ID17", "ID18",
                                      "ID22", "ID24", "ID25", "ID26"])
def test_oracle_matches_direct_path(entry_id):
    for n in range(0, 21):
        left, right = oracle(entry_id, n)
        assert left == right, (entry_id, n)
        direct = check_identity(entry_id, n, {})
        assert direct.status == "pass"
        assert left == direct.lhs
        assert right == direct.rhs


def test_oracle_id15_with_draws():
    entry = REGISTRY["ID15"]
    for draw in draw_for_entry(entry, seed=4, samples=5, n_max=12):
        for n in range(0, 13, 3):
            left, right = oracle("ID15", n, s=draw["s"])
            assert left == right
            direct = check_identity("ID15", n, draw)
            assert direct.status == "pass"
            assert left == direct.lhs


def test_general_s_second_derivative():
    rng = random.Random(82)
    for _ in range(6):
        s = F(rng.randint(-40, 40), rng.randint(2, 9))
        n = rng.randint(0, 10)
        out = general_s_second_derivative(n, s)
        assert out["jet_lhs"] == out["jet_rhs"] == out["closed_lhs"] == out["closed_rhs"]


def test_general_s_specializes_to_id18():
    for n in range(0, 12):
        out = general_s_second_derivative(n, F(n))
        assert out["jet_lhs"] == out["jet_rhs"] == 4 * harmonic(n) ** 2
        direct = check_identity("ID18", n, {})
        assert direct.lhs * 4 == out["jet_rhs"]
