"""Deterministic suite runner over the catalog and the certificate pairs.

A run is fully determined by (seed, n_max override, samples, filter,
mutations): parameter draws are seeded per entry id, rows are emitted in
(id, n, draw) order, and rationals are rendered in the canonical string
format, so repeated runs are byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..exact import harmonic_cache, render_rational
from ..wz import (
    PAIR_NAMES,
    builtin_pairs,
    certificate_residual,
    draw_rationals,
    telescoping_sum_check,
    verify_wz_pair,
)
from .entries import apply_mutations, check_identity, draw_for_entry

__all__ = ["SuiteConfig", "ResultRow", "SuiteReport", "run_catalog", "run_suite", "run_wz"]

WZ_N_MAX = 10


@dataclass(frozen=True)
class SuiteConfig:
    n_max: int | None = None          # None: per-entry defaults
    samples: int = 20
    seed: int = 0
    only: tuple[str, ...] = ()        # entry ids and/or pair names
    mutations: tuple[str, ...] = ()
    wz_scale: Fraction | None = None  # certificate scaling (negative control)


@dataclass(frozen=True)
class ResultRow:
    id: str
    params: dict[str, str]
    n: int | None
    lhs: str | None
    rhs: str | None
    status: str                        # pass | fail | skipped
    reason: str = ""


@dataclass
class SuiteReport:
    suite: str
    seed: int
    results: list[ResultRow] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for row in self.results:
            out[row.status] += 1
        return out

    @property
    def failed(self) -> bool:
        return any(row.status == "fail" for row in self.results)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "results": [
                {"id": r.id, "params": r.params, "n": r.n, "lhs": r.lhs,
                 "rhs": r.rhs, "status": r.status, "reason": r.reason}
                for r in self.results
            ],
            "summary": self.counts(),
        }

    def render_text(self) -> str:
        lines = [f"suite: {self.suite}   seed: {self.seed}"]
        for r in self.results:
            params = ",".join(f"{k}={v}" for k, v in sorted(r.params.items())) or "-"
            n = "-" if r.n is None else str(r.n)
            lhs = "-" if r.lhs is None else r.lhs
            rhs = "-" if r.rhs is None else r.rhs
            line = f"{r.id:<9} n={n:<4} {params:<28} lhs={lhs} rhs={rhs} {r.status}"
            if r.reason:
                line += f"  ({r.reason})"
            lines.append(line)
        c = self.counts()
        lines.append(f"pass={c['pass']} fail={c['fail']} skipped={c['skipped']}")
        return "\n".join(lines)


def _warm_harmonics(n: int) -> None:
    # the whole run shares the warmed tables read-only afterwards
    harmonic_cache(1).grow_to(2 * n + 2)
    harmonic_cache(2).grow_to(2 * n + 2)


def _selected(only: tuple[str, ...], name: str) -> bool:
    return not only or name in only


def run_catalog(config: SuiteConfig) -> SuiteReport:
    """Every selected entry at every n up to its depth, for every draw."""
    report = SuiteReport("catalog", config.seed)
    entries = apply_mutations(config.mutations)
    max_depth = max((config.n_max if config.n_max is not None else e.n_max)
                    for e in entries.values())
    _warm_harmonics(max_depth)
    for entry_id, entry in entries.items():
        if not _selected(config.only, entry_id):
            continue
        n_max = config.n_max if config.n_max is not None else entry.n_max
        draws = draw_for_entry(entry, config.seed, config.samples, n_max)
        for n in range(n_max + 1):
            for draw in draws:
                if draw is None:
                    report.results.append(ResultRow(
                        entry_id, {}, n, None, None, "skipped",
                        "no admissible draw after 1000 tries"))
                    continue
                result = check_identity(entry_id, n, draw, entries)
                report.results.append(ResultRow(
                    entry_id, result.params, n,
                    None if result.lhs is None else render_rational(result.lhs),
                    None if result.rhs is None else render_rational(result.rhs),
                    result.status, result.reason))
    return report


def run_wz(config: SuiteConfig) -> SuiteReport:
    """Symbolic + boundary + telescoping rows for the selected pairs."""
    report = SuiteReport("wz", config.seed)
    n_max = config.n_max if config.n_max is not None else WZ_N_MAX
    for name in PAIR_NAMES:
        if not (_selected(config.only, name) or _selected(config.only, f"WZ-{name}")):
            continue
        pair = builtin_pairs()[name]
        if config.wz_scale is not None:
            pair = pair.scaled(config.wz_scale)
        row_id = f"WZ-{name}"

        residual = certificate_residual(pair)
        report.results.append(ResultRow(
            row_id, {}, None, None, None,
            "pass" if residual.is_zero else "fail",
            "symbolic residual = 0" if residual.is_zero
            else "symbolic residual != 0"))

        verification = verify_wz_pair(pair, n_max=n_max,
                                      samples=config.samples, seed=config.seed)
        for row in verification.rows:
            if row.check == "symbolic-residual":
                continue     # already reported above
            report.results.append(ResultRow(
                row_id, row.params, row.n, None, None,
                "pass" if row.ok else "fail",
                f"{row.check}: {row.detail}" if row.detail else row.check))

        rng = random.Random(f"{config.seed}:telescope:{name}")
        draws = []
        for _ in range(config.samples):
            draw = draw_rationals(rng, pair.param_names, pair.reject, n_max)
            if draw is not None:
                draws.append(draw)
        for outcome in telescoping_sum_check(pair, n_max, draws):
            status = ("pass" if outcome.ok else
                      "skipped" if outcome.ok is None else "fail")
            report.results.append(ResultRow(
                row_id, outcome.params, None, None, None, status,
                outcome.reason or "telescoped sum = 1"))
    return report


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Full catalog plus all three certificate pairs."""
    report = SuiteReport("suite", config.seed)
    report.results.extend(run_catalog(config).results)
    report.results.extend(run_wz(config).results)
    return report
