"""Command-line front end.

Subcommands:

    list                         catalog listing (id, parameters, statement)
    check <ID>                   one identity over its seeded grid
    wz [thm1|thm2|thm3|all]      certificate pair verification
    suite                        full catalog plus all three pairs

Shared flags: --n-max, --samples, --seed, --format text|json, --config.
--mutate applies a documented negative control and is accepted by check
(id24-flip-h2n) and wz (scale-cert:<rational>) only.  A JSON config file
may set n_max, samples, seed and format; explicit flags override the file,
the file overrides the defaults (seed 0, samples 20, text).  No environment
variables are read.

Exit codes: 0 all checks passed, 1 at least one fail row, 2 usage, parse or
I/O error.  Output for a fixed seed and flag set is byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog.entries import MUTATIONS, REGISTRY
from .catalog.suite import SuiteConfig, run_catalog, run_suite, run_wz
from .exact import parse_rational
from .wz import PAIR_NAMES

__all__ = ["main", "entry"]

_CONFIG_KEYS = {"n_max": int, "samples": int, "seed": int, "format": str}


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binomsums",
        description="Exact verification of the binomial/harmonic identity catalog.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, mutate: bool):
        p.add_argument("--n-max", type=int, default=None, dest="n_max")
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--format", choices=("text", "json"), default=None)
        p.add_argument("--config", default=None, metavar="PATH")
        if mutate:
            p.add_argument("--mutate", default=None, metavar="SPEC")

    common(sub.add_parser("list", help="list catalog entries"), mutate=False)
    check = sub.add_parser("check", help="check one identity")
    check.add_argument("id", metavar="ID")
    common(check, mutate=True)
    wz = sub.add_parser("wz", help="verify certificate pairs")
    wz.add_argument("pair", nargs="?", default="all",
                    choices=(*PAIR_NAMES, "all"))
    common(wz, mutate=True)
    common(sub.add_parser("suite", help="run everything"), mutate=False)
    return parser


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise UsageError("config file must hold a JSON object")
    out = {}
    for key, value in raw.items():
        if key not in _CONFIG_KEYS:
            raise UsageError(f"unknown config key {key!r}")
        if not isinstance(value, _CONFIG_KEYS[key]) or isinstance(value, bool):
            raise UsageError(f"config key {key!r} has the wrong type")
        out[key] = value
    if "format" in out and out["format"] not in ("text", "json"):
        raise UsageError("config format must be 'text' or 'json'")
    return out


def _effective(args, file_config: dict):
    def pick(flag, key, default):
        if flag is not None:
            return flag
        return file_config.get(key, default)

    return {
        "n_max": pick(args.n_max, "n_max", None),
        "samples": pick(args.samples, "samples", 20),
        "seed": pick(args.seed, "seed", 0),
        "format": pick(args.format, "format", "text"),
    }


def _emit(report, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report.to_json_dict(), indent=2))
        out.write("\n")
    else:
        out.write(report.render_text())
        out.write("\n")


def _run(args, out) -> int:
    settings = _effective(args, _load_config(args.config))
    fmt = settings["format"]

    if args.command == "list":
        if fmt == "json":
            listing = [{"id": e.id, "params": list(e.params.names),
                        "statement": e.statement}
                       for e in REGISTRY.values()]
            out.write(json.dumps(listing, indent=2))
            out.write("\n")
        else:
            for e in REGISTRY.values():
                params = ",".join(e.params.names) or "-"
                out.write(f"{e.id:<6} params={params:<18} {e.statement}\n")
        return 0

    config_kwargs = dict(n_max=settings["n_max"], samples=settings["samples"],
                         seed=settings["seed"])

    if args.command == "check":
        if args.id not in REGISTRY:
            raise UsageError(f"unknown identity id {args.id!r} (see 'list')")
        mutations: tuple[str, ...] = ()
        if args.mutate is not None:
            if args.mutate not in MUTATIONS:
                raise UsageError(f"unknown mutation {args.mutate!r}; known: "
                                 + ", ".join(sorted(MUTATIONS)))
            mutations = (args.mutate,)
        report = run_catalog(SuiteConfig(only=(args.id,), mutations=mutations,
                                         **config_kwargs))
        report.suite = f"check:{args.id}"
    elif args.command == "wz":
        scale = None
        if args.mutate is not None:
            if not args.mutate.startswith("scale-cert:"):
                raise UsageError(
                    f"unknown wz mutation {args.mutate!r}; use scale-cert:<rational>")
            try:
                scale = parse_rational(args.mutate.split(":", 1)[1])
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            if scale == 1:
                raise UsageError("scale-cert expects a rational != 1")
        only = () if args.pair == "all" else (args.pair,)
        report = run_wz(SuiteConfig(only=only, wz_scale=scale, **config_kwargs))
        report.suite = f"wz:{args.pair}"
    else:
        report = run_suite(SuiteConfig(**config_kwargs))

    _emit(report, fmt, out)
    return 1 if report.failed else 0


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _run(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
