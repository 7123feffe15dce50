"""Command-line front end.

Subcommands:
  build        validate a triple and print n, |C|, degree
  params       emit the certificate report as canonical JSON
  verify       run the oracle suite; exit 1 on any mismatch
  export       write edge-list / dot / walk / independent-set files
  hamiltonian  construct (and optionally verify) the snake walk

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
Budgets and the seed may come from a `key = value` config file (--config);
explicit flags win.  When $PSQCAYLEY_OUT_DIR is set, relative --out paths are
placed inside it.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import report as report_mod
from .graph import DEFAULT_MATERIALIZE_CAP, CayleyGraph, TooLargeError
from .group import TripleValidationError, make_prime_triple
from .hamiltonian import snake_walk, verify_walk, walk_lines
from .oracles import DEFAULT_SEED, OracleBudget
from .parameters import independence_certificate

_CONFIG_KEYS = {
    "seed",
    "bfs-sources",
    "max-exact-vertices",
    "max-index-vertices",
    "sample-pairs",
    "sample-edges",
    "materialize-cap",
}


class UsageError(Exception):
    pass


def _parse_primes(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--primes expects three comma-separated integers, got {text!r}")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"--primes expects integers, got {text!r}") from None
    return a, b, c


def _load_config(path: str) -> dict[str, int]:
    values: dict[str, int] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[key] = int(value.strip())
        except ValueError:
            raise UsageError(f"{path}:{lineno}: value for {key!r} must be an integer") from None
    return values


def _resolve_budget(args: argparse.Namespace) -> tuple[OracleBudget, int]:
    config = _load_config(args.config) if getattr(args, "config", None) else {}
    seed = args.seed if args.seed is not None else config.get("seed", DEFAULT_SEED)
    sources = (
        args.budget_sources
        if getattr(args, "budget_sources", None) is not None
        else config.get("bfs-sources")
    )
    budget = OracleBudget(
        max_exact_vertices=config.get("max-exact-vertices", 400),
        max_index_vertices=config.get("max-index-vertices", 300),
        bfs_sources=sources,
        sample_pairs=config.get("sample-pairs", 100_000),
        sample_edges=config.get("sample-edges", 1_000_000),
        seed=seed,
    )
    cap = config.get("materialize-cap", DEFAULT_MATERIALIZE_CAP)
    return budget, cap


def _out_path(name: str) -> Path:
    path = Path(name)
    base = os.environ.get("PSQCAYLEY_OUT_DIR")
    if base and not path.is_absolute():
        path = Path(base) / path
    return path


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="psqcayley", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--primes", required=True, metavar="A,B,C")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--config", default=None, metavar="FILE")

    p = sub.add_parser("build", help="validate the triple and print basic facts")
    add_common(p)

    p = sub.add_parser("params", help="emit the certificate report as JSON")
    add_common(p)
    p.add_argument("--oracle", action="store_true", help="also run the full oracle suite")
    p.add_argument("--budget-sources", type=int, default=None, metavar="N")
    p.add_argument("--out", default=None, metavar="FILE")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (non-reproducible)")

    p = sub.add_parser("verify", help="run the oracle suite; exit 1 on mismatch")
    add_common(p)
    p.add_argument("--budget-sources", type=int, default=None, metavar="N")

    p = sub.add_parser("export", help="write a graph/walk/independent-set file")
    add_common(p)
    p.add_argument("--format", required=True, choices=["edges", "dot", "walk", "independent-set"])
    p.add_argument("--out", required=True, metavar="FILE")

    p = sub.add_parser("hamiltonian", help="construct the snake walk")
    add_common(p)
    p.add_argument("--check", action="store_true", help="verify the walk after construction")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)

    try:
        triple = make_prime_triple(*_parse_primes(args.primes))
        budget, cap = _resolve_budget(args)

        if args.command == "build":
            cset_size = CayleyGraph.from_triple(triple).degree
            print(f"primes: {triple.alpha},{triple.beta},{triple.gamma}")
            print(f"n: {triple.n}")
            print(f"|C|: {cset_size}")
            print(f"degree: {cset_size}")
            return 0

        if args.command == "params":
            rep = report_mod.build_report(
                triple, budget, materialize_cap=cap, include_timings=args.timings
            )
            payload = report_mod.report_bytes(rep)
            if args.out:
                _out_path(args.out).write_bytes(payload)
            else:
                sys.stdout.write(payload.decode("ascii"))
            if args.oracle:
                outcome = report_mod.run_verification(
                    triple, report_mod.auto_budget(triple, budget), materialize_cap=cap
                )
                for line in outcome.lines:
                    print(line, file=sys.stderr)
                if not outcome.ok:
                    return 1
            return 0

        if args.command == "verify":
            outcome = report_mod.run_verification(
                triple, report_mod.auto_budget(triple, budget), materialize_cap=cap
            )
            for line in outcome.lines:
                print(line)
            print("verification OK" if outcome.ok else "verification FAILED")
            return 0 if outcome.ok else 1

        if args.command == "export":
            g = CayleyGraph.from_triple(triple)
            if args.format in ("edges", "dot"):
                payload = g.export(args.format, cap=cap)
            elif args.format == "walk":
                payload = ("\n".join(walk_lines(snake_walk(triple))) + "\n").encode("ascii")
            else:
                cert = independence_certificate(triple)
                payload = ("\n".join(str(v) for v in cert.vertices) + "\n").encode("ascii")
            _out_path(args.out).write_bytes(payload)
            return 0

        if args.command == "hamiltonian":
            walk = snake_walk(triple)
            print(f"kind: {walk.kind}")
            print(f"length: {len(walk.vertices)}")
            print(f"endpoints: {walk.endpoints[0]} {walk.endpoints[1]}")
            if args.check:
                g = CayleyGraph.from_triple(triple)
                ok = verify_walk(walk, g)
                print(f"verified: {ok}")
                return 0 if ok else 1
            return 0

        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, TripleValidationError, OverflowError, TooLargeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
