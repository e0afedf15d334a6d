"""Command-line interface.

Exit codes: 0 = success / verified; 1 = negative verdict (failed hypotheses,
failed bound, violations); 2 = input error (bad file, bad arguments);
3 = internal consistency failure (conservation or catalog assertions).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import fixtures as fixtures_mod
from . import graphio, ledger, search, theorems
from .blocks import decompose
from .errors import (
    ConservationViolation,
    HypothesisViolated,
    PlaneBlocksError,
    UnexpectedBlock,
)
from .plane import PlaneGraph

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class _CliError(Exception):
    pass


def _read_graph(path: str) -> PlaneGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from exc
    return graphio.parse_graph(text)


def _emit(report: dict, fmt: str, out: Optional[str]) -> None:
    data = graphio.write_report(report, fmt)
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)


def _parse_constraints(n: int, spec: Optional[str]) -> search.ConstraintSet:
    kwargs: dict = {"n": n}
    forbidden: list[int] = []
    for token in (spec or "").split(","):
        token = token.strip().lower()
        if not token:
            continue
        if token.startswith("c") and token.endswith("free"):
            try:
                forbidden.append(int(token[1:-4]))
            except ValueError:
                raise _CliError(f"bad constraint token {token!r}") from None
        elif token == "bipartite":
            kwargs["bipartite"] = True
        elif token == "trianglefree":
            kwargs["triangle_free"] = True
        elif token.startswith("mindeg="):
            kwargs["min_degree"] = int(token.split("=", 1)[1])
        elif token.startswith("exactmindeg="):
            kwargs["exact_min_degree"] = int(token.split("=", 1)[1])
        elif token in ("2connected", "biconnected"):
            kwargs["two_connected"] = True
        elif token == "deg2rule":
            kwargs["deg2_neighbor_ok"] = True
        else:
            raise _CliError(
                f"unknown constraint {token!r}; use cNfree, bipartite, "
                "trianglefree, mindeg=K, exactmindeg=K, 2connected, deg2rule"
            )
    kwargs["forbidden_cycles"] = tuple(forbidden)
    return search.ConstraintSet(**kwargs)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="planeblocks",
        description="block decompositions and edge-bound verification "
        "for plane graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("decompose", help="show the block decomposition")
    p.add_argument("graph")
    p.add_argument("--mode", choices=("triangular", "quadrangular"), required=True)
    add_common(p)

    p = sub.add_parser("ledger", help="show the contribution ledger")
    p.add_argument("graph")
    p.add_argument("--mode", choices=("triangular", "quadrangular"), required=True)
    add_common(p)

    p = sub.add_parser("verify", help="run a theorem profile end to end")
    p.add_argument("graph")
    p.add_argument("--theorem", required=True)
    p.add_argument(
        "--force",
        action="store_true",
        help="evaluate blocks and bound even if hypotheses fail "
        "(the verdict still counts as negative)",
    )
    add_common(p)

    p = sub.add_parser("bound", help="print and evaluate a profile's bound")
    p.add_argument("--theorem", required=True)
    p.add_argument("graph", nargs="?", help="evaluate at this graph's parameters")
    p.add_argument("--n", type=int, help="evaluate at this vertex count")
    p.add_argument("--k", type=int, default=0, help="degree-2 vertex count")
    p.add_argument("--e23", type=int, default=0, help="(2,3)-degree edge count")

    p = sub.add_parser("saturate", help="add chords until no bounded 6-face remains")
    p.add_argument("graph")
    p.add_argument("--out", help="write the saturated graph here (default stdout)")

    p = sub.add_parser("search", help="exhaustive extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--constraints", help="comma list, e.g. 'c5free,mindeg=3,2connected'")
    p.add_argument("--ceiling", type=int, help="override the enumeration ceiling")
    p.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="worker count (results are schedule-independent; currently "
        "executed on a single worker)",
    )
    p.add_argument("--witness-dir", help="dump witness graphs into this directory")
    add_common(p)

    p = sub.add_parser("fixtures", help="write the bundled fixture corpus")
    p.add_argument("--out", required=True, help="target directory")

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (_CliError, PlaneBlocksError, ValueError) as exc:
        if isinstance(exc, (ConservationViolation, UnexpectedBlock)):
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
        if isinstance(exc, HypothesisViolated):
            print(f"hypotheses not satisfied: {exc}", file=sys.stderr)
            return EXIT_NEGATIVE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "decompose":
        g = _read_graph(args.graph)
        d = decompose(g, args.mode)
        _emit(graphio.decomposition_report(g, d), args.format, args.out)
        return EXIT_OK

    if args.command == "ledger":
        g = _read_graph(args.graph)
        led = ledger.build_ledger(g, args.mode)
        _emit(graphio.ledger_report(g, led), args.format, args.out)
        return EXIT_OK

    if args.command == "verify":
        g = _read_graph(args.graph)
        profile = theorems.get_profile(args.theorem)
        verdict = theorems.verify(g, profile, force=args.force)
        _emit(graphio.verdict_report(g, verdict), args.format, args.out)
        return EXIT_OK if verdict.ok else EXIT_NEGATIVE

    if args.command == "bound":
        profile = theorems.get_profile(args.theorem)
        formula = theorems.derive_global_bound(profile)
        print(f"{profile.id}: {formula}")
        if args.graph:
            g = _read_graph(args.graph)
            check = theorems.check_bound(g, profile, force=True)
            frac = graphio.format_fraction
            print(
                f"n={g.n} k={theorems.structural_stats(g.rotations).k}: "
                f"bound {frac(check.bound)}, edges {check.edges}, "
                f"slack {frac(check.slack)}"
            )
            return EXIT_OK if check.ok else EXIT_NEGATIVE
        if args.n is not None:
            value = formula.evaluate(args.n, k=args.k, e23=args.e23)
            print(f"n={args.n} k={args.k} e23={args.e23}: bound {graphio.format_fraction(value)}")
        return EXIT_OK

    if args.command == "saturate":
        g = _read_graph(args.graph)
        result = theorems.saturate_six_faces(g)
        chords = ", ".join(f"{u}-{v}" for u, v in result.chords) or "none"
        text = graphio.serialize_graph(
            result.graph, comment=f"saturated; chords added: {chords}"
        )
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK

    if args.command == "search":
        cs = _parse_constraints(args.n, args.constraints)
        if args.jobs < 1:
            raise _CliError("--jobs must be at least 1")
        start = time.perf_counter()
        result = search.extremal_search(cs, ceiling=args.ceiling)
        elapsed = time.perf_counter() - start
        report = {
            "schema": graphio.REPORT_SCHEMA,
            "kind": "search",
            "search": {
                "n": result.n,
                "max_edges": result.max_edges,
                "witnesses": [
                    graphio.serialize_graph(w) for w in result.witnesses
                ],
                "stats": {
                    "candidates": result.stats.candidates,
                    "expanded": result.stats.expanded,
                    "children": result.stats.children,
                    "emitted": result.stats.emitted,
                },
            },
        }
        if args.witness_dir:
            directory = Path(args.witness_dir)
            directory.mkdir(parents=True, exist_ok=True)
            for i, w in enumerate(result.witnesses):
                (directory / f"witness_{i:03d}.graph").write_text(
                    graphio.serialize_graph(w)
                )
        _emit(report, args.format, args.out)
        print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
        return EXIT_OK

    if args.command == "fixtures":
        written = fixtures_mod.write_all(args.out)
        for path in written:
            print(path)
        return EXIT_OK

    raise _CliError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
