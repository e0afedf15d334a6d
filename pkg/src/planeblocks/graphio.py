"""Graph file parsing/serialization and verification reports.

File format (one graph per file, `#` starts a comment):

    planegraph 1
    n 4
    0: 1 3
    1: 2 0
    2: 3 1
    3: 0 2
    outer: 0->1

Vertex lines list counterclockwise neighbors.  Reports serialize to stable
JSON (sorted keys, no timing data) or a human-readable text table; rationals
are rendered as canonical "p/q" strings, never floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .blocks import BlockDecomposition
from .errors import GraphSyntaxError, MissingOuterDart
from .ledger import ContributionLedger
from .plane import PlaneGraph
from .structure import structural_stats
from .theorems import Verdict

FORMAT_HEADER = "planegraph"
FORMAT_VERSION = 1
REPORT_SCHEMA = "planeblocks-report-v1"


def format_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


# -- graph files -------------------------------------------------------------

def parse_graph(text: str) -> PlaneGraph:
    """Parse a graph file; raises GraphSyntaxError with a 1-based line number."""
    header_seen = False
    n: Optional[int] = None
    rotations: dict[int, list[int]] = {}
    outer: Optional[tuple[int, int]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            parts = line.split()
            if parts[0] != FORMAT_HEADER:
                raise GraphSyntaxError(
                    lineno, f"expected '{FORMAT_HEADER} <version>' header"
                )
            if len(parts) != 2 or parts[1] != str(FORMAT_VERSION):
                raise GraphSyntaxError(
                    lineno, f"unsupported format version {parts[1:]}"
                )
            header_seen = True
            continue
        if line.startswith("n "):
            try:
                n = int(line.split()[1])
            except (IndexError, ValueError):
                raise GraphSyntaxError(lineno, "bad vertex count") from None
            continue
        if line.startswith("outer:"):
            rest = line[len("outer:"):].strip()
            if "->" not in rest:
                raise GraphSyntaxError(lineno, "outer line must be 'outer: u->v'")
            a, _, b = rest.partition("->")
            try:
                outer = (int(a), int(b))
            except ValueError:
                raise GraphSyntaxError(lineno, "outer dart endpoints must be integers") from None
            continue
        if ":" in line:
            head, _, tail = line.partition(":")
            try:
                vid = int(head)
                nbrs = [int(tok) for tok in tail.split()]
            except ValueError:
                raise GraphSyntaxError(lineno, f"bad vertex line {line!r}") from None
            if vid in rotations:
                raise GraphSyntaxError(lineno, f"vertex {vid} listed twice")
            rotations[vid] = nbrs
            continue
        raise GraphSyntaxError(lineno, f"unrecognized line {line!r}")
    if not header_seen:
        raise GraphSyntaxError(1, "missing header")
    if n is None:
        raise GraphSyntaxError(1, "missing 'n <count>' line")
    if sorted(rotations) != list(range(n)):
        missing = sorted(set(range(n)) - set(rotations))
        extra = sorted(set(rotations) - set(range(n)))
        raise GraphSyntaxError(
            1, f"vertex ids must be exactly 0..{n - 1} (missing {missing}, extra {extra})"
        )
    if outer is None:
        raise MissingOuterDart("no 'outer: u->v' line")
    u, v = outer
    if not (0 <= u < n) or v not in rotations[u]:
        raise MissingOuterDart(f"outer dart {u}->{v} is not an edge of the graph")
    return PlaneGraph([rotations[i] for i in range(n)], outer)


def serialize_graph(g: PlaneGraph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"{FORMAT_HEADER} {FORMAT_VERSION}")
    lines.append(f"n {g.n}")
    for v in range(g.n):
        lines.append(f"{v}: " + " ".join(str(w) for w in g.rotations[v]))
    lines.append(f"outer: {g.outer_dart[0]}->{g.outer_dart[1]}")
    return "\n".join(lines) + "\n"


# -- reports -----------------------------------------------------------------

def graph_summary(g: PlaneGraph) -> dict[str, Any]:
    stats = structural_stats(g.rotations)
    return {
        "n": g.n,
        "e": g.e,
        "f": g.f,
        "min_degree": stats.min_degree,
        "bipartite": stats.bipartite,
        "two_connected": stats.two_connected,
        "k": stats.k,
        "e23": stats.e23,
    }


def _ledger_blocks(led: ContributionLedger) -> list[dict[str, Any]]:
    d = led.decomposition
    out = []
    for entry in led.entries:
        b = d.blocks[entry.block_id]
        out.append(
            {
                "id": b.id,
                "kind": b.kind.value,
                "edges": [list(e) for e in sorted(b.edges)],
                "junctions": len(b.junction_vertices),
                "interior_faces": len(b.interior_faces),
                "v": format_fraction(entry.v),
                "e": entry.e,
                "f": format_fraction(entry.f),
                "k": format_fraction(entry.k),
                "e23": entry.e23,
            }
        )
    return out


def decomposition_report(g: PlaneGraph, d: "BlockDecomposition") -> dict[str, Any]:
    return {
        "schema": REPORT_SCHEMA,
        "kind": "decomposition",
        "graph": graph_summary(g),
        "mode": d.mode,
        "blocks": [
            {
                "id": b.id,
                "kind": b.kind.value,
                "edges": [list(e) for e in sorted(b.edges)],
                "junctions": len(b.junction_vertices),
                "interior_faces": len(b.interior_faces),
            }
            for b in d.blocks
        ],
    }


def ledger_report(g: PlaneGraph, led: ContributionLedger) -> dict[str, Any]:
    tv, te, tf, tk, te23 = led.totals
    return {
        "schema": REPORT_SCHEMA,
        "kind": "ledger",
        "graph": graph_summary(g),
        "mode": led.mode,
        "blocks": _ledger_blocks(led),
        "totals": {
            "v": format_fraction(tv),
            "e": te,
            "f": format_fraction(tf),
            "k": format_fraction(tk),
            "e23": te23,
        },
    }


def verdict_report(g: PlaneGraph, verdict: Verdict) -> dict[str, Any]:
    rep: dict[str, Any] = {
        "schema": REPORT_SCHEMA,
        "kind": "verdict",
        "graph": graph_summary(g),
        "profile": verdict.profile_id,
        "forced": verdict.forced,
        "hypotheses": {
            "ok": verdict.hypotheses.ok,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail}
                for c in verdict.hypotheses.checks
            ],
            "warnings": list(verdict.hypotheses.warnings),
        },
        "ok": verdict.ok,
    }
    if verdict.ledger is not None:
        rep["mode"] = verdict.ledger.mode
        rep["blocks"] = _ledger_blocks(verdict.ledger)
        rep["block_values"] = [
            {
                "id": bv.block_id,
                "kind": bv.kind.value,
                "value": format_fraction(bv.value),
            }
            for bv in verdict.block_values
        ]
        rep["violations"] = [bv.block_id for bv in verdict.violations]
        rep["total"] = format_fraction(verdict.total)
        rep["warnings"] = list(verdict.warnings)
        rep["chords_added"] = [list(c) for c in verdict.chords_added]
    if verdict.bound is not None:
        b = verdict.bound
        rep["bound"] = {
            "formula": str(b.formula),
            "value": format_fraction(b.bound),
            "edges": b.edges,
            "slack": format_fraction(b.slack),
            "ok": b.ok,
            "asserted": b.asserted,
            "tight": b.tight,
        }
    return rep


def write_report(report: dict[str, Any], fmt: str = "json") -> bytes:
    """Serialize a report; JSON output is byte-stable for identical reports."""
    if fmt == "json":
        return (
            json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True)
            + "\n"
        ).encode()
    if fmt == "text":
        return _render_text(report).encode()
    raise ValueError(f"unknown report format {fmt!r}")


def _render_text(rep: dict[str, Any]) -> str:
    lines = []
    if "graph" in rep:
        g = rep["graph"]
        lines.append(
            f"graph: n={g['n']} e={g['e']} f={g['f']} min_degree={g['min_degree']} "
            f"bipartite={g['bipartite']} two_connected={g['two_connected']} "
            f"k={g['k']} e23={g['e23']}"
        )
    if rep.get("kind") == "search":
        s = rep["search"]
        lines.append(f"search: n={s['n']} max_edges={s['max_edges']}")
        st = s.get("stats", {})
        if st:
            lines.append(
                f"stats: children={st['children']} candidates={st['candidates']} "
                f"expanded={st['expanded']} emitted={st['emitted']}"
            )
        lines.append(f"witnesses: {len(s['witnesses'])}")
    if "mode" in rep:
        lines.append(f"mode: {rep['mode']}")
    if rep.get("kind") == "decomposition":
        lines.append(f"{'id':>3} {'kind':<7} {'edges':>5} {'junctions':>9} {'interior':>8}")
        for b in rep["blocks"]:
            lines.append(
                f"{b['id']:>3} {b['kind']:<7} {len(b['edges']):>5} "
                f"{b['junctions']:>9} {b['interior_faces']:>8}"
            )
    if rep.get("kind") == "ledger":
        lines.append(f"{'id':>3} {'kind':<7} {'v':>8} {'e':>4} {'f':>8} {'k':>6} {'e23':>4}")
        for b in rep["blocks"]:
            lines.append(
                f"{b['id']:>3} {b['kind']:<7} {b['v']:>8} {b['e']:>4} "
                f"{b['f']:>8} {b['k']:>6} {b['e23']:>4}"
            )
        t = rep["totals"]
        lines.append(
            f"totals: v={t['v']} e={t['e']} f={t['f']} k={t['k']} e23={t['e23']}"
        )
    if "profile" in rep:
        lines.append(f"profile: {rep['profile']}" + (" (forced)" if rep.get("forced") else ""))
        hyp = rep["hypotheses"]
        lines.append(f"hypotheses: {'ok' if hyp['ok'] else 'FAILED'}")
        for c in hyp["checks"]:
            mark = "ok " if c["ok"] else "FAIL"
            detail = f" ({c['detail']})" if c["detail"] else ""
            lines.append(f"  [{mark}] {c['name']}{detail}")
        for w in hyp["warnings"]:
            lines.append(f"  warning: {w}")
        if "block_values" in rep:
            for bv in rep["block_values"]:
                lines.append(f"  block {bv['id']:>3} {bv['kind']:<7} L(B) = {bv['value']}")
            lines.append(f"  total: {rep['total']}")
            if rep["violations"]:
                lines.append(f"  VIOLATIONS: blocks {rep['violations']}")
            for w in rep.get("warnings", []):
                if w not in hyp["warnings"]:
                    lines.append(f"  warning: {w}")
        if "bound" in rep:
            b = rep["bound"]
            status = "ok" if b["ok"] else "FAIL"
            extra = "" if b["asserted"] else " (not asserted at this n)"
            lines.append(
                f"bound: {b['formula']}; value {b['value']}, edges {b['edges']}, "
                f"slack {b['slack']} [{status}]{extra}"
            )
            if b["tight"]:
                lines.append("bound is tight (slack 0)")
        lines.append(f"verdict: {'ok' if rep['ok'] else 'FAIL'}")
    return "\n".join(lines) + "\n"
