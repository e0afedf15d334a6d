"""Exhaustive small-graph generation, planarity embedding, extremal search.

The enumeration yields exactly one representative per isomorphism class of
connected simple planar graphs on n vertices satisfying a constraint set.  It
works level by level on edge count: children of a level are produced by adding
one edge, pruned by the deletion-closed constraints (forbidden cycles,
bipartiteness, planarity), and deduplicated by canonical form.  Constraints
that are not deletion-closed (minimum degree, 2-connectivity, the degree-2
neighbor rule) are filtered at emission.  Because level sets store canonical
codes, the result is independent of generation schedule.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import networkx as nx

from . import canon
from .errors import CeilingExceeded, RetriesExhausted
from .plane import Edge, PlaneGraph
from .structure import (
    is_bipartite,
    is_connected,
    is_two_connected,
    structural_stats,
)

DEFAULT_CEILING = 10
CEILING_ENV = "TURAN_PLANAR_CEILING"


@dataclass(frozen=True)
class ConstraintSet:
    """Decidable predicates restricting the enumerated graphs."""

    n: int
    forbidden_cycles: tuple[int, ...] = ()
    bipartite: bool = False
    triangle_free: bool = False
    min_degree: int = 0
    exact_min_degree: Optional[int] = None
    two_connected: bool = False
    deg2_neighbor_ok: bool = False

    def forbidden(self) -> tuple[int, ...]:
        lengths = set(self.forbidden_cycles)
        if self.triangle_free:
            lengths.add(3)
        return tuple(sorted(lengths))


@dataclass
class SearchStats:
    candidates: int = 0  # unique classes tested for planarity
    expanded: int = 0  # planar classes kept in some level
    children: int = 0  # edge-augmented children generated
    emitted: int = 0  # connected graphs passing all constraints
    elapsed: float = 0.0


@dataclass
class SearchResult:
    n: int
    max_edges: int
    witnesses: list[PlaneGraph]
    stats: SearchStats = field(default_factory=SearchStats)


def configured_ceiling() -> int:
    raw = os.environ.get(CEILING_ENV)
    if raw is not None:
        return int(raw)
    return DEFAULT_CEILING


# -- planarity ---------------------------------------------------------------

def planar_embed(n: int, edges: Sequence[Edge]) -> Optional[PlaneGraph]:
    """A genus-zero embedding of the graph, or None if it is not planar.

    The outer face is the traced face of maximum length, ties broken by
    smallest dart, making the embedding deterministic for a fixed edge list.
    """
    if n < 2 or not edges:
        raise ValueError("planar_embed needs at least one edge")
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(sorted(edges))
    ok, emb = nx.check_planarity(graph)
    if not ok:
        return None
    rotations = [
        tuple(reversed(list(emb.neighbors_cw_order(v)))) for v in range(n)
    ]
    first = next(v for v in range(n) if rotations[v])
    g = PlaneGraph(rotations, (first, rotations[first][0]))
    # outer face: maximum length, ties broken by smallest dart
    longest = max(f.length for f in g.faces)
    target = min(
        (f for f in g.faces if f.length == longest),
        key=lambda f: min(f.darts),
    )
    if target.is_outer:
        return g
    return g.with_outer(min(target.darts))


def is_planar(n: int, edges: Sequence[Edge]) -> bool:
    if _sparse_components(n, edges):
        return True
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return nx.check_planarity(graph, counterexample=False)[0]


def _sparse_components(n: int, edges: Sequence[Edge]) -> bool:
    """True if every component has at most (its vertex count) + 2 edges.

    Such components are planar outright: a K5 or K3,3 subdivision inside one
    component forces at least n + 3 edges there, so no Kuratowski subgraph fits.
    """
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    nodes = [0] * n
    count = [0] * n
    for v in range(n):
        nodes[find(v)] += 1
    for u, v in edges:
        count[find(u)] += 1
    return all(count[r] <= nodes[r] + 2 for r in range(n) if parent[r] == r)


# -- enumeration -------------------------------------------------------------

def _has_path_of_length(
    adj: canon.Masks, u: int, v: int, length: int
) -> bool:
    """Simple u-v path with exactly `length` edges, not using edge uv."""
    if length < 2:
        return False  # the uv edge itself is excluded

    def walk(last: int, depth: int, visited: int) -> bool:
        m = adj[last] & ~visited
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if w == v:
                if depth == length:
                    return True
            elif depth < length:
                if walk(w, depth + 1, visited | (1 << w)):
                    return True
        return False

    # v stays outside the visited mask: it is only valid as the endpoint
    return walk(u, 1, 1 << u)


def _new_edge_ok(adj: canon.Masks, u: int, v: int, cs: ConstraintSet) -> bool:
    """Deletion-closed checks for the child graph adj + uv (adj excludes uv)."""
    for length in cs.forbidden():
        if _has_path_of_length(adj, u, v, length - 1):
            return False
    return True


def _planar_cap(n: int, cs: ConstraintSet) -> int:
    if n < 3:
        return max(n - 1, 0)
    if cs.bipartite or cs.triangle_free or 3 in cs.forbidden_cycles:
        return 2 * n - 4 if n >= 4 else n
    return 3 * n - 6


def enumerate_graphs(
    cs: ConstraintSet,
    ceiling: Optional[int] = None,
    stats: Optional[SearchStats] = None,
) -> Iterator[tuple[int, canon.Masks]]:
    """One representative per isomorphism class of connected simple planar
    graphs on cs.n vertices satisfying cs, in ascending edge count and
    canonical-code order."""
    n = cs.n
    limit = ceiling if ceiling is not None else configured_ceiling()
    if n > limit:
        raise CeilingExceeded(f"n={n} above ceiling {limit}")
    if n < 1:
        return
    if stats is None:
        stats = SearchStats()
    empty = tuple([0] * n)
    if n == 1:
        if _passes_emission(empty, cs):
            stats.emitted += 1
            yield n, empty
        return
    cap = _planar_cap(n, cs)
    level: dict[int, canon.Masks] = {canon.canonical_form(empty): empty}
    edge_total = 0
    while level and edge_total < cap:
        next_level: dict[int, canon.Masks] = {}
        rejected: set[int] = set()
        for code in sorted(level):
            adj = level[code]
            if cs.bipartite and not is_bipartite(canon.neighbor_lists(adj))[0]:
                continue  # cannot happen; guards future constraint edits
            for u in range(n):
                for v in range(u + 1, n):
                    if (adj[u] >> v) & 1:
                        continue
                    stats.children += 1
                    if not _new_edge_ok(adj, u, v, cs):
                        continue
                    child = list(adj)
                    child[u] |= 1 << v
                    child[v] |= 1 << u
                    child_t = tuple(child)
                    if cs.bipartite and not is_bipartite(
                        canon.neighbor_lists(child_t)
                    )[0]:
                        continue
                    ccode = canon.canonical_form(child_t)
                    if ccode in next_level or ccode in rejected:
                        continue
                    stats.candidates += 1
                    if is_planar(n, canon.edges_from_masks(child_t)):
                        # store the canonical representative so output does
                        # not depend on which parent produced the class
                        next_level[ccode] = canon.decode(n, ccode)
                    else:
                        rejected.add(ccode)
        edge_total += 1
        level = next_level
        stats.expanded += len(level)
        for code in sorted(level):
            adj = level[code]
            if _passes_emission(adj, cs):
                stats.emitted += 1
                yield n, adj


def _passes_emission(adj: canon.Masks, cs: ConstraintSet) -> bool:
    nbrs = canon.neighbor_lists(adj)
    if not is_connected(nbrs):
        return False
    degs = [len(a) for a in nbrs]
    mind = min(degs) if degs else 0
    if mind < cs.min_degree:
        return False
    if cs.exact_min_degree is not None and mind != cs.exact_min_degree:
        return False
    if cs.two_connected and not is_two_connected(nbrs):
        return False
    if cs.deg2_neighbor_ok:
        for u, d in enumerate(degs):
            if d == 2 and not any(degs[w] <= 3 for w in nbrs[u]):
                return False
    return True


def count_connected_classes(n: int) -> int:
    """Number of isomorphism classes of connected planar graphs on n vertices."""
    cs = ConstraintSet(n=n)
    return sum(1 for _ in enumerate_graphs(cs, ceiling=max(n, DEFAULT_CEILING)))


# -- extremal search ---------------------------------------------------------

def extremal_search(
    cs: ConstraintSet,
    ceiling: Optional[int] = None,
    witness_cap: int = 100,
) -> SearchResult:
    """Maximum edge count over the enumerated graphs, with all witnesses.

    No bound-based pruning is applied: the search is the independent oracle
    against which derived bounds are checked, so it must not assume them.
    """
    stats = SearchStats()
    start = time.perf_counter()
    best = -1
    witnesses: list[canon.Masks] = []
    for n, adj in enumerate_graphs(cs, ceiling=ceiling, stats=stats):
        e = canon.edge_count(adj)
        if e > best:
            best = e
            witnesses = [adj]
        elif e == best and len(witnesses) < witness_cap:
            witnesses.append(adj)
    stats.elapsed = time.perf_counter() - start
    embedded = []
    for adj in witnesses:
        if len(adj) == 1:
            continue
        g = planar_embed(len(adj), canon.edges_from_masks(adj))
        assert g is not None
        embedded.append(g)
    return SearchResult(
        n=cs.n, max_edges=best, witnesses=embedded, stats=stats
    )


# -- random plane graphs -----------------------------------------------------

def random_plane_graph(
    n: int,
    seed: int,
    cs: Optional[ConstraintSet] = None,
    max_retries: int = 200,
) -> PlaneGraph:
    """Deterministic random plane graph: a random stacked triangulation with
    random edge deletions, retried until the optional constraints hold."""
    if n < 3:
        raise ValueError("random_plane_graph needs n >= 3")
    rng = random.Random(seed)
    for _ in range(max_retries):
        edges = _random_connected_planar_edges(n, rng)
        if cs is not None and not _satisfies(n, edges, cs):
            continue
        g = planar_embed(n, edges)
        assert g is not None
        return g
    raise RetriesExhausted(
        f"no constraint-satisfying graph on {n} vertices in {max_retries} tries"
    )


def _random_connected_planar_edges(n: int, rng: random.Random) -> list[Edge]:
    # stacked triangulation: insert each vertex into a random bounded face
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces.pop(i)
        edges |= {tuple(sorted((v, a))), tuple(sorted((v, b))), tuple(sorted((v, c)))}
        faces += [(a, b, v), (b, c, v), (a, c, v)]
    target = rng.randint(n - 1, len(edges))
    order = sorted(edges)
    rng.shuffle(order)
    keep = set(order)
    for e in order:
        if len(keep) <= target:
            break
        trial = keep - {e}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, w in trial:
            adj[u].append(w)
            adj[w].append(u)
        if all(adj) and is_connected(adj):
            keep = trial
    return sorted(keep)


def _satisfies(n: int, edges: Sequence[Edge], cs: ConstraintSet) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    from .structure import contains_cycle_of_length

    for length in cs.forbidden():
        if contains_cycle_of_length(adj, length):
            return False
    stats = structural_stats(adj)
    if cs.bipartite and not stats.bipartite:
        return False
    if stats.min_degree < cs.min_degree:
        return False
    if cs.exact_min_degree is not None and stats.min_degree != cs.exact_min_degree:
        return False
    if cs.two_connected and not stats.two_connected:
        return False
    if cs.deg2_neighbor_ok and not stats.deg2_neighbor_ok:
        return False
    return True
