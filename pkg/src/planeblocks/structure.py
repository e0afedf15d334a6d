"""Structural predicates used as theorem hypotheses.

All functions work on the abstract graph only (adjacency lists); the embedding
never influences cycle containment, degrees, bipartiteness or 2-connectivity.
A PlaneGraph's ``rotations`` attribute is a valid adjacency-list argument.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import BadLength

Adjacency = Sequence[Sequence[int]]


@dataclass(frozen=True)
class StructuralStats:
    """Degree statistics and connectivity/bipartiteness flags of a graph."""

    n: int
    e: int
    min_degree: int
    degree_histogram: dict[int, int]
    k: int  # number of degree-2 vertices
    e23: int  # edges joining a degree-2 and a degree-3 vertex
    bipartite: bool
    coloring: Optional[tuple[int, ...]] = field(default=None, compare=False)
    two_connected: bool = False
    deg2_neighbor_ok: bool = True  # every degree-2 vertex has a neighbor of degree <= 3


def contains_cycle_of_length(adj: Adjacency, length: int) -> bool:
    """True iff the graph has a (not necessarily induced) cycle on exactly
    ``length`` vertices.

    Exact backtracking path search; each cycle is rooted at its smallest
    vertex, and the search never visits vertices below the root.
    """
    if length < 3:
        raise BadLength(f"cycle length must be >= 3, got {length}")
    n = len(adj)
    if length > n:
        return False

    def search(root: int, last: int, depth: int, visited: int) -> bool:
        for w in adj[last]:
            if w == root and depth == length:
                return True
            if w > root and depth < length and not (visited >> w) & 1:
                if search(root, w, depth + 1, visited | (1 << w)):
                    return True
        return False

    for root in range(n):
        if len(adj[root]) >= 2 and search(root, root, 1, 1 << root):
            return True
    return False


def is_bipartite(adj: Adjacency) -> tuple[bool, Optional[tuple[int, ...]]]:
    """BFS 2-coloring; returns (flag, coloring or None)."""
    n = len(adj)
    color = [-1] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False, None
    return True, tuple(color)


def is_connected(adj: Adjacency) -> bool:
    n = len(adj)
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def articulation_vertices(adj: Adjacency) -> set[int]:
    """Cut vertices via iterative lowpoint DFS."""
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts: set[int] = set()
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        root_children = 0
        stack: list[tuple[int, int]] = [(s, 0)]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            u, i = stack.pop()
            if i < len(adj[u]):
                stack.append((u, i + 1))
                v = adj[u][i]
                if disc[v] == -1:
                    parent[v] = u
                    if u == s:
                        root_children += 1
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, 0))
                elif v != parent[u]:
                    low[u] = min(low[u], disc[v])
            else:
                p = parent[u]
                if p != -1:
                    low[p] = min(low[p], low[u])
                    if p != s and low[u] >= disc[p]:
                        cuts.add(p)
        if root_children >= 2:
            cuts.add(s)
    return cuts


def is_two_connected(adj: Adjacency) -> bool:
    """Connected, at least 3 vertices, and no articulation vertex."""
    n = len(adj)
    if n < 3 or not is_connected(adj):
        return False
    return not articulation_vertices(adj)


def structural_stats(adj: Adjacency) -> StructuralStats:
    n = len(adj)
    degrees = [len(a) for a in adj]
    hist: dict[int, int] = {}
    for d in degrees:
        hist[d] = hist.get(d, 0) + 1
    e = sum(degrees) // 2
    e23 = 0
    for u in range(n):
        for v in adj[u]:
            if u < v and {degrees[u], degrees[v]} == {2, 3}:
                e23 += 1
    bip, coloring = is_bipartite(adj)
    deg2_ok = all(
        any(degrees[w] <= 3 for w in adj[u])
        for u in range(n)
        if degrees[u] == 2
    )
    return StructuralStats(
        n=n,
        e=e,
        min_degree=min(degrees) if degrees else 0,
        degree_histogram=hist,
        k=hist.get(2, 0),
        e23=e23,
        bipartite=bip,
        coloring=coloring,
        two_connected=is_two_connected(adj),
        deg2_neighbor_ok=deg2_ok,
    )
