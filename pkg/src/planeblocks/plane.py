"""Combinatorial plane graphs: rotation systems, dart algebra, face tracing.

A plane graph is given by a counterclockwise rotation system (cyclic neighbor
order around each vertex) plus one dart whose traced face is the unbounded
face.  Faces are traced with the rule: the successor of dart (u, v) is (v, w)
where w follows u in the rotation at v, so the traced face lies to the left of
each dart.  Construction validates simplicity, adjacency symmetry,
connectivity and the Euler characteristic v - e + f = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AsymmetricAdjacency,
    Disconnected,
    GenusNonZero,
    NonSimple,
    UnknownDart,
)

Dart = tuple[int, int]
Edge = tuple[int, int]


def edge_of(u: int, v: int) -> Edge:
    """Undirected edge key (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    """One face of a plane graph: a cyclic walk of darts.

    The walk starts at the face's smallest dart.  A bridge edge appears twice
    (once per dart), so its length counts toward the face twice.
    """

    id: int
    darts: tuple[Dart, ...]
    is_outer: bool

    @property
    def length(self) -> int:
        return len(self.darts)

    def edges(self) -> tuple[Edge, ...]:
        """Edge sequence of the boundary walk (repeats for bridges)."""
        return tuple(edge_of(u, v) for u, v in self.darts)


class PlaneGraph:
    """Immutable plane graph.  Do not mutate rotations after construction."""

    def __init__(self, rotations: Sequence[Sequence[int]], outer_dart: Dart):
        self.n = len(rotations)
        self.rotations: tuple[tuple[int, ...], ...] = tuple(
            tuple(r) for r in rotations
        )
        self._validate_simple()
        self.edges: frozenset[Edge] = frozenset(
            edge_of(u, v) for u in range(self.n) for v in self.rotations[u]
        )
        self.e = len(self.edges)
        self._validate_connected()
        outer_dart = (int(outer_dart[0]), int(outer_dart[1]))
        u, v = outer_dart
        if not (0 <= u < self.n and v in set(self.rotations[u])):
            raise UnknownDart(f"outer dart {u}->{v} is not a dart of the graph")
        self.outer_dart: Dart = outer_dart
        self.faces: tuple[Face, ...] = self._trace_faces()
        self.f = len(self.faces)
        if self.n - self.e + self.f != 2:
            raise GenusNonZero(
                f"v - e + f = {self.n} - {self.e} + {self.f} != 2"
            )
        self._dart_face = {
            d: face.id for face in self.faces for d in face.darts
        }

    # -- construction helpers ------------------------------------------------

    def _validate_simple(self) -> None:
        for u, rot in enumerate(self.rotations):
            if u in rot:
                raise NonSimple(f"loop at vertex {u}")
            if len(set(rot)) != len(rot):
                raise NonSimple(f"parallel edge in rotation of vertex {u}")
            for v in rot:
                if not 0 <= v < self.n:
                    raise AsymmetricAdjacency(
                        f"vertex {u} lists unknown neighbor {v}"
                    )
        neighbor_sets = [set(rot) for rot in self.rotations]
        for u, nbrs in enumerate(neighbor_sets):
            for v in nbrs:
                if u not in neighbor_sets[v]:
                    raise AsymmetricAdjacency(
                        f"{u} lists {v} but {v} does not list {u}"
                    )

    def _validate_connected(self) -> None:
        if self.n == 0:
            raise Disconnected("empty graph")
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.rotations[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != self.n:
            raise Disconnected(f"only {len(seen)} of {self.n} vertices reachable")

    def _trace_faces(self) -> tuple[Face, ...]:
        # nxt[(v, u)] = neighbor following u in the rotation at v
        nxt: dict[Dart, int] = {}
        for v, rot in enumerate(self.rotations):
            deg = len(rot)
            for i, u in enumerate(rot):
                nxt[(v, u)] = rot[(i + 1) % deg]
        faces = []
        visited: set[Dart] = set()
        for start in sorted(nxt.keys()):
            # nxt keys are darts (v, u); iterate in sorted dart order so face
            # ids are ordered by smallest dart and walks start at it.
            if start in visited:
                continue
            walk = []
            d = start
            while True:
                walk.append(d)
                visited.add(d)
                u, v = d
                d = (v, nxt[(v, u)])
                if d == start:
                    break
            faces.append(walk)
        outer_id = None
        for fid, walk in enumerate(faces):
            if self.outer_dart in walk:
                outer_id = fid
        return tuple(
            Face(id=fid, darts=tuple(walk), is_outer=(fid == outer_id))
            for fid, walk in enumerate(faces)
        )

    # -- queries -------------------------------------------------------------

    @property
    def darts(self) -> tuple[Dart, ...]:
        return tuple(
            sorted((u, v) for u in range(self.n) for v in self.rotations[u])
        )

    @property
    def outer_face(self) -> Face:
        return self.faces[self._dart_face[self.outer_dart]]

    def face_of_dart(self, d: Dart) -> Face:
        if d not in self._dart_face:
            raise UnknownDart(f"{d[0]}->{d[1]} is not a dart of the graph")
        return self.faces[self._dart_face[d]]

    def faces_of_edge(self, e: Edge) -> tuple[Face, Face]:
        """The two face sides of an edge (equal for a bridge)."""
        u, v = e
        return self.face_of_dart((u, v)), self.face_of_dart((v, u))

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def with_outer(self, outer_dart: Dart) -> "PlaneGraph":
        """Same embedding with a different declared outer face."""
        return PlaneGraph(self.rotations, outer_dart)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PlaneGraph)
            and self.rotations == other.rotations
            and self.outer_dart == other.outer_dart
        )

    def __hash__(self) -> int:
        return hash((self.rotations, self.outer_dart))

    def __repr__(self) -> str:
        return (
            f"PlaneGraph(n={self.n}, e={self.e}, f={self.f}, "
            f"outer={self.outer_dart[0]}->{self.outer_dart[1]})"
        )


def build_embedding(
    rotations: Sequence[Sequence[int]], outer_dart: Dart
) -> PlaneGraph:
    """Validate a rotation system and trace its faces.

    Raises NonSimple, AsymmetricAdjacency, Disconnected, GenusNonZero or
    UnknownDart on bad input.
    """
    return PlaneGraph(rotations, outer_dart)


def trace_faces(g: PlaneGraph) -> tuple[Face, ...]:
    """The faces of g, ordered by smallest dart."""
    return g.faces


def euler_characteristic(g: PlaneGraph) -> int:
    """v - e + f; always 2 for accepted graphs."""
    return g.n - g.e + g.f


def face_lengths(g: PlaneGraph) -> list[int]:
    return sorted(f.length for f in g.faces)


def rotations_from_edges(n: int, edges: Iterable[Edge]) -> list[list[int]]:
    """Adjacency lists (sorted, not an embedding) from an edge list."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return [sorted(a) for a in adj]
