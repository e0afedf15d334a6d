"""Block decompositions of plane graphs.

A triangular block is the closure of an edge under "shares a bounded 3-face";
a quadrangular block uses bounded 4-faces.  Edges in no such face are trivial
K2 blocks.  The closure is computed as connected components of the hypergraph
whose hyperedges are the bounded block faces, which is equivalent to the
seed-and-absorb loop and independent of the seed edge.

Exterior pseudofaces: the boundary of a non-interior face, rewritten while it
contains exactly two consecutive exterior edges of one K4 block (the pair is
replaced by the block's third exterior edge).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Literal, Optional

from . import canon
from .errors import WrongMode
from .plane import Edge, PlaneGraph, edge_of

Mode = Literal["triangular", "quadrangular"]


class BlockKind(enum.Enum):
    K2 = "K2"
    K3 = "K3"
    THETA4 = "Theta4"
    K4 = "K4"
    C4 = "C4"
    K23 = "K2,3"
    THETA6 = "Theta6"
    Q7 = "Q7"
    OTHER = "Other"


# reference graphs for classification, as (n, edge list)
_CATALOG: dict[BlockKind, tuple[int, list[Edge]]] = {
    BlockKind.K2: (2, [(0, 1)]),
    BlockKind.K3: (3, [(0, 1), (0, 2), (1, 2)]),
    BlockKind.THETA4: (4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
    BlockKind.K4: (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    BlockKind.C4: (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    BlockKind.K23: (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    BlockKind.THETA6: (
        6,
        [(0, 2), (2, 3), (3, 1), (0, 1), (0, 4), (4, 5), (5, 1)],
    ),
    # three quadrilaterals around a corner (a cube with one vertex removed)
    BlockKind.Q7: (
        7,
        [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2), (3, 6), (6, 5)],
    ),
}

TRIANGULAR_KINDS = (BlockKind.K2, BlockKind.K3, BlockKind.THETA4, BlockKind.K4)
QUADRANGULAR_KINDS = (
    BlockKind.K2,
    BlockKind.C4,
    BlockKind.K23,
    BlockKind.THETA6,
    BlockKind.Q7,
)

_CATALOG_KEYS: dict[Mode, dict[tuple[int, int, int], BlockKind]] = {}


def _catalog_keys(mode: Mode) -> dict[tuple[int, int, int], BlockKind]:
    # (n, e, canonical code) -> kind; built once per mode
    if mode not in _CATALOG_KEYS:
        kinds = TRIANGULAR_KINDS if mode == "triangular" else QUADRANGULAR_KINDS
        table = {}
        for kind in kinds:
            n, edges = _CATALOG[kind]
            code = canon.canonical_form(canon.masks_from_edges(n, edges))
            table[(n, len(edges), code)] = kind
        _CATALOG_KEYS[mode] = table
    return _CATALOG_KEYS[mode]


@dataclass(frozen=True)
class Block:
    id: int
    edges: frozenset[Edge]
    vertices: frozenset[int]
    kind: BlockKind
    interior_faces: tuple[int, ...]  # face ids absorbed by the closure
    exterior_edges: frozenset[Edge]  # edges bordering a non-interior face
    junction_vertices: frozenset[int]

    @property
    def trivial(self) -> bool:
        return len(self.edges) == 1


@dataclass
class BlockDecomposition:
    mode: Mode
    graph: PlaneGraph
    blocks: tuple[Block, ...]
    edge_to_block: dict[Edge, int]
    vertex_block_count: dict[int, int]
    interior_face_block: dict[int, int]  # face id -> owning block id


def _block_face_length(mode: Mode) -> int:
    return 3 if mode == "triangular" else 4


def decompose(g: PlaneGraph, mode: Mode) -> BlockDecomposition:
    """Partition E(G) into triangular or quadrangular blocks."""
    m = _block_face_length(mode)
    edges = g.sorted_edges()
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    block_faces = []
    for face in g.faces:
        if face.is_outer or face.length != m:
            continue
        verts = {u for u, _ in face.darts}
        if len(verts) != m:
            continue  # boundary walk revisits a vertex; not an m-cycle
        block_faces.append(face)
        fe = face.edges()
        base = index[fe[0]]
        for e in fe[1:]:
            union(base, index[e])

    groups: dict[int, list[Edge]] = {}
    for e, i in index.items():
        groups.setdefault(find(i), []).append(e)
    # deterministic block order: by smallest edge
    roots = sorted(groups, key=lambda r: min(groups[r]))
    root_to_id = {r: bid for bid, r in enumerate(roots)}

    interior_face_block: dict[int, int] = {}
    for face in block_faces:
        interior_face_block[face.id] = root_to_id[find(index[face.edges()[0]])]

    edge_to_block = {e: root_to_id[find(i)] for e, i in index.items()}
    vertex_blocks: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for (u, v), bid in edge_to_block.items():
        vertex_blocks[u].add(bid)
        vertex_blocks[v].add(bid)
    vertex_block_count = {v: len(s) for v, s in vertex_blocks.items()}

    blocks = []
    for bid, r in enumerate(roots):
        bedges = frozenset(groups[r])
        bverts = frozenset(v for e in bedges for v in e)
        interior = tuple(
            sorted(f for f, owner in interior_face_block.items() if owner == bid)
        )
        interior_set = set(interior)
        exterior = frozenset(
            e
            for e in bedges
            if any(
                face.id not in interior_set for face in g.faces_of_edge(e)
            )
        )
        junctions = frozenset(
            v for v in bverts if vertex_block_count[v] >= 2
        )
        block = Block(
            id=bid,
            edges=bedges,
            vertices=bverts,
            kind=BlockKind.OTHER,  # patched below
            interior_faces=interior,
            exterior_edges=exterior,
            junction_vertices=junctions,
        )
        blocks.append(_with_kind(block, mode))

    return BlockDecomposition(
        mode=mode,
        graph=g,
        blocks=tuple(blocks),
        edge_to_block=edge_to_block,
        vertex_block_count=vertex_block_count,
        interior_face_block=interior_face_block,
    )


def _with_kind(b: Block, mode: Mode) -> Block:
    return Block(
        id=b.id,
        edges=b.edges,
        vertices=b.vertices,
        kind=_classify(b, mode),
        interior_faces=b.interior_faces,
        exterior_edges=b.exterior_edges,
        junction_vertices=b.junction_vertices,
    )


def _classify(b: Block, mode: Mode) -> BlockKind:
    n, e = len(b.vertices), len(b.edges)
    table = _catalog_keys(mode)
    if not any(k[:2] == (n, e) for k in table):
        return BlockKind.OTHER
    relabel = {v: i for i, v in enumerate(sorted(b.vertices))}
    masks = canon.masks_from_edges(
        n, [(relabel[u], relabel[v]) for u, v in b.edges]
    )
    return table.get((n, e, canon.canonical_form(masks)), BlockKind.OTHER)


def classify_block(b: Block, mode: Mode) -> BlockKind:
    """Isomorphism test against the block catalog of the given mode."""
    return _classify(b, mode)


# -- exterior pseudofaces ----------------------------------------------------

@dataclass(frozen=True)
class Reduction:
    block_id: int
    pair: tuple[Edge, Edge]
    replacement: Edge


@dataclass(frozen=True)
class Pseudoface:
    face_id: int
    edges: tuple[Edge, ...]  # reduced cyclic edge sequence
    reductions: tuple[Reduction, ...] = ()
    degenerate: bool = False  # a reducible pattern was left untouched

    @property
    def length(self) -> int:
        return len(self.edges)


def refine_pseudofaces(
    d: BlockDecomposition, g: Optional[PlaneGraph] = None
) -> dict[int, Pseudoface]:
    """Pseudoface of every face of G that is not interior to a block.

    Pairs are found left-to-right along the boundary walk; a pattern of three
    consecutive same-K4 edges, or a reduction that would leave fewer than
    three edges, is not defined and flags the face degenerate instead.
    """
    if d.mode != "triangular":
        raise WrongMode("pseudofaces are defined for triangular decompositions")
    g = g if g is not None else d.graph
    k4_ext: dict[Edge, int] = {}
    for b in d.blocks:
        if b.kind == BlockKind.K4:
            for e in b.exterior_edges:
                k4_ext[e] = b.id
    out: dict[int, Pseudoface] = {}
    for face in g.faces:
        if face.id in d.interior_face_block:
            continue
        seq = list(face.edges())
        reductions: list[Reduction] = []
        degenerate = False
        while True:
            n = len(seq)
            applied = False
            for i in range(n):
                e1, e2 = seq[i], seq[(i + 1) % n]
                bid = k4_ext.get(e1)
                if bid is None or k4_ext.get(e2) != bid or e1 == e2:
                    continue
                before = seq[(i - 1) % n]
                after = seq[(i + 2) % n]
                if (
                    n <= 3
                    or k4_ext.get(before) == bid
                    or k4_ext.get(after) == bid
                ):
                    degenerate = True
                    continue
                block = d.blocks[bid]
                (third,) = block.exterior_edges - {e1, e2}
                reductions.append(
                    Reduction(block_id=bid, pair=(e1, e2), replacement=third)
                )
                if i + 1 < n:
                    seq[i : i + 2] = [third]
                else:  # pair wraps around the end of the list
                    seq = [third] + seq[1:-1]
                applied = True
                break
            if not applied:
                break
            degenerate = False  # re-judge after the rewrite
        # final degeneracy scan (a leftover pattern may persist)
        n = len(seq)
        for i in range(n):
            e1, e2 = seq[i], seq[(i + 1) % n]
            bid = k4_ext.get(e1)
            if bid is not None and k4_ext.get(e2) == bid and e1 != e2:
                degenerate = True
        out[face.id] = Pseudoface(
            face_id=face.id,
            edges=tuple(seq),
            reductions=tuple(reductions),
            degenerate=degenerate,
        )
    return out


# -- exterior labeling -------------------------------------------------------

@dataclass(frozen=True)
class BoundaryLabeling:
    block_id: int
    exterior_vertices: frozenset[int]
    exterior_edges: frozenset[Edge]
    exterior_faces: tuple[int, ...]
    junction_vertices: frozenset[int]
    # per exterior face: this block's entries on the (pseudo)face boundary
    slots: dict[int, tuple[Edge, ...]] = field(default_factory=dict)


def block_boundary(
    b: Block,
    d: BlockDecomposition,
    pf: Optional[dict[int, Pseudoface]] = None,
) -> BoundaryLabeling:
    """Exterior vertices/edges/faces of a block and its boundary slots.

    With a pseudoface map (triangular mode), slots follow the reduced
    boundaries, so a collapsed K4 pair appears as its single replacement edge.
    """
    g = d.graph
    interior = set(b.interior_faces)
    ext_vertices = frozenset(
        v
        for v in b.vertices
        if any(
            g.face_of_dart((v, w)).id not in interior for w in g.neighbors(v)
        )
    )
    slots: dict[int, list[Edge]] = {}
    for face in g.faces:
        if face.id in d.interior_face_block:
            continue
        entries = pf[face.id].edges if pf is not None else face.edges()
        mine = [e for e in entries if d.edge_to_block[e] == b.id]
        if mine:
            slots[face.id] = mine
    return BoundaryLabeling(
        block_id=b.id,
        exterior_vertices=ext_vertices,
        exterior_edges=b.exterior_edges,
        exterior_faces=tuple(sorted(slots)),
        junction_vertices=b.junction_vertices,
        slots={f: tuple(es) for f, es in slots.items()},
    )
