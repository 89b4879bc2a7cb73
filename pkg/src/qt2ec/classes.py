"""Partition of the edge set into colour-forced equivalence classes.

Two edges lying on a common induced P3 must receive the same colour in any
quasi-transitive 2-edge-colouring, so the classes are the connected
components of the edge set under the relation "shares an induced P3".
Union-find over dense edge indices computes them in near-linear time in the
number of P3 merges; the components coincide with the unique smallest
P3-closed edge sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError
from .graph import EdgePair, Graph, edge_subgraph, encode_graph6, induced_p3s, is_connected
from .report import CheckResult, VerificationReport


class DisjointSets:
    """Union-find with path compression and union by size."""

    def __init__(self, size: int):
        self._parent = list(range(size))
        self._size = [1] * size

    def find(self, x: int) -> int:
        parent = self._parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return True


@dataclass(frozen=True)
class EdgeClassPartition:
    """The edge classes of a graph, ids ordered by least contained edge index."""

    graph: Graph
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    vertex_sets: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_edges(self, class_id: int) -> tuple[EdgePair, ...]:
        return tuple(self.graph.edge(i) for i in self.classes[class_id])

    def class_of_pair(self, u: int, v: int) -> int:
        return self.class_of[self.graph.edge_index(u, v)]


def compute_classes(g: Graph) -> EdgeClassPartition:
    """Compute the edge-class partition of ``g``.

    Each induced P3 merges its two edges; the resulting union-find
    components are the classes.  Output is deterministic: classes are
    sorted by their least edge index and edge lists are sorted.
    """
    dsu = DisjointSets(g.m)
    for u, v, w in induced_p3s(g):
        dsu.union(g.edge_index(u, v), g.edge_index(v, w))
    groups: dict[int, list[int]] = {}
    for e in range(g.m):
        groups.setdefault(dsu.find(e), []).append(e)
    classes = tuple(tuple(members) for members in sorted(groups.values()))
    class_of = [0] * g.m
    vertex_sets = []
    for cid, members in enumerate(classes):
        verts = set()
        for e in members:
            class_of[e] = cid
            verts.update(g.edge(e))
        vertex_sets.append(frozenset(verts))
    return EdgeClassPartition(g, tuple(class_of), classes, tuple(vertex_sets))


def class_of_edge(p: EdgeClassPartition, e: EdgePair) -> tuple[EdgePair, ...]:
    """The full class containing edge ``e``, as sorted canonical pairs."""
    return p.class_edges(p.class_of_pair(*e))


def verify_partition_laws(g: Graph, p: EdgeClassPartition) -> VerificationReport:
    """Check the structural laws every correctly computed partition obeys.

    (a) each class spans a connected subgraph; (b) incident edges from
    different classes close a triangle; (c) distinct classes have distinct
    vertex sets; (d) no induced P3 straddles two classes.  Failures carry a
    witness; an artificially tampered partition trips (d).
    """
    if p.graph != g or len(p.class_of) != g.m:
        raise ContractError("partition does not belong to this graph")
    key = encode_graph6(g)
    report = VerificationReport(meta={"graph6": key})

    witness = None
    for cid in range(p.k):
        sub = edge_subgraph(g, p.class_edges(cid))
        if not is_connected(sub):
            witness = f"class {cid} spans a disconnected subgraph"
            break
    report.extend([CheckResult("partition-class-connected", witness is None, key, witness)])

    witness = None
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for i, u in enumerate(nbrs):
            cu = p.class_of_pair(u, v)
            for w in nbrs[i + 1:]:
                if cu != p.class_of_pair(v, w) and not g.has_edge(u, w):
                    witness = f"edges {(u, v)} and {(v, w)} differ in class but {(u, w)} is a non-edge"
                    break
            if witness:
                break
        if witness:
            break
    report.extend([CheckResult("partition-cross-class-adjacency", witness is None, key, witness)])

    # Distinct classes may share a vertex set only inside one component, so
    # the global comparison is exactly the per-component law.
    witness = None
    seen: dict[frozenset[int], int] = {}
    for cid, verts in enumerate(p.vertex_sets):
        if verts in seen:
            witness = f"classes {seen[verts]} and {cid} share vertex set {sorted(verts)}"
            break
        seen[verts] = cid
    report.extend([CheckResult("partition-distinct-vertex-sets", witness is None, key, witness)])

    witness = None
    for u, v, w in induced_p3s(g):
        if p.class_of_pair(u, v) != p.class_of_pair(v, w):
            witness = f"induced P3 {(u, v, w)} straddles two classes"
            break
    report.extend([CheckResult("partition-p3-same-class", witness is None, key, witness)])
    return report
