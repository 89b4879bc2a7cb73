"""Pairwise class-intersection analysis and the three-class classification.

For two edge classes the vertex sets split into the two exclusive sides and
the shared part; when all three pieces are nonempty ("crossing") strong
structural laws apply, culminating in: a connected graph with exactly three
classes is complete tripartite or has a class spanning all vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import EdgeClassPartition, compute_classes
from .errors import ContractError
from .graph import (
    Graph,
    encode_graph6,
    induced_subgraph,
    is_complete_multipartite,
    is_connected,
)
from .report import CheckResult, VerificationReport

DISJOINT = "disjoint"
NESTED = "nested"
CROSSING = "crossing"


@dataclass(frozen=True)
class ClassPairRelation:
    """How the vertex sets of two classes overlap."""

    first: int
    second: int
    only_first: frozenset[int]
    only_second: frozenset[int]
    shared: frozenset[int]

    @property
    def tag(self) -> str:
        if not self.shared:
            return DISJOINT
        if not self.only_first or not self.only_second:
            return NESTED
        return CROSSING


def class_pair_relation(
    g: Graph, p: EdgeClassPartition, c: int, d: int
) -> ClassPairRelation:
    if p.graph != g:
        raise ContractError("partition does not belong to this graph")
    if c == d:
        raise ContractError("class pair must be distinct")
    vc, vd = p.vertex_sets[c], p.vertex_sets[d]
    return ClassPairRelation(c, d, vc - vd, vd - vc, vc & vd)


def _induces_join(g: Graph, vertices: frozenset[int]) -> bool:
    """A join splits into two nonempty parts with every cross pair adjacent,
    i.e. the complement of the induced subgraph is disconnected."""
    if len(vertices) < 2:
        return False
    sub = induced_subgraph(g, vertices)
    complement = Graph(
        sub.n,
        [
            (u, v)
            for u in range(sub.n)
            for v in range(u + 1, sub.n)
            if not sub.has_edge(u, v)
        ],
    )
    return not is_connected(complement)


def check_crossing_lemmas(
    g: Graph, p: EdgeClassPartition, c: int, d: int
) -> VerificationReport:
    """Assert the five structural laws of a crossing class pair.

    (a) neither class has an edge inside the shared part; (b) each
    exclusive side is joined to the whole other class's vertex set; (c)
    every class edge touches the shared part; (d) none of the three pieces
    induces a join; (e) all side-to-side edges lie in one further class.
    """
    rel = class_pair_relation(g, p, c, d)
    if rel.tag != CROSSING:
        raise ContractError(f"class pair ({c}, {d}) is {rel.tag}, not crossing")
    key = encode_graph6(g)
    report = VerificationReport(meta={"graph6": key, "pair": (c, d)})
    shared, a_side, b_side = rel.shared, rel.only_first, rel.only_second

    witness = None
    for cid in (c, d):
        for u, v in p.class_edges(cid):
            if u in shared and v in shared:
                witness = f"class {cid} edge {(u, v)} lies inside the intersection"
                break
        if witness:
            break
    report.extend([CheckResult("crossing-no-edge-inside-intersection", witness is None, key, witness)])

    witness = None
    for side, other in ((a_side, p.vertex_sets[d]), (b_side, p.vertex_sets[c])):
        for u in sorted(side):
            for v in sorted(other):
                if not g.has_edge(u, v):
                    witness = f"vertex {u} not adjacent to {v}"
                    break
            if witness:
                break
        if witness:
            break
    report.extend([CheckResult("crossing-sides-joined", witness is None, key, witness)])

    witness = None
    for cid in (c, d):
        for u, v in p.class_edges(cid):
            if u not in shared and v not in shared:
                witness = f"class {cid} edge {(u, v)} avoids the intersection"
                break
        if witness:
            break
    report.extend([CheckResult("crossing-edges-touch-intersection", witness is None, key, witness)])

    witness = None
    for name, piece in (("A", a_side), ("B", b_side), ("I", shared)):
        if _induces_join(g, piece):
            witness = f"piece {name} = {sorted(piece)} induces a join"
            break
    report.extend([CheckResult("crossing-no-piece-is-join", witness is None, key, witness)])

    witness = None
    cross_classes = {
        p.class_of_pair(u, v)
        for u in a_side
        for v in b_side
        if g.has_edge(u, v)
    }
    if len(cross_classes) > 1:
        witness = f"side-to-side edges span classes {sorted(cross_classes)}"
    report.extend([CheckResult("crossing-cross-edges-one-class", witness is None, key, witness)])
    return report


@dataclass(frozen=True)
class ThreeClassOutcome:
    """Result of classifying a connected graph with exactly three classes:
    complete tripartite parts, a spanning class id, or both."""

    tripartite_parts: tuple[tuple[int, ...], ...] | None
    spanning_class: int | None

    @property
    def kind(self) -> str:
        if self.tripartite_parts is not None:
            return "complete_tripartite"
        if self.spanning_class is not None:
            return "spanning_class"
        raise ContractError("three-class outcome with neither alternative")


def three_class_classification(g: Graph) -> ThreeClassOutcome:
    """Classify a connected three-class graph.

    Complete tripartite takes precedence when both alternatives hold; the
    spanning class is still reported alongside.
    """
    if not is_connected(g):
        raise ContractError("classification requires a connected graph")
    p = compute_classes(g)
    if p.k != 3:
        raise ContractError(f"expected exactly 3 classes, found {p.k}")
    parts = is_complete_multipartite(g)
    tri = tuple(parts) if parts is not None and len(parts) == 3 else None
    everything = frozenset(range(g.n))
    spanning = next(
        (cid for cid in range(3) if p.vertex_sets[cid] == everything), None
    )
    return ThreeClassOutcome(tri, spanning)


TINY_LEMMA_HYPOTHESES = (
    "u,v,y in shared part; x only in second class's vertex set; "
    "uv,vx in second class; vy an edge outside it; uy in first class"
)


def check_tinylemma_instances(
    g: Graph, p: EdgeClassPartition
) -> VerificationReport:
    """Scan every configuration matching the small adjacency lemma's
    hypotheses and assert the forced edge ux exists.

    The hypotheses are restrictive (they require a class edge inside the
    shared part), so most graphs contribute zero instances; the instance
    count is recorded in the result detail.
    """
    if p.graph != g:
        raise ContractError("partition does not belong to this graph")
    key = encode_graph6(g)
    instances = 0
    witness = None
    for cf in range(p.k):
        vf = p.vertex_sets[cf]
        for ce in range(p.k):
            if ce == cf:
                continue
            ve = p.vertex_sets[ce]
            if not (ve - vf):
                continue
            shared = ve & vf
            b_side = vf - ve
            if not shared or not b_side:
                continue
            for a, b in p.class_edges(cf):
                if a not in shared or b not in shared:
                    continue
                for u, v in ((a, b), (b, a)):
                    for x in g.neighbors(v):
                        if x not in b_side or p.class_of_pair(v, x) != cf:
                            continue
                        for y in g.neighbors(v):
                            if y not in shared or y == u:
                                continue
                            if p.class_of_pair(v, y) == cf:
                                continue
                            if not g.has_edge(u, y) or p.class_of_pair(u, y) != ce:
                                continue
                            instances += 1
                            if witness is None and not g.has_edge(u, x):
                                witness = f"u={u} v={v} x={x} y={y}: edge ({u}, {x}) missing"
    result = CheckResult(
        "tinylemma-forced-edge",
        witness is None,
        key,
        witness,
        detail=f"instances={instances}; hypotheses: {TINY_LEMMA_HYPOTHESES}",
    )
    return VerificationReport([result], meta={"graph6": key})
