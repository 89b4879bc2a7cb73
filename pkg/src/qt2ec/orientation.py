"""Quasi-transitive orientations: the head-sharing forcing rule, partial
orientations generated by a seed arc, feasibility, counting, enumeration.

Direction bits are relative to the canonical low->high edge order (bit 0 =
low->high).  An induced P3 forces its two edges to share a head or share a
tail at the centre, which is a parity constraint between their bits, so a
class is orientable exactly when its signed constraint graph has no odd
cycle; parity union-find decides that in near-linear time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .classes import EdgeClassPartition, compute_classes
from .errors import ContractError, InfeasibilityError, RefusalError
from .graph import EdgePair, Graph, induced_p3s


@dataclass(frozen=True)
class Orientation:
    """A partial or total arc assignment, one optional bit per edge index
    (0 = low->high, 1 = high->low, None = unoriented)."""

    graph: Graph
    bits: tuple[int | None, ...]

    def __post_init__(self):
        if len(self.bits) != self.graph.m:
            raise ContractError(
                f"orientation covers {len(self.bits)} edges, graph has {self.graph.m}"
            )

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[tuple[int, int]]) -> "Orientation":
        bits: list[int | None] = [None] * g.m
        for tail, head in arcs:
            idx = g.edge_index(tail, head)
            bit = 0 if (tail, head) == g.edge(idx) else 1
            if bits[idx] is not None and bits[idx] != bit:
                raise ContractError(f"edge {g.edge(idx)} oriented both ways")
            bits[idx] = bit
        return cls(g, tuple(bits))

    @property
    def is_total(self) -> bool:
        return all(b is not None for b in self.bits)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b is not None)

    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for i, b in enumerate(self.bits):
            if b is None:
                continue
            u, v = self.graph.edge(i)
            out.append((u, v) if b == 0 else (v, u))
        return out

    def arc_of(self, u: int, v: int) -> tuple[int, int] | None:
        idx = self.graph.edge_index(u, v)
        b = self.bits[idx]
        if b is None:
            return None
        a, c = self.graph.edge(idx)
        return (a, c) if b == 0 else (c, a)

    def reversed(self) -> "Orientation":
        return Orientation(
            self.graph, tuple(None if b is None else 1 - b for b in self.bits)
        )

    def restricted_to(self, edge_indices: Iterable[int]) -> "Orientation":
        keep = set(edge_indices)
        return Orientation(
            self.graph,
            tuple(b if i in keep else None for i, b in enumerate(self.bits)),
        )

    def format_arcs(self) -> str:
        g = self.graph
        return "\n".join(f"{g.label(t)} -> {g.label(h)}" for t, h in self.arcs())


@dataclass(frozen=True)
class OrientationFeasibility:
    """Per-class consistency verdicts; the total count is 2^k or 0."""

    partition: EdgeClassPartition
    contradictions: tuple[EdgePair | None, ...]

    @property
    def k(self) -> int:
        return self.partition.k

    @property
    def orientable(self) -> bool:
        return all(w is None for w in self.contradictions)

    @property
    def count(self) -> int:
        return (1 << self.k) if self.orientable else 0

    def class_consistent(self, class_id: int) -> bool:
        return self.contradictions[class_id] is None


def _head_parity(g: Graph, edge_index: int, centre: int) -> int:
    """0 if bit 0 points the edge's head at ``centre``, else 1."""
    _, hi = g.edge(edge_index)
    return 0 if centre == hi else 1


def _p3_constraints(g: Graph) -> Iterator[tuple[int, int, int, tuple[int, int, int]]]:
    """Yield (i, j, parity, triple): bits of edges i, j must xor to parity."""
    for u, v, w in induced_p3s(g):
        i = g.edge_index(u, v)
        j = g.edge_index(v, w)
        yield i, j, _head_parity(g, i, v) ^ _head_parity(g, j, v), (u, v, w)


class _ParityDisjointSets:
    """Union-find where each element carries a parity relative to its root."""

    def __init__(self, size: int):
        self._parent = list(range(size))
        self._rank = [0] * size
        self._parity = [0] * size

    def find(self, x: int) -> tuple[int, int]:
        path = []
        while self._parent[x] != x:
            path.append(x)
            x = self._parent[x]
        parity = 0
        for node in reversed(path):
            parity ^= self._parity[node]
            self._parent[node] = x
            self._parity[node] = parity
        return x, parity

    def union(self, a: int, b: int, rel: int) -> bool:
        """Impose bits(a) xor bits(b) = rel; False on contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == rel
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
            pa, pb = pb, pa
        self._parent[rb] = ra
        self._parity[rb] = pa ^ pb ^ rel
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        return True


def is_quasi_transitive_orientation(
    g: Graph, o: Orientation
) -> tuple[bool, tuple[int, int, int] | None]:
    """Definitional check: no induced P3 may form a directed 2-path.

    Equivalently the centre of every induced P3 is a common head or a
    common tail.  Returns a violating triple on failure.
    """
    if o.graph != g:
        raise ContractError("orientation belongs to a different graph")
    if not o.is_total:
        raise ContractError("orientation must be total")
    for i, j, parity, triple in _p3_constraints(g):
        if (o.bits[i] ^ o.bits[j]) != parity:  # type: ignore[operator]
            return False, triple
    return True, None


def partial_orientation(g: Graph, seed: tuple[int, int]) -> Orientation:
    """The unique partial quasi-transitive orientation generated by the arc
    ``seed = (u, v)`` (oriented u -> v).

    Breadth-first forcing: whenever an oriented edge shares an induced P3
    with another edge, the partner must agree on head-or-tail at the shared
    centre.  The closure orients exactly the edge class of ``uv``; a parity
    clash inside that class raises InfeasibilityError carrying the edge
    that was forced both ways.
    """
    u, v = seed
    start = g.edge_index(u, v)
    bits: dict[int, int] = {start: 0 if (u, v) == g.edge(start) else 1}
    queue = deque([start])
    while queue:
        i = queue.popleft()
        a, b = g.edge(i)
        for centre, other in ((a, b), (b, a)):
            row = g.adjacency_bits(other)
            for w in g.neighbors(centre):
                if w == other or (row >> w) & 1:
                    continue
                j = g.edge_index(centre, w)
                rel = _head_parity(g, i, centre) ^ _head_parity(g, j, centre)
                forced = bits[i] ^ rel
                if j in bits:
                    if bits[j] != forced:
                        raise InfeasibilityError(
                            f"edge {g.edge(j)} is forced both ways", edge=g.edge(j)
                        )
                else:
                    bits[j] = forced
                    queue.append(j)
    return Orientation(g, tuple(bits.get(i) for i in range(g.m)))


def orientability(g: Graph) -> OrientationFeasibility:
    """Decide per class whether a consistent orientation exists.

    Running every P3 parity constraint through parity union-find finds the
    contradictory classes; the graph is quasi-transitively orientable (a
    comparability graph) iff none exists, and then has exactly 2^k
    orientations.
    """
    p = compute_classes(g)
    dsu = _ParityDisjointSets(g.m)
    bad: dict[int, EdgePair] = {}
    for i, j, parity, _triple in _p3_constraints(g):
        if not dsu.union(i, j, parity):
            bad.setdefault(p.class_of[i], g.edge(j))
    return OrientationFeasibility(p, tuple(bad.get(c) for c in range(p.k)))


def enumerate_orientations(
    g: Graph, cap: int = 20
) -> Iterator[Orientation]:
    """Yield all quasi-transitive orientations in class-bitmask order.

    Per class the canonical choice is the partial orientation seeded at the
    class's least edge in low->high direction; mask bit i = 1 reverses
    class i.  Refuses non-orientable graphs and k above the cap.
    """
    feas = orientability(g)
    if not feas.orientable:
        raise RefusalError("graph has no quasi-transitive orientation")
    if feas.k > cap:
        raise RefusalError(f"enumeration cap exceeded: {feas.k} classes > cap {cap}")
    p = feas.partition
    canonical: list[int] = [0] * g.m
    for cid in range(p.k):
        gamma = partial_orientation(g, g.edge(p.classes[cid][0]))
        for e in p.classes[cid]:
            canonical[e] = gamma.bits[e]  # type: ignore[assignment]
    return _orientation_stream(g, p, tuple(canonical))


def _orientation_stream(
    g: Graph, p: EdgeClassPartition, canonical: tuple[int, ...]
) -> Iterator[Orientation]:
    for mask in range(1 << p.k):
        yield Orientation(
            g,
            tuple(
                canonical[e] ^ ((mask >> p.class_of[e]) & 1) for e in range(g.m)
            ),
        )


def same_gamma_class(g: Graph, e: EdgePair, f: EdgePair) -> bool:
    """True iff the partial orientations generated from ``e`` and ``f``
    orient the same edge set, i.e. the edges share a class."""
    feas = orientability(g)
    ce = feas.partition.class_of_pair(*e)
    cf = feas.partition.class_of_pair(*f)
    for cid in (ce, cf):
        if not feas.class_consistent(cid):
            raise InfeasibilityError(
                f"class of edge {g.edge(feas.partition.classes[cid][0])} admits no orientation",
                edge=feas.contradictions[cid],
            )
    return ce == cf
