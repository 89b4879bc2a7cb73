"""Undirected simple graphs with dense vertex ids, text formats, and the
local structure queries the rest of the package builds on."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import ContractError, FormatError

VertexSet = Iterable[int]
EdgePair = tuple[int, int]

_GRAPH6_HEADER = ">>graph6<<"


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Edges are canonical ``(min, max)`` pairs carrying a dense index assigned
    in lexicographic pair order.  Adjacency is kept as one int bitset per
    vertex because neighbour-pair scans (induced-P3 enumeration) dominate
    the workload.  External string labels, when present, map one-to-one
    onto the dense ids.
    """

    __slots__ = ("n", "edges", "labels", "_adj_bits", "_nbrs", "_edge_index")

    def __init__(
        self,
        n: int,
        edges: Iterable[EdgePair] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise ContractError(f"vertex count must be non-negative, got {n}")
        canonical: set[EdgePair] = set()
        for u, v in edges:
            if u == v:
                raise ContractError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            canonical.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[EdgePair, ...] = tuple(sorted(canonical))
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ContractError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise ContractError("vertex labels must be unique")
        self.labels: tuple[str, ...] | None = labels

        adj = [0] * n
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._adj_bits = tuple(adj)
        self._nbrs = tuple(tuple(sorted(s)) for s in nbrs)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def adjacency_bits(self, v: int) -> int:
        return self._adj_bits[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= v < self.n and bool((self._adj_bits[u] >> v) & 1)

    def edge_index(self, u: int, v: int) -> int:
        """Dense index of edge {u, v}; unknown edges are a contract error."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise ContractError(f"no edge {key} in graph") from None

    def edge(self, index: int) -> EdgePair:
        return self.edges[index]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_by_label(self, label: str) -> int:
        if self.labels is not None:
            try:
                return self.labels.index(label)
            except ValueError:
                raise ContractError(f"unknown vertex label {label!r}") from None
        try:
            v = int(label)
        except ValueError:
            raise ContractError(f"unknown vertex label {label!r}") from None
        if not 0 <= v < self.n:
            raise ContractError(f"vertex {v} outside range 0..{self.n - 1}")
        return v

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` lines into a graph.

    Vertex tokens are arbitrary strings; dense ids follow first appearance.
    Blank lines and lines starting with ``#`` are skipped.  A header line
    ``vertices: a b c`` declares vertices up front (isolated ones included).
    Duplicate edge lines collapse to a single edge.
    """
    labels: list[str] = []
    index: dict[str, int] = {}

    def vid(token: str) -> int:
        if token not in index:
            index[token] = len(labels)
            labels.append(token)
        return index[token]

    edges: set[EdgePair] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            for token in line[len("vertices:"):].split():
                vid(token)
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        if tokens[0] == tokens[1]:
            raise FormatError(f"line {lineno}: self-loop on {tokens[0]!r}")
        u, v = vid(tokens[0]), vid(tokens[1])
        edges.add((u, v) if u < v else (v, u))
    return Graph(len(labels), edges, labels=labels or None)


def format_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list`; the full ``vertices:`` header
    pins first-appearance order so dense ids round-trip exactly."""
    lines = []
    if g.n:
        lines.append("vertices: " + " ".join(g.label(v) for v in range(g.n)))
    for u, v in g.edges:
        lines.append(f"{g.label(u)} {g.label(v)}")
    return "\n".join(lines) + ("\n" if lines else "")


def _graph6_values(text: str) -> list[int]:
    values = []
    for ch in text:
        code = ord(ch)
        if code < 63 or code > 126:
            raise FormatError(f"invalid graph6 character {ch!r}")
        values.append(code - 63)
    return values


def parse_graph6(text: str) -> Graph:
    """Decode one graph in graph6 format (basic variant).

    Layout: N(n) header, then the upper adjacency triangle read column by
    column, packed big-endian six bits per printable character offset 63.
    """
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 input")
    values = _graph6_values(s)
    if values[0] < 63:
        n, pos = values[0], 1
    elif len(values) >= 2 and values[1] < 63:
        if len(values) < 4:
            raise FormatError("truncated graph6 vertex count")
        n, pos = (values[1] << 12) | (values[2] << 6) | values[3], 4
    else:
        if len(values) < 8:
            raise FormatError("truncated graph6 vertex count")
        n = 0
        for v in values[2:8]:
            n = (n << 6) | v
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = values[pos:]
    if len(body) < need:
        raise FormatError(f"truncated graph6 bit stream: need {need} characters, got {len(body)}")
    if len(body) > need:
        raise FormatError("trailing data after graph6 bit stream")

    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if (body[bit // 6] >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    while bit < 6 * need:
        if (body[bit // 6] >> (5 - bit % 6)) & 1:
            raise FormatError("nonzero padding bits in graph6 stream")
        bit += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a graph in graph6 format; exact inverse of :func:`parse_graph6`."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise ContractError(f"graph6 supports at most 258047 vertices, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    chars = []
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6] + [0] * (6 - len(bits[k:k + 6]))
        value = 0
        for b in chunk:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return head + "".join(chars)


_CLASS_STYLES = ("solid", "dashed", "dotted", "bold")


def _dot_id(name: str) -> str:
    if name and (name.isidentifier() or name.isdigit()):
        return name
    return '"' + name.replace('"', '\\"') + '"'


def to_dot(g: Graph, overlay: object = None) -> str:
    """Render DOT text, optionally styled by a class partition, an edge
    colouring (R dotted, B solid), or an orientation (directed arcs)."""
    from .classes import EdgeClassPartition
    from .colouring import EdgeColouring
    from .orientation import Orientation

    if overlay is not None and getattr(overlay, "graph", None) != g:
        raise ContractError("overlay refers to edges of a different graph")

    directed = isinstance(overlay, Orientation)
    lines = ["digraph {" if directed else "graph {"]
    for v in range(g.n):
        if g.degree(v) == 0:
            lines.append(f"  {_dot_id(g.label(v))};")
    for idx, (u, v) in enumerate(g.edges):
        a, b = _dot_id(g.label(u)), _dot_id(g.label(v))
        if overlay is None:
            lines.append(f"  {a} -- {b};")
        elif isinstance(overlay, EdgeClassPartition):
            style = _CLASS_STYLES[overlay.class_of[idx] % len(_CLASS_STYLES)]
            lines.append(f"  {a} -- {b} [style={style}];")
        elif isinstance(overlay, EdgeColouring):
            style = "dotted" if overlay.colours[idx] == "R" else "solid"
            lines.append(f"  {a} -- {b} [style={style}];")
        elif directed:
            bit = overlay.bits[idx]
            if bit is None:
                lines.append(f"  {a} -> {b} [dir=none];")
            elif bit == 0:
                lines.append(f"  {a} -> {b};")
            else:
                lines.append(f"  {b} -> {a};")
        else:
            raise ContractError(f"unsupported overlay type {type(overlay).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structure queries


def induced_p3s(g: Graph) -> Iterator[tuple[int, int, int]]:
    """Yield each induced 3-vertex path once, centre-anchored: ``(u, v, w)``
    with ``uv, vw`` edges, ``uw`` a non-edge, and ``u < w``."""
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for a, u in enumerate(nbrs):
            row = g.adjacency_bits(u)
            for w in nbrs[a + 1:]:
                if not (row >> w) & 1:
                    yield (u, v, w)


def is_module_set(g: Graph, vertices: VertexSet) -> bool:
    """True iff every vertex outside the set is adjacent to all of it or
    to none of it (the set is a module / homogeneous set)."""
    inside = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ContractError(f"vertex {v} outside range 0..{g.n - 1}")
        inside |= 1 << v
    for v in range(g.n):
        if (inside >> v) & 1:
            continue
        hit = g.adjacency_bits(v) & inside
        if hit != 0 and hit != inside:
            return False
    return True


def is_complete_multipartite(g: Graph) -> list[tuple[int, ...]] | None:
    """Parts of a complete multipartite decomposition, or None.

    The complement must be a disjoint union of cliques: its connected
    components are the candidate parts, valid iff each part is independent
    in ``g``.  Parts are sorted by their smallest vertex.
    """
    full = (1 << g.n) - 1
    comp_adj = [(~g.adjacency_bits(v)) & full & ~(1 << v) for v in range(g.n)]
    seen = 0
    parts: list[tuple[int, ...]] = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        component = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= comp_adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~component
            component |= frontier
        seen |= component
        members = tuple(v for v in range(g.n) if (component >> v) & 1)
        for i, u in enumerate(members):
            for w in members[i + 1:]:
                if g.has_edge(u, w):
                    return None
        parts.append(members)
    return parts


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = 0
    out: list[tuple[int, ...]] = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        component = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.adjacency_bits(low.bit_length() - 1)
                f ^= low
            frontier = nxt & ~component
            component |= frontier
        seen |= component
        out.append(tuple(v for v in range(g.n) if (component >> v) & 1))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: VertexSet) -> Graph:
    """Subgraph induced by ``vertices``, densely reindexed in sorted order;
    inherited labels are the back-map to the original graph."""
    verts = sorted(set(vertices))
    for v in verts:
        if not 0 <= v < g.n:
            raise ContractError(f"vertex {v} outside range 0..{g.n - 1}")
    remap = {v: i for i, v in enumerate(verts)}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if u in remap and v in remap
    ]
    return Graph(len(verts), edges, labels=[g.label(v) for v in verts])


def edge_subgraph(g: Graph, edges: Iterable[EdgePair]) -> Graph:
    """Graph whose edge set is exactly ``edges`` and whose vertex set is
    their endpoints, densely reindexed (no isolated vertices survive)."""
    pairs = []
    for u, v in edges:
        g.edge_index(u, v)
        pairs.append((u, v) if u < v else (v, u))
    verts = sorted({x for pair in pairs for x in pair})
    remap = {v: i for i, v in enumerate(verts)}
    return Graph(
        len(verts),
        [(remap[u], remap[v]) for u, v in pairs],
        labels=[g.label(v) for v in verts],
    )
