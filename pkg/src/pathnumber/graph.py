"""Undirected simple graphs, the text format, and path helpers.

Vertices are arbitrary hashable tokens. Parsed graphs use the string tokens
found in the file; generated graphs use ints. Every deterministic ordering in
the package goes through :func:`vkey` so that mixed or numeric tokens sort
naturally ("2" before "10").
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence

Vertex = Hashable
Path = tuple  # a simple vertex sequence
Edge = frozenset


class GraphError(ValueError):
    """Raised for malformed graphs or operations on unknown vertices."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def vkey(v) -> tuple:
    if isinstance(v, int):
        return (0, v, str(v))
    s = str(v)
    if s.isdigit():
        return (0, int(s), s)
    return (1, 0, s)


def edge_key(e) -> tuple:
    a, b = sorted(e, key=vkey)
    return (vkey(a), vkey(b))


def path_edges(path: Sequence) -> list[frozenset]:
    return [frozenset((path[i], path[i + 1])) for i in range(len(path) - 1)]


class Graph:
    """Immutable undirected simple graph.

    ``vertices`` keeps insertion order; ``index`` maps each vertex to its
    dense position 0..n-1 for callers that want array-based bookkeeping.
    """

    __slots__ = ("vertices", "index", "_adj", "_m")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        verts: list = []
        adj: dict = {}
        for v in vertices:
            if v in adj:
                raise GraphError(f"duplicate vertex {v!r}")
            adj[v] = set()
            verts.append(v)
        m = 0
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            for w in (u, v):
                if w not in adj:
                    raise GraphError(f"edge endpoint {w!r} is not a vertex")
            if v in adj[u]:
                raise GraphError(f"duplicate edge {u!r}-{v!r}")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.vertices = tuple(verts)
        self.index = {v: i for i, v in enumerate(verts)}
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._m = m

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> "Graph":
        """Build a graph whose vertex order is first appearance in
        ``vertices`` followed by first appearance in ``edges``."""
        edges = [tuple(e) for e in edges]
        seen: dict = {}
        for v in vertices:
            seen.setdefault(v, None)
        for u, v in edges:
            seen.setdefault(u, None)
            seen.setdefault(v, None)
        return cls(seen, edges)

    # basic queries

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((frozenset(self._adj), frozenset(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={len(self.vertices)}, m={self._m})"

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u, v) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[frozenset]:
        out = []
        for u in self.vertices:
            for v in self._adj[u]:
                if self.index[u] < self.index[v]:
                    out.append(frozenset((u, v)))
        return out

    def edge_set(self) -> set[frozenset]:
        return set(self.edges())

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    def sorted_vertices(self) -> list:
        return sorted(self.vertices, key=vkey)

    # derived graphs

    def without_edges(self, edges: Iterable) -> "Graph":
        drop = {frozenset(e) for e in edges}
        for e in drop:
            u, v = tuple(e)
            if not self.has_edge(u, v):
                raise GraphError(f"edge {u!r}-{v!r} not in graph")
        return Graph(self.vertices, (e for e in self.edges() if e not in drop))

    def with_edges(self, edges: Iterable) -> "Graph":
        new = [tuple(e) for e in edges]
        extra = [w for e in new for w in e if w not in self._adj]
        verts = list(self.vertices) + list(dict.fromkeys(extra))
        return Graph(verts, [tuple(e) for e in self.edges()] + new)

    def induced(self, keep: Iterable) -> "Graph":
        keep = set(keep)
        verts = [v for v in self.vertices if v in keep]
        return Graph(verts, (e for e in self.edges() if e <= keep))

    def without_vertices(self, drop: Iterable) -> "Graph":
        drop = set(drop)
        return self.induced(v for v in self.vertices if v not in drop)

    def relabel(self, mapping) -> "Graph":
        return Graph((mapping[v] for v in self.vertices),
                     ((mapping[u], mapping[v]) for u, v in map(tuple, self.edges())))

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(self.vertices)
        h.add_edges_from(tuple(e) for e in self.edges())
        return h


def degree(g: Graph, v) -> int:
    return g.degree(v)


def odd_count(g: Graph) -> int:
    """Number of odd-degree vertices."""
    return sum(1 for v in g.vertices if g.degree(v) % 2)


def components(g: Graph) -> list[Graph]:
    """Connected components, ordered by their smallest vertex."""
    seen: set = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        members = set()
        while stack:
            u = stack.pop()
            members.add(u)
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(g.induced(members))
    comps.sort(key=lambda c: min(vkey(v) for v in c.vertices))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def strip_isolated(g: Graph) -> Graph:
    return g.induced(v for v in g.vertices if g.degree(v) > 0)


def remove_paths(g: Graph, paths: Iterable[Sequence]) -> Graph:
    """``g`` minus the edges of ``paths``; the vertex set is kept."""
    drop = []
    for p in paths:
        for e in path_edges(p):
            u, v = tuple(e)
            if not g.has_edge(u, v):
                raise GraphError(f"path {tuple(p)!r} uses non-edge {u!r}-{v!r}")
            drop.append(e)
    if len(set(drop)) != len(drop):
        raise GraphError("paths are not edge-disjoint")
    return g.without_edges(drop)


def is_path_of(g: Graph, path: Sequence) -> bool:
    if len(path) < 1 or len(set(path)) != len(path):
        return False
    if any(v not in g for v in path):
        return False
    return all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def verify_partition(g: Graph, paths: Iterable[Sequence]) -> bool:
    """True iff ``paths`` are simple paths of ``g`` with edge sets that are
    pairwise disjoint and together equal E(g)."""
    covered: set = set()
    for p in paths:
        if len(p) < 2 or not is_path_of(g, p):
            return False
        for e in path_edges(p):
            if e in covered:
                return False
            covered.add(e)
    return covered == g.edge_set()


# text format


def parse_graph(text) -> Graph:
    """Parse the line-oriented graph format.

    Accepted lines: ``c ...`` comments, an optional ``p edge <n> <m>``
    header, ``e <u> <v>`` edges and ``n <v>`` isolated-vertex declarations.
    Vertex order is first appearance. When a header gives ``n`` larger than
    the number of vertices seen, the missing integer labels 1..n are added.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode()
    verts: dict = {}
    edges: list = []
    edge_seen: set = set()
    header = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "c":
            continue
        if kind == "p":
            if len(parts) != 4 or parts[1] != "edge" or header is not None:
                raise ParseError(lineno, f"bad header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(lineno, f"bad header {line!r}") from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError(lineno, f"bad header {line!r}")
        elif kind == "e":
            if len(parts) != 3:
                raise ParseError(lineno, f"bad edge line {line!r}")
            u, v = parts[1], parts[2]
            if u == v:
                raise ParseError(lineno, f"self-loop at {u}")
            key = frozenset((u, v))
            if key in edge_seen:
                raise ParseError(lineno, f"duplicate edge {u}-{v}")
            edge_seen.add(key)
            verts.setdefault(u, None)
            verts.setdefault(v, None)
            edges.append((u, v))
        elif kind == "n":
            if len(parts) != 2:
                raise ParseError(lineno, f"bad vertex line {line!r}")
            verts.setdefault(parts[1], None)
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    if header is not None:
        n, m = header
        if m != len(edges):
            raise ParseError(0, f"header announces {m} edges, found {len(edges)}")
        if len(verts) < n:
            for i in range(1, n + 1):
                if len(verts) >= n:
                    break
                verts.setdefault(str(i), None)
        if len(verts) != n:
            raise ParseError(0, f"header announces {n} vertices, found {len(verts)}")
    return Graph(verts, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    touched = set()
    for e in g.edges():
        u, v = sorted(e, key=g.index.__getitem__)
        lines.append(f"e {u} {v}")
        touched.update(e)
    lines.extend(f"n {v}" for v in g.vertices if v not in touched)
    return "\n".join(lines) + "\n"
