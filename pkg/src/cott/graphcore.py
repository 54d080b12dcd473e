"""Core graph, bigraph and binary-matrix types.

All types are immutable.  Adjacency and matrix rows are stored as integer
bitmasks: bit ``j`` of ``Graph.adj[i]`` is set iff ``i`` and ``j`` are
adjacent, and bit ``j`` of ``BinaryMatrix.data[i]`` is entry ``(i, j)``.
Vertex ids are always dense ``0..n-1``; symbolic names live in ``labels``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from cott import kernels

ISOMORPHISM_CAP = 12


class SizeLimitError(ValueError):
    """Input exceeds the configured cap of an exhaustive search."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``labels`` is an optional sidecar of vertex names and does not take part
    in equality.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must name every vertex")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def from_labeled_edges(
        cls, vertices: Sequence[str], edges: Iterable[tuple[str, str]]
    ) -> Graph:
        index = {name: i for i, name in enumerate(vertices)}
        return cls.from_edges(
            len(vertices), ((index[a], index[b]) for a, b in edges), labels=vertices
        )

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_names(self) -> list[str]:
        return [self.label(v) for v in range(self.n)]

    def index_of(self, name: str) -> int:
        names = self.vertex_names()
        try:
            return names.index(name)
        except ValueError:
            raise KeyError(f"no vertex named {name!r}") from None

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        return Graph.from_edges(self.n, [*self.edges(), *extra], self.labels)

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> Graph:
        drop = {frozenset(e) for e in removed}
        return Graph.from_edges(
            self.n, [e for e in self.edges() if frozenset(e) not in drop], self.labels
        )

    def adjacency_matrix(self, loops: int = 0) -> BinaryMatrix:
        """Adjacency matrix with diagonal bits taken from the ``loops`` mask."""
        return BinaryMatrix(
            self.n, self.n, tuple(row | (((loops >> v) & 1) << v) for v, row in enumerate(self.adj))
        )


@dataclass(frozen=True)
class BinaryMatrix:
    """Rectangular 0/1 matrix with rows stored as column bitmasks."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        full = (1 << self.cols) - 1
        if any(r & ~full for r in self.data):
            raise ValueError("row has bits beyond the column count")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> BinaryMatrix:
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        data = []
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise ValueError(f"row {i} has length {len(row)}, expected {cols}")
            data.append(sum(1 << j for j, x in enumerate(row) if x))
        return cls(rows, cols, tuple(data))

    @classmethod
    def ones(cls, rows: int, cols: int) -> BinaryMatrix:
        return cls(rows, cols, ((1 << cols) - 1,) * rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def column(self, j: int) -> int:
        """Column ``j`` as a bitmask over rows."""
        return sum(((r >> j) & 1) << i for i, r in enumerate(self.data))

    def transpose(self) -> BinaryMatrix:
        return BinaryMatrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> BinaryMatrix:
        """Matrix whose row ``p`` is original row ``row_order[p]`` (same for columns)."""
        if sorted(row_order) != list(range(self.rows)) or sorted(col_order) != list(range(self.cols)):
            raise ValueError("orders must be permutations of the row and column indices")
        out = []
        for r in row_order:
            src = self.data[r]
            out.append(sum(((src >> c) & 1) << p for p, c in enumerate(col_order)))
        return BinaryMatrix(self.rows, self.cols, tuple(out))

    def zeros(self) -> list[tuple[int, int]]:
        """Zero positions in row-major order."""
        return [(i, j) for i in range(self.rows) for j in range(self.cols) if not (self.data[i] >> j) & 1]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in row) for row in self.to_lists())


@dataclass(frozen=True)
class Bigraph:
    """Bipartite graph ``(X, Y, E)`` given by its ``|X| x |Y|`` biadjacency matrix."""

    x_size: int
    y_size: int
    biadjacency: BinaryMatrix
    x_labels: tuple[str, ...] | None = field(default=None, compare=False)
    y_labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if (self.biadjacency.rows, self.biadjacency.cols) != (self.x_size, self.y_size):
            raise ValueError("biadjacency shape does not match partite sizes")

    @classmethod
    def from_matrix(cls, m: BinaryMatrix) -> Bigraph:
        return cls(m.rows, m.cols, m)

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.biadjacency.data)

    def as_graph(self) -> Graph:
        """The bigraph as a plain graph on ``X`` (ids ``0..|X|-1``) then ``Y``."""
        p = self.x_size
        edges = [(i, p + j) for i in range(p) for j in bits(self.biadjacency.data[i])]
        labels = None
        if self.x_labels is not None and self.y_labels is not None:
            labels = (*self.x_labels, *self.y_labels)
        return Graph.from_edges(p + self.y_size, edges, labels)


@dataclass(frozen=True)
class SetSystem:
    """Ordered family of subsets of the ground set ``{1..ground}``."""

    ground: int
    sets: tuple[frozenset[int], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for s in self.sets:
            if any(not 1 <= e <= self.ground for e in s):
                raise ValueError(f"set {sorted(s)} leaves the ground set 1..{self.ground}")

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]], ground: int | None = None, name: str = "") -> SetSystem:
        frozen = tuple(frozenset(s) for s in sets)
        if ground is None:
            ground = max((max(s) for s in frozen if s), default=0)
        return cls(ground, frozen, name)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)), g.labels)


def induced(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled ``0..k-1`` in the given order."""
    seen: set[int] = set()
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        if v in seen:
            raise ValueError(f"vertex {v} listed twice")
        seen.add(v)
    adj = []
    for v in vertices:
        row = g.adj[v]
        adj.append(sum(1 << p for p, u in enumerate(vertices) if (row >> u) & 1))
    labels = tuple(g.labels[v] for v in vertices) if g.labels is not None else None
    return Graph(len(vertices), tuple(adj), labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced(g, [u for u in range(g.n) if u != v])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def bigraph_from_set_system(s: SetSystem) -> Bigraph:
    """Incidence bigraph: ``X`` are the sets, ``Y`` the ground elements."""
    data = tuple(sum(1 << (e - 1) for e in members) for members in s.sets)
    m = BinaryMatrix(len(s.sets), s.ground, data)
    x_labels = tuple("{" + ",".join(str(e) for e in sorted(members)) + "}" for members in s.sets)
    y_labels = tuple(str(e) for e in range(1, s.ground + 1))
    return Bigraph(len(s.sets), s.ground, m, x_labels, y_labels)


def degree_sequence(g: Graph) -> list[int]:
    return sorted(r.bit_count() for r in g.adj)


def are_isomorphic(g: Graph, h: Graph, cap: int = ISOMORPHISM_CAP) -> bool:
    """Exact isomorphism test by backtracking with degree pruning."""
    if max(g.n, h.n) > cap:
        raise SizeLimitError(f"isomorphism test is capped at n={cap}")
    if g.n != h.n or g.num_edges != h.num_edges or degree_sequence(g) != degree_sequence(h):
        return False
    return kernels.induced_embedding(list(h.adj), h.n, list(g.adj), g.n, True) is not None


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def component_of(g: Graph, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside the ``allowed`` mask."""
    if not (allowed >> start) & 1:
        return 0
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def shortest_path(g: Graph, source: int, target: int, allowed: int) -> list[int] | None:
    """BFS path from ``source`` to ``target`` through vertices in ``allowed``."""
    if not ((allowed >> source) & 1 and (allowed >> target) & 1):
        return None
    parent = {source: -1}
    frontier = [source]
    while frontier and target not in parent:
        nxt = []
        for v in frontier:
            for u in bits(g.adj[v] & allowed):
                if u not in parent:
                    parent[u] = v
                    nxt.append(u)
        frontier = nxt
    if target not in parent:
        return None
    path = [target]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path[::-1]
