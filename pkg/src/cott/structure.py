"""Structural graph classes and their obstructions.

Chordal, strongly chordal, split and interval recognition with witnesses,
asteroidal triples, edge-asteroids and long induced cycles.  Every negative
answer carries a witness that can be checked independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from cott.graphcore import Graph, bits, complement, component_of, induced, shortest_path


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]
    kind: Literal["perfect", "simple"] = "perfect"


@dataclass(frozen=True)
class ChordalResult:
    ok: bool
    ordering: EliminationOrdering | None = None
    cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StronglyChordalResult:
    ok: bool
    ordering: EliminationOrdering | None = None
    stuck: tuple[int, ...] | None = None
    """Vertices of a remaining induced subgraph in which no vertex is simple."""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class AsteroidalTriple:
    triple: tuple[int, int, int]
    paths: tuple[tuple[int, ...], ...]
    """``paths[i]`` joins the two triple members other than ``triple[i]``."""


@dataclass(frozen=True)
class IntervalResult:
    ok: bool
    cycle: tuple[int, ...] | None = None
    triple: AsteroidalTriple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class EdgeAsteroid:
    """Edges ``e_0..e_2k``; ``paths[i]`` joins ``e_i`` and ``e_(i+1)``, runs through
    both, and avoids the closed neighbourhoods of the endpoints of ``e_(i+k+1)``."""

    edges: tuple[tuple[int, int], ...]
    paths: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return (len(self.edges) - 1) // 2


@dataclass(frozen=True)
class EdgeAsteroidSearch:
    status: Literal["found", "absent", "inconclusive"]
    asteroid: EdgeAsteroid | None = None
    max_edges: int = 0
    interpretation: dict[str, str] = field(
        default_factory=lambda: {
            "edge_neighbourhood": "closed neighbourhoods of both endpoints",
            "edges": "distinct, not necessarily disjoint",
        }
    )

    def __bool__(self) -> bool:
        return self.status == "found"


def _closed(g: Graph, v: int) -> int:
    return g.adj[v] | (1 << v)


def _is_clique(g: Graph, mask: int) -> bool:
    return all(mask & ~_closed(g, u) == 0 for u in bits(mask))


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to the smallest id)."""
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not (visited >> u) & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= 1 << v
        for u in bits(g.adj[v] & ~visited):
            weight[u] += 1
    return order


def is_perfect_elimination(g: Graph, order: list[int]) -> bool:
    later = (1 << g.n) - 1
    for v in order:
        later &= ~(1 << v)
        if not _is_clique(g, g.adj[v] & later):
            return False
    return True


def chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    """An induced cycle of length at least 4, or ``None`` if ``g`` is chordal.

    For a vertex ``v`` with non-adjacent neighbours ``a`` and ``b``, a shortest
    ``a``-``b`` path avoiding the rest of ``N[v]`` closes a chordless cycle.
    """
    full = (1 << g.n) - 1
    for v in range(g.n):
        nb = list(bits(g.adj[v]))
        for a, b in combinations(nb, 2):
            if g.has_edge(a, b):
                continue
            allowed = full & ~_closed(g, v) | (1 << a) | (1 << b)
            path = shortest_path(g, a, b, allowed)
            if path is not None:
                return (v, *path)
    return None


def is_chordal(g: Graph) -> ChordalResult:
    order = mcs_order(g)[::-1]
    if is_perfect_elimination(g, order):
        return ChordalResult(True, ordering=EliminationOrdering(tuple(order), "perfect"))
    cycle = chordless_cycle(g)
    if cycle is None:
        raise AssertionError("perfect elimination failed but no chordless cycle exists")
    return ChordalResult(False, cycle=cycle)


def simplicial_vertices(g: Graph) -> set[int]:
    return {v for v in range(g.n) if _is_clique(g, g.adj[v])}


def _simple_in(g: Graph, v: int, alive: int) -> bool:
    hoods = sorted(
        (_closed(g, u) & alive for u in bits(_closed(g, v) & alive)), key=int.bit_count
    )
    return all(a & ~b == 0 for a, b in zip(hoods, hoods[1:]))


def simple_vertices(g: Graph) -> set[int]:
    full = (1 << g.n) - 1
    return {v for v in range(g.n) if _simple_in(g, v, full)}


def is_strongly_chordal(g: Graph) -> StronglyChordalResult:
    """Greedy simple elimination; strong chordality is hereditary, so greed is exact."""
    alive = (1 << g.n) - 1
    order = []
    while alive:
        v = next((u for u in bits(alive) if _simple_in(g, u, alive)), None)
        if v is None:
            return StronglyChordalResult(False, stuck=tuple(bits(alive)))
        order.append(v)
        alive &= ~(1 << v)
    return StronglyChordalResult(True, ordering=EliminationOrdering(tuple(order), "simple"))


def is_split(g: Graph) -> bool:
    return bool(is_chordal(g)) and bool(is_chordal(complement(g)))


def find_asteroidal_triple(g: Graph) -> AsteroidalTriple | None:
    """First independent triple (lexicographic) whose pairs connect avoiding the third."""
    full = (1 << g.n) - 1
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            continue
        paths = []
        for x, y, z in ((b, c, a), (a, c, b), (a, b, c)):
            path = shortest_path(g, x, y, full & ~_closed(g, z))
            if path is None:
                break
            paths.append(tuple(path))
        else:
            return AsteroidalTriple((a, b, c), tuple(paths))
    return None


def is_interval(g: Graph) -> IntervalResult:
    chordal = is_chordal(g)
    if not chordal:
        return IntervalResult(False, cycle=chordal.cycle)
    at = find_asteroidal_triple(g)
    if at is not None:
        return IntervalResult(False, triple=at)
    return IntervalResult(True)


def _edge_path(g: Graph, e: tuple[int, int], f: tuple[int, int], allowed: int) -> tuple[int, ...]:
    """A path through both edges using only ``allowed`` vertices (they share a component)."""
    best: list[int] | None = None
    for p in e:
        for q in f:
            path = shortest_path(g, p, q, allowed)
            if path is not None and (best is None or len(path) < len(best)):
                best = path
    assert best is not None
    head = e[1] if best[0] == e[0] else e[0]
    tail = f[1] if best[-1] == f[0] else f[0]
    return (head, *best, tail)


def find_edge_asteroid(g: Graph, max_edges: int = 7) -> EdgeAsteroidSearch:
    """Exhaustive search for an edge-asteroid with at most ``max_edges`` edges.

    Writing ``f_t = e_(t(k+1) mod (2k+1))`` turns the defining condition into a
    sliding window: ``f_t`` and ``f_(t+2)`` must lie in one component of the
    graph left after deleting the closed neighbourhoods of ``f_(t+1)``.  The
    sequence is filled left to right with ``f_0`` the smallest edge, so every
    cyclic rotation is tried once.  The result is ``inconclusive`` when the
    bound is below the edge count and nothing was found.
    """
    edges = g.edges()
    m = len(edges)
    full = (1 << g.n) - 1
    allowed = []
    comp = []  # comp[b][a]: component id of edge a after removing edge b's neighbourhood
    for u, v in edges:
        keep = full & ~(_closed(g, u) | _closed(g, v))
        allowed.append(keep)
        ids = []
        for x, y in edges:
            if (keep >> x) & 1 and (keep >> y) & 1:
                ids.append(component_of(g, x, keep) & -component_of(g, x, keep))
            else:
                ids.append(0)
        comp.append(ids)

    def linked(a: int, b: int, c: int) -> bool:
        return comp[b][a] != 0 and comp[b][a] == comp[b][c]

    limit = min(max_edges, m)
    for size in range(3, limit + 1, 2):
        seq: list[int] = []

        def rec() -> bool:
            t = len(seq)
            if t == size:
                return linked(seq[-2], seq[-1], seq[0]) and linked(seq[-1], seq[0], seq[1])
            for e in range(seq[0] + 1 if seq else 0, m):
                if e in seq:
                    continue
                if t >= 2 and not linked(seq[t - 2], seq[t - 1], e):
                    continue
                seq.append(e)
                if rec():
                    return True
                seq.pop()
            return False

        if rec():
            k = (size - 1) // 2
            f = list(seq)
            e_idx = [0] * size
            for t in range(size):
                e_idx[(t * (k + 1)) % size] = f[t]
            chosen = tuple(edges[i] for i in e_idx)
            paths = tuple(
                _edge_path(
                    g, chosen[i], chosen[(i + 1) % size], allowed[e_idx[(i + k + 1) % size]]
                )
                for i in range(size)
            )
            return EdgeAsteroidSearch("found", EdgeAsteroid(chosen, paths), max_edges)
    exhaustive = max_edges >= m
    return EdgeAsteroidSearch("absent" if exhaustive else "inconclusive", None, max_edges)


def verify_edge_asteroid(g: Graph, ea: EdgeAsteroid) -> bool:
    """Re-check the witness paths against the definition (closed neighbourhoods)."""
    size = len(ea.edges)
    if size < 3 or size % 2 == 0 or len(set(map(frozenset, ea.edges))) != size:
        return False
    if any(not g.has_edge(u, v) for u, v in ea.edges):
        return False
    k = ea.k
    for i in range(size):
        path = ea.paths[i]
        u, v = ea.edges[(i + k + 1) % size]
        banned = _closed(g, u) | _closed(g, v)
        if len(set(path)) != len(path) or any((banned >> x) & 1 for x in path):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
            return False
        steps = {frozenset(p) for p in zip(path, path[1:])}
        if frozenset(ea.edges[i]) not in steps or frozenset(ea.edges[(i + 1) % size]) not in steps:
            return False
    return True


def has_long_induced_cycle(g: Graph, length: int = 6) -> tuple[int, ...] | None:
    """First induced cycle with at least ``length`` vertices, smallest start vertex first."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    for s in range(g.n):
        higher = ((1 << g.n) - 1) & ~((1 << (s + 1)) - 1)
        path = [s]

        def extend(on_path: int) -> tuple[int, ...] | None:
            last = path[-1]
            inner = on_path & ~(1 << s) & ~(1 << last)
            for x in bits(g.adj[last] & higher & ~on_path):
                if g.adj[x] & inner:
                    continue
                closes = g.has_edge(x, s)
                if len(path) == 1:
                    closes = False
                if closes:
                    if len(path) + 1 >= length:
                        return (*path, x)
                    continue
                path.append(x)
                found = extend(on_path | (1 << x))
                if found is not None:
                    return found
                path.pop()
            return None

        found = extend(1 << s)
        if found is not None:
            return found
    return None


def is_induced_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    h = induced(g, list(cycle))
    return all(h.degree(i) == 2 and h.has_edge(i, (i + 1) % k) for i in range(k))
