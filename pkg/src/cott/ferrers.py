"""Binary-matrix machinery: Ferrers tests, the associated graph of zeros,
staircase-free orderings, Ferrers dimension at most two, zero partitions.

A matrix is *staircase-free* when no 0 has a 1 later in its row and a 1 later
in its column.  A bigraph has Ferrers dimension at most 2 iff its rows and
columns can be permuted independently into a staircase-free matrix, iff the
graph on its zeros (two zeros adjacent when they are the zeros of a 2x2
permutation submatrix) is bipartite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Literal, Mapping, NamedTuple

from cott import kernels
from cott.graphcore import BinaryMatrix, Bigraph, Graph, SizeLimitError, bits

STAIRCASE_CAP = 12
ZERO_PARTITION_CAP = 8

Color = Literal["R", "C"]


class InternalInconsistencyError(RuntimeError):
    """Two independent routes disagreed; this signals a bug."""


class ZeroPosition(NamedTuple):
    row: int
    col: int


ZeroColoring = Mapping[ZeroPosition, Color]


@dataclass(frozen=True)
class Check:
    """Outcome of a verifier: truthy iff ``ok``; ``witness`` explains a failure."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class AssociatedGraph:
    """Graph whose vertices are the zeros of a matrix."""

    zeros: tuple[ZeroPosition, ...]
    graph: Graph

    def __len__(self) -> int:
        return len(self.zeros)

    def edges(self) -> list[tuple[ZeroPosition, ZeroPosition]]:
        return [(self.zeros[a], self.zeros[b]) for a, b in self.graph.edges()]


@dataclass(frozen=True)
class OrderingPair:
    row_order: tuple[int, ...]
    col_order: tuple[int, ...]
    simultaneous: bool = False

    def __post_init__(self) -> None:
        if sorted(self.row_order) != list(range(len(self.row_order))):
            raise ValueError("row_order is not a permutation")
        if sorted(self.col_order) != list(range(len(self.col_order))):
            raise ValueError("col_order is not a permutation")
        if self.simultaneous and self.row_order != self.col_order:
            raise ValueError("simultaneous orders must coincide")

    def apply(self, m: BinaryMatrix) -> BinaryMatrix:
        return m.permute(self.row_order, self.col_order)


@dataclass(frozen=True)
class Bipartition:
    coloring: dict[ZeroPosition, Color]


@dataclass(frozen=True)
class OddCycle:
    cycle: tuple[ZeroPosition, ...]


@dataclass(frozen=True)
class FdimResult:
    """Decision for Ferrers dimension at most 2, with a certificate either way."""

    ok: bool
    orders: OrderingPair | None = None
    odd_cycle: tuple[ZeroPosition, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _has_permutation_submatrix(m: BinaryMatrix) -> tuple[ZeroPosition, ZeroPosition] | None:
    for i in range(m.rows):
        for k in range(i + 1, m.rows):
            only_i = m.data[i] & ~m.data[k]
            only_k = m.data[k] & ~m.data[i]
            if only_i and only_k:
                j = (only_k & -only_k).bit_length() - 1  # zero in row i
                l = (only_i & -only_i).bit_length() - 1  # zero in row k
                return ZeroPosition(i, j), ZeroPosition(k, l)
    return None


def _rows_form_chain(m: BinaryMatrix) -> bool:
    rows = sorted(m.data, key=lambda r: r.bit_count())
    return all(a & ~b == 0 for a, b in zip(rows, rows[1:]))


def is_ferrers(m: BinaryMatrix) -> Check:
    """True iff ``m`` has no 2x2 permutation submatrix.

    On failure the witness is the pair of zeros of one such submatrix.  The
    answer is cross-checked against the row-neighbourhoods-form-a-chain form.
    """
    witness = _has_permutation_submatrix(m)
    if (witness is None) != _rows_form_chain(m):
        raise InternalInconsistencyError("2x2 scan and inclusion chain disagree")
    return Check(witness is None, witness)


def verify_staircase(m: BinaryMatrix) -> Check:
    """True iff no 0 has a 1 later in its row and a 1 later in its column.

    The witness is the first violating zero in row-major order.
    """
    cols = [m.column(j) for j in range(m.cols)]
    for i in range(m.rows):
        row = m.data[i]
        for j in range(m.cols):
            if (row >> j) & 1:
                continue
            if row >> (j + 1) and cols[j] >> (i + 1):
                return Check(False, ZeroPosition(i, j))
    return Check(True)


def associated_graph(m: BinaryMatrix) -> AssociatedGraph:
    zeros = tuple(ZeroPosition(i, j) for i, j in m.zeros())
    adj = [0] * len(zeros)
    for a, (i, j) in enumerate(zeros):
        for b in range(a + 1, len(zeros)):
            k, l = zeros[b]
            if i != k and j != l and m[i, l] and m[k, j]:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return AssociatedGraph(zeros, Graph(len(zeros), tuple(adj)))


def h_bipartite(h: AssociatedGraph) -> Bipartition | OddCycle:
    """Breadth-first 2-colouring; an odd cycle is returned when none exists."""
    g = h.graph
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    return OddCycle(tuple(h.zeros[x] for x in _tree_cycle(parent, v, u)))
    return Bipartition({z: ("R" if side[a] == 0 else "C") for a, z in enumerate(h.zeros)})


def _tree_cycle(parent: list[int], a: int, b: int) -> list[int]:
    """Cycle through tree paths to the common ancestor of ``a`` and ``b`` plus edge ``ab``."""
    up_a = [a]
    while parent[up_a[-1]] >= 0:
        up_a.append(parent[up_a[-1]])
    depth_index = {v: i for i, v in enumerate(up_a)}
    up_b = [b]
    while up_b[-1] not in depth_index:
        up_b.append(parent[up_b[-1]])
    lca = up_b[-1]
    return up_a[: depth_index[lca] + 1] + up_b[-2::-1]


def find_staircase_orders(
    m: BinaryMatrix,
    simultaneous: bool = False,
    cap: int = STAIRCASE_CAP,
    cogis_prune: bool = True,
) -> OrderingPair | None:
    """Exact search for orders that make ``m`` staircase-free.

    With ``simultaneous`` the matrix must be square and symmetric (an
    adjacency matrix whose diagonal marks loops) and one permutation is used
    for both axes.  ``cogis_prune`` skips the search when the associated graph
    is not bipartite, which is a necessary condition in both modes.
    """
    if max(m.rows, m.cols) > cap:
        raise SizeLimitError(f"staircase search is capped at {cap}x{cap}")
    if cogis_prune and isinstance(h_bipartite(associated_graph(m)), OddCycle):
        return None
    if simultaneous:
        if not m.is_symmetric():
            raise ValueError("simultaneous search needs a square symmetric matrix")
        n = m.rows
        loops = sum(((m.data[v] >> v) & 1) << v for v in range(n))
        adj = [m.data[v] & ~(1 << v) for v in range(n)]
        order = kernels.sim_staircase_search(adj, n, loops)
        if order is None:
            return None
        result = OrderingPair(tuple(order), tuple(order), True)
    else:
        found = kernels.ind_staircase_search(list(m.data), m.rows, m.cols)
        if found is None:
            return None
        result = OrderingPair(tuple(found[0]), tuple(found[1]))
    if not verify_staircase(result.apply(m)):
        raise InternalInconsistencyError("search returned orders that are not staircase-free")
    return result


def fdim_le_2(b: Bigraph | BinaryMatrix) -> FdimResult:
    """Decide Ferrers dimension <= 2 via the associated graph.

    A yes answer carries staircase orders found by an independent search; a
    no answer carries an odd cycle of zeros.
    """
    m = b.biadjacency if isinstance(b, Bigraph) else b
    colouring = h_bipartite(associated_graph(m))
    if isinstance(colouring, OddCycle):
        return FdimResult(False, odd_cycle=colouring.cycle)
    orders = find_staircase_orders(m, simultaneous=False, cogis_prune=False)
    if orders is None:
        raise InternalInconsistencyError("associated graph bipartite but no staircase orders")
    return FdimResult(True, orders=orders)


def verify_zero_partition(m: BinaryMatrix, coloring: ZeroColoring) -> bool:
    """Every R has only R-zeros to its right and every C only C-zeros below."""
    zeros = set(m.zeros())
    if set(coloring) != zeros:
        raise ValueError("coloring must cover exactly the zeros of the matrix")
    for (i, j), color in coloring.items():
        if color == "R":
            cells = [(i, c) for c in range(j + 1, m.cols)]
        elif color == "C":
            cells = [(r, j) for r in range(i + 1, m.rows)]
        else:
            raise ValueError(f"unknown color {color!r}")
        for cell in cells:
            if coloring.get(ZeroPosition(*cell)) != color:
                return False
    return True


def _color_zeros(m: BinaryMatrix) -> dict[ZeroPosition, Color] | None:
    """Row-major backtracking colouring of a fixed arrangement, R before C."""
    zeros = [ZeroPosition(i, j) for i, j in m.zeros()]
    cols = [m.column(j) for j in range(m.cols)]
    coloring: dict[ZeroPosition, Color] = {}

    def allowed(z: ZeroPosition) -> list[Color]:
        i, j = z
        options: list[Color] = []
        if not m.data[i] >> (j + 1):
            options.append("R")
        if not cols[j] >> (i + 1):
            options.append("C")
        left_r = any(coloring.get(ZeroPosition(i, c)) == "R" for c in range(j))
        above_c = any(coloring.get(ZeroPosition(r, j)) == "C" for r in range(i))
        if left_r:
            options = [o for o in options if o == "R"]
        if above_c:
            options = [o for o in options if o == "C"]
        return options

    def rec(k: int) -> bool:
        if k == len(zeros):
            return True
        z = zeros[k]
        for color in allowed(z):
            coloring[z] = color
            if rec(k + 1):
                return True
            del coloring[z]
        return False

    return dict(coloring) if rec(0) else None


def _row_orders_with_constraints(m: BinaryMatrix) -> Iterator[tuple[list[int], list[int]]]:
    """All row orders admitting a staircase column order, with the column closure."""
    rows = list(m.data)
    cols = [m.column(j) for j in range(m.cols)]
    full = (1 << m.cols) - 1
    reach = [0] * m.cols
    order: list[int] = []

    def rec(remaining: int) -> Iterator[tuple[list[int], list[int]]]:
        if not remaining:
            yield list(order), list(reach)
            return
        for r in bits(remaining):
            rest = remaining & ~(1 << r)
            ones = rows[r]
            targets = sum(1 << j for j in bits(full & ~ones) if cols[j] & rest)
            saved = reach[:]
            if ones and targets:
                if any(reach[t] & ones for t in bits(targets)):
                    continue
                desc = targets
                for t in bits(targets):
                    desc |= reach[t]
                for x in range(m.cols):
                    if (ones >> x) & 1 or reach[x] & ones:
                        reach[x] |= desc
            order.append(r)
            yield from rec(rest)
            order.pop()
            reach[:] = saved

    yield from rec((1 << m.rows) - 1)


def _linear_extensions(n: int, reach: list[int]) -> Iterator[list[int]]:
    seq: list[int] = []

    def rec(left: int) -> Iterator[list[int]]:
        if not left:
            yield list(seq)
            return
        for c in bits(left):
            if any((reach[x] >> c) & 1 for x in bits(left)):
                continue
            seq.append(c)
            yield from rec(left & ~(1 << c))
            seq.pop()

    yield from rec((1 << n) - 1)


def find_zero_partition(
    m: BinaryMatrix, cap: int = ZERO_PARTITION_CAP
) -> tuple[OrderingPair, dict[ZeroPosition, Color]] | None:
    """Search row/column orders and an R/C colouring forming a zero partition.

    Arrangements are restricted to staircase-free ones, which every zero
    partition is.  Returns the orders and the colouring of the permuted
    matrix, or ``None`` when the matrix is not zero-partitionable.
    """
    if max(m.rows, m.cols) > cap:
        raise SizeLimitError(f"zero-partition search is capped at {cap}x{cap}")
    for row_order, reach in _row_orders_with_constraints(m):
        for col_order in _linear_extensions(m.cols, reach):
            pair = OrderingPair(tuple(row_order), tuple(col_order))
            arranged = pair.apply(m)
            coloring = _color_zeros(arranged)
            if coloring is not None:
                return pair, coloring
    return None
