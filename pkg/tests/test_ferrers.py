from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import net_graph
from cott.families import forbidden_bigraph_instances, trotter_moore
from cott.ferrers import (
    AssociatedGraph,
    Bipartition,
    OddCycle,
    OrderingPair,
    ZeroPosition,
    associated_graph,
    fdim_le_2,
    find_staircase_orders,
    find_zero_partition,
    h_bipartite,
    is_ferrers,
    verify_staircase,
    verify_zero_partition,
)
from cott.graphcore import BinaryMatrix, Bigraph, SizeLimitError, bigraph_from_set_system

IDENTITY = BinaryMatrix.from_lists([[1, 0], [0, 1]])
ANTI = BinaryMatrix.from_lists([[0, 1], [1, 0]])
UPPER = BinaryMatrix.from_lists([[1, 1], [0, 1]])


def c3_matrix() -> BinaryMatrix:
    return bigraph_from_set_system(trotter_moore("C", 3)).biadjacency


def net_augmented() -> BinaryMatrix:
    g = net_graph()
    loops = sum(1 << g.index_of(x) for x in "uxyzw")
    return g.adjacency_matrix(loops)


@st.composite
def matrices(draw, max_rows: int = 5, max_cols: int = 5) -> BinaryMatrix:
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return BinaryMatrix(r, c, tuple(rows))


# is_ferrers --------------------------------------------------------------------------

def test_is_ferrers_examples():
    assert is_ferrers(UPPER)
    result = is_ferrers(IDENTITY)
    assert not result
    assert set(result.witness) == {ZeroPosition(0, 1), ZeroPosition(1, 0)}
    assert not is_ferrers(c3_matrix())


@given(matrices())
def test_ferrers_iff_no_associated_edges(m):
    assert bool(is_ferrers(m)) == (associated_graph(m).graph.num_edges == 0)


@given(matrices())
def test_ferrers_implies_staircase_orders(m):
    if is_ferrers(m):
        assert find_staircase_orders(m) is not None


# verify_staircase ---------------------------------------------------------------------

def test_verify_staircase_examples():
    result = verify_staircase(ANTI)
    assert not result and result.witness == ZeroPosition(0, 0)
    assert verify_staircase(UPPER)


def test_net_augmented_matrix_is_staircase_free_in_listed_order():
    assert verify_staircase(net_augmented())


# associated graph ----------------------------------------------------------------------

def test_associated_graph_examples():
    assert len(associated_graph(BinaryMatrix.ones(3, 2))) == 0
    h = associated_graph(IDENTITY)
    assert h.edges() == [(ZeroPosition(0, 1), ZeroPosition(1, 0))]


def test_c3_associated_graph_is_a_triangle():
    h = associated_graph(c3_matrix())
    assert len(h) == 3 and h.graph.num_edges == 3
    # 1-based (1,3), (2,1), (3,2)
    assert set(h.zeros) == {ZeroPosition(0, 2), ZeroPosition(1, 0), ZeroPosition(2, 1)}


@given(matrices())
def test_associated_graph_definition(m):
    h = associated_graph(m)
    for (i, j), (k, l) in h.edges():
        assert i != k and j != l and m[i, l] == 1 and m[k, j] == 1
        assert m[i, j] == 0 and m[k, l] == 0


# h_bipartite --------------------------------------------------------------------------

def test_h_bipartite_examples():
    assert isinstance(h_bipartite(associated_graph(BinaryMatrix.ones(2, 2))), Bipartition)
    odd = h_bipartite(associated_graph(c3_matrix()))
    assert isinstance(odd, OddCycle) and len(odd.cycle) == 3
    two = h_bipartite(associated_graph(IDENTITY))
    assert isinstance(two, Bipartition)
    assert sorted(two.coloring.values()) == ["C", "R"]


@given(matrices(6, 6))
def test_odd_cycle_is_a_closed_walk_in_h(m):
    h = associated_graph(m)
    result = h_bipartite(h)
    if isinstance(result, OddCycle):
        cyc = result.cycle
        assert len(cyc) % 2 == 1
        index = {z: a for a, z in enumerate(h.zeros)}
        for p, q in zip(cyc, cyc[1:] + cyc[:1]):
            assert h.graph.has_edge(index[p], index[q])
    else:
        for p, q in h.edges():
            assert result.coloring[p] != result.coloring[q]


# find_staircase_orders --------------------------------------------------------------------

def test_find_staircase_orders_examples():
    found = find_staircase_orders(IDENTITY)
    assert found is not None and verify_staircase(found.apply(IDENTITY))
    assert find_staircase_orders(c3_matrix()) is None
    assert find_staircase_orders(c3_matrix(), cogis_prune=False) is None


def test_net_simultaneous_orders_found():
    m = net_augmented()
    found = find_staircase_orders(m, simultaneous=True)
    assert found is not None and found.simultaneous
    assert verify_staircase(found.apply(m))


def test_staircase_size_cap():
    with pytest.raises(SizeLimitError):
        find_staircase_orders(BinaryMatrix.ones(13, 2))


def test_simultaneous_requires_symmetric():
    with pytest.raises(ValueError):
        find_staircase_orders(UPPER, simultaneous=True)


def test_ordering_pair_validation():
    with pytest.raises(ValueError):
        OrderingPair((0, 0), (0, 1))
    with pytest.raises(ValueError):
        OrderingPair((0, 1), (1, 0), simultaneous=True)


def _brute_independent(m: BinaryMatrix) -> bool:
    from itertools import permutations

    return any(
        verify_staircase(m.permute(p, q))
        for p in permutations(range(m.rows))
        for q in permutations(range(m.cols))
    )


@settings(max_examples=60, deadline=None)
@given(matrices(4, 4))
def test_independent_search_matches_brute_force(m):
    found = find_staircase_orders(m, cogis_prune=False)
    assert (found is not None) == _brute_independent(m)
    if found is not None:
        assert verify_staircase(found.apply(m))


@given(matrices(5, 5))
def test_simultaneous_success_implies_independent_and_bipartite(m):
    sq = BinaryMatrix(m.rows, m.rows, tuple(r & ((1 << m.rows) - 1) for r in m.data))
    lists = sq.to_lists()
    sym = BinaryMatrix.from_lists(
        [[lists[min(i, j)][max(i, j)] for j in range(sq.cols)] for i in range(sq.rows)]
    )
    if find_staircase_orders(sym, simultaneous=True, cogis_prune=False) is not None:
        assert find_staircase_orders(sym, cogis_prune=False) is not None
        assert isinstance(h_bipartite(associated_graph(sym)), Bipartition)


# fdim_le_2 -------------------------------------------------------------------------------

def test_fdim_examples():
    no = fdim_le_2(Bigraph.from_matrix(c3_matrix()))
    assert not no and len(no.odd_cycle) == 3
    yes = fdim_le_2(Bigraph.from_matrix(BinaryMatrix.from_lists([[1]])))
    assert yes and yes.orders is not None


def test_forbidden_bigraph_instances_fail_fdim2():
    names = set()
    for s in forbidden_bigraph_instances(12):
        names.add(s.name)
        assert not fdim_le_2(bigraph_from_set_system(s)), s.name
    assert {"G1", "G2", "G3", "T1", "W1", "D1", "M1", "N1"} <= names


# zero partitions -------------------------------------------------------------------------

def _valid_colorings(m: BinaryMatrix) -> list[dict]:
    zeros = [ZeroPosition(i, j) for i, j in m.zeros()]
    out = []
    for colors in product("RC", repeat=len(zeros)):
        coloring = dict(zip(zeros, colors))
        if verify_zero_partition(m, coloring):
            out.append(coloring)
    return out


def test_verify_zero_partition_examples():
    assert verify_zero_partition(BinaryMatrix.ones(2, 2), {})
    # every zero of the anti-diagonal arrangement has a 1 both to its right and below
    assert _valid_colorings(ANTI) == []
    assert _valid_colorings(IDENTITY) != []


@settings(max_examples=60, deadline=None)
@given(matrices(3, 3))
def test_some_valid_coloring_iff_partition_search_accepts_fixed_arrangement(m):
    from cott.ferrers import _color_zeros

    assert (_color_zeros(m) is not None) == bool(_valid_colorings(m))


def test_staircase_ferrers_all_r_is_a_zero_partition():
    m = BinaryMatrix.from_lists([[1, 1, 1], [1, 1, 0], [1, 0, 0]])
    assert verify_zero_partition(m, {z: "R" for z in map(ZeroPosition._make, m.zeros())})


def test_verify_zero_partition_requires_total_coloring():
    with pytest.raises(ValueError):
        verify_zero_partition(IDENTITY, {ZeroPosition(0, 1): "R"})


def test_find_zero_partition_examples():
    one = BinaryMatrix.from_lists([[1]])
    assert find_zero_partition(one) is not None
    assert find_zero_partition(c3_matrix()) is None
    found = find_zero_partition(IDENTITY)
    assert found is not None
    orders, coloring = found
    assert verify_zero_partition(orders.apply(IDENTITY), coloring)
    with pytest.raises(SizeLimitError):
        find_zero_partition(BinaryMatrix.ones(9, 1))


@settings(max_examples=80, deadline=None)
@given(matrices(4, 4))
def test_zero_partition_implies_fdim2(m):
    found = find_zero_partition(m)
    if found is not None:
        orders, coloring = found
        assert verify_zero_partition(orders.apply(m), coloring)
        assert fdim_le_2(Bigraph.from_matrix(m))


def test_exhaustive_cogis_equivalence_up_to_3x3():
    for r in range(1, 4):
        for c in range(1, 4):
            for code in range(1 << (r * c)):
                m = BinaryMatrix(r, c, tuple((code >> (i * c)) & ((1 << c) - 1) for i in range(r)))
                bip = isinstance(h_bipartite(associated_graph(m)), Bipartition)
                assert bip == (find_staircase_orders(m, cogis_prune=False) is not None)


def test_associated_graph_type():
    assert isinstance(associated_graph(IDENTITY), AssociatedGraph)
