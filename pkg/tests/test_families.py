from __future__ import annotations

import pytest

from cott.families import (
    FamilySpec,
    family_Hn,
    family_Hstar,
    family_S_members,
    family_Tn,
    forbidden_bigraph_instances,
    generate,
    generate_set_system,
    graph_H3prime,
    graph_T,
    graph_T0,
    graph_W,
    graph_W1,
    resolve_family,
    s_member_spec,
    split_completion,
    sun,
    trotter_moore,
)
from cott.graphcore import (
    Bigraph,
    BinaryMatrix,
    SizeLimitError,
    are_isomorphic,
    bigraph_from_set_system,
    degree_sequence,
    is_connected,
)
from cott.recognize import find_induced
from cott.structure import is_split, simple_vertices, simplicial_vertices


def sets(s):
    return [sorted(x) for x in s.sets]


# suns ------------------------------------------------------------------------------------

@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_sun_shape(k):
    g = sun(k)
    assert g.n == 2 * k and g.num_edges == 2 * k + k * (k - 1) // 2
    rim = [g.index_of(f"x{i}") for i in range(1, k + 1)]
    hubs = [g.index_of(f"y{i}") for i in range(1, k + 1)]
    assert all(g.degree(v) == 2 for v in rim)
    assert all(g.degree(v) == k + 1 for v in hubs)
    assert not any(g.has_edge(a, b) for a in rim for b in rim)
    assert all(g.has_edge(a, b) for a in hubs for b in hubs if a != b)
    assert simplicial_vertices(g) >= set(rim) and simple_vertices(g) == set()


def test_sun_counts():
    assert (sun(3).n, sun(3).num_edges) == (6, 9)
    assert (sun(4).n, sun(4).num_edges) == (8, 14)
    with pytest.raises(ValueError):
        sun(2)


# fixed graphs -----------------------------------------------------------------------------

def test_graph_T():
    g = graph_T()
    assert (g.n, g.num_edges) == (7, 6)
    assert sorted(degree_sequence(g)) == [1, 1, 1, 2, 2, 2, 3]


def test_graph_W_and_W1():
    w = graph_W()
    assert (w.n, w.num_edges) == (7, 10)
    assert w.degree(w.index_of("r")) == 5
    assert not w.has_edge(w.index_of("r"), w.index_of("w"))
    w1 = graph_W1()
    assert w1.num_edges == 8
    r, u, v = (w.index_of(x) for x in "ruv")
    assert are_isomorphic(w1, w.without_edges([(u, r), (v, r)]))


def test_family_Tn():
    assert (family_Tn(1).n, family_Tn(1).num_edges) == (6, 6)
    assert list(family_Tn(1).vertex_names()) == ["v", "x0", "x1", "w", "x", "u"]
    assert (family_Tn(2).n, family_Tn(2).num_edges) == (7, 8)
    for n in range(1, 6):
        assert family_Tn(n).num_edges == 2 * n + 4
    with pytest.raises(ValueError):
        family_Tn(0)


def test_graph_T0():
    g = graph_T0()
    assert (g.n, g.num_edges) == (9, 9)
    assert find_induced(g, family_Tn(1)) is not None


def test_family_Hn():
    assert are_isomorphic(family_Hn(1), sun(3))
    assert (family_Hn(2).n, family_Hn(2).num_edges) == (7, 12)
    for n in range(1, 6):
        assert family_Hn(n).num_edges == 3 * n + 6
    assert (family_Hstar(2).n, family_Hstar(2).num_edges) == (8, 13)
    with pytest.raises(ValueError):
        family_Hstar(1)


def test_graph_H3prime():
    g = graph_H3prime()
    assert g.n == family_Hn(3).n + 1 and g.num_edges == family_Hn(3).num_edges + 1
    assert g.degree(g.index_of("x'")) == 1
    assert g.has_edge(g.index_of("x'"), g.index_of("x2"))


@pytest.mark.parametrize(
    "g",
    [graph_T(), graph_W(), graph_W1(), graph_T0(), graph_H3prime(), family_Tn(3), family_Hn(3), family_Hstar(3), sun(5)],
)
def test_generated_graphs_are_connected(g):
    assert is_connected(g)


# set systems ----------------------------------------------------------------------------------

def test_trotter_moore_examples():
    assert sets(trotter_moore("C", 4)) == [[1, 2], [2, 3], [3, 4], [1, 4]]
    assert sets(trotter_moore("W", 2)) == [[1, 2], [2, 3], [3, 4], [1, 2, 3, 5], [2, 3, 4, 5], [5]]
    t3 = trotter_moore("T", 3)
    assert len(t3.sets) == 7 and t3.ground == 7
    assert sets(trotter_moore("D", 1)) == [[1, 2, 5], [2, 3, 5], [3], [4, 5], [2, 3, 4, 5]]
    assert sets(trotter_moore("T", 1)) == [[1, 2], [2, 3], [3, 4], [2, 3, 5], [5]]


def test_trotter_moore_parameter_ranges():
    with pytest.raises(ValueError):
        trotter_moore("C", 2)
    with pytest.raises(ValueError):
        trotter_moore("M", 4)
    with pytest.raises(ValueError):
        trotter_moore("T", 0)


def test_c3_incidence_bigraph():
    m = bigraph_from_set_system(trotter_moore("C", 3)).biadjacency
    assert all(row.bit_count() == 2 for row in m.data)
    assert all(m.column(j).bit_count() == 2 for j in range(3))


def test_t1_row_sums():
    m = bigraph_from_set_system(trotter_moore("T", 1)).biadjacency
    assert [row.bit_count() for row in m.data] == [2, 2, 2, 3, 1]


# split completions -----------------------------------------------------------------------------

def test_split_completion_of_cycles_are_suns():
    for k in (3, 4, 5):
        b = bigraph_from_set_system(trotter_moore("C", k))
        assert are_isomorphic(split_completion(b, "Y"), sun(k))
        assert are_isomorphic(split_completion(b, "X"), sun(k))


def test_split_completion_of_empty_bigraph():
    b = Bigraph.from_matrix(BinaryMatrix.from_lists([[0, 0], [0, 0]]))
    g = split_completion(b, "X")
    assert g.num_edges == 1 and g.has_edge(0, 1)


def test_split_completions_are_split():
    for s in forbidden_bigraph_instances(12):
        b = bigraph_from_set_system(s)
        assert is_split(split_completion(b, "X")) and is_split(split_completion(b, "Y"))


def test_family_S_members():
    small = family_S_members(6)
    assert any(are_isomorphic(g, sun(3)) for g in small)
    eight = family_S_members(8)
    assert any(are_isomorphic(g, sun(4)) for g in eight)
    assert all(g.n <= 8 for g in eight)
    assert not any(g.label(0).startswith("T1/") for g in eight)
    assert [str(s_member_spec(g)) for g in eight] == ["Sun(3)", "Sun(4)"]
    with pytest.raises(SizeLimitError):
        family_S_members(15)


def test_family_S_members_are_pairwise_non_isomorphic():
    members = family_S_members(12)
    for i, g in enumerate(members):
        for h in members[i + 1 :]:
            assert not are_isomorphic(g, h)


# lookup -----------------------------------------------------------------------------------------

def test_resolve_and_generate():
    assert resolve_family("sun") == "Sun" and resolve_family("hstar") == "HnStar"
    with pytest.raises(ValueError):
        resolve_family("nope")
    assert are_isomorphic(generate(FamilySpec("Sun", 4)), sun(4))
    c3 = generate(FamilySpec("TM_C", 3))
    assert (c3.n, c3.num_edges) == (6, 6)
    assert generate_set_system(FamilySpec("TM_G1")).name == "G1"
    with pytest.raises(ValueError):
        generate(FamilySpec("T", 2))
    with pytest.raises(ValueError):
        generate(FamilySpec("Tn"))


def test_family_spec_str():
    assert str(FamilySpec("Sun", 3)) == "Sun(3)"
    assert str(FamilySpec("S", member="T1/X")) == "S[T1/X]"


DISPLAYED = {
    ("T", 1): [[1, 2], [2, 3], [3, 4], [2, 3, 5], [5]],
    ("T", 2): [[1, 2], [2, 3], [3, 4], [4, 5], [2, 3, 4, 6], [6]],
    ("T", 3): [[1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [2, 3, 4, 5, 7], [7]],
    ("W", 1): [[1, 2], [2, 3], [1, 2, 4], [2, 3, 4], [4]],
    ("W", 2): [[1, 2], [2, 3], [3, 4], [1, 2, 3, 5], [2, 3, 4, 5], [5]],
    ("W", 3): [[1, 2], [2, 3], [3, 4], [4, 5], [1, 2, 3, 4, 6], [2, 3, 4, 5, 6], [6]],
    ("D", 1): [[1, 2, 5], [2, 3, 5], [3], [4, 5], [2, 3, 4, 5]],
    ("D", 2): [[1, 2, 6], [2, 3, 6], [3, 4, 6], [4], [5, 6], [2, 3, 4, 5, 6]],
    ("D", 3): [[1, 2, 7], [2, 3, 7], [3, 4, 7], [4, 5, 7], [5], [6, 7], [2, 3, 4, 5, 6, 7]],
}


@pytest.mark.parametrize("key", sorted(DISPLAYED))
def test_generalised_families_reproduce_displayed_members(key):
    assert sets(trotter_moore(*key)) == DISPLAYED[key]
