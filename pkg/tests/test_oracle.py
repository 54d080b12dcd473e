from __future__ import annotations

import json
from itertools import combinations

import networkx as nx
import pytest

from conftest import cycle_graph, empty_graph
from cott.families import sun
from cott.formats import decode_graph6, encode_graph6
from cott.graphcore import Graph, SizeLimitError, are_isomorphic, complement
from cott.oracle import (
    KNOWN_COUNTS,
    brute_force_cott,
    check_graph,
    crosscheck,
    enumerate_graphs,
)
from cott.recognize import Verdict, recognize_cott_matrix
from cott.sirep import tt_certificate_of_complement, verify_representation, verify_tt
from cott.structure import is_chordal


def labelled_classes(n: int) -> int:
    """Isomorphism classes among all 2^(n choose 2) labelled graphs, via networkx."""
    pairs = list(combinations(range(n), 2))
    reps: list[nx.Graph] = []
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for k, p in enumerate(pairs) if (mask >> k) & 1)
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    return len(reps)


def test_enumeration_examples():
    assert len(enumerate_graphs(1)) == 1
    assert len(enumerate_graphs(3)) == 4
    assert len(enumerate_graphs(4)) == 11


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_labelled_brute_force(n):
    assert len(enumerate_graphs(n)) == labelled_classes(n) == KNOWN_COUNTS[n]


@pytest.mark.parametrize("n", [6, 7])
def test_enumeration_counts_and_distinctness(n):
    graphs = enumerate_graphs(n)
    assert len(graphs) == KNOWN_COUNTS[n]
    keys = [encode_graph6(g) for g in graphs]
    assert keys == sorted(keys)
    by_edges: dict[int, list[Graph]] = {}
    for g in graphs:
        by_edges.setdefault(g.num_edges, []).append(g)
    # complements pair off the classes, so each edge count mirrors its complement's
    m = n * (n - 1) // 2
    assert all(len(by_edges.get(e, [])) == len(by_edges.get(m - e, [])) for e in range(m + 1))


def test_enumeration_cap():
    with pytest.raises(SizeLimitError):
        enumerate_graphs(9)


def test_brute_force_examples():
    out = brute_force_cott(empty_graph(3))
    assert out.is_cott and verify_representation(empty_graph(3), out.representation)
    c4 = brute_force_cott(cycle_graph(4))
    assert c4.verdict is Verdict.NOT_COTT and c4.witness.bounds["diagonals"] == 16
    with pytest.raises(SizeLimitError):
        brute_force_cott(empty_graph(8))


def test_brute_force_matches_matrix_route_up_to_six():
    total = 0
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            total += 1
            assert brute_force_cott(g).verdict == recognize_cott_matrix(g).verdict, encode_graph6(g)
    assert total == 208


def test_brute_force_matches_matrix_route_on_seven_vertex_sample():
    sample = enumerate_graphs(7)[::53]
    for g in sample:
        assert brute_force_cott(g).verdict == recognize_cott_matrix(g).verdict, encode_graph6(g)


def test_check_graph_records():
    rec = check_graph(sun(3))
    assert rec.matrix == rec.obstruction == "NotCoTT"
    assert rec.chordal and not rec.strongly_chordal and not rec.violations
    assert rec.obstruction_witness["kind"] == "ForbiddenInduced"


def test_crosscheck_small():
    report = crosscheck(4)
    assert report.agreement and not report.violations
    assert report.graphs == 1 + 2 + 4 + 11
    for n in range(1, 5):
        chordal = sum(1 for g in enumerate_graphs(n) if is_chordal(g))
        assert report.counts[str(n)]["CoTT"] == chordal


def test_crosscheck_six_finds_sun():
    report = crosscheck(6, n_min=6)
    assert report.agreement and not report.violations
    s3 = encode_graph6(next(g for g in enumerate_graphs(6) if are_isomorphic(g, sun(3))))
    assert report.counts["6"]["graphs"] == 156
    assert recognize_cott_matrix(decode_graph6(s3)).verdict is Verdict.NOT_COTT


def test_crosscheck_report_is_worker_independent(tmp_path):
    a = crosscheck(5, workers=1).to_dict()
    b = crosscheck(5, workers=2).to_dict()
    assert a == b and "elapsed_seconds" not in a
    assert "elapsed_seconds" in crosscheck(3).to_dict(timing=True)


def test_crosscheck_resumes_from_checkpoint(tmp_path):
    path = tmp_path / "sweep.jsonl"
    full = crosscheck(5, checkpoint=path).to_dict()
    lines = path.read_text().splitlines()
    assert len(lines) == full["graphs"]
    # keep a prefix plus a torn line, as after an interruption
    path.write_text("\n".join(lines[:20]) + "\n" + lines[20][:15])
    resumed = crosscheck(5, checkpoint=path).to_dict()
    assert resumed == full
    keys = [json.loads(x)["graph6"] for x in path.read_text().splitlines() if x.endswith("}")]
    assert len(set(keys)) == full["graphs"]


def test_tt_conversion_on_all_accepted_graphs_up_to_six():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            out = recognize_cott_matrix(g)
            if out.is_cott:
                assert verify_tt(complement(g), tt_certificate_of_complement(out.certificate))
