"""Exhaustive small-graph enumeration and the cross-validation sweep.

:func:`brute_force_cott` is the unpruned reference recogniser: every loop
mask times every vertex order, checked by a literal scan.  :func:`crosscheck`
runs both recognition routes plus the structural invariants over every
non-isomorphic graph up to a size bound and collects findings in a report.
"""

from __future__ import annotations

import json
import os
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Iterator

from cott import kernels
from cott.ferrers import OrderingPair
from cott.formats import decode_graph6, encode_graph6
from cott.graphcore import Graph, SizeLimitError, are_isomorphic, bits, complement, delete_vertex
from cott.recognize import (
    ObstructionWitness,
    RecognitionOutcome,
    Verdict,
    WitnessKind,
    recognize_cott_matrix,
    recognize_cott_obstruction,
    staircase_for_diagonal,
    verify_witness,
    witness_to_dict,
)
from cott.sirep import (
    cott_certificate,
    negative_vertices_simplicial,
    representation_from_staircase,
    tt_certificate_of_complement,
    verify_cott_certificate,
    verify_representation,
    verify_tt,
)
from cott.structure import is_chordal, is_interval, is_strongly_chordal

ENUMERATION_CAP = 8
BRUTE_FORCE_CAP = 7
KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def _invariant(g: Graph) -> tuple:
    """Isomorphism-invariant fingerprint: per-vertex degree, neighbour degrees, triangles."""
    deg = [row.bit_count() for row in g.adj]
    per_vertex = []
    for v in range(g.n):
        nb = list(bits(g.adj[v]))
        tri = sum((g.adj[u] & g.adj[v]).bit_count() for u in nb) // 2
        per_vertex.append((deg[v], tuple(sorted(deg[u] for u in nb)), tri))
    return (g.num_edges, tuple(sorted(per_vertex)))


_cache: dict[int, list[Graph]] = {0: [Graph(0, ())]}


def enumerate_graphs(n: int) -> list[Graph]:
    """All non-isomorphic graphs on ``n`` vertices, sorted by graph6 string.

    Each graph on ``n`` vertices arises from one on ``n-1`` by adding a vertex
    joined to some subset; candidates are bucketed by an invariant and
    deduplicated with an exact isomorphism test.  The count is checked
    against the known sequence.
    """
    if n < 0 or n > ENUMERATION_CAP:
        raise SizeLimitError(f"enumeration supports 0 <= n <= {ENUMERATION_CAP}")
    if n in _cache:
        return _cache[n]
    buckets: dict[tuple, list[Graph]] = {}
    for base in enumerate_graphs(n - 1):
        for subset in range(1 << (n - 1)):
            adj = [row | (((subset >> v) & 1) << (n - 1)) for v, row in enumerate(base.adj)]
            g = Graph(n, (*adj, subset))
            bucket = buckets.setdefault(_invariant(g), [])
            if not any(are_isomorphic(g, h) for h in bucket):
                bucket.append(g)
    graphs = sorted((g for b in buckets.values() for g in b), key=encode_graph6)
    if len(graphs) != KNOWN_COUNTS[n]:
        raise AssertionError(f"enumerated {len(graphs)} graphs on {n} vertices, expected {KNOWN_COUNTS[n]}")
    _cache[n] = graphs
    return graphs


def iter_graphs(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n)


def brute_force_cott(g: Graph) -> RecognitionOutcome:
    """Reference recogniser: all ``2^n`` diagonals times all ``n!`` orders, no pruning."""
    if g.n > BRUTE_FORCE_CAP:
        raise SizeLimitError(f"brute force is capped at n={BRUTE_FORCE_CAP}")
    for loops in range(1 << g.n):
        order = kernels.sim_staircase_brute(list(g.adj), g.n, loops)
        if order is None:
            continue
        m = g.adjacency_matrix(loops)
        rep = representation_from_staircase(m, OrderingPair(tuple(order), tuple(order), True), "graph")
        return RecognitionOutcome(
            Verdict.COTT,
            "brute-force",
            representation=rep,
            ordering=tuple(order),
            diagonal=tuple(bool((loops >> v) & 1) for v in range(g.n)),
            certificate=cott_certificate(rep),
        )
    bounds = {"n": g.n, "diagonals": 1 << g.n, "orders": "all"}
    return RecognitionOutcome(
        Verdict.NOT_COTT, "brute-force", witness=ObstructionWitness(WitnessKind.SEARCH_EXHAUSTED, bounds=bounds)
    )


# sweep -------------------------------------------------------------------------------


@dataclass
class GraphRecord:
    """Per-graph result of the sweep; violations are human-readable strings."""

    graph6: str
    n: int
    matrix: str
    obstruction: str
    obstruction_witness: dict[str, Any] | None
    chordal: bool
    strongly_chordal: bool
    interval: bool
    violations: list[str] = field(default_factory=list)


def check_graph(g: Graph) -> GraphRecord:
    """Run both routes and every invariant on one graph."""
    key = encode_graph6(g)
    matrix = recognize_cott_matrix(g)
    obstruction = recognize_cott_obstruction(g)
    chordal = bool(is_chordal(g))
    strong = bool(is_strongly_chordal(g))
    interval = bool(is_interval(g))
    bad: list[str] = []
    if matrix.is_cott and not strong:
        bad.append("co-TT but not strongly chordal")
    if strong and not chordal:
        bad.append("strongly chordal but not chordal")
    all_positive = staircase_for_diagonal(g, (1 << g.n) - 1) is not None
    if interval != all_positive:
        bad.append(f"interval={interval} but all-positive diagonal accepted={all_positive}")
    if interval and not matrix.is_cott:
        bad.append("interval but not co-TT")
    if matrix.is_cott:
        rep = matrix.representation
        assert rep is not None and matrix.certificate is not None
        if not verify_representation(g, rep):
            bad.append("representation does not verify")
        if not verify_cott_certificate(g, matrix.certificate):
            bad.append("co-TT certificate does not verify")
        if not verify_tt(complement(g), tt_certificate_of_complement(matrix.certificate)):
            bad.append("TT certificate fails on the complement")
        if not negative_vertices_simplicial(g, rep):
            bad.append("negative vertex with non-clique neighbourhood")
        if g.n > 1:
            v = zlib.crc32(key.encode()) % g.n
            if not recognize_cott_matrix(delete_vertex(g, v)).is_cott:
                bad.append(f"deleting vertex {v} loses co-TT")
    if obstruction.witness is not None and not verify_witness(g, obstruction.witness):
        bad.append("obstruction witness does not re-verify")
    return GraphRecord(
        key,
        g.n,
        matrix.verdict.value,
        obstruction.verdict.value,
        witness_to_dict(g, obstruction.witness) if obstruction.witness else None,
        chordal,
        strong,
        interval,
        bad,
    )


def _check_key(key: str) -> GraphRecord:
    return check_graph(decode_graph6(key))


@dataclass
class SweepReport:
    n_min: int
    n_max: int
    counts: dict[str, dict[str, int]]
    disagreements: list[dict[str, Any]]
    violations: list[dict[str, Any]]
    graphs: int
    elapsed_seconds: float | None = None

    @property
    def agreement(self) -> bool:
        return not self.disagreements

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        doc = asdict(self)
        doc["agreement"] = self.agreement
        if not timing:
            doc.pop("elapsed_seconds")
        return doc


def _load_checkpoint(path: Path) -> dict[str, GraphRecord]:
    """Read finished records and cut the file back to the last intact line."""
    done: dict[str, GraphRecord] = {}
    if not path.exists():
        return done
    good = 0
    with path.open("rb") as fh:
        for raw in fh:
            if not raw.endswith(b"\n"):
                break  # a torn final line from an interrupted run
            try:
                rec = GraphRecord(**json.loads(raw))
            except (json.JSONDecodeError, TypeError):
                break
            done[rec.graph6] = rec
            good += len(raw)
    with path.open("r+b") as fh:
        fh.truncate(good)
    return done


def crosscheck(
    n_max: int = 7,
    n_min: int = 1,
    workers: int = 1,
    checkpoint: str | os.PathLike[str] | None = None,
    progress: bool = False,
) -> SweepReport:
    """Sweep all graphs with ``n_min <= n <= n_max``.

    With ``checkpoint`` every finished graph is appended as one JSON line, and
    graphs already present are skipped, so an interrupted sweep resumes where
    it stopped.  Records are merged in (n, graph6) order, so the report does
    not depend on ``workers``.
    """
    start = time.perf_counter()
    keys = [encode_graph6(g) for g in iter_graphs(n_max, n_min)]
    path = Path(checkpoint) if checkpoint is not None else None
    done = _load_checkpoint(path) if path is not None else {}
    todo = [k for k in keys if k not in done]
    sink = path.open("a") if path is not None else None
    try:
        if workers > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = pool.map(_check_key, todo, chunksize=16)
                for i, rec in enumerate(results):
                    _record(done, rec, sink, progress, i, len(todo))
        else:
            for i, key in enumerate(todo):
                _record(done, _check_key(key), sink, progress, i, len(todo))
    finally:
        if sink is not None:
            sink.close()

    counts: dict[str, dict[str, int]] = {}
    disagreements = []
    violations = []
    for key in keys:
        rec = done[key]
        per_n = counts.setdefault(str(rec.n), {"graphs": 0, "CoTT": 0, "NotCoTT": 0})
        per_n["graphs"] += 1
        per_n[rec.matrix] += 1
        if rec.matrix != rec.obstruction:
            disagreements.append(
                {
                    "graph6": key,
                    "n": rec.n,
                    "matrix": rec.matrix,
                    "obstruction": rec.obstruction,
                    "obstruction_witness": rec.obstruction_witness,
                }
            )
        if rec.violations:
            violations.append({"graph6": key, "n": rec.n, "violations": rec.violations})
    return SweepReport(
        n_min, n_max, counts, disagreements, violations, len(keys), time.perf_counter() - start
    )


def _record(done, rec: GraphRecord, sink, progress: bool, i: int, total: int) -> None:
    done[rec.graph6] = rec
    if sink is not None:
        sink.write(json.dumps(asdict(rec), sort_keys=True) + "\n")
        sink.flush()
    if progress and (i + 1) % 100 == 0:
        print(f"  {i + 1}/{total} graphs checked", flush=True)
