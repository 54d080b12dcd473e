"""co-TT recognition by two independent routes.

The *matrix* route searches diagonal assignments (which vertices get
positive intervals) and simultaneous staircase-free orderings of the
augmented adjacency matrix; a success yields a verified signed-interval
representation.  The *obstruction* route checks chordality and then searches
for a forbidden induced subgraph from the catalog.  :func:`recognize_cott`
runs both and reports whether they agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any

from cott import kernels
from cott.families import FamilySpec, catalog_patterns
from cott.ferrers import InternalInconsistencyError, OrderingPair, find_staircase_orders
from cott.graphcore import Graph, SizeLimitError, induced
from cott.sirep import (
    CoTTCertificate,
    Representation,
    certificate_to_dict,
    cott_certificate,
    diagonal_of,
    representation_from_staircase,
    verify_representation,
)
from cott.structure import is_chordal, is_induced_cycle, simplicial_vertices

MATRIX_CAP = 10
OBSTRUCTION_CAP = 12
INDUCED_CAP = 14


class Verdict(str, Enum):
    COTT = "CoTT"
    NOT_COTT = "NotCoTT"


class WitnessKind(str, Enum):
    CHORDLESS_CYCLE = "ChordlessCycle"
    FORBIDDEN_INDUCED = "ForbiddenInduced"
    SEARCH_EXHAUSTED = "SearchExhausted"


@dataclass(frozen=True)
class ObstructionWitness:
    kind: WitnessKind
    pattern: FamilySpec | None = None
    embedding: tuple[int, ...] | None = None
    """``embedding[i]`` is the host vertex playing pattern vertex ``i``."""
    cycle: tuple[int, ...] | None = None
    bounds: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class RecognitionOutcome:
    verdict: Verdict
    route: str
    representation: Representation | None = None
    ordering: tuple[int, ...] | None = None
    diagonal: tuple[bool, ...] | None = None
    certificate: CoTTCertificate | None = None
    witness: ObstructionWitness | None = None
    agreement: bool | None = None
    other: RecognitionOutcome | None = None
    """The outcome of the other route when both were run."""

    @property
    def is_cott(self) -> bool:
        return self.verdict is Verdict.COTT


def find_induced(host: Graph, pattern: Graph, cap: int = INDUCED_CAP) -> tuple[int, ...] | None:
    """Embedding of ``pattern`` as an induced subgraph of ``host``."""
    if host.n > cap:
        raise SizeLimitError(f"induced-subgraph search is capped at n={cap}")
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return None
    found = kernels.induced_embedding(list(host.adj), host.n, list(pattern.adj), pattern.n, False)
    return None if found is None else tuple(found)


def is_induced_embedding(host: Graph, pattern: Graph, embedding: tuple[int, ...]) -> bool:
    if len(embedding) != pattern.n or len(set(embedding)) != pattern.n:
        return False
    return induced(host, list(embedding)).adj == pattern.adj


def diagonal_candidates(g: Graph, prune: bool = True) -> list[int]:
    """Loop masks to try, fewest negative vertices first, ties lexicographic.

    With ``prune`` only simplicial vertices may be negative: two positive
    spans containing one negative span meet, so a negative vertex's
    neighbourhood is a clique.
    """
    full = (1 << g.n) - 1
    pool = sorted(simplicial_vertices(g)) if prune else list(range(g.n))
    out = []
    for size in range(len(pool) + 1):
        for negatives in combinations(pool, size):
            out.append(full & ~sum(1 << v for v in negatives))
    return out


def staircase_for_diagonal(g: Graph, loops: int) -> tuple[int, ...] | None:
    """Simultaneous staircase-free order of the augmented matrix, if any."""
    found = find_staircase_orders(g.adjacency_matrix(loops), simultaneous=True)
    return None if found is None else found.row_order


def recognize_cott_matrix(g: Graph, cap: int = MATRIX_CAP, prune: bool = True) -> RecognitionOutcome:
    if g.n > cap:
        raise SizeLimitError(f"matrix route is capped at n={cap}")
    candidates = diagonal_candidates(g, prune)
    for loops in candidates:
        order = staircase_for_diagonal(g, loops)
        if order is None:
            continue
        m = g.adjacency_matrix(loops)
        rep = representation_from_staircase(m, OrderingPair(order, order, True), "graph")
        check = verify_representation(g, rep)
        if not check:
            raise InternalInconsistencyError(
                f"staircase representation fails on pairs {list(check.mismatches)}"
            )
        if diagonal_of(rep) != loops:
            raise InternalInconsistencyError("representation signs differ from the diagonal")
        return RecognitionOutcome(
            Verdict.COTT,
            "matrix",
            representation=rep,
            ordering=tuple(order),
            diagonal=tuple(bool((loops >> v) & 1) for v in range(g.n)),
            certificate=cott_certificate(rep),
        )
    bounds = {"n": g.n, "diagonals": len(candidates), "negatives": "simplicial" if prune else "any"}
    return RecognitionOutcome(
        Verdict.NOT_COTT, "matrix", witness=ObstructionWitness(WitnessKind.SEARCH_EXHAUSTED, bounds=bounds)
    )


def recognize_cott_obstruction(g: Graph, cap: int = OBSTRUCTION_CAP) -> RecognitionOutcome:
    if g.n > cap:
        raise SizeLimitError(f"obstruction route is capped at n={cap}")
    chordal = is_chordal(g)
    if not chordal:
        witness = ObstructionWitness(WitnessKind.CHORDLESS_CYCLE, cycle=chordal.cycle)
        return RecognitionOutcome(Verdict.NOT_COTT, "obstruction", witness=witness)
    patterns = catalog_patterns(g.n)
    for spec, pattern in patterns:
        emb = find_induced(g, pattern)
        if emb is not None:
            witness = ObstructionWitness(WitnessKind.FORBIDDEN_INDUCED, pattern=spec, embedding=emb)
            return RecognitionOutcome(Verdict.NOT_COTT, "obstruction", witness=witness)
    return RecognitionOutcome(Verdict.COTT, "obstruction")


def recognize_cott(g: Graph, cap: int = MATRIX_CAP) -> RecognitionOutcome:
    """Matrix-route outcome with the obstruction route's verdict attached."""
    matrix = recognize_cott_matrix(g, cap=cap)
    obstruction = recognize_cott_obstruction(g, cap=max(cap, OBSTRUCTION_CAP))
    return RecognitionOutcome(
        matrix.verdict,
        "both",
        representation=matrix.representation,
        ordering=matrix.ordering,
        diagonal=matrix.diagonal,
        certificate=matrix.certificate,
        witness=matrix.witness,
        agreement=matrix.verdict is obstruction.verdict,
        other=obstruction,
    )


def pattern_graph(spec: FamilySpec, n: int) -> Graph:
    """Catalog graph named by ``spec`` (looked up among patterns of size ``n``)."""
    for s, g in catalog_patterns(n):
        if s == spec:
            return g
    raise KeyError(f"{spec} is not in the catalog for n={n}")


def verify_witness(g: Graph, w: ObstructionWitness) -> bool:
    """Independent re-check of a negative witness (search records are trusted)."""
    if w.kind is WitnessKind.CHORDLESS_CYCLE:
        return w.cycle is not None and len(w.cycle) >= 4 and is_induced_cycle(g, w.cycle)
    if w.kind is WitnessKind.FORBIDDEN_INDUCED:
        if w.pattern is None or w.embedding is None:
            return False
        return is_induced_embedding(g, pattern_graph(w.pattern, g.n), w.embedding)
    return True


def _names(g: Graph, vs: tuple[int, ...] | None) -> list[str] | None:
    return None if vs is None else [g.label(v) for v in vs]


def witness_to_dict(g: Graph, w: ObstructionWitness) -> dict[str, Any]:
    doc: dict[str, Any] = {"kind": w.kind.value}
    if w.pattern is not None:
        doc["pattern"] = str(w.pattern)
    if w.embedding is not None:
        doc["embedding"] = _names(g, w.embedding)
    if w.cycle is not None:
        doc["cycle"] = _names(g, w.cycle)
    if w.bounds:
        doc["bounds"] = dict(w.bounds)
    return doc


def outcome_to_dict(g: Graph, out: RecognitionOutcome) -> dict[str, Any]:
    """Deterministic report document (no timing)."""
    doc: dict[str, Any] = {"verdict": out.verdict.value, "route": out.route, "n": g.n}
    if out.agreement is not None:
        doc["agreement"] = out.agreement
    if out.other is not None:
        doc["obstruction_verdict"] = out.other.verdict.value
        if out.other.witness is not None:
            doc["obstruction_witness"] = witness_to_dict(g, out.other.witness)
    if out.representation is not None:
        doc["certificate"] = certificate_to_dict(g, out.representation, out.ordering)
    if out.witness is not None:
        doc["witness"] = witness_to_dict(g, out.witness)
    return doc


def negative_set(out: RecognitionOutcome) -> list[int]:
    if out.diagonal is None:
        return []
    return [v for v, pos in enumerate(out.diagonal) if not pos]


__all__ = [
    "Verdict",
    "WitnessKind",
    "ObstructionWitness",
    "RecognitionOutcome",
    "find_induced",
    "recognize_cott_matrix",
    "recognize_cott_obstruction",
    "recognize_cott",
    "diagonal_candidates",
    "staircase_for_diagonal",
    "verify_witness",
    "outcome_to_dict",
]
