"""Signed-interval representations and threshold-tolerance certificates.

A signed interval is a pair ``(a, b)`` of integers; it is positive when
``a <= b``.  Two vertices are adjacent iff ``p.a <= q.b`` and ``q.a <= p.b``.
Geometrically: two positive intervals are adjacent when their spans meet, a
negative interval is adjacent to a positive one when its span lies inside
the positive span, and two negative intervals are never adjacent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Literal, Mapping, Sequence

from cott.ferrers import OrderingPair, verify_staircase
from cott.graphcore import BinaryMatrix, Graph, bits


@dataclass(frozen=True, order=True)
class SignedInterval:
    a: int
    b: int

    @property
    def positive(self) -> bool:
        return self.a <= self.b

    @property
    def span(self) -> tuple[int, int]:
        return (min(self.a, self.b), max(self.a, self.b))

    def shifted(self, delta: int) -> SignedInterval:
        return SignedInterval(self.a + delta, self.b + delta)

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]{'+' if self.positive else '-'}"


Representation = tuple[SignedInterval, ...]
"""One signed interval per vertex id."""


@dataclass(frozen=True)
class CoTTCertificate:
    """Positive pairs ``(a_v, b_v)``; ``xy`` is an edge iff ``a_x <= b_y`` and ``a_y <= b_x``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if any(a < 1 or b < 1 for a, b in self.pairs):
            raise ValueError("certificate values must be positive integers")

    def as_representation(self) -> Representation:
        return tuple(SignedInterval(a, b) for a, b in self.pairs)


@dataclass(frozen=True)
class TTCertificate:
    """Weights and tolerances; ``uv`` is an edge iff ``w_u + w_v > min(t_u, t_v)``."""

    weights: tuple[int, ...]
    tolerances: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.tolerances):
            raise ValueError("weights and tolerances differ in length")
        if any(x < 1 for x in (*self.weights, *self.tolerances)):
            raise ValueError("weights and tolerances must be positive integers")


@dataclass(frozen=True)
class Verification:
    ok: bool
    mismatches: tuple[tuple[int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def edge_rule(p: SignedInterval, q: SignedInterval) -> bool:
    return p.a <= q.b and q.a <= p.b


def geometric_rule(p: SignedInterval, q: SignedInterval) -> bool:
    """The clause form of :func:`edge_rule`, used as an independent check."""
    (pl, pr), (ql, qr) = p.span, q.span
    if p.positive and q.positive:
        return pl <= qr and ql <= pr
    if p.positive and not q.positive:
        return pl <= ql and qr <= pr
    if q.positive and not p.positive:
        return ql <= pl and pr <= qr
    return False


def _require_total(n: int, size: int, what: str) -> None:
    if size != n:
        raise ValueError(f"{what} covers {size} vertices, graph has {n}")


def verify_representation(g: Graph, r: Sequence[SignedInterval]) -> Verification:
    """Check every unordered pair; mismatches are listed as ``(u, v)`` with ``u < v``."""
    _require_total(g.n, len(r), "representation")
    bad = tuple(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if edge_rule(r[u], r[v]) != g.has_edge(u, v)
    )
    return Verification(not bad, bad)


def verify_bigraph_representation(m: BinaryMatrix, r: Sequence[SignedInterval]) -> Verification:
    """Check only row-column pairs: intervals ``0..rows-1`` are rows, the rest columns.

    Mismatches are ``(row, column)`` index pairs.
    """
    _require_total(m.rows + m.cols, len(r), "representation")
    bad = tuple(
        (i, j)
        for i in range(m.rows)
        for j in range(m.cols)
        if edge_rule(r[i], r[m.rows + j]) != bool(m[i, j])
    )
    return Verification(not bad, bad)


def representation_from_staircase(
    m: BinaryMatrix, orders: OrderingPair, mode: Literal["bigraph", "graph"] = "graph"
) -> Representation:
    """Intervals read off a staircase-free arrangement.

    The vertex at 1-based position ``i`` gets ``[i, k]`` where ``k`` is the
    position of the last 1 in its arranged row (``0`` for an empty row).  In
    bigraph mode rows come first, then columns, each using its own line.  In
    graph mode ``m`` is an adjacency matrix with loops on the diagonal and the
    orders must be simultaneous.
    """
    if mode not in ("bigraph", "graph"):
        raise ValueError(f"unknown mode {mode!r}")
    arranged = orders.apply(m)
    if not verify_staircase(arranged):
        raise ValueError("orders do not make the matrix staircase-free")

    def read(lines: Sequence[int], order: Sequence[int], size: int) -> list[SignedInterval]:
        out = [SignedInterval(0, 0)] * size
        for p, vertex in enumerate(order):
            out[vertex] = SignedInterval(p + 1, lines[p].bit_length())
        return out

    if mode == "graph":
        if not m.is_symmetric() or not orders.simultaneous:
            raise ValueError("graph mode needs a symmetric matrix and simultaneous orders")
        return tuple(read(arranged.data, orders.row_order, m.rows))
    t = arranged.transpose()
    return tuple(
        read(arranged.data, orders.row_order, m.rows) + read(t.data, orders.col_order, m.cols)
    )


def ordering_from_representation(r: Sequence[SignedInterval]) -> list[int]:
    """Vertices sorted by ``(a, b, id)``."""
    return sorted(range(len(r)), key=lambda v: (r[v].a, r[v].b, v))


def diagonal_of(r: Sequence[SignedInterval]) -> int:
    """Loop mask: bit ``v`` set iff vertex ``v`` has a positive interval."""
    return sum(1 << v for v, iv in enumerate(r) if iv.positive)


def normalize_representation(g: Graph, r: Sequence[SignedInterval]) -> Representation:
    """Remap all ``2n`` endpoints to the distinct ranks ``1..2n``.

    Endpoints are ranked by value; among equal values left endpoints come
    before right endpoints, which keeps every ``a <= b`` comparison true.  The
    result is re-verified against ``g``.
    """
    _require_total(g.n, len(r), "representation")
    keyed = []
    for v, iv in enumerate(r):
        keyed.append((iv.a, 0, v))
        keyed.append((iv.b, 1, v))
    keyed.sort()
    new_a = [0] * g.n
    new_b = [0] * g.n
    for rank, (_, side, v) in enumerate(keyed, start=1):
        (new_a if side == 0 else new_b)[v] = rank
    out = tuple(SignedInterval(a, b) for a, b in zip(new_a, new_b))
    check = verify_representation(g, out)
    if not check:
        raise ValueError(f"normalisation broke pairs {list(check.mismatches)}")
    return out


def cott_certificate(r: Sequence[SignedInterval]) -> CoTTCertificate:
    """Shift uniformly so the smallest endpoint is 1 (no shift if already >= 1)."""
    low = min((min(iv.a, iv.b) for iv in r), default=1)
    delta = max(0, 1 - low)
    return CoTTCertificate(tuple((iv.a + delta, iv.b + delta) for iv in r))


def verify_cott_certificate(g: Graph, c: CoTTCertificate) -> Verification:
    return verify_representation(g, c.as_representation())


def tt_certificate_of_complement(c: CoTTCertificate) -> TTCertificate:
    """``w = a`` and ``t = a + b``; this witnesses that the complement is TT."""
    return TTCertificate(tuple(a for a, _ in c.pairs), tuple(a + b for a, b in c.pairs))


def verify_tt(g: Graph, c: TTCertificate) -> Verification:
    _require_total(g.n, len(c.weights), "certificate")
    w, t = c.weights, c.tolerances
    bad = tuple(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (w[u] + w[v] > min(t[u], t[v])) != g.has_edge(u, v)
    )
    return Verification(not bad, bad)


def negative_vertices_simplicial(g: Graph, r: Sequence[SignedInterval]) -> bool:
    """True iff every negative-interval vertex has a clique neighbourhood."""
    for v, iv in enumerate(r):
        if iv.positive:
            continue
        nb = g.adj[v]
        if any((nb & ~g.adj[u] & ~(1 << u)) for u in bits(nb)):
            return False
    return True


# certificate documents ------------------------------------------------------

CERT_FORMAT = "cott-certificate/1"


def certificate_to_dict(
    g: Graph,
    r: Sequence[SignedInterval] | CoTTCertificate | TTCertificate,
    ordering: Sequence[int] | None = None,
) -> dict[str, Any]:
    """Structured certificate document keyed by vertex label."""
    names = g.vertex_names()
    doc: dict[str, Any] = {"format": CERT_FORMAT, "n": g.n}
    if isinstance(r, TTCertificate):
        doc["kind"] = "tt"
        doc["vertices"] = {
            names[v]: {"w": r.weights[v], "t": r.tolerances[v]} for v in range(g.n)
        }
    else:
        if isinstance(r, CoTTCertificate):
            doc["kind"] = "cott"
            r = r.as_representation()
        else:
            doc["kind"] = "representation"
        doc["vertices"] = {names[v]: [r[v].a, r[v].b] for v in range(g.n)}
        doc["diagonal"] = "".join("1" if iv.positive else "0" for iv in r)
    if ordering is not None:
        doc["ordering"] = [names[v] for v in ordering]
    return doc


def certificate_to_json(doc: Mapping[str, Any]) -> str:
    """One vertex per line; bit-exact integers."""
    head = {k: v for k, v in doc.items() if k not in ("vertices", "ordering")}
    lines = ["{"]
    for k, v in head.items():
        lines.append(f"  {json.dumps(k)}: {json.dumps(v)},")
    lines.append('  "vertices": {')
    items = list(doc["vertices"].items())
    for i, (name, value) in enumerate(items):
        sep = "," if i + 1 < len(items) else ""
        lines.append(f"    {json.dumps(name)}: {json.dumps(value, sort_keys=True)}{sep}")
    lines.append("  }" + ("," if "ordering" in doc else ""))
    if "ordering" in doc:
        lines.append(f'  "ordering": {json.dumps(doc["ordering"])}')
    lines.append("}")
    return "\n".join(lines) + "\n"


class CertificateError(ValueError):
    """Certificate document is malformed or does not match the graph."""


def _entries(g: Graph, doc: Mapping[str, Any]) -> list[Any]:
    vertices = doc.get("vertices")
    if not isinstance(vertices, dict):
        raise CertificateError("certificate lacks a 'vertices' mapping")
    names = g.vertex_names()
    missing = [x for x in names if x not in vertices]
    if missing:
        raise CertificateError(f"certificate misses vertices {missing}")
    extra = sorted(set(vertices) - set(names))
    if extra:
        raise CertificateError(f"certificate names unknown vertices {extra}")
    return [vertices[x] for x in names]


def _int(x: Any) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise CertificateError(f"expected an integer, got {x!r}")
    return x


def representation_from_dict(g: Graph, doc: Mapping[str, Any]) -> Representation:
    if doc.get("kind") not in ("representation", "cott"):
        raise CertificateError(f"not an interval certificate: kind={doc.get('kind')!r}")
    out = []
    for e in _entries(g, doc):
        if not isinstance(e, list) or len(e) != 2:
            raise CertificateError(f"interval must be a two-element list, got {e!r}")
        out.append(SignedInterval(_int(e[0]), _int(e[1])))
    return tuple(out)


def tt_certificate_from_dict(g: Graph, doc: Mapping[str, Any]) -> TTCertificate:
    if doc.get("kind") != "tt":
        raise CertificateError(f"not a TT certificate: kind={doc.get('kind')!r}")
    entries = _entries(g, doc)
    try:
        return TTCertificate(
            tuple(_int(e["w"]) for e in entries), tuple(_int(e["t"]) for e in entries)
        )
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"TT entry lacks w/t: {exc}") from None
    except ValueError as exc:
        raise CertificateError(str(exc)) from None
