"""Generators for the named graph and bigraph families.

Vertex labels follow the conventional labels (``x1``, ``y``, ``u'`` ...), so
fixtures can be cross-read against drawings.  Set systems use the ground set
``{1..g}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from cott.graphcore import (
    Bigraph,
    Graph,
    SetSystem,
    SizeLimitError,
    are_isomorphic,
    bigraph_from_set_system,
)

FAMILY_S_CAP = 14


def _build(vertices: Sequence[str], edges: Sequence[tuple[str, str]]) -> Graph:
    return Graph.from_labeled_edges(list(vertices), edges)


def _path(names: Sequence[str]) -> list[tuple[str, str]]:
    return list(zip(names, names[1:]))


def sun(k: int) -> Graph:
    """Rim ``x1..xk`` (independent), hubs ``y1..yk`` (clique); ``x_i ~ y_(i-1), y_i``."""
    if k < 3:
        raise ValueError("sun(k) needs k >= 3")
    rim = [f"x{i}" for i in range(1, k + 1)]
    hubs = [f"y{i}" for i in range(1, k + 1)]
    edges = [(hubs[i], hubs[j]) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        edges.append((rim[i], hubs[i]))
        edges.append((rim[i], hubs[i - 1]))
    return _build(rim + hubs, edges)


def graph_T() -> Graph:
    names = [f"x{i}" for i in range(1, 8)]
    return _build(names, _path(names[:5]) + [("x3", "x6"), ("x6", "x7")])


def graph_W() -> Graph:
    path = ["u", "x", "y", "z", "v"]
    return _build(path + ["r", "w"], _path(path) + [(p, "r") for p in path] + [("y", "w")])


def graph_W1() -> Graph:
    """``W`` without ``ur`` and ``vr``, labelled as a path ``x1..x5`` with ``x ~ x2, x3, x4`` and ``y ~ x3``."""
    path = [f"x{i}" for i in range(1, 6)]
    return _build(path + ["x", "y"], _path(path) + [("x", p) for p in path[1:4]] + [("y", "x3")])


def family_Tn(n: int) -> Graph:
    """Path ``v, x0..xn, w`` with ``x`` adjacent to every ``x_i`` and a pendant ``u`` on ``x``."""
    if n < 1:
        raise ValueError("T_n needs n >= 1")
    xs = [f"x{i}" for i in range(n + 1)]
    path = ["v", *xs, "w"]
    return _build(path + ["x", "u"], _path(path) + [("x", p) for p in xs] + [("x", "u")])


def graph_T0() -> Graph:
    t1 = family_Tn(1)
    names = t1.vertex_names()
    edges = [(names[a], names[b]) for a, b in t1.edges()]
    return _build(names + ["v'", "w'", "u'"], edges + [("v", "v'"), ("w", "w'"), ("u", "u'")])


def _hn_parts(n: int) -> tuple[list[str], list[tuple[str, str]]]:
    xs = [f"x{i}" for i in range(1, n + 1)]
    path = ["w", *xs, "v"]
    edges = _path(path)
    edges += [("y", p) for p in ["w", *xs]]
    edges += [("z", p) for p in [*xs, "v"]]
    edges += [("y", "z"), ("u", "y"), ("u", "z")]
    return path + ["y", "z", "u"], edges


def family_Hn(n: int) -> Graph:
    """Path ``w, x1..xn, v``; ``y`` sees ``w, x1..xn``; ``z`` sees ``x1..xn, v``; ``u ~ y, z ~ y``."""
    if n < 1:
        raise ValueError("H_n needs n >= 1")
    return _build(*_hn_parts(n))


def family_Hstar(n: int) -> Graph:
    if n < 2:
        raise ValueError("H*_n needs n >= 2")
    names, edges = _hn_parts(n)
    return _build(names + ["u'"], edges + [("u", "u'")])


def graph_H3prime() -> Graph:
    names, edges = _hn_parts(3)
    return _build(names + ["x'"], edges + [("x'", "x2")])


# set systems -----------------------------------------------------------------

_VERBATIM: dict[str, list[list[int]]] = {
    "M1": [[1, 2, 3, 4, 5], [1, 2, 3], [1], [1, 2, 4, 6], [2, 4], [2, 5]],
    "M2": [
        [1, 2, 3, 4, 5, 6, 7], [1, 2, 3, 4, 5], [1, 2, 3], [1],
        [1, 2, 3, 4, 6, 8], [1, 2, 4, 6], [2, 4], [2, 7],
    ],
    "M3": [
        [1, 2, 3, 4, 5, 6, 7, 8, 9], [1, 2, 3, 4, 5, 6, 7], [1, 2, 3, 4, 5], [1, 2, 3], [1],
        [1, 2, 3, 4, 5, 6, 8, 10], [1, 2, 3, 4, 6, 8], [1, 2, 4, 6], [2, 4], [2, 9],
    ],
    "N1": [[1, 2, 3], [1], [1, 2, 4, 6], [2, 4], [2, 5], [6]],
    "N2": [[1, 2, 3, 4, 5], [1, 2, 3], [1], [1, 2, 3, 4, 6, 8], [1, 2, 4, 6], [2, 4], [2, 7], [8]],
    "N3": [
        [1, 2, 3, 4, 5, 6, 7], [1, 2, 3, 4, 5], [1, 2, 3], [1],
        [1, 2, 3, 4, 5, 6, 8, 10], [1, 2, 3, 4, 6, 8], [1, 2, 4, 6], [2, 4], [2, 9], [10],
    ],
    "G1": [[1, 3, 5], [1, 2], [3, 4], [5, 6]],
    "G2": [[1], [1, 2, 3, 4], [2, 4, 5], [2, 3, 6]],
    "G3": [[1, 2], [3, 4], [5], [1, 2, 3], [1, 3, 5]],
}

TMFamily = Literal["C", "T", "W", "D", "M", "N", "G1", "G2", "G3"]


def trotter_moore(family: str, i: int | None = None) -> SetSystem:
    """Set systems of the Trotter-Moore forbidden families.

    ``C_i``: the cycle ``{j, j+1}`` (indices mod i).  The generalised members
    follow the displayed ones:

    * ``T_i``: ``{j, j+1}`` for ``j = 1..i+2``, ``{2..i+2, i+4}``, ``{i+4}``
    * ``W_i``: ``{j, j+1}`` for ``j = 1..i+1``, ``{1..i+1, i+3}``, ``{2..i+2, i+3}``, ``{i+3}``
    * ``D_i``: ``{j, j+1, i+4}`` for ``j = 1..i+1``, ``{i+2}``, ``{i+3, i+4}``, ``{2..i+4}``

    ``M_i`` and ``N_i`` exist only for ``i <= 3``; ``G1..G3`` take no parameter.
    """
    name = f"{family}{i}" if i is not None else family
    if family in ("G1", "G2", "G3"):
        if i is not None:
            raise ValueError(f"{family} takes no parameter")
        return SetSystem.of(_VERBATIM[family], name=family)
    if i is None:
        raise ValueError(f"family {family} needs a parameter")
    if family == "C":
        if i < 3:
            raise ValueError("C_i needs i >= 3")
        return SetSystem.of([[j, j % i + 1] for j in range(1, i + 1)], ground=i, name=name)
    if i < 1:
        raise ValueError(f"{family}_i needs i >= 1")
    if family == "T":
        sets = [[j, j + 1] for j in range(1, i + 3)]
        sets += [[*range(2, i + 3), i + 4], [i + 4]]
        return SetSystem.of(sets, ground=i + 4, name=name)
    if family == "W":
        sets = [[j, j + 1] for j in range(1, i + 2)]
        sets += [[*range(1, i + 2), i + 3], [*range(2, i + 3), i + 3], [i + 3]]
        return SetSystem.of(sets, ground=i + 3, name=name)
    if family == "D":
        sets = [[j, j + 1, i + 4] for j in range(1, i + 2)]
        sets += [[i + 2], [i + 3, i + 4], [*range(2, i + 5)]]
        return SetSystem.of(sets, ground=i + 4, name=name)
    if family in ("M", "N"):
        if i > 3:
            raise ValueError(f"{family}_i is only defined for i <= 3")
        return SetSystem.of(_VERBATIM[name], name=name)
    raise ValueError(f"unknown set-system family {family!r}")


def set_system_size(s: SetSystem) -> int:
    return len(s.sets) + s.ground


def split_completion(b: Bigraph, side: Literal["X", "Y"]) -> Graph:
    """``X`` then ``Y`` as vertices; ``side`` becomes a clique, the other stays independent."""
    if side not in ("X", "Y"):
        raise ValueError(f"side must be 'X' or 'Y', got {side!r}")
    g = b.as_graph()
    p, q = b.x_size, b.y_size
    members = range(p) if side == "X" else range(p, p + q)
    extra = [(u, v) for u in members for v in members if u < v]
    return g.with_edges(extra)


def forbidden_bigraph_instances(max_vertices: int) -> list[SetSystem]:
    """All Trotter-Moore set systems whose incidence bigraph has at most ``max_vertices`` vertices."""
    out: list[SetSystem] = []
    i = 3
    while 2 * i <= max_vertices:
        out.append(trotter_moore("C", i))
        i += 1
    for family, size in (("T", lambda i: 2 * i + 8), ("W", lambda i: 2 * i + 7), ("D", lambda i: 2 * i + 8)):
        i = 1
        while size(i) <= max_vertices:
            out.append(trotter_moore(family, i))
            i += 1
    for family in ("M", "N"):
        for i in (1, 2, 3):
            s = trotter_moore(family, i)
            if set_system_size(s) <= max_vertices:
                out.append(s)
    for family in ("G1", "G2", "G3"):
        s = trotter_moore(family)
        if set_system_size(s) <= max_vertices:
            out.append(s)
    return out


def family_S_members(max_vertices: int) -> list[Graph]:
    """Both split completions of every instance up to the size bound, up to isomorphism."""
    if max_vertices > FAMILY_S_CAP:
        raise SizeLimitError(f"family S is materialised up to {FAMILY_S_CAP} vertices")
    out: list[Graph] = []
    for s in forbidden_bigraph_instances(max_vertices):
        b = bigraph_from_set_system(s)
        for side in ("X", "Y"):
            g = split_completion(b, side)
            g = Graph(g.n, g.adj, tuple(f"{s.name}/{side}:{x}" for x in g.vertex_names()))
            if not any(are_isomorphic(g, h, cap=FAMILY_S_CAP) for h in out):
                out.append(g)
    return out


def s_member_spec(g: Graph) -> FamilySpec:
    """Name of a family-S member from its labels; cycle completions are suns."""
    origin = g.label(0).split(":", 1)[0]
    system = origin.split("/", 1)[0]
    if system.startswith("C") and system[1:].isdigit():
        return FamilySpec("Sun", int(system[1:]))
    return FamilySpec("S", member=origin)


# named lookup ------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    name: str
    parameter: int | None = None
    member: str | None = None
    """For family S: the set system and completed side, e.g. ``T1/X``."""

    def __str__(self) -> str:
        text = self.name if self.parameter is None else f"{self.name}({self.parameter})"
        return text if self.member is None else f"{text}[{self.member}]"


FAMILY_NAMES = (
    "Sun", "T", "W", "W1", "Tn", "T0", "Hn", "HnStar", "H3Prime",
    "TM_C", "TM_T", "TM_W", "TM_D", "TM_M", "TM_N", "TM_G1", "TM_G2", "TM_G3",
)

_ALIASES = {name.lower(): name for name in FAMILY_NAMES}
_ALIASES.update({"hstar": "HnStar", "h3'": "H3Prime", "h3prime": "H3Prime"})

_GRAPHS = {
    "Sun": sun,
    "Tn": family_Tn,
    "Hn": family_Hn,
    "HnStar": family_Hstar,
}
_FIXED = {"T": graph_T, "W": graph_W, "W1": graph_W1, "T0": graph_T0, "H3Prime": graph_H3prime}


def resolve_family(name: str) -> str:
    try:
        return _ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}") from None


def is_set_system_family(name: str) -> bool:
    return resolve_family(name).startswith("TM_")


def generate_set_system(spec: FamilySpec) -> SetSystem:
    name = resolve_family(spec.name)
    if not name.startswith("TM_"):
        raise ValueError(f"{name} is a graph family, not a set system")
    return trotter_moore(name[3:], spec.parameter)


def generate(spec: FamilySpec) -> Graph:
    """Graph for ``spec``; set-system families yield their incidence bigraph as a graph."""
    name = resolve_family(spec.name)
    if name in _FIXED:
        if spec.parameter is not None:
            raise ValueError(f"{name} takes no parameter")
        return _FIXED[name]()
    if name in _GRAPHS:
        if spec.parameter is None:
            raise ValueError(f"{name} needs a parameter")
        return _GRAPHS[name](spec.parameter)
    return bigraph_from_set_system(generate_set_system(FamilySpec(name, spec.parameter))).as_graph()


def catalog_patterns(n: int) -> list[tuple[FamilySpec, Graph]]:
    """Forbidden patterns with at most ``n`` vertices, smallest first."""
    out: list[tuple[FamilySpec, Graph]] = []
    for g in family_S_members(min(n, FAMILY_S_CAP)):
        out.append((s_member_spec(g), g))
    m = 2
    while m + 6 <= n:
        out.append((FamilySpec("HnStar", m), family_Hstar(m)))
        m += 1
    for name, make in (("T", graph_T), ("W", graph_W), ("H3Prime", graph_H3prime), ("T0", graph_T0)):
        g = make()
        if g.n <= n:
            out.append((FamilySpec(name), g))
    out.sort(key=lambda item: (item[1].n, item[1].num_edges))
    return out


__all__ = [
    "FamilySpec",
    "FAMILY_NAMES",
    "sun",
    "graph_T",
    "graph_W",
    "graph_W1",
    "graph_T0",
    "graph_H3prime",
    "family_Tn",
    "family_Hn",
    "family_Hstar",
    "trotter_moore",
    "split_completion",
    "forbidden_bigraph_instances",
    "family_S_members",
    "catalog_patterns",
    "s_member_spec",
    "generate",
    "generate_set_system",
    "resolve_family",
]
