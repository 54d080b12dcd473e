"""Reading and writing graphs as edge lists, adjacency matrices and graph6."""

from __future__ import annotations

from typing import Literal

from cott.graphcore import Graph

Format = Literal["edge-list", "adjacency-matrix", "graph6"]
FORMATS: tuple[str, ...] = ("edge-list", "adjacency-matrix", "graph6")


class ParseError(ValueError):
    """Malformed graph text.  ``line`` is 1-based; ``offset`` is a 0-based byte index."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.offset = offset


class MalformedLineError(ParseError):
    pass


class AsymmetricMatrixError(ParseError):
    pass


class LoopEntryError(ParseError):
    pass


class Graph6ByteError(ParseError):
    pass


class Graph6LengthError(ParseError):
    pass


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


# edge list -------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """``u v`` lines, ``#`` comments, optional ``n=<k>`` header, single-token vertex lines.

    When every token is a non-negative integer the tokens are vertex ids;
    otherwise they are names, numbered in order of first appearance.
    """
    declared_n: int | None = None
    tokens: list[tuple[int, list[str]]] = []
    for number, line in _content_lines(text):
        if line.startswith("n="):
            if declared_n is not None or tokens:
                raise MalformedLineError("'n=' header must come first and only once", number)
            try:
                declared_n = int(line[2:])
            except ValueError:
                raise MalformedLineError(f"bad vertex count {line[2:]!r}", number) from None
            if declared_n < 0:
                raise MalformedLineError("vertex count must be non-negative", number)
            continue
        parts = line.split()
        if len(parts) > 2:
            raise MalformedLineError(f"expected 'u v' or a single vertex, got {line!r}", number)
        tokens.append((number, parts))

    numeric = all(p.isdigit() for _, parts in tokens for p in parts)
    if numeric:
        ids = [int(p) for _, parts in tokens for p in parts]
        n = max(ids, default=-1) + 1
        if declared_n is not None:
            if n > declared_n:
                raise MalformedLineError(f"vertex {n - 1} exceeds declared n={declared_n}")
            n = declared_n
        edges = set()
        for number, parts in tokens:
            if len(parts) == 2:
                u, v = int(parts[0]), int(parts[1])
                if u == v:
                    raise LoopEntryError(f"loop at vertex {u}", number)
                edges.add((min(u, v), max(u, v)))
        return Graph.from_edges(n, sorted(edges))

    names: list[str] = []
    index: dict[str, int] = {}
    edges = set()
    for number, parts in tokens:
        for p in parts:
            if p not in index:
                index[p] = len(names)
                names.append(p)
        if len(parts) == 2:
            u, v = index[parts[0]], index[parts[1]]
            if u == v:
                raise LoopEntryError(f"loop at vertex {parts[0]!r}", number)
            edges.add((min(u, v), max(u, v)))
    if declared_n is not None and declared_n != len(names):
        raise MalformedLineError(f"declared n={declared_n} but {len(names)} vertices named")
    return Graph.from_edges(len(names), sorted(edges), names)


def serialize_edge_list(g: Graph) -> str:
    lines = []
    if g.labels is not None:
        lines.extend(g.labels)
        lines.extend(f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges())
    else:
        if g.n == 0 or g.adj[g.n - 1] == 0:
            lines.append(f"n={g.n}")
        lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + ("\n" if lines else "")


# adjacency matrix --------------------------------------------------------------

def parse_adjacency_matrix(text: str) -> Graph:
    rows = _content_lines(text)
    n = len(rows)
    adj = [0] * n
    for i, (number, line) in enumerate(rows):
        line = line.replace(" ", "")
        if len(line) != n:
            raise MalformedLineError(f"row has {len(line)} entries, expected {n}", number)
        for j, ch in enumerate(line):
            if ch not in "01":
                raise MalformedLineError(f"bad matrix entry {ch!r}", number, j)
            if ch == "1":
                if i == j:
                    raise LoopEntryError(f"loop at vertex {i}", number, j)
                adj[i] |= 1 << j
    for i, (number, _) in enumerate(rows):
        for j in range(n):
            if ((adj[i] >> j) & 1) != ((adj[j] >> i) & 1):
                raise AsymmetricMatrixError(f"entry ({i},{j}) differs from ({j},{i})", number, j)
    return Graph(n, tuple(adj))


def serialize_adjacency_matrix(g: Graph) -> str:
    return "".join(
        "".join("1" if (g.adj[i] >> j) & 1 else "0" for j in range(g.n)) + "\n" for i in range(g.n)
    )


# graph6 ------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6LengthError("empty graph6 string", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6LengthError("truncated vertex count", offset=len(data))
        return (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63), 4
    if len(data) < 8:
        raise Graph6LengthError("truncated vertex count", offset=len(data))
    n = 0
    for b in data[2:8]:
        n = n << 6 | (b - 63)
    return n, 8


def decode_graph6(line: str, line_number: int | None = None) -> Graph:
    raw = line.strip()
    if raw.startswith(_G6_HEADER):
        raw = raw[len(_G6_HEADER):]
    data = raw.encode("ascii", errors="replace")
    for k, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ByteError(f"byte {b} outside 63..126", line_number, k)
    n, start = _g6_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[start:]
    if len(body) != need:
        raise Graph6LengthError(
            f"expected {need} data bytes for n={n}, got {len(body)}", line_number, start + len(body)
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [(n >> s & 63) + 63 for s in range(30, -1, -6)]
    bits_out = [(g.adj[i] >> j) & 1 for j in range(1, n) for i in range(j)]
    bits_out += [0] * (-len(bits_out) % 6)
    body = [
        63 + sum(b << (5 - t) for t, b in enumerate(bits_out[k : k + 6]))
        for k in range(0, len(bits_out), 6)
    ]
    return bytes(head + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    graphs = parse_graph6_many(text)
    if len(graphs) != 1:
        raise MalformedLineError(f"expected one graph6 line, found {len(graphs)}")
    return graphs[0]


def parse_graph6_many(text: str) -> list[Graph]:
    return [decode_graph6(line, number) for number, line in _content_lines(text)]


def serialize_graph6(g: Graph) -> str:
    return encode_graph6(g) + "\n"


# dispatch ------------------------------------------------------------------------

def parse_graph(text: str, format: str = "edge-list") -> Graph:
    if format == "edge-list":
        return parse_edge_list(text)
    if format == "adjacency-matrix":
        return parse_adjacency_matrix(text)
    if format == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def serialize_graph(g: Graph, format: str = "edge-list") -> str:
    if format == "edge-list":
        return serialize_edge_list(g)
    if format == "adjacency-matrix":
        return serialize_adjacency_matrix(g)
    if format == "graph6":
        return serialize_graph6(g)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def guess_format(text: str) -> str:
    """``adjacency-matrix`` if every content line is 0/1, ``graph6`` for one bare token, else edge list."""
    lines = [line for _, line in _content_lines(text)]
    if lines and all(set(line.replace(" ", "")) <= {"0", "1"} for line in lines) and all(
        len(line.replace(" ", "")) == len(lines) for line in lines
    ) and not (len(lines) == 1 and " " in lines[0]):
        return "adjacency-matrix"
    if len(lines) == 1 and len(lines[0].split()) == 1 and not lines[0].startswith("n="):
        return "graph6"
    return "edge-list"
