"""Simple undirected graphs, text ingestion, standard families and the middle graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph construction or family parameters."""


class ParseError(ValueError):
    """Base class for input format errors."""


class MalformedLineError(ParseError):
    pass


class IndexRangeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class Graph6Error(ParseError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` is sorted lexicographically with ``u < v`` in every pair; the
    position of an edge in this tuple is its canonical index.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)
    masks: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"negative order {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = (min(u, v), max(u, v))
            if e in canon:
                raise GraphError(f"duplicate edge {e}")
            canon.add(e)
        ordered = tuple(sorted(canon))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in ordered:
            adj[u].add(v)
            adj[v].add(u)
        masks = tuple(sum(1 << w for w in nb) for nb in adj)
        return cls(n, ordered, tuple(frozenset(a) for a in adj), masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def edge_index(self, u: int, v: int) -> int:
        return self._edge_lookup()[(min(u, v), max(u, v))]

    def _edge_lookup(self) -> dict[tuple[int, int], int]:
        cache = self.__dict__.get("_lookup")
        if cache is None:
            cache = {e: k for k, e in enumerate(self.edges)}
            object.__setattr__(self, "_lookup", cache)
        return cache

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def remove_vertices(self, removed: Iterable[int]) -> "Graph":
        """``G - S`` with the surviving vertices relabelled in increasing order."""
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        pos = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep),
            [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos],
        )

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {self.m}"] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Blank lines are ignored; CRLF endings are accepted.
    """
    lines = [ln.strip() for ln in text.replace("\r\n", "\n").split("\n")]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedLineError("empty input")

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLineError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"line {lineno}: non-integer token in {line!r}") from None

    n, m = ints(1, lines[0])
    if n < 0 or m < 0:
        raise MalformedLineError("line 1: negative count")
    if len(lines) - 1 != m:
        raise MalformedLineError(f"header declares {m} edges, found {len(lines) - 1} lines")
    seen: set[tuple[int, int]] = set()
    for i, line in enumerate(lines[1:], start=2):
        u, v = ints(i, line)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexRangeError(f"line {i}: vertex index out of range 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"line {i}: self-loop at {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise DuplicateEdgeError(f"line {i}: duplicate edge {e}")
        seen.add(e)
    return Graph.from_edges(n, seen)


def _graph6_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated size header")
        vals, pos = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated size header")
        vals, pos = data[1:4], 4
    n = 0
    for c in vals:
        n = (n << 6) | (c - 63)
    return n, pos


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is skipped)."""
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty input")
    data = text.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error(f"bad character in {text!r}")
    n, pos = _graph6_size(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated bit vector: need {need} chars, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data after bit vector: {len(body) - need} chars")
    bits = []
    for c in body:
        x = c - 63
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    body = [
        sum(b << (5 - i) for i, b in enumerate(bits[j:j + 6])) + 63
        for j in range(0, len(bits), 6)
    ]
    return bytes(head + body).decode("ascii")


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [parse_graph6(ln) for ln in fh if ln.strip()]


@dataclass(frozen=True)
class Original:
    vertex: int


@dataclass(frozen=True)
class Subdivision:
    edge: int


@dataclass(frozen=True)
class MiddleGraph:
    source: Graph
    graph: Graph
    element_map: tuple[Original | Subdivision, ...]


def build_middle_graph(g: Graph) -> MiddleGraph:
    n = g.n
    edges = []
    for k, (u, v) in enumerate(g.edges):
        edges.append((u, n + k))
        edges.append((v, n + k))
    # two source edges are adjacent iff they share an endpoint
    for v in range(n):
        incident = sorted(g.edge_index(v, w) for w in g.adjacency[v])
        for j, k in combinations(incident, 2):
            edges.append((n + j, n + k))
    elements = tuple([Original(v) for v in range(n)] + [Subdivision(k) for k in range(g.m)])
    return MiddleGraph(g, Graph.from_edges(n + g.m, edges), elements)


def components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Connected components, each with the map from its local indices back to ``g``.

    Components are ordered by their smallest vertex.
    """
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comp.sort()
        pos = {v: i for i, v in enumerate(comp)}
        sub = Graph.from_edges(
            len(comp), [(pos[u], pos[v]) for u, v in g.edges if u in pos]
        )
        out.append((sub, comp))
    return out


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph.from_edges(offset, edges)


def family(kind: str, *params: int) -> Graph:
    """Standard labelled instances; paths and cycles are numbered in traversal order."""

    def need(count: int) -> None:
        if len(params) != count:
            raise GraphError(f"{kind} takes {count} parameter(s), got {len(params)}")

    if kind == "path":
        need(1)
        (n,) = params
        if n < 1:
            raise GraphError("path needs n >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        need(1)
        (n,) = params
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        need(1)
        (n,) = params
        if n < 1:
            raise GraphError("complete graph needs n >= 1")
        return Graph.from_edges(n, combinations(range(n), 2))
    if kind == "complete_bipartite":
        need(2)
        a, b = params
        if a < 1 or b < 1:
            raise GraphError("complete bipartite graph needs m, n >= 1")
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "star":
        need(1)
        (leaves,) = params
        if leaves < 1:
            raise GraphError("star needs at least one leaf")
        return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    if kind == "empty":
        need(1)
        (n,) = params
        if n < 0:
            raise GraphError("empty graph needs n >= 0")
        return Graph.from_edges(n, [])
    raise GraphError(f"unknown family {kind!r}")
