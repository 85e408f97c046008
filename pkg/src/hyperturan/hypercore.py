"""Uniform hypergraphs, simple graphs, validation and the plain-text edge-list format."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Hypergraph",
    "Graph",
    "DegreeProfile",
    "ValidationResult",
    "HypergraphFormatError",
    "InvalidHypergraphError",
    "validate",
    "require_valid",
    "is_linear",
    "is_connected",
    "components",
    "degree_profile",
    "pair_edge_index",
    "read_hypergraph",
    "write_hypergraph",
    "read_graph",
    "write_graph",
]


class HypergraphFormatError(ValueError):
    """Raised when edge-list text cannot be parsed."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InvalidHypergraphError(ValueError):
    pass


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices ``0..n-1``.

    Edges are canonicalized on construction (each edge sorted, edge list
    sorted), but no other check is made here; use :func:`validate` or
    :meth:`from_edges` when the input is untrusted.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        canon = tuple(sorted(tuple(sorted(int(v) for v in e)) for e in self.edges))
        object.__setattr__(self, "edges", canon)

    @classmethod
    def from_edges(cls, n: int, r: int, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        h = cls(n, r, tuple(tuple(e) for e in edges))
        require_valid(h)
        return h

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def to_graph(self) -> "Graph":
        if self.r != 2:
            raise ValueError(f"only 2-uniform hypergraphs convert to graphs (r={self.r})")
        return Graph(self.n, self.edges)


@dataclass(frozen=True)
class Graph:
    """A simple graph; edges are unordered pairs stored as sorted tuples."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = set()
        for e in self.edges:
            a, b = (int(v) for v in e)
            if a == b:
                raise InvalidHypergraphError(f"self-loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InvalidHypergraphError(f"edge {(a, b)} out of range for n={self.n}")
            pairs.add((min(a, b), max(a, b)))
        # duplicates collapse silently; a pair set is what a simple graph is
        object.__setattr__(self, "edges", tuple(sorted(pairs)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, 2, self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def remove_edge(self, edge: tuple[int, int]) -> "Graph":
        e = tuple(sorted(edge))
        if e not in self.edges:
            raise KeyError(edge)
        return Graph(self.n, tuple(x for x in self.edges if x != e))


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    message: str = ""
    edge_index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min: int
    max: int
    average: Fraction = field(default=Fraction(0))

    @property
    def is_regular(self) -> bool:
        return self.min == self.max


def validate(h: Hypergraph) -> ValidationResult:
    """Check the structural invariants and report the first violation."""
    if h.n < 1:
        return ValidationResult(False, f"vertex count must be positive (n={h.n})")
    if h.r < 2:
        return ValidationResult(False, f"uniformity must be at least 2 (r={h.r})")
    prev = None
    for idx, e in enumerate(h.edges):
        if len(e) != h.r:
            return ValidationResult(False, f"edge has {len(e)} vertices, expected {h.r}", idx)
        if e[0] < 0 or e[-1] >= h.n:
            return ValidationResult(False, "vertex out of range", idx)
        if any(e[i] == e[i + 1] for i in range(len(e) - 1)):
            return ValidationResult(False, "repeated vertex", idx)
        if e == prev:
            return ValidationResult(False, "duplicate edge", idx)
        prev = e
    return ValidationResult(True)


def require_valid(h: Hypergraph) -> None:
    res = validate(h)
    if not res.ok:
        where = "" if res.edge_index is None else f" (edge {res.edge_index})"
        raise InvalidHypergraphError(res.message + where)


def is_linear(h: Hypergraph) -> bool:
    seen: set[tuple[int, int]] = set()
    for e in h.edges:
        for pair in combinations(e, 2):
            if pair in seen:
                return False
            seen.add(pair)
    return True


def pair_edge_index(h: Hypergraph) -> dict[tuple[int, int], int]:
    """Map every covered pair to the index of the edge covering it.

    For a linear hypergraph this is well defined; otherwise the last edge wins.
    """
    out: dict[tuple[int, int], int] = {}
    for idx, e in enumerate(h.edges):
        for pair in combinations(e, 2):
            out[pair] = idx
    return out


def _union_find_roots(h: Hypergraph) -> list[int]:
    parent = list(range(h.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in h.edges:
        root = find(e[0])
        for v in e[1:]:
            rv = find(v)
            if rv != root:
                parent[rv] = root
    return [find(v) for v in range(h.n)]


def is_connected(h: Hypergraph) -> bool:
    if h.n == 1:
        return True
    roots = _union_find_roots(h)
    return all(x == roots[0] for x in roots)


def components(h: Hypergraph) -> list[Hypergraph]:
    """Split into connected components, each relabelled onto ``0..n_i-1``."""
    roots = _union_find_roots(h)
    groups: dict[int, list[int]] = {}
    for v, root in enumerate(roots):
        groups.setdefault(root, []).append(v)
    parts = sorted(groups.values())
    out = []
    for verts in parts:
        local = {v: i for i, v in enumerate(verts)}
        edges = [tuple(local[v] for v in e) for e in h.edges if e[0] in local]
        out.append(Hypergraph(len(verts), h.r, tuple(edges)))
    return out


def degree_profile(h: Hypergraph) -> DegreeProfile:
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return DegreeProfile(tuple(deg), min(deg), max(deg), Fraction(h.r * h.m, h.n))


# -- text format ------------------------------------------------------------


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise HypergraphFormatError(f"expected integers, got {line!r}", lineno) from None


def read_hypergraph(text: str) -> Hypergraph:
    """Parse the ``n r m`` header plus ``m`` edge lines."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise HypergraphFormatError("missing header line") from None
    head = _ints(header, lineno)
    if len(head) != 3:
        raise HypergraphFormatError("header must be 'n r m'", lineno)
    n, r, m = head
    if n < 1 or r < 2 or m < 0:
        raise HypergraphFormatError(f"bad header values n={n} r={r} m={m}", lineno)
    edges = []
    for lineno, line in lines:
        verts = _ints(line, lineno)
        if len(verts) != r:
            raise HypergraphFormatError(f"expected {r} vertices, got {len(verts)}", lineno)
        if any(v < 0 or v >= n for v in verts):
            raise HypergraphFormatError(f"vertex out of range [0, {n})", lineno)
        if any(verts[i] >= verts[i + 1] for i in range(r - 1)):
            raise HypergraphFormatError("vertices must be strictly increasing", lineno)
        edges.append(tuple(verts))
    if len(edges) != m:
        raise HypergraphFormatError(f"header promises {m} edges, found {len(edges)}")
    h = Hypergraph(n, r, tuple(edges))
    res = validate(h)
    if not res.ok:
        raise HypergraphFormatError(res.message)
    return h


def write_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.r} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    h = read_hypergraph(text)
    if h.r != 2:
        raise HypergraphFormatError(f"graph files must have r=2, got r={h.r}")
    return h.to_graph()


def write_graph(g: Graph) -> str:
    return write_hypergraph(g.to_hypergraph())
