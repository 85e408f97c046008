"""Graph expansions and their containment in linear hypergraphs.

``expand(F, r)`` pads every edge of ``F`` with ``r - 2`` fresh vertices.
Containment of ``F^r`` in a linear host is decided exactly by backtracking
over images of the core vertices: in a linear host a covered pair lies in a
unique edge, so once both endpoints of a base edge are placed the host edge
and its padding vertices are forced.

:func:`greedy_shadow_embedding` replays the greedy selection used to lift a
complete multipartite subgraph of the shadow to an expansion in the host.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb

from .chromatic import complete_multipartite, complete_multipartite_plus
from .hypercore import Graph, Hypergraph, is_linear, pair_edge_index
from .shadow import NotLinearError, shadow

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "SearchBudgetExceeded",
    "NoWitnessError",
    "Expansion",
    "Embedding",
    "GreedyState",
    "GreedyFailure",
    "expand",
    "contains_expansion",
    "verify_embedding",
    "find_multipartite_witness",
    "multipartite_pattern",
    "greedy_shadow_embedding",
    "write_embedding",
    "read_embedding",
]

DEFAULT_NODE_BUDGET = 2_000_000


class SearchBudgetExceeded(RuntimeError):
    """The search gave up before deciding; this is not the same as "absent"."""


class NoWitnessError(LookupError):
    """The shadow holds no complete multipartite subgraph of the requested shape."""


@dataclass(frozen=True)
class Expansion:
    base: Graph
    r: int
    enlargement: tuple[tuple[int, ...], ...]

    @property
    def core_map(self) -> tuple[int, ...]:
        return tuple(range(self.base.n))

    @property
    def n(self) -> int:
        return self.base.n + (self.r - 2) * self.base.m

    @cached_property
    def hypergraph(self) -> Hypergraph:
        edges = tuple(e + s for e, s in zip(self.base.edges, self.enlargement))
        return Hypergraph(self.n, self.r, edges)


@dataclass(frozen=True)
class Embedding:
    """Injection of an expansion's vertices into a host, plus the host edge
    used for each expansion edge (indexed in base-edge order)."""

    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]


def expand(f: Graph, r: int) -> Expansion:
    if r < 2:
        raise ValueError(f"uniformity must be at least 2, got {r}")
    if f.m < 1:
        raise ValueError("the base graph needs at least one edge")
    nxt = f.n
    slots = []
    for _ in f.edges:
        slots.append(tuple(range(nxt, nxt + r - 2)))
        nxt += r - 2
    return Expansion(f, r, tuple(slots))


def _check_host(host: Hypergraph, r: int) -> None:
    if host.r != r:
        raise ValueError(f"uniformity mismatch: host has r={host.r}, requested r={r}")
    if not is_linear(host):
        raise NotLinearError("host hypergraph must be linear")


def _embedding_from_core(
    host: Hypergraph, exp: Expansion, phi: list[int], pairs: dict[tuple[int, int], int]
) -> Embedding:
    vmap = list(phi) + [0] * (exp.n - exp.base.n)
    emap = []
    for (a, b), slot in zip(exp.base.edges, exp.enlargement):
        x, y = phi[a], phi[b]
        idx = pairs[(min(x, y), max(x, y))]
        emap.append(idx)
        rest = sorted(set(host.edges[idx]) - {x, y})
        for s, hv in zip(slot, rest):
            vmap[s] = hv
    return Embedding(tuple(vmap), tuple(emap))


def _search_order(f: Graph) -> list[int]:
    adj = f.adjacency()
    order: list[int] = []
    placed: set[int] = set()
    remaining = [v for v in range(f.n) if adj[v]]
    while remaining:
        # most already-placed neighbours first, then highest degree, then lowest index
        v = max(remaining, key=lambda u: (len(adj[u] & placed), len(adj[u]), -u))
        order.append(v)
        placed.add(v)
        remaining.remove(v)
    order.extend(v for v in range(f.n) if not adj[v])
    return order


def contains_expansion(
    host: Hypergraph, f: Graph, r: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> Embedding | None:
    """Find a copy of ``f``'s r-expansion in a linear host, or return None.

    Raises :class:`SearchBudgetExceeded` if ``node_budget`` search nodes are
    spent without a decision.
    """
    _check_host(host, r)
    exp = expand(f, r)
    if f.n > host.n or f.m > host.m or exp.n > host.n:
        return None
    pairs = pair_edge_index(host)
    sh_adj = shadow(host).adjacency()
    adj = f.adjacency()
    order = _search_order(f)
    phi = [-1] * f.n
    used: set[int] = set()
    used_edges: set[int] = set()
    budget = [node_budget]

    def place(pos: int) -> bool:
        if pos == len(order):
            return True
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchBudgetExceeded(f"containment search exceeded {node_budget} nodes")
        v = order[pos]
        mapped = [u for u in sorted(adj[v]) if phi[u] >= 0]
        cands = sorted(sh_adj[phi[mapped[0]]]) if mapped else range(host.n)
        for hv in cands:
            if hv in used:
                continue
            new_edges: list[int] = []
            new_slots: set[int] = set()
            ok = True
            for u in mapped:
                hu = phi[u]
                idx = pairs.get((min(hv, hu), max(hv, hu)))
                if idx is None or idx in used_edges or idx in new_edges:
                    ok = False
                    break
                slot = set(host.edges[idx]) - {hv, hu}
                if slot & used or slot & new_slots or hv in slot:
                    ok = False
                    break
                new_edges.append(idx)
                new_slots |= slot
            if not ok:
                continue
            phi[v] = hv
            used.add(hv)
            used.update(new_slots)
            used_edges.update(new_edges)
            if place(pos + 1):
                return True
            phi[v] = -1
            used.discard(hv)
            used.difference_update(new_slots)
            used_edges.difference_update(new_edges)
        return False

    if not place(0):
        return None
    return _embedding_from_core(host, exp, phi, pairs)


def verify_embedding(host: Hypergraph, exp: Expansion, emb: Embedding) -> bool:
    """Re-check an embedding against the host from scratch."""
    vmap, emap = emb.vertex_map, emb.edge_map
    if len(vmap) != exp.n or len(emap) != exp.base.m:
        return False
    if any(not 0 <= v < host.n for v in vmap) or len(set(vmap)) != len(vmap):
        return False
    if any(not 0 <= i < host.m for i in emap) or len(set(emap)) != len(emap):
        return False
    for e, i in zip(exp.hypergraph.edges, emap):
        if {vmap[v] for v in e} != set(host.edges[i]):
            return False
    return True


# -- greedy lifting from the shadow -----------------------------------------


def multipartite_pattern(k: int, l: int, plus: bool = False) -> Graph:
    """K_k(l,...,l), or K_k^+(l,...,l) when ``plus``."""
    parts = [l] * k
    return complete_multipartite_plus(parts) if plus else complete_multipartite(parts)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def find_multipartite_witness(
    g: Graph, k: int, p: int, plus: bool = False, node_budget: int = DEFAULT_NODE_BUDGET
) -> list[list[int]] | None:
    """Exact search for k disjoint p-sets with all cross pairs adjacent in ``g``.

    With ``plus`` the first two vertices of the first part are also adjacent.
    Parts after the first (all parts, without ``plus``) come with increasing
    minimum vertex to break symmetry.
    """
    adj = [0] * g.n
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    full = (1 << g.n) - 1
    budget = [node_budget]
    parts: list[list[int]] = []

    def tick():
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchBudgetExceeded(f"witness search exceeded {node_budget} nodes")

    def fill(i: int, chosen: list[int], cand: int, common: int, used: int) -> bool:
        # extend part i from ``cand``; ``common`` = vertices adjacent to everything chosen in part i
        tick()
        if len(chosen) == p:
            parts.append(list(chosen))
            if build(i + 1, common & ~used, used):
                return True
            parts.pop()
            return False
        need_later = (k - i - 1) * p
        for v in _bits(cand):
            nc = common & adj[v]
            if _popcount(nc & ~used & ~(1 << v)) < need_later:
                continue
            chosen.append(v)
            ok = fill(i, chosen, cand & ~((1 << (v + 1)) - 1), nc, used | (1 << v))
            chosen.pop()
            if ok:
                return True
        return False

    def build(i: int, avail: int, used: int) -> bool:
        if i == k:
            return True
        if _popcount(avail) < (k - i) * p:
            return False
        if i == 0 and plus:
            for a in range(g.n):
                for b in _bits(adj[a] & ~((1 << (a + 1)) - 1)):
                    tick()
                    common = adj[a] & adj[b]
                    rest = full & ~((1 << a) | (1 << b))
                    if fill(0, [a, b], rest, common, (1 << a) | (1 << b)):
                        return True
            return False
        first = i == 0 or (i == 1 and plus)
        floor = 0 if first else parts[i - 1][0] + 1
        # the first vertex of each later part sets its minimum
        for v in _bits(avail):
            if v < floor:
                continue
            tick()
            higher = avail & ~((1 << (v + 1)) - 1)
            if fill(i, [v], higher, avail & adj[v], used | (1 << v)):
                return True
        return False

    if p < 1 or k < 1 or (plus and p < 2):
        raise ValueError(f"invalid witness shape k={k}, p={p}, plus={plus}")
    return [list(part) for part in parts] if build(0, full, 0) else None


@dataclass
class GreedyState:
    selected: list[int] = field(default_factory=list)
    blocked: set[int] = field(default_factory=set)
    cross_blocked: set[int] = field(default_factory=set)


@dataclass(frozen=True)
class GreedyFailure:
    part: int
    step: int
    reason: str
    state: GreedyState
    witness: list[list[int]]


def greedy_shadow_embedding(
    host: Hypergraph,
    k: int,
    l: int,
    plus: bool = False,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Embedding | GreedyFailure:
    """Lift a complete multipartite subgraph of the shadow to an expansion.

    Finds the largest p >= l such that the shadow holds K_k(p,...,p) (with
    an extra edge inside the first part when ``plus``), then picks l
    vertices per part, always taking the lowest-index vertex not already
    used as a core vertex (``selected``), as a padding vertex (``blocked``),
    or, for parts after the first, lying on a host edge through a selected
    and a blocked vertex (``cross_blocked``).

    Returns an :class:`Embedding` of ``multipartite_pattern(k, l, plus)``
    expanded to ``host.r``, or a :class:`GreedyFailure` when a part runs out
    of eligible vertices. Raises :class:`NoWitnessError` if no witness exists.
    """
    if k < 1 or l < 1 or (plus and l < 2):
        raise ValueError(f"invalid pattern k={k}, l={l}, plus={plus}")
    _check_host(host, host.r)
    r = host.r
    sh = shadow(host)
    witness = None
    for p in range(host.n // k, l - 1, -1):
        witness = find_multipartite_witness(sh, k, p, plus, node_budget)
        if witness is not None:
            break
    if witness is None:
        raise NoWitnessError(f"shadow holds no K_{k}({l},...) witness (plus={plus})")

    pairs = pair_edge_index(host)

    def pad(x: int, y: int) -> set[int]:
        idx = pairs.get((min(x, y), max(x, y)))
        return set() if idx is None else set(host.edges[idx]) - {x, y}

    st = GreedyState()

    def check_guards():
        j = len(st.selected)
        assert len(st.blocked) <= (r - 2) * comb(j, 2)
        assert len(st.cross_blocked) <= j * (r - 2) ** 2 * comb(j, 2)

    def add(v: int):
        for w in st.selected:
            st.blocked |= pad(v, w)
        st.selected.append(v)

    first = witness[0]
    if plus:
        st.selected = [first[0], first[1]]
        st.blocked = pad(first[0], first[1])
    for i, part in enumerate(witness):
        take = l - (len(st.selected) if i == 0 else 0)
        for _ in range(take):
            if i > 0:
                st.cross_blocked = set()
                for x in st.selected:
                    for y in st.blocked:
                        st.cross_blocked |= pad(x, y)
            check_guards()
            banned = set(st.selected) | st.blocked | st.cross_blocked
            free = [v for v in sorted(part) if v not in banned]
            if not free:
                return GreedyFailure(i + 1, len(st.selected), "part exhausted", st, witness)
            add(free[0])

    exp = expand(multipartite_pattern(k, l, plus), r)
    emb = _embedding_from_core(host, exp, st.selected, pairs)
    assert verify_embedding(host, exp, emb), "greedy lift produced an invalid embedding"
    return emb


# -- text format ------------------------------------------------------------


def write_embedding(emb: Embedding) -> str:
    lines = ["[vertex_map]"]
    lines.extend(f"{i} {v}" for i, v in enumerate(emb.vertex_map))
    lines.append("[edge_map]")
    lines.extend(f"{i} {e}" for i, e in enumerate(emb.edge_map))
    return "\n".join(lines) + "\n"


def read_embedding(text: str) -> Embedding:
    sections: dict[str, dict[int, int]] = {"vertex_map": {}, "edge_map": {}}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            if current not in sections:
                raise ValueError(f"line {lineno}: unknown section {current!r}")
            continue
        if current is None:
            raise ValueError(f"line {lineno}: data before any section header")
        a, b = (int(tok) for tok in line.split())
        sections[current][a] = b

    def dense(d: dict[int, int]) -> tuple[int, ...]:
        if sorted(d) != list(range(len(d))):
            raise ValueError("section indices must be 0..len-1")
        return tuple(d[i] for i in range(len(d)))

    return Embedding(dense(sections["vertex_map"]), dense(sections["edge_map"]))
