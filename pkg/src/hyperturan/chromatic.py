"""Exact chromatic number, colour-criticality and complete multipartite families."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .hypercore import Graph

__all__ = [
    "MAX_VERTICES",
    "DEFAULT_BUDGET",
    "SearchLimitError",
    "chromatic_number",
    "is_color_critical",
    "turan_part_sizes",
    "turan_graph",
    "complete_multipartite",
    "complete_multipartite_plus",
    "complete_graph",
    "cycle_graph",
    "path_graph",
]

MAX_VERTICES = 40
DEFAULT_BUDGET = 5_000_000


class SearchLimitError(RuntimeError):
    """Exact search exceeded its size or node budget."""


def _masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def _greedy_clique(adj: list[int], n: int) -> int:
    best = 1
    for start in range(n):
        clique, cand = 1, adj[start]
        while cand:
            v = (cand & -cand).bit_length() - 1
            clique += 1
            cand &= adj[v]
        best = max(best, clique)
    return best


def _greedy_colors(adj: list[int], n: int) -> int:
    color = [-1] * n
    for v in range(n):
        used = {color[u] for u in range(v) if adj[v] >> u & 1}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return max(color) + 1


def _colorable(adj: list[int], n: int, k: int, budget: list[int]) -> bool:
    color = [-1] * n

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchLimitError("chromatic search exceeded its node budget")
        taken = {color[u] for u in range(v) if adj[v] >> u & 1}
        # a fresh colour is interchangeable with any other fresh one
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            color[v] = c
            if place(v + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact chromatic number by backtracking between a clique and a greedy bound."""
    if g.n > MAX_VERTICES:
        raise SearchLimitError(f"exact colouring is limited to {MAX_VERTICES} vertices")
    if g.n == 0:
        return 0
    if not g.edges:
        return 1
    adj = _masks(g)
    lower = _greedy_clique(adj, g.n)
    upper = _greedy_colors(adj, g.n)
    counter = [budget]
    for k in range(lower, upper):
        if _colorable(adj, g.n, k, counter):
            return k
    return upper


def is_color_critical(
    g: Graph, k_plus_1: int, budget: int = DEFAULT_BUDGET
) -> tuple[bool, tuple[int, int] | None]:
    """Whether ``chi(g) == k_plus_1`` and deleting some edge drops it by one.

    Returns the first such edge in canonical order as the witness.
    """
    if chromatic_number(g, budget) != k_plus_1:
        return False, None
    for e in g.edges:
        if chromatic_number(g.remove_edge(e), budget) == k_plus_1 - 1:
            return True, e
    return False, None


def turan_part_sizes(n: int, k: int) -> list[int]:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    q, rem = divmod(n, k)
    return [q + 1] * rem + [q] * (k - rem)


def _check_parts(parts: Sequence[int]) -> list[int]:
    sizes = [int(s) for s in parts]
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be a nonempty list of positive integers: {parts!r}")
    return sizes


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """K(s1, ..., sk) with parts as consecutive index blocks in the given order."""
    sizes = _check_parts(parts)
    label, start = [], 0
    for i, s in enumerate(sizes):
        label.extend([i] * s)
        start += s
    edges = [(a, b) for a, b in combinations(range(start), 2) if label[a] != label[b]]
    return Graph(start, tuple(edges))


def complete_multipartite_plus(parts: Sequence[int]) -> Graph:
    """K(s1, ..., sk) plus an edge joining the first two vertices of the first part."""
    sizes = _check_parts(parts)
    if sizes[0] < 2:
        raise ValueError("the first part needs at least two vertices")
    g = complete_multipartite(sizes)
    return Graph(g.n, g.edges + ((0, 1),))


def turan_graph(n: int, k: int) -> Graph:
    return complete_multipartite(turan_part_sizes(n, k))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))
