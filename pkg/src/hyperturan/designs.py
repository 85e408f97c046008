"""Steiner triple systems, transversal designs and group divisible designs.

Only index-one designs are built. Constructions are explicit and
deterministic; every constructor's output can be checked by brute-force pair
counting with :func:`verify_design` / :func:`verify_gdd`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from .chromatic import complete_multipartite
from .hypercore import Hypergraph

__all__ = [
    "UnsupportedDesignError",
    "GroupDivision",
    "DesignSpec",
    "cond1",
    "cond2",
    "is_prime",
    "steiner_triple_system",
    "transversal_design",
    "gdd",
    "pair_counts",
    "verify_design",
    "verify_gdd",
    "read_groups",
    "write_groups",
]


class UnsupportedDesignError(ValueError):
    """No construction is implemented for the requested parameters."""


@dataclass(frozen=True)
class GroupDivision:
    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        groups = tuple(sorted(tuple(sorted(g)) for g in self.groups))
        object.__setattr__(self, "groups", groups)
        if not groups or any(not g for g in groups):
            raise ValueError("groups must be nonempty")
        flat = sorted(v for g in groups for v in g)
        if flat != list(range(len(flat))):
            raise ValueError("groups must partition 0..n-1")
        if len({len(g) for g in groups}) != 1:
            raise ValueError("groups must all have the same size")

    @property
    def n(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def m(self) -> int:
        return len(self.groups[0])

    @property
    def k(self) -> int:
        return len(self.groups)

    def labels(self) -> list[int]:
        lab = [0] * self.n
        for i, g in enumerate(self.groups):
            for v in g:
                lab[v] = i
        return lab

    @classmethod
    def uniform(cls, m: int, k: int) -> "GroupDivision":
        return cls(tuple(tuple(range(i * m, (i + 1) * m)) for i in range(k)))


@dataclass(frozen=True)
class DesignSpec:
    kind: Literal["steiner", "transversal", "gdd"]
    n: int
    r: int
    m: int | None = None
    k: int | None = None
    mu: int = 1

    def admissible(self) -> bool:
        if self.kind == "steiner":
            return cond1(self.n, self.r)
        return self.m is not None and self.k is not None and cond2(self.m, self.k, self.r)


def cond1(n: int, r: int) -> bool:
    """Divisibility gate for a 2-(n, r, 1) design."""
    if not n >= r >= 2:
        raise ValueError(f"need n >= r >= 2, got n={n}, r={r}")
    return (n - 1) % (r - 1) == 0 and (n * (n - 1)) % (r * (r - 1)) == 0


def cond2(m: int, k: int, r: int) -> bool:
    """Divisibility gate for a GDD of type m^k with block size r and index 1."""
    if not 2 <= r <= k or m < 1:
        raise ValueError(f"need 2 <= r <= k and m >= 1, got m={m}, k={k}, r={r}")
    return (m * (k - 1)) % (r - 1) == 0 and (m * m * k * (k - 1)) % (r * (r - 1)) == 0


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _bose(n: int) -> list[tuple[int, int, int]]:
    # idempotent commutative quasigroup on Z_q, q odd: x o y = (x + y) / 2
    q = n // 3
    half = (q + 1) // 2

    def pt(x, i):
        return (i % 3) * q + x

    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(q)]
    for x, y in combinations(range(q), 2):
        z = ((x + y) * half) % q
        for i in range(3):
            triples.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return triples


def _skolem(n: int) -> list[tuple[int, int, int]]:
    # half-idempotent commutative quasigroup on Z_{2t}: relabelled addition table
    t = (n - 1) // 6
    q = 2 * t
    inf = n - 1

    def op(x, y):
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else t + s // 2

    def pt(x, i):
        return (i % 3) * q + x

    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            triples.append((inf, pt(x + t, i), pt(x, i + 1)))
    for x, y in combinations(range(q), 2):
        z = op(x, y)
        for i in range(3):
            triples.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return triples


def steiner_triple_system(n: int) -> Hypergraph:
    """STS(n) by Bose (n = 3 mod 6) or Skolem (n = 1 mod 6)."""
    if n < 3 or n % 6 not in (1, 3):
        raise UnsupportedDesignError(f"no Steiner triple system of order {n}")
    triples = _bose(n) if n % 6 == 3 else _skolem(n)
    return Hypergraph(n, 3, tuple(triples))


def transversal_design(r: int, m: int) -> tuple[Hypergraph, GroupDivision]:
    """TD(r, m) over the prime field Z_m.

    Group ``g`` holds vertices ``g*m .. g*m + m - 1``; block ``(i, j)`` meets
    group ``g`` at local index ``i + g*j mod m``. Differences ``g - h`` of
    group indices are units mod ``m`` because ``m`` is prime and ``m >= r``.
    """
    if r < 2:
        raise ValueError(f"block size must be at least 2, got {r}")
    if m < r:
        raise UnsupportedDesignError(f"transversal design needs m >= r (m={m}, r={r})")
    if not is_prime(m):
        raise UnsupportedDesignError(f"only prime orders are supported (m={m})")
    blocks = [
        tuple(g * m + (i + g * j) % m for g in range(r)) for i in range(m) for j in range(m)
    ]
    return Hypergraph(r * m, r, tuple(blocks)), GroupDivision.uniform(m, r)


def gdd(m: int, k: int, r: int) -> tuple[Hypergraph, GroupDivision]:
    """Group divisible design of type m^k, block size r, index 1.

    Supported families: block size 2 (complete k-partite graph), ``k == r``
    with ``m`` prime (transversal design), and ``r == 3, m == 1`` (Steiner
    triple system with singleton groups).
    """
    if m < 1 or k < 1:
        raise ValueError(f"need m, k >= 1, got m={m}, k={k}")
    if r == 2:
        if k < 2:
            raise UnsupportedDesignError("a GDD with block size 2 needs at least two groups")
        g = complete_multipartite([m] * k)
        return g.to_hypergraph(), GroupDivision.uniform(m, k)
    if k == r and is_prime(m) and m >= r:
        return transversal_design(r, m)
    if r == 3 and m == 1 and k % 6 in (1, 3):
        return steiner_triple_system(k), GroupDivision.uniform(1, k)
    raise UnsupportedDesignError(f"no construction for GDD type {m}^{k} with block size {r}")


def pair_counts(h: Hypergraph) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for e in h.edges:
        for p in combinations(e, 2):
            counts[p] = counts.get(p, 0) + 1
    return counts


def verify_design(h: Hypergraph) -> bool:
    """Every pair of points lies in exactly one block."""
    counts = pair_counts(h)
    return all(counts.get(p, 0) == 1 for p in combinations(range(h.n), 2))


def verify_gdd(h: Hypergraph, groups: GroupDivision) -> bool:
    if groups.n != h.n:
        return False
    lab = groups.labels()
    for e in h.edges:
        if len({lab[v] for v in e}) != len(e):
            return False
    counts = pair_counts(h)
    for p in combinations(range(h.n), 2):
        want = 0 if lab[p[0]] == lab[p[1]] else 1
        if counts.get(p, 0) != want:
            return False
    return True


def write_groups(groups: GroupDivision) -> str:
    return "".join(" ".join(map(str, g)) + "\n" for g in groups.groups)


def read_groups(text: str) -> GroupDivision:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            rows.append(tuple(int(tok) for tok in line.split()))
    return GroupDivision(tuple(rows))
