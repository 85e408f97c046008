"""Shadow graphs and the hypergraph-to-shadow spectral transfer bounds."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chromatic import turan_graph
from .designs import verify_design
from .hypercore import Graph, Hypergraph, degree_profile, is_connected, is_linear
from .spectral import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    DisconnectedError,
    graph_spectral_radius,
    spectral_radius,
)

__all__ = [
    "EQUALITY_TOL",
    "NotLinearError",
    "ShadowComparison",
    "GlobalBound",
    "TuranBound",
    "shadow",
    "lconn_check",
    "global_bound_check",
    "turan_bound",
    "turan_bound_check",
]

# two independent iterations each carry ``tol`` error, so equality is judged coarser
EQUALITY_TOL = 1e-6


class NotLinearError(ValueError):
    pass


def shadow(h: Hypergraph) -> Graph:
    """Replace every edge by a clique on its vertices."""
    pairs = {p for e in h.edges for p in combinations(e, 2)}
    return Graph(h.n, tuple(pairs))


def _require_linear_connected(h: Hypergraph) -> None:
    if not is_linear(h):
        raise NotLinearError("hypergraph is not linear")
    if not is_connected(h):
        raise DisconnectedError("hypergraph is not connected")


@dataclass(frozen=True)
class ShadowComparison:
    rho_h: float
    rho_shadow_scaled: float
    gap: float
    equality: bool
    regular: bool
    tol: float

    @property
    def holds(self) -> bool:
        return self.gap >= -max(self.tol, EQUALITY_TOL) and self.equality == self.regular


def lconn_check(
    h: Hypergraph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> ShadowComparison:
    """Compare ``rho(H)`` with ``rho(shadow(H)) / (r-1)``.

    The gap is never negative for a connected linear hypergraph and vanishes
    exactly when ``H`` is regular; ``holds`` reports whether both are observed.
    """
    _require_linear_connected(h)
    rho_h = spectral_radius(h, tol, max_iter).rho
    rho_s = graph_spectral_radius(shadow(h), tol, max_iter).rho / (h.r - 1)
    gap = rho_s - rho_h
    return ShadowComparison(
        rho_h=rho_h,
        rho_shadow_scaled=rho_s,
        gap=gap,
        equality=abs(gap) <= EQUALITY_TOL,
        regular=degree_profile(h).is_regular,
        tol=tol,
    )


@dataclass(frozen=True)
class GlobalBound:
    rho: float
    bound: float
    is_design: bool
    tol: float

    @property
    def equality(self) -> bool:
        return abs(self.rho - self.bound) <= EQUALITY_TOL

    @property
    def holds(self) -> bool:
        return self.rho <= self.bound + self.tol and self.is_design == self.equality


def global_bound_check(
    h: Hypergraph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> GlobalBound:
    """``rho(H) <= (n-1)/(r-1)``, tight exactly on 2-(n,r,1) designs."""
    _require_linear_connected(h)
    rho = spectral_radius(h, tol, max_iter).rho
    return GlobalBound(rho, (h.n - 1) / (h.r - 1), verify_design(h), tol)


@dataclass(frozen=True)
class TuranBound:
    k: int
    n: int
    rho: float
    bound: float
    divisible: bool
    tol: float

    @property
    def equality(self) -> bool:
        return abs(self.rho - self.bound) <= self.tol

    @property
    def holds(self) -> bool:
        return self.rho <= self.bound + self.tol and self.equality == self.divisible


def turan_bound(k: int, n: int, tol: float = 1e-8, max_iter: int = DEFAULT_MAX_ITER) -> TuranBound:
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    # iterate well below the comparison tolerance so it is not eaten by solver error
    rho = graph_spectral_radius(turan_graph(n, k), min(tol, DEFAULT_TOL) / 10, max_iter).rho
    return TuranBound(k, n, rho, n * (1 - 1 / k), n % k == 0, tol)


def turan_bound_check(k: int, n: int, tol: float = 1e-8) -> bool:
    return turan_bound(k, n, tol).holds
