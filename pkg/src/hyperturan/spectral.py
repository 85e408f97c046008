"""Adjacency-tensor spectral radius of uniform hypergraphs.

The adjacency tensor puts weight ``1/(r-1)!`` on every ordering of every
edge, so contracting it with ``x`` along ``r-1`` modes gives, at vertex ``i``,
the sum over edges through ``i`` of the product of the other ``r-1`` entries.
The spectral radius is computed by a shifted NQZ-type power iteration whose
min/max eigen-ratios bracket the answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hypercore import Graph, Hypergraph, is_connected

__all__ = [
    "DisconnectedError",
    "SpectralReport",
    "apply_adjacency",
    "rayleigh",
    "residual",
    "spectral_radius",
    "graph_spectral_radius",
    "DEFAULT_TOL",
    "DEFAULT_MAX_ITER",
]

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000
SHIFT = 1.0
_UNDERFLOW = 1e-300


class DisconnectedError(ValueError):
    """The input is not connected, so it has no unique Perron vector."""


@dataclass(frozen=True)
class SpectralReport:
    rho: float
    perron: np.ndarray
    residual: float
    iterations: int
    converged: bool
    lower: float
    upper: float


def _edge_array(h: Hypergraph) -> np.ndarray:
    if not h.edges:
        return np.zeros((0, h.r), dtype=np.intp)
    return np.asarray(h.edges, dtype=np.intp)


def _others_product(vals: np.ndarray) -> np.ndarray:
    """For each row, the product of all entries except the one in each column.

    Prefix/suffix products avoid division, so zero entries are handled exactly.
    """
    m, r = vals.shape
    prefix = np.ones((m, r))
    suffix = np.ones((m, r))
    for j in range(1, r):
        prefix[:, j] = prefix[:, j - 1] * vals[:, j - 1]
        suffix[:, r - 1 - j] = suffix[:, r - j] * vals[:, r - j]
    return prefix * suffix


def _contract(edges: np.ndarray, n: int, x: np.ndarray) -> np.ndarray:
    if edges.shape[0] == 0:
        return np.zeros(n)
    contrib = _others_product(x[edges])
    return np.bincount(edges.ravel(), weights=contrib.ravel(), minlength=n)


def apply_adjacency(h: Hypergraph, x) -> np.ndarray:
    """Return ``A(H) x^{r-1}`` as a length-``n`` vector."""
    x = np.asarray(x, dtype=float)
    if x.shape != (h.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({h.n},)")
    return _contract(_edge_array(h), h.n, x)


def _r_norm(x: np.ndarray, r: int) -> float:
    return float(np.sum(np.abs(x) ** r) ** (1.0 / r))


def rayleigh(h: Hypergraph, x) -> float:
    """``r * sum_e prod_{v in e} x_v`` for a unit r-norm vector ``x``."""
    x = np.asarray(x, dtype=float)
    if x.shape != (h.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({h.n},)")
    norm = _r_norm(x, h.r)
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"vector must have unit {h.r}-norm, got {norm!r}")
    edges = _edge_array(h)
    if edges.shape[0] == 0:
        return 0.0
    return float(h.r * np.sum(np.prod(x[edges], axis=1)))


def residual(h: Hypergraph, rho: float, x) -> float:
    x = np.asarray(x, dtype=float)
    ax = apply_adjacency(h, x)
    return float(np.max(np.abs(ax - rho * x ** (h.r - 1))))


def spectral_radius(
    h: Hypergraph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> SpectralReport:
    """Spectral radius and Perron vector of a connected hypergraph.

    Iterates ``y = A x^{r-1} + x^{[r-1]}``, ``x <- y^{[1/(r-1)]}`` normalised
    to unit r-norm. With ``x > 0`` the ratios ``y_i / x_i^{r-1}`` bracket
    ``rho + 1``; iteration stops once the bracket is narrower than ``tol``.
    A report with ``converged=False`` is returned when ``max_iter`` runs out.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if h.m == 0:
        raise ValueError("hypergraph has no edges")
    if not is_connected(h):
        raise DisconnectedError("spectral_radius needs a connected hypergraph")

    r, n = h.r, h.n
    edges = _edge_array(h)
    x = np.full(n, n ** (-1.0 / r))
    lower, upper = 0.0, math.inf
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        xp = x ** (r - 1)
        y = _contract(edges, n, x) + SHIFT * xp
        ratios = y / xp
        lower, upper = float(ratios.min()), float(ratios.max())
        if upper - lower < tol:
            converged = True
            break
        x = y ** (1.0 / (r - 1))
        x /= _r_norm(x, r)
        if x.min() < _UNDERFLOW:
            x = np.maximum(x, _UNDERFLOW)
            x /= _r_norm(x, r)

    rho = 0.5 * (lower + upper) - SHIFT
    return SpectralReport(
        rho=rho,
        perron=x,
        residual=residual(h, rho, x),
        iterations=it,
        converged=converged,
        lower=lower - SHIFT,
        upper=upper - SHIFT,
    )


def graph_spectral_radius(
    g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> SpectralReport:
    return spectral_radius(g.to_hypergraph(), tol, max_iter)
