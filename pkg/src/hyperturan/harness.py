"""Random linear hypergraphs and the bound-checking suites run over a corpus.

Every check produces a :class:`VerificationReport` whose pass flag is
computed from ``measured``, ``bound``, ``tolerance`` and the relation alone.
Reports are sorted by ``(theorem_id, instance)`` before they are returned, so
the output does not depend on how many worker processes ran the corpus.
"""

from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Literal

from .chromatic import complete_graph, path_graph
from .designs import GroupDivision, gdd, is_prime, steiner_triple_system, transversal_design, verify_design, verify_gdd
from .expansion import (
    GreedyFailure,
    NoWitnessError,
    contains_expansion,
    expand,
    greedy_shadow_embedding,
    multipartite_pattern,
    verify_embedding,
)
from .hypercore import Graph, Hypergraph, degree_profile, is_connected, is_linear, validate
from .shadow import EQUALITY_TOL, graph_spectral_radius, shadow, turan_bound
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, spectral_radius

__all__ = [
    "Relation",
    "VerificationReport",
    "RECORD_FIELDS",
    "CorpusConfig",
    "Instance",
    "random_linear_hypergraph",
    "random_corpus",
    "design_corpus",
    "verify_instance",
    "verify_turan",
    "verify_containment",
    "GREEDY_PATTERNS",
    "verify_all",
    "format_records",
    "format_table",
    "any_failed",
]

log = logging.getLogger(__name__)

Relation = Literal["le", "ge", "eq", "le-tight"]

RECORD_FIELDS = (
    "theorem_id",
    "instance",
    "relation",
    "measured",
    "bound",
    "tolerance",
    "expect_tight",
    "pass",
    "runtime",
)

# bound checks whose two sides come from separate iterations use the coarse tolerance
CHECK_TOL = EQUALITY_TOL


@dataclass(frozen=True)
class VerificationReport:
    """One measured quantity checked against one bound.

    ``le-tight`` means ``measured <= bound + tolerance`` and additionally that
    ``|measured - bound| <= tolerance`` exactly when ``expect_tight``.
    """

    theorem_id: str
    instance: str
    relation: Relation
    measured: float
    bound: float
    tolerance: float
    expect_tight: bool | None = None
    runtime: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        m, b, tol = self.measured, self.bound, self.tolerance
        if self.relation == "le":
            return m <= b + tol
        if self.relation == "ge":
            return m >= b - tol
        if self.relation == "eq":
            return abs(m - b) <= tol
        if self.relation == "le-tight":
            return m <= b + tol and (abs(m - b) <= tol) == bool(self.expect_tight)
        raise ValueError(f"unknown relation {self.relation!r}")

    def sort_key(self):
        return (self.theorem_id, self.instance)


def any_failed(reports: Iterable[VerificationReport]) -> bool:
    return any(not rep.passed for rep in reports)


# -- random instances -------------------------------------------------------


def random_linear_hypergraph(
    n: int, r: int, target_edges: int, seed: int, failure_budget: int = 10_000
) -> Hypergraph:
    """Rejection-sample random r-sets, keeping those that preserve linearity.

    Stops after ``target_edges`` acceptances or ``failure_budget`` rejections;
    in the latter case the result has fewer edges than asked for.
    """
    if not 2 <= r <= n:
        raise ValueError(f"need 2 <= r <= n, got n={n}, r={r}")
    cap = n * (n - 1) // (r * (r - 1))
    if not 0 <= target_edges <= cap:
        raise ValueError(f"target_edges must lie in [0, {cap}] for n={n}, r={r}")
    rng = random.Random(seed)
    covered: set[tuple[int, int]] = set()
    edges: list[tuple[int, ...]] = []
    failures = 0
    while len(edges) < target_edges and failures < failure_budget:
        e = tuple(sorted(rng.sample(range(n), r)))
        pairs = list(combinations(e, 2))
        if any(p in covered for p in pairs):
            failures += 1
            continue
        covered.update(pairs)
        edges.append(e)
    if len(edges) < target_edges:
        log.info("random_linear_hypergraph(n=%d, r=%d, seed=%d): %d of %d edges", n, r, seed, len(edges), target_edges)
    return Hypergraph(n, r, tuple(edges))


@dataclass(frozen=True)
class Instance:
    name: str
    hypergraph: Hypergraph
    groups: GroupDivision | None = None
    # group type (m, k) when the instance is a GDD
    gdd_type: tuple[int, int] | None = None


@dataclass(frozen=True)
class CorpusConfig:
    random_count: int = 200
    uniformities: tuple[int, ...] = (3, 4)
    max_n: int = 15
    design_max_n: int = 30
    seed: int = 0


def random_corpus(count: int, uniformities=(3, 4), max_n: int = 15, seed: int = 0) -> list[Instance]:
    """``count`` connected linear hypergraphs, drawn deterministically from ``seed``."""
    rng = random.Random(seed)
    out: list[Instance] = []
    while len(out) < count:
        r = rng.choice(list(uniformities))
        n = rng.randint(2 * r - 1, max_n)
        cap = n * (n - 1) // (r * (r - 1))
        lo = -(-(n - 1) // (r - 1))
        if lo > cap:
            continue
        inst_seed = rng.randrange(2**31)
        h = random_linear_hypergraph(n, r, rng.randint(lo, cap), inst_seed)
        if h.m and is_connected(h):
            out.append(Instance(f"random:n={n},r={r},seed={inst_seed}", h))
    return out


def design_corpus(max_n: int = 30) -> list[Instance]:
    out = []
    for n in range(3, max_n + 1):
        if n % 6 in (1, 3):
            out.append(Instance(f"sts:n={n:02d}", steiner_triple_system(n)))
    for r in range(3, max_n + 1):
        for m in range(r, max_n // r + 1):
            if is_prime(m):
                h, groups = transversal_design(r, m)
                out.append(Instance(f"td:r={r},m={m}", h, groups, (m, r)))
    for k in range(2, 6):
        for m in range(1, max_n // k + 1):
            h, groups = gdd(m, k, 2)
            out.append(Instance(f"gdd:m={m},k={k},r=2", h, groups, (m, k)))
    return out


# -- per-instance suites ----------------------------------------------------


def _timed(fn: Callable[[], list[VerificationReport]]) -> list[VerificationReport]:
    t0 = time.perf_counter()
    reps = fn()
    dt = time.perf_counter() - t0
    return [VerificationReport(**{**rep.__dict__, "runtime": dt}) for rep in reps]


def verify_instance(
    inst: Instance, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> list[VerificationReport]:
    """Run every applicable bound on one hypergraph."""
    return _timed(lambda: _verify_instance(inst, tol, max_iter))


def _verify_instance(inst: Instance, tol: float, max_iter: int) -> list[VerificationReport]:
    h, name = inst.hypergraph, inst.name
    R = lambda tid, rel, meas, bound, t, tight=None: VerificationReport(  # noqa: E731
        tid, name, rel, float(meas), float(bound), t, tight
    )
    ok_struct = validate(h).ok and is_linear(h) and is_connected(h) and h.m > 0
    reports = [R("precondition-linear-connected", "eq", float(ok_struct), 1.0, 0.0)]
    if not ok_struct:
        return reports

    n, r, m = h.n, h.r, h.m
    prof = degree_profile(h)
    design = verify_design(h)
    rep = spectral_radius(h, tol, max_iter)
    rho = rep.rho
    rho_sh = graph_spectral_radius(shadow(h), tol, max_iter).rho / (r - 1)

    reports += [
        R("spectral-converged", "eq", float(rep.converged), 1.0, 0.0),
        R("eigen-residual", "le", rep.residual, 0.0, 10 * tol),
        R("degree-sandwich-lower", "ge", rho, float(prof.average), CHECK_TOL),
        R("degree-sandwich-upper", "le", rho, prof.max, CHECK_TOL),
        R("edge-count-lower", "ge", rho, r * m / n, CHECK_TOL),
        R("shadow-transfer", "le-tight", rho, rho_sh, CHECK_TOL, prof.is_regular),
        R("global-bound", "le-tight", rho, (n - 1) / (r - 1), CHECK_TOL, design),
        R("edge-cap", "le-tight", m, n * (n - 1) / (r * (r - 1)), 0.0, design),
        R("shadow-edge-count", "eq", shadow(h).m, m * r * (r - 1) // 2, 0.0),
    ]
    if prof.is_regular:
        reports.append(R("regular-equality", "eq", rho, prof.max, CHECK_TOL))
    if inst.groups is not None and inst.gdd_type is not None:
        mm, k = inst.gdd_type
        reports += [
            R("gdd-valid", "eq", float(verify_gdd(h, inst.groups)), 1.0, 0.0),
            R("multipartite-equality", "eq", rho, n * (k - 1) / (k * (r - 1)), 1e-8),
            R("gdd-edge-count", "eq", m, n * n * (k - 1) / (k * r * (r - 1)), 0.0),
        ]
        if k == r >= 3:
            # k-partite shadow can hold no K_{k+1}, so no expansion of it either
            found = contains_expansion(h, complete_graph(k + 1), r) is not None
            reports.append(R("expansion-free", "eq", float(found), 0.0, 0.0))
    return reports


def verify_turan(k: int, n: int, tol: float = 1e-8) -> list[VerificationReport]:
    def run():
        tb = turan_bound(k, n, tol)
        return [
            VerificationReport(
                "turan-spectral", f"turan:k={k},n={n:02d}", "le-tight", tb.rho, tb.bound, tol, tb.divisible
            )
        ]

    return _timed(run)


# (pattern name, graph, k, l, plus) with the pattern inside K_k(l,...,l) (or its plus variant)
GREEDY_PATTERNS: tuple[tuple[str, Graph, int, int, bool], ...] = (
    ("K3", complete_graph(3), 3, 1, False),
    ("K3", complete_graph(3), 2, 2, True),
    ("P3", path_graph(3), 2, 2, False),
    ("K4", complete_graph(4), 4, 1, False),
)


def verify_containment(inst: Instance) -> list[VerificationReport]:
    """Every greedy lift must be confirmed by exact search and by re-verification."""

    def run():
        h = inst.hypergraph
        out = []
        for pname, pattern, k, l, plus in GREEDY_PATTERNS:
            tid = f"greedy-sound:{pname}:k={k},l={l}{',plus' if plus else ''}"
            try:
                res = greedy_shadow_embedding(h, k, l, plus)
            except NoWitnessError:
                continue
            if isinstance(res, GreedyFailure):
                continue
            lifted = expand(multipartite_pattern(k, l, plus), h.r)
            exact = contains_expansion(h, pattern, h.r)
            exact_ok = exact is not None and verify_embedding(h, expand(pattern, h.r), exact)
            ok = verify_embedding(h, lifted, res) and exact_ok
            out.append(VerificationReport(tid, inst.name, "eq", float(ok), 1.0, 0.0))
        return out

    return _timed(run)


def _run_task(task):
    kind, args = task
    if kind == "instance":
        return verify_instance(*args)
    if kind == "turan":
        return verify_turan(*args)
    return verify_containment(*args)


def verify_all(
    config: CorpusConfig | None = None,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    jobs: int = 1,
) -> list[VerificationReport]:
    """Verify the design corpus, the seeded random corpus and the Turán graphs."""
    config = config or CorpusConfig()
    corpus = design_corpus(config.design_max_n) + random_corpus(
        config.random_count, config.uniformities, config.max_n, config.seed
    )
    tasks: list = [("instance", (inst, tol, max_iter)) for inst in corpus]
    tasks += [("turan", (k, n)) for k in range(2, 6) for n in range(k, 13)]
    tasks += [
        ("containment", (inst,))
        for inst in corpus
        if inst.hypergraph.n <= 12 and inst.hypergraph.r >= 3
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_task, tasks, chunksize=8))
    else:
        chunks = [_run_task(t) for t in tasks]
    reports = [rep for chunk in chunks for rep in chunk]
    return sorted(reports, key=VerificationReport.sort_key)


# -- output -----------------------------------------------------------------


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def format_records(reports: Iterable[VerificationReport], timing: bool = True) -> str:
    """Tab-separated records in :data:`RECORD_FIELDS` order, with a header row."""
    fields = RECORD_FIELDS if timing else RECORD_FIELDS[:-1]
    lines = ["\t".join(fields)]
    for rep in reports:
        row = [
            rep.theorem_id,
            rep.instance,
            rep.relation,
            _fmt(rep.measured),
            _fmt(rep.bound),
            _fmt(rep.tolerance),
            _fmt(rep.expect_tight),
            _fmt(rep.passed),
        ]
        if timing:
            row.append(f"{rep.runtime:.6f}")
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def format_table(reports: list[VerificationReport], timing: bool = True) -> str:
    head = ["theorem", "instance", "measured", "rel", "bound", "tol", "result"]
    if timing:
        head.append("time[s]")
    rows = []
    for rep in reports:
        rel = {"le": "<=", "ge": ">=", "eq": "==", "le-tight": "<=*"}[rep.relation]
        row = [
            rep.theorem_id,
            rep.instance,
            f"{rep.measured:.10g}",
            rel,
            f"{rep.bound:.10g}",
            f"{rep.tolerance:.0e}",
            "pass" if rep.passed else "FAIL",
        ]
        if timing:
            row.append(f"{rep.runtime:.3f}")
        rows.append(row)
    widths = [max(len(r[i]) for r in [head] + rows) for i in range(len(head))]
    out = ["  ".join(c.ljust(w) for c, w in zip(head, widths))]
    out.append("  ".join("-" * w for w in widths))
    out += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in rows]
    failed = sum(not rep.passed for rep in reports)
    out.append(f"{len(reports)} checks, {failed} failed")
    return "\n".join(out) + "\n"
