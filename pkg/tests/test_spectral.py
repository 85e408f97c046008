import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperturan.chromatic import complete_graph, cycle_graph, turan_graph
from hyperturan.harness import random_corpus
from hyperturan.hypercore import Hypergraph, degree_profile
from hyperturan.spectral import (
    DisconnectedError,
    apply_adjacency,
    graph_spectral_radius,
    rayleigh,
    residual,
    spectral_radius,
)

from oracles import dense_adjacency_tensor, dense_contract, graph_rho, rayleigh_max

TOL = 1e-10
CORPUS = random_corpus(40, seed=11)


def test_apply_single_edge():
    h = Hypergraph(3, 3, ((0, 1, 2),))
    np.testing.assert_allclose(apply_adjacency(h, np.ones(3)), [1, 1, 1])


def test_apply_fano_all_ones(fano):
    np.testing.assert_allclose(apply_adjacency(fano, np.ones(7)), [3] * 7)


def test_apply_zero_vector(sts9):
    assert not apply_adjacency(sts9, np.zeros(9)).any()


def test_apply_dimension_mismatch(fano):
    with pytest.raises(ValueError):
        apply_adjacency(fano, np.ones(6))


@pytest.mark.parametrize("inst", CORPUS[:8], ids=lambda i: i.name)
def test_apply_matches_dense_tensor(inst):
    h = inst.hypergraph
    t = dense_adjacency_tensor(h.n, h.r, h.edges)
    x = np.random.default_rng(3).random(h.n)
    np.testing.assert_allclose(apply_adjacency(h, x), dense_contract(t, x), rtol=1e-12)


def test_apply_with_zero_entries_matches_dense():
    h = Hypergraph(6, 4, ((0, 1, 2, 3), (0, 4, 5, 3)))
    x = np.array([0.0, 0.5, 2.0, 0.0, 1.5, 3.0])
    t = dense_adjacency_tensor(6, 4, h.edges)
    np.testing.assert_allclose(apply_adjacency(h, x), dense_contract(t, x))


def test_rayleigh_examples(fano):
    single = Hypergraph(3, 3, ((0, 1, 2),))
    assert rayleigh(single, np.full(3, 3 ** (-1 / 3))) == pytest.approx(1.0, abs=1e-14)
    assert rayleigh(fano, np.full(7, 7 ** (-1 / 3))) == pytest.approx(3.0, abs=1e-14)


def test_rayleigh_on_one_edge_is_below_rho(fano):
    x = np.zeros(7)
    x[list(fano.edges[0])] = 3 ** (-1 / 3)
    assert rayleigh(fano, x) == pytest.approx(1.0)
    assert rayleigh(fano, x) <= spectral_radius(fano).rho


def test_rayleigh_rejects_non_unit(fano):
    with pytest.raises(ValueError):
        rayleigh(fano, np.ones(7))


def test_known_radii(fano, sts9):
    assert spectral_radius(fano).rho == pytest.approx(3, abs=TOL)
    assert spectral_radius(sts9).rho == pytest.approx(4, abs=TOL)
    for r in (2, 3, 5):
        assert spectral_radius(Hypergraph(r, r, (tuple(range(r)),))).rho == pytest.approx(1, abs=TOL)


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_graph(4), 3.0),
        (cycle_graph(5), 2.0),
        (turan_graph(4, 2), graph_rho(4, turan_graph(4, 2).edges)),
    ],
)
def test_graph_radius(g, expected):
    assert graph_spectral_radius(g).rho == pytest.approx(expected, abs=TOL)


def test_loose_path_matches_rayleigh_oracle(loose_path):
    rep = spectral_radius(loose_path)
    assert rep.converged
    assert rep.rho == pytest.approx(rayleigh_max(5, 3, loose_path.edges), abs=1e-7)


@pytest.mark.parametrize("inst", CORPUS[:6], ids=lambda i: i.name)
def test_radius_matches_rayleigh_oracle(inst):
    h = inst.hypergraph
    assert spectral_radius(h).rho == pytest.approx(rayleigh_max(h.n, h.r, h.edges), abs=1e-6)


def test_residual_examples(fano):
    x = np.full(7, 7 ** (-1 / 3))
    assert residual(fano, 3.0, x) <= 1e-12
    assert residual(Hypergraph(3, 3, ((0, 1, 2),)), 1.0, np.full(3, 3 ** (-1 / 3))) <= 1e-15
    assert residual(fano, 2.9, x) == pytest.approx(0.1 * 7 ** (-2 / 3))


def test_disconnected_rejected():
    with pytest.raises(DisconnectedError):
        spectral_radius(Hypergraph(6, 3, ((0, 1, 2), (3, 4, 5))))


def test_not_converged_is_reported(loose_path):
    rep = spectral_radius(loose_path, tol=1e-14, max_iter=3)
    assert not rep.converged
    assert rep.iterations == 3


@pytest.mark.parametrize("inst", CORPUS, ids=lambda i: i.name)
def test_report_invariants(inst):
    h = inst.hypergraph
    rep = spectral_radius(h, TOL)
    prof = degree_profile(h)
    assert rep.converged
    assert np.sum(rep.perron**h.r) ** (1 / h.r) == pytest.approx(1, abs=1e-12)
    assert (rep.perron > 0).all()
    assert rep.lower <= rep.rho <= rep.upper
    assert rep.upper - rep.lower <= TOL
    assert rep.residual <= 10 * TOL
    assert float(prof.average) <= rep.rho + TOL
    assert rep.rho <= prof.max + TOL
    assert rep.rho >= h.r * h.m / h.n - TOL
    if prof.is_regular:
        assert rep.rho == pytest.approx(prof.max, abs=TOL)


@pytest.mark.parametrize("inst", CORPUS[:10], ids=lambda i: i.name)
def test_rayleigh_dominance(inst):
    h = inst.hypergraph
    rho = spectral_radius(h, TOL).rho
    rng = np.random.default_rng(0)
    for _ in range(100):
        x = rng.random(h.n)
        x /= np.sum(x**h.r) ** (1 / h.r)
        assert rayleigh(h, x) <= rho + TOL


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 9), st.data())
def test_two_uniform_agrees_with_dense_eigensolve(n, data):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs), min_size=n - 1))
    # a spanning path keeps the graph connected
    edges = set(chosen) | {(i, i + 1) for i in range(n - 1)}
    h = Hypergraph(n, 2, tuple(edges))
    via_h = spectral_radius(h, TOL).rho
    via_g = graph_spectral_radius(h.to_graph(), TOL).rho
    assert abs(via_h - via_g) <= 2 * TOL
    assert via_g == pytest.approx(graph_rho(n, edges), abs=1e-9)


def test_edge_count_bound_is_tight_when_regular(td33):
    h, _ = td33
    assert spectral_radius(h).rho == pytest.approx(h.r * h.m / h.n, abs=TOL)
    assert math.isclose(h.r * h.m / h.n, 3)
