import math
from itertools import combinations

import pytest

from hyperturan.chromatic import complete_graph, turan_graph
from hyperturan.designs import gdd, transversal_design
from hyperturan.harness import random_corpus
from hyperturan.hypercore import Graph, Hypergraph, degree_profile
from hyperturan.shadow import (
    NotLinearError,
    global_bound_check,
    lconn_check,
    shadow,
    turan_bound,
    turan_bound_check,
)
from hyperturan.spectral import DisconnectedError, spectral_radius

from oracles import graph_rho

CORPUS = random_corpus(200, seed=0)


def test_shadow_examples(fano):
    assert shadow(Hypergraph(3, 3, ((0, 1, 2),))) == complete_graph(3)
    assert shadow(fano) == complete_graph(7)
    two = shadow(Hypergraph(6, 3, ((0, 1, 2), (3, 4, 5))))
    assert two.edges == ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5))


@pytest.mark.parametrize("inst", CORPUS[:50], ids=lambda i: i.name)
def test_shadow_edge_count_for_linear(inst):
    h = inst.hypergraph
    assert shadow(h).m == h.m * math.comb(h.r, 2)


def test_lconn_fano(fano):
    res = lconn_check(fano)
    assert res.rho_h == pytest.approx(3, abs=1e-9)
    assert res.rho_shadow_scaled == pytest.approx(3, abs=1e-9)
    assert res.equality and res.regular and res.holds


def test_lconn_single_edge():
    res = lconn_check(Hypergraph(3, 3, ((0, 1, 2),)))
    assert (res.rho_h, res.rho_shadow_scaled) == (pytest.approx(1), pytest.approx(1))
    assert res.equality and res.holds


def test_lconn_loose_path_has_strict_gap(loose_path):
    res = lconn_check(loose_path)
    assert degree_profile(loose_path).degrees == (1, 1, 2, 1, 1)
    # bowtie shadow: two triangles sharing a vertex
    bowtie = graph_rho(5, shadow(loose_path).edges)
    assert res.rho_shadow_scaled == pytest.approx(bowtie / 2, abs=1e-9)
    assert res.gap > 1e-3
    assert not res.equality and not res.regular and res.holds


def test_lconn_preconditions():
    with pytest.raises(NotLinearError):
        lconn_check(Hypergraph(4, 3, ((0, 1, 2), (0, 1, 3))))
    with pytest.raises(DisconnectedError):
        lconn_check(Hypergraph(6, 3, ((0, 1, 2), (3, 4, 5))))


@pytest.mark.parametrize("inst", CORPUS, ids=lambda i: i.name)
def test_transfer_and_global_bound_on_random_corpus(inst):
    h = inst.hypergraph
    res = lconn_check(h)
    assert res.gap >= -1e-6
    assert res.equality == res.regular
    glob = global_bound_check(h)
    assert glob.holds
    assert not glob.is_design or glob.equality


def test_global_bound_designs(fano, sts9):
    for h, value in ((fano, 3), (sts9, 4)):
        res = global_bound_check(h)
        assert res.rho == pytest.approx(value, abs=1e-9)
        assert res.bound == value
        assert res.is_design and res.equality and res.holds


def test_global_bound_loose_path(loose_path):
    res = global_bound_check(loose_path)
    assert res.rho < 2 and res.bound == 2
    assert not res.is_design and res.holds


@pytest.mark.parametrize(
    "k, n, expected",
    [
        (2, 4, 2.0),
        (3, 6, graph_rho(6, turan_graph(6, 3).edges)),
        (2, 5, math.sqrt(6)),
    ],
)
def test_turan_examples(k, n, expected):
    tb = turan_bound(k, n)
    assert tb.rho == pytest.approx(expected, abs=1e-9)
    assert turan_bound_check(k, n)


def test_turan_oracle_values():
    assert graph_rho(6, turan_graph(6, 3).edges) == pytest.approx(4)
    assert graph_rho(5, turan_graph(5, 2).edges) == pytest.approx(math.sqrt(6))


@pytest.mark.parametrize("m, k, r", [(3, 3, 3), (5, 3, 3), (7, 3, 3), (5, 4, 4), (2, 4, 2), (3, 5, 2)])
def test_gdd_spectral_and_edge_equalities(m, k, r):
    h, _ = gdd(m, k, r)
    n = m * k
    assert spectral_radius(h).rho == pytest.approx(n * (k - 1) / (k * (r - 1)), abs=1e-9)
    assert h.m * k * r * (r - 1) == n * n * (k - 1)


def test_shadow_of_transversal_design_is_complete_multipartite():
    h, groups = transversal_design(3, 5)
    lab = groups.labels()
    expected = Graph(15, tuple((a, b) for a, b in combinations(range(15), 2) if lab[a] != lab[b]))
    assert shadow(h) == expected
