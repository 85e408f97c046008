from itertools import combinations

import numpy as np
import pytest

from hyperturan.designs import (
    DesignSpec,
    GroupDivision,
    UnsupportedDesignError,
    cond1,
    cond2,
    gdd,
    read_groups,
    steiner_triple_system,
    transversal_design,
    verify_design,
    verify_gdd,
    write_groups,
)
from hyperturan.hypercore import Hypergraph, degree_profile, is_connected, is_linear

from oracles import pair_cover_matrix


def brute_is_design(h):
    cover = pair_cover_matrix(h.n, h.edges)
    return all(cover[a, b] == 1 for a, b in combinations(range(h.n), 2))


def brute_is_gdd(h, groups):
    cover = pair_cover_matrix(h.n, h.edges)
    lab = groups.labels()
    return all(
        cover[a, b] == (0 if lab[a] == lab[b] else 1) for a, b in combinations(range(h.n), 2)
    ) and all(len({lab[v] for v in e}) == h.r for e in h.edges)


@pytest.mark.parametrize("n, r, expected", [(7, 3, True), (8, 3, False), (13, 4, True), (9, 3, True), (16, 4, True)])
def test_cond1(n, r, expected):
    assert cond1(n, r) is expected


@pytest.mark.parametrize("m, k, r, expected", [(3, 3, 3, True), (2, 3, 3, True), (1, 4, 3, False), (5, 4, 4, True)])
def test_cond2(m, k, r, expected):
    assert cond2(m, k, r) is expected


def test_cond_preconditions():
    with pytest.raises(ValueError):
        cond1(2, 3)
    with pytest.raises(ValueError):
        cond2(2, 2, 3)


def test_cond1_matches_residues():
    for n in range(3, 1001):
        assert cond1(n, 3) == (n % 6 in (1, 3))


@pytest.mark.parametrize("n", [n for n in range(3, 100) if n % 6 in (1, 3)])
def test_steiner_triple_systems(n):
    h = steiner_triple_system(n)
    assert h.m == n * (n - 1) // 6
    assert brute_is_design(h) and verify_design(h)
    assert is_linear(h) and is_connected(h)
    assert degree_profile(h).degrees == ((n - 1) // 2,) * n
    assert steiner_triple_system(n) == h


@pytest.mark.parametrize("n", [0, 2, 4, 5, 8, 10, 11, 12, 14])
def test_sts_unsupported(n):
    with pytest.raises(UnsupportedDesignError):
        steiner_triple_system(n)


def test_fano_shape():
    h = steiner_triple_system(7)
    assert h.m == 7 and degree_profile(h).max == 3


@pytest.mark.parametrize("r, m", [(3, 3), (3, 5), (3, 7), (4, 5), (5, 5), (4, 7), (2, 3), (6, 7)])
def test_transversal_designs(r, m):
    h, groups = transversal_design(r, m)
    assert (h.n, h.m) == (r * m, m * m)
    assert brute_is_gdd(h, groups) and verify_gdd(h, groups)
    assert degree_profile(h).degrees == (m,) * (r * m)


def test_td33_is_a_latin_square():
    h, groups = transversal_design(3, 3)
    square = np.zeros((3, 3), dtype=int)
    for e in h.edges:
        row, col, sym = e[0], e[1] - 3, e[2] - 6
        square[row, col] = sym
    for i in range(3):
        assert sorted(square[i]) == [0, 1, 2] and sorted(square[:, i]) == [0, 1, 2]


def test_transversal_errors():
    with pytest.raises(UnsupportedDesignError):
        transversal_design(4, 3)
    with pytest.raises(UnsupportedDesignError):
        transversal_design(3, 4)


@pytest.mark.parametrize(
    "m, k, r", [(3, 3, 3), (2, 4, 2), (1, 7, 3), (5, 3, 3), (1, 9, 3), (4, 3, 2), (7, 4, 4), (1, 5, 2)]
)
def test_gdd_families(m, k, r):
    h, groups = gdd(m, k, r)
    assert (groups.m, groups.k) == (m, k)
    assert verify_gdd(h, groups) and brute_is_gdd(h, groups)
    assert is_linear(h) and is_connected(h)
    deg = m * (k - 1) // (r - 1)
    assert degree_profile(h).degrees == (deg,) * (m * k)
    assert h.m * r * (r - 1) == m * m * k * (k - 1)
    assert gdd(m, k, r) == (h, groups)


def test_gdd_specific_examples(fano):
    h, _ = gdd(3, 3, 3)
    assert h == transversal_design(3, 3)[0]
    h, _ = gdd(2, 4, 2)
    assert degree_profile(h).max == 6
    h, groups = gdd(1, 7, 3)
    assert h == fano and all(len(g) == 1 for g in groups.groups)


@pytest.mark.parametrize("m, k, r", [(4, 4, 4), (2, 5, 3), (1, 8, 3), (3, 5, 3)])
def test_gdd_unsupported(m, k, r):
    with pytest.raises(UnsupportedDesignError):
        gdd(m, k, r)


def test_verify_negative_cases(fano):
    assert verify_design(fano)
    assert not verify_design(Hypergraph(7, 3, fano.edges[1:]))
    h, groups = transversal_design(3, 3)
    assert verify_gdd(h, groups)
    assert not verify_gdd(Hypergraph(9, 3, h.edges[1:]), groups)
    assert not verify_gdd(h, GroupDivision(((0, 3, 6), (1, 4, 7), (2, 5, 8))))


def test_group_division_invariants_and_io():
    gd = GroupDivision.uniform(3, 3)
    assert read_groups(write_groups(gd)) == gd
    assert write_groups(gd).splitlines()[0] == "0 1 2"
    with pytest.raises(ValueError):
        GroupDivision(((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        GroupDivision(((0, 1), (2,)))


def test_design_spec_gate():
    assert DesignSpec("steiner", 7, 3).admissible()
    assert not DesignSpec("steiner", 8, 3).admissible()
    assert DesignSpec("gdd", 9, 3, m=3, k=3).admissible()
