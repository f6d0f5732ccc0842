import itertools

import numpy as np
import pytest

from equilines import (
    Graph,
    certify_equiangular,
    fano_28_lines,
    gram,
    graph_from_seidel,
    hexagon_lines,
    is_strongly_regular,
    lines_from_seidel,
    negate_line_vector,
    seidel_from_gram,
    seidel_from_graph,
    switch,
    switching_equivalent,
)
from conftest import random_equiangular_lines, random_seidel

HEX_SEIDEL = np.array([[0, 1, -1], [1, 0, 1], [-1, 1, 0]])


def _seidel_of(ls, tol=1e-10):
    cert = certify_equiangular(ls, tol)
    return seidel_from_gram(gram(ls), cert.alpha, tol)


def test_seidel_from_hexagon_gram():
    assert (_seidel_of(hexagon_lines()) == HEX_SEIDEL).all()


def test_seidel_from_fano_gram_matches_construction():
    ls = fano_28_lines()
    s = _seidel_of(ls)
    ints = np.rint(ls.vectors * np.sqrt(3.0)).astype(np.int64)
    expected = np.sign(ints @ ints.T)
    np.fill_diagonal(expected, 0)
    assert (s == expected).all()


def test_seidel_rejects_identity_gram():
    with pytest.raises(ValueError):
        seidel_from_gram(np.eye(3), 0.0, 1e-10)


def test_seidel_rejects_non_equiangular_gram():
    g = gram(hexagon_lines()).copy()
    g[0, 1] = g[1, 0] = 0.3
    with pytest.raises(ValueError, match="not equiangular"):
        seidel_from_gram(g, 0.5, 1e-10)


def test_graph_from_seidel_conventions():
    n = 4
    all_plus = np.ones((n, n), dtype=int) - np.eye(n, dtype=int)
    np.fill_diagonal(all_plus, 0)
    assert graph_from_seidel(all_plus).edges == frozenset()
    all_minus = -all_plus
    complete = graph_from_seidel(all_minus)
    assert len(complete.edges) == n * (n - 1) // 2
    assert graph_from_seidel(HEX_SEIDEL).edges == frozenset({(0, 2)})


def test_graph_seidel_round_trip():
    rng = np.random.default_rng(1)
    for _ in range(20):
        s = random_seidel(6, rng)
        assert (seidel_from_graph(graph_from_seidel(s)) == s).all()


def test_switch_identity_cases():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert switch(g, []) == g
    assert switch(g, range(4)) == g


def test_switch_star_cut():
    empty = Graph.from_edges(3, [])
    assert switch(empty, [0]).edges == frozenset({(0, 1), (0, 2)})


def test_switch_involution_and_composition():
    rng = np.random.default_rng(2)
    for _ in range(30):
        n = int(rng.integers(2, 9))
        g = graph_from_seidel(random_seidel(n, rng))
        a = [int(v) for v in rng.choice(n, size=rng.integers(0, n + 1), replace=False)]
        b = [int(v) for v in rng.choice(n, size=rng.integers(0, n + 1), replace=False)]
        assert switch(switch(g, a), a) == g
        sym_diff = set(a) ^ set(b)
        assert switch(switch(g, a), b) == switch(g, sym_diff)


def test_negate_line_vector_behaviour():
    ls = hexagon_lines()
    flipped = negate_line_vector(ls, 1)
    assert np.allclose(flipped.vectors[1], -ls.vectors[1])
    assert certify_equiangular(flipped, 1e-10) == certify_equiangular(ls, 1e-10)
    assert np.allclose(negate_line_vector(flipped, 1).vectors, ls.vectors)
    with pytest.raises(ValueError):
        negate_line_vector(ls, 3)


def test_switch_correspondence_on_hexagon():
    ls = hexagon_lines()
    g0 = graph_from_seidel(_seidel_of(ls))
    for i in range(3):
        gi = graph_from_seidel(_seidel_of(negate_line_vector(ls, i)))
        assert gi == switch(g0, [i])


def _switching_equivalent_bruteforce(g1, g2):
    n = g1.n
    for r in range(n + 1):
        for subset in itertools.combinations(range(n), r):
            if switch(g1, subset) == g2:
                return True
    return False


def test_switching_equivalent_basic():
    rng = np.random.default_rng(3)
    g = graph_from_seidel(random_seidel(6, rng))
    assert switching_equivalent(g, switch(g, [1, 4]))
    e2 = Graph.from_edges(2, [])
    f2 = Graph.from_edges(2, [(0, 1)])
    assert switching_equivalent(e2, f2)
    e3 = Graph.from_edges(3, [])
    k3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert not switching_equivalent(e3, k3)
    with pytest.raises(ValueError):
        switching_equivalent(e2, e3)


def test_switching_equivalent_matches_bruteforce():
    rng = np.random.default_rng(4)
    for _ in range(40):
        n = int(rng.integers(2, 7))
        g1 = graph_from_seidel(random_seidel(n, rng))
        g2 = graph_from_seidel(random_seidel(n, rng))
        assert switching_equivalent(g1, g2) == _switching_equivalent_bruteforce(g1, g2)


def test_switching_equivalence_relation_properties():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(2, 8))
        g1 = graph_from_seidel(random_seidel(n, rng))
        g2 = switch(g1, [int(v) for v in rng.choice(n, size=2, replace=False)])
        g3 = switch(g2, [0])
        assert switching_equivalent(g1, g1)
        assert switching_equivalent(g1, g2) == switching_equivalent(g2, g1)
        if switching_equivalent(g1, g2) and switching_equivalent(g2, g3):
            assert switching_equivalent(g1, g3)


def test_strongly_regular_five_cycle():
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert is_strongly_regular(c5) == (5, 2, 0, 1)


def test_strongly_regular_complete_graph_degenerate():
    k4 = Graph.from_edges(4, list(itertools.combinations(range(4), 2)))
    assert is_strongly_regular(k4) == (4, 3, 2, 0)


def test_strongly_regular_path_is_not():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert is_strongly_regular(p3) is None


def test_lines_from_seidel_hexagon():
    ls = lines_from_seidel(HEX_SEIDEL, 0.5)
    assert ls.dimension == 2
    assert ls.n_lines == 3
    target = np.eye(3) + 0.5 * HEX_SEIDEL
    assert np.abs(gram(ls) - target).max() < 1e-10


def test_lines_from_seidel_rejects_large_alpha():
    with pytest.raises(ValueError, match="eigenvalue"):
        lines_from_seidel(HEX_SEIDEL, 1.0)


def test_lines_from_seidel_fano_rank_seven():
    ls28 = fano_28_lines()
    s = _seidel_of(ls28)
    rebuilt = lines_from_seidel(s, 1.0 / 3.0)
    assert rebuilt.dimension == 7
    assert np.abs(gram(rebuilt) - gram(ls28)).max() < 1e-10


def test_lines_seidel_round_trip_random():
    rng = np.random.default_rng(6)
    for _ in range(20):
        n = int(rng.integers(3, 9))
        ls, s, alpha = random_equiangular_lines(n, rng)
        s2 = _seidel_of(ls)
        assert (s2 == s).all()
        target = np.eye(n) + alpha * s
        assert np.abs(gram(ls) - target).max() < 1e-10


def test_commuting_square_random_instances():
    rng = np.random.default_rng(7)
    for _ in range(50):
        n = int(rng.integers(3, 11))
        ls, _, _ = random_equiangular_lines(n, rng)
        i = int(rng.integers(0, n))
        left = graph_from_seidel(_seidel_of(negate_line_vector(ls, i)))
        right = switch(graph_from_seidel(_seidel_of(ls)), [i])
        assert left == right
