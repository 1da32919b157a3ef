import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from bondagelab.domination import (
    DominatingSetWitness, gamma, gamma_i, is_dominating, is_independent,
    minimum_independent_dominating_sets,
)
from bondagelab.generators import (
    corpus, cycle, icosahedron, k4, octahedron, path, prism, sparse_planar, star, wheel,
)
from bondagelab.graph import InvalidId

from conftest import naive_lex_witness, naive_min


def nx_gamma_i(g) -> int:
    """Smallest maximal independent set: cliques of the complement."""
    h = nx.complement(nx.Graph([(u, v) for u, v in g.edges]))
    h.add_nodes_from(range(g.n))
    return min(len(c) for c in nx.find_cliques(h))


@pytest.mark.parametrize("g, gi", [
    (k4(), 1), (cycle(4), 2), (cycle(5), 2), (cycle(6), 2), (path(4), 2), (star(5), 1),
    (wheel(8), 1), (octahedron(), 2), (icosahedron(), 2), (prism(4), 2), (prism(3), 2),
])
def test_known_values(g, gi):
    assert gamma_i(g)[0] == gi
    assert nx_gamma_i(g) == gi


def test_cube_values():
    g = prism(4)
    assert gamma(g)[0] == 2 and gamma_i(g)[0] == 2


def test_witness_is_lex_smallest():
    for _, g in corpus(4, 40, 11):
        for ind in (False, True):
            k, w = (gamma_i if ind else gamma)(g)
            assert w.vertices == naive_lex_witness(g.adj, ind)
            assert w.cardinality == k and w.dominating and (w.independent or not ind)


def test_gamma_le_gamma_i():
    for _, g in corpus(6, 30, 40):
        assert gamma(g)[0] <= gamma_i(g)[0] == nx_gamma_i(g)


def test_adjacency_input_and_empty():
    assert gamma_i([[1], [0]])[0] == 1
    assert gamma_i([[], [], []])[0] == 3
    assert gamma([])[0] == 0


def test_predicates():
    g = cycle(6)
    assert is_dominating(g, [0, 3]) and is_independent(g, [0, 3])
    assert not is_dominating(g, [0, 1])
    assert not is_independent(g, [0, 1])
    with pytest.raises(InvalidId):
        is_dominating(g, [9])


def test_witness_flags_recomputed():
    w = DominatingSetWitness.of(cycle(6), [0, 1, 3])
    assert w.dominating and not w.independent and w.cardinality == 3


def test_all_minimum_sets():
    sets = minimum_independent_dominating_sets(cycle(6))
    assert sets == [(0, 3), (1, 4), (2, 5)]
    assert minimum_independent_dominating_sets(k4()) == [(0,), (1,), (2,), (3,)]


def test_desk_scale_speed():
    for s in range(3):
        g = sparse_planar(60, s)
        k, w = gamma_i(g)
        assert w.independent and w.dominating and k == len(w.vertices)


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 11), st.integers(0, 10 ** 6))
def test_matches_brute_force(n, seed):
    g = sparse_planar(n, seed)
    assert gamma(g)[0] == naive_min(g.adj, False)
    assert gamma_i(g)[0] == naive_min(g.adj, True)
