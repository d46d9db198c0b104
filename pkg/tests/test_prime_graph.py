import pickle

import pytest
from hypothesis import given, strategies as st

from graphs.prime_graph import (
    PrimeGraph, complement, induced, join, join_graphs_formula,
    connected_components, is_complete, is_clique, is_independent, induced_cycle_order,
)
from graphs.solvers import chromatic_number, clique_number
from utils.errors import DomainError
from tests.strategies import prime_graphs


def test_rejects_non_prime_vertex():
    with pytest.raises(DomainError):
        PrimeGraph((2, 4))


def test_rejects_loop_and_unknown_endpoint():
    with pytest.raises(DomainError):
        PrimeGraph((2, 3), [(2, 2)])
    with pytest.raises(DomainError):
        PrimeGraph((2, 3), [(2, 5)])


def test_edges_normalized_and_sorted():
    g = PrimeGraph((5, 3, 2), [(5, 2), (3, 2)])
    assert g.vertices == (2, 3, 5)
    assert g.edges == ((2, 3), (2, 5))


def test_label_equality_not_isomorphism():
    g = PrimeGraph((2, 3), [(2, 3)])
    h = PrimeGraph((5, 7), [(5, 7)])
    assert g != h
    assert g == PrimeGraph((3, 2), [(3, 2)])
    assert hash(g) == hash(PrimeGraph((3, 2), [(3, 2)]))


def test_pickle_preserves_graph(c5):
    assert pickle.loads(pickle.dumps(c5)) == c5


@given(prime_graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(prime_graphs())
def test_complement_partitions_pairs(g):
    co = complement(g)
    n = len(g)
    assert len(g.edges) + len(co.edges) == n * (n - 1) // 2
    assert not set(g.edges) & set(co.edges)


def test_induced_rejects_outside_primes(c5):
    with pytest.raises(DomainError, match=r"\[13, 17\]"):
        induced(c5, (2, 13, 17))


def test_induced_keeps_edges_between_chosen(c5):
    sub = induced(c5, (2, 3, 7))
    assert sub.vertices == (2, 3, 7)
    assert sub.edges == ((2, 3),)


def test_join_adds_all_cross_edges():
    g = PrimeGraph((2, 3), [(2, 3)])
    h = PrimeGraph((5, 7, 11), [(5, 7)])
    joined = join(g, h)
    assert len(joined.edges) == 1 + 1 + 2 * 3
    assert all(joined.adjacent(u, v) for u in g.vertices for v in h.vertices)
    assert not joined.adjacent(5, 11)


def test_join_rejects_overlap():
    with pytest.raises(DomainError):
        join(PrimeGraph((2, 3)), PrimeGraph((3, 5)))


def test_join_formula_on_disjoint_graphs_is_join():
    g = PrimeGraph((2, 3), [(2, 3)])
    h = PrimeGraph((5, 7))
    assert join_graphs_formula(g, h) == join(g, h)


def test_join_formula_shared_vertices_become_universal():
    g = PrimeGraph((2, 3, 5))
    h = PrimeGraph((2, 3, 5))
    assert is_complete(join_graphs_formula(g, h))


def test_connected_components_ordered(psl2_11):
    assert connected_components(psl2_11) == [(2, 3, 5), (11,)]


def test_clique_and_independent_predicates(c5):
    assert is_clique(c5, (2, 3))
    assert not is_clique(c5, (2, 5))
    assert is_independent(c5, (2, 5))
    assert not is_independent(c5, (2, 3))


def test_induced_cycle_order(c5):
    assert induced_cycle_order(c5, c5.vertices) == [2, 3, 5, 7, 11]
    assert induced_cycle_order(c5, (2, 3, 5)) is None


@given(g=prime_graphs(max_vertices=9), data=st.data())
def test_join_adds_clique_and_chromatic_numbers(g, data):
    side = data.draw(st.lists(st.booleans(), min_size=len(g), max_size=len(g)))
    left = induced(g, [v for v, chosen in zip(g.vertices, side) if chosen])
    right = induced(g, [v for v, chosen in zip(g.vertices, side) if not chosen])
    joined = join(left, right)
    assert clique_number(joined) == clique_number(left) + clique_number(right)
    assert chromatic_number(joined).chi == chromatic_number(left).chi + chromatic_number(right).chi
