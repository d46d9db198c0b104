import random

from data.models import PASS
from degrees.character_graph import character_graph, join_formula_graph, product_degrees
from verify.harness import (
    PSL2_5_DEGREES, SMOOTH_BOUND, random_degree_pairs, random_degree_set, random_prime_graph,
    run_join_formula_harness,
)


def test_harness_hundred_pairs_no_mismatch():
    report = run_join_formula_harness(pairs=100)
    assert report.family == "products"
    assert len(report.checks) == 101
    assert all(c.status == PASS for c in report.checks)
    assert report.summary == PASS


def test_worked_example_comes_first():
    report = run_join_formula_harness(pairs=0)
    assert len(report.checks) == 1
    assert report.checks[0].status == PASS
    assert character_graph(product_degrees(PSL2_5_DEGREES, PSL2_5_DEGREES)) == join_formula_graph(
        PSL2_5_DEGREES, PSL2_5_DEGREES
    )


def test_pairs_deterministic_for_seed():
    first = random_degree_pairs(20, seed=11)
    second = random_degree_pairs(20, seed=11)
    assert [(a.degrees, b.degrees) for a, b in first] == [(a.degrees, b.degrees) for a, b in second]
    other = random_degree_pairs(20, seed=12)
    assert [(a.degrees, b.degrees) for a, b in first] != [(a.degrees, b.degrees) for a, b in other]


def test_random_degree_sets_shape():
    rng = random.Random(3)
    for i in range(200):
        d = random_degree_set(rng, f"D{i}")
        assert 2 <= len(d) <= 8
        assert 1 in d.degrees
        assert max(d.degrees) <= SMOOTH_BOUND


def test_random_prime_graph_vertices_are_primes():
    rng = random.Random(5)
    for _ in range(50):
        g = random_prime_graph(rng)
        assert len(g) <= 9
        assert all(u < v for u, v in g.edges)
