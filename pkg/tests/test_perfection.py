import random

import pytest
from hypothesis import given

from data.models import HoleCertificate, HOLE, ANTIHOLE
from families.psl2 import prime_powers, psl2_graph, psl2_spec_from_q
from families.symmetric import sn_degrees
from degrees.character_graph import character_graph
from graphs.perfection import (
    certificate_is_valid, complement_odd_cycles, find_odd_antihole, find_odd_hole,
    is_perfect, is_perfect_by_definition,
)
from graphs.prime_graph import PrimeGraph, complement
from utils.errors import CapacityError
from utils.settings import DEFAULT_SEED
from verify.harness import random_prime_graph
from tests.strategies import cycle_graph, prime_graphs


def test_c5_has_hole(c5):
    verdict = is_perfect(c5)
    assert not verdict.perfect
    assert verdict.certificate == HoleCertificate(kind=HOLE, cycle=(2, 3, 5, 7, 11))
    assert certificate_is_valid(c5, verdict.certificate)


def test_complement_of_c7_has_antihole(c7_complement):
    assert find_odd_hole(c7_complement) is None
    verdict = is_perfect(c7_complement)
    assert not verdict.perfect
    assert verdict.certificate.kind == ANTIHOLE
    assert verdict.certificate.length == 7
    assert certificate_is_valid(c7_complement, verdict.certificate)


def test_c5_is_its_own_antihole(c5):
    certificate = find_odd_antihole(c5)
    assert certificate.kind == ANTIHOLE
    assert certificate.length == 5
    assert certificate_is_valid(c5, certificate)


def test_bipartite_graphs_have_neither():
    left, right = (2, 3, 5, 7), (11, 13, 17, 19)
    k44 = PrimeGraph(left + right, [(u, v) for u in left for v in right])
    assert find_odd_hole(k44) is None
    assert find_odd_antihole(k44) is None
    assert find_odd_hole(cycle_graph((2, 3, 5, 7, 11, 13))) is None


def test_c7_with_chord_gives_shorter_hole(c7):
    g = PrimeGraph(c7.vertices, list(c7.edges) + [(2, 7)])
    certificate = find_odd_hole(g)
    assert certificate.kind == HOLE
    assert certificate.length == 5
    assert set(certificate.cycle) == {2, 7, 11, 13, 17}
    assert certificate_is_valid(g, certificate)


def test_c9_and_complement_imperfect():
    c9 = cycle_graph((2, 3, 5, 7, 11, 13, 17, 19, 23))
    assert not is_perfect(c9).perfect
    assert not is_perfect(complement(c9)).perfect


def test_even_cycle_is_perfect():
    c6 = cycle_graph((2, 3, 5, 7, 11, 13))
    assert is_perfect(c6).perfect
    assert is_perfect_by_definition(c6)


def test_triangle_is_not_a_hole():
    assert is_perfect(PrimeGraph.complete((2, 3, 5))).perfect


def test_certificate_rejected_on_wrong_graph(c5, c7):
    hole = is_perfect(c7).certificate
    assert not certificate_is_valid(c5, hole)


def test_oracle_on_odd_cycles_and_complements(c5, c7):
    c9 = cycle_graph((2, 3, 5, 7, 11, 13, 17, 19, 23))
    for g in (c5, c7, c9):
        assert not is_perfect_by_definition(g)
        assert not is_perfect_by_definition(complement(g))


def test_oracle_cap():
    g = PrimeGraph((2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41))
    with pytest.raises(CapacityError):
        is_perfect_by_definition(g)


def test_complement_odd_cycles_psl2_16(psl2_16):
    assert complement_odd_cycles(psl2_16) == [[2, 3, 17], [2, 5, 17]]


def test_family_instances_agree_with_oracle():
    graphs = [psl2_graph(psl2_spec_from_q(q)) for q in prime_powers(4, 2000)]
    graphs += [character_graph(sn_degrees(n)) for n in range(1, 21)]
    for g in graphs:
        if len(g) <= 12:
            assert is_perfect(g).perfect == is_perfect_by_definition(g)
        assert is_perfect(g).perfect


@given(prime_graphs())
def test_agrees_with_oracle(g):
    assert is_perfect(g).perfect == is_perfect_by_definition(g)


@given(prime_graphs())
def test_perfection_closed_under_complement(g):
    verdict = is_perfect(g)
    assert verdict.perfect == is_perfect(complement(g)).perfect
    if not verdict.perfect:
        assert certificate_is_valid(g, verdict.certificate)


def _seeded_agreement(count: int) -> int:
    rng = random.Random(DEFAULT_SEED)
    disagreements = 0
    for _ in range(count):
        g = random_prime_graph(rng)
        perfect = is_perfect(g).perfect
        if perfect != is_perfect_by_definition(g) or perfect != is_perfect(complement(g)).perfect:
            disagreements += 1
    return disagreements


def test_seeded_random_graphs_agree_with_oracle():
    assert _seeded_agreement(300) == 0


@pytest.mark.slow
def test_ten_thousand_seeded_random_graphs_agree_with_oracle():
    assert _seeded_agreement(10_000) == 0
