from math import factorial

import pytest

from data.models import Partition
from degrees.character_graph import character_graph
from families.symmetric import hook_degree, integer_partitions, sn_character_dimensions, sn_degrees
from graphs.perfection import is_perfect
from graphs.prime_graph import complement
from graphs.solvers import chromatic_number
from utils.errors import CapacityError, DomainError


def test_partitions_of_four_descending():
    assert [p.parts for p in integer_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partition_must_be_non_increasing():
    with pytest.raises(DomainError):
        Partition((1, 2))


def test_conjugate_and_hooks():
    p = Partition((3, 1))
    assert p.conjugate().parts == (2, 1, 1)
    assert p.hook_lengths() == [4, 2, 1, 1]
    assert hook_degree(p) == 3


@pytest.mark.parametrize("n, expected", [(3, (1, 2)), (4, (1, 2, 3)), (5, (1, 4, 5, 6))])
def test_small_degree_sets(n, expected):
    assert sn_degrees(n).degrees == expected


def test_sum_of_squares_is_n_factorial():
    for n in range(1, 21):
        dimensions = sn_character_dimensions(n)
        assert sum(degree ** 2 for _, degree in dimensions) == factorial(n)


def test_one_row_and_one_column_have_degree_one():
    for n in range(1, 21):
        dimensions = dict(sn_character_dimensions(n))
        assert dimensions[Partition((n,))] == 1
        assert dimensions[Partition((1,) * n)] == 1


@pytest.mark.parametrize("n", [0, 21])
def test_out_of_range(n):
    with pytest.raises(CapacityError):
        sn_degrees(n)


def test_family_perfect_and_complement_three_colorable():
    for n in range(3, 21):
        g = character_graph(sn_degrees(n))
        assert is_perfect(g).perfect, n
        assert chromatic_number(complement(g)).chi <= 3, n
