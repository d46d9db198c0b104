"""
Graus dos caracteres irredutíveis de S_n pela fórmula dos ganchos.
"""

import logging
from math import factorial, prod
from typing import List, Tuple

from sympy.utilities.iterables import partitions

from data.models import DegreeSet, Partition
from utils.errors import CapacityError
from utils.settings import SN_MAX_N

logger = logging.getLogger(__name__)


def integer_partitions(n: int) -> List[Partition]:
    """Partições de n em ordem lexicográfica decrescente."""
    result = []
    for multiplicities in partitions(n):
        parts = sorted(
            (part for part, count in multiplicities.items() for _ in range(count)),
            reverse=True,
        )
        result.append(Partition(tuple(parts)))
    return sorted(result, key=lambda p: p.parts, reverse=True)


def hook_degree(partition: Partition) -> int:
    """n! dividido pelo produto dos comprimentos de gancho."""
    return factorial(partition.size) // prod(partition.hook_lengths())


def sn_character_dimensions(n: int) -> List[Tuple[Partition, int]]:
    """
    Dimensão de cada irredutível de S_n, indexada pela partição.

    Args:
        n: 1 <= n <= 20

    Returns:
        Lista de (partição, grau) na ordem lexicográfica decrescente
    """
    if not isinstance(n, int) or n < 1 or n > SN_MAX_N:
        raise CapacityError(f"sn_degrees aceita 1 <= n <= {SN_MAX_N} (recebido {n!r})")
    return [(partition, hook_degree(partition)) for partition in integer_partitions(n)]


def sn_degrees(n: int) -> DegreeSet:
    """
    Conjunto de graus cd(S_n).

    Args:
        n: 1 <= n <= 20

    Returns:
        DegreeSet com nome "S<n>"
    """
    dimensions = sn_character_dimensions(n)
    logger.debug(f"S{n}: {len(dimensions)} partições")
    return DegreeSet(name=f"S{n}", degrees=tuple(degree for _, degree in dimensions))
