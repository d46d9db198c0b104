"""
Aritmética de primos: fatoração, suporte primo pi(n) e potências de primos.
"""

import logging
from typing import List, Optional, Tuple

from sympy import factorint

from data.models import PrimeSet
from utils.errors import DomainError, CapacityError
from utils.settings import DEGREE_LIMIT, DEGREE_BIT_LIMIT

logger = logging.getLogger(__name__)


def _check_range(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"Esperado inteiro positivo (recebido {n!r})")
    if n >= DEGREE_LIMIT:
        raise CapacityError(f"{n} excede {DEGREE_BIT_LIMIT} bits")


def factorize(n: int) -> List[int]:
    """
    Fatora n em primos, com multiplicidade.

    Args:
        n: Inteiro positivo de até 128 bits

    Returns:
        Lista crescente de primos cujo produto é n (vazia para n = 1)
    """
    _check_range(n)
    factors: List[int] = []
    for p, exponent in sorted(factorint(n).items()):
        factors.extend([p] * exponent)
    return factors


def prime_support(n: int) -> PrimeSet:
    """pi(n): primos distintos que dividem n."""
    _check_range(n)
    return PrimeSet(tuple(factorint(n)))


def is_prime_power(n: int) -> Optional[Tuple[int, int]]:
    """
    Decompõe n = p^m.

    Args:
        n: Inteiro positivo

    Returns:
        (p, m) quando n é potência de um primo, senão None
    """
    _check_range(n)
    factors = factorint(n)
    if len(factors) != 1:
        return None
    (p, m), = factors.items()
    return p, m


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0
