"""
Construção do grafo de caracteres Delta a partir de um conjunto de graus.
"""

import logging
from itertools import combinations
from typing import Optional

from data.models import DegreeSet, PrimeSet
from degrees.arithmetic import prime_support
from graphs.prime_graph import PrimeGraph, join_graphs_formula
from utils.errors import CapacityError
from utils.settings import DEGREE_LIMIT, DEGREE_BIT_LIMIT

logger = logging.getLogger(__name__)


def rho(d: DegreeSet) -> PrimeSet:
    """rho(G): união dos suportes primos de todos os graus."""
    primes = set()
    for degree in d:
        primes.update(prime_support(degree))
    return PrimeSet(tuple(primes))


def character_graph(d: DegreeSet) -> PrimeGraph:
    """
    Grafo de caracteres Delta(G).

    Vértices são os primos de rho(d); p e q são adjacentes quando pq divide
    algum grau. Como p e q são primos distintos, isso equivale a ambos
    pertencerem ao suporte de um mesmo grau.

    Args:
        d: Conjunto de graus

    Returns:
        Grafo de caracteres
    """
    vertices = set()
    edges = set()
    for degree in d:
        support = tuple(prime_support(degree))
        vertices.update(support)
        edges.update(combinations(support, 2))
    logger.debug(f"Delta({d.name}): {len(vertices)} vértices, {len(edges)} arestas")
    return PrimeGraph(vertices, edges)


def edge_witness(d: DegreeSet, p: int, q: int) -> Optional[int]:
    """Menor grau divisível por pq, ou None."""
    return next((degree for degree in d if degree % (p * q) == 0), None)


def product_degrees(a: DegreeSet, b: DegreeSet) -> DegreeSet:
    """
    Graus do produto direto: {x*y : x em a, y em b}.

    Args:
        a: Graus do primeiro fator
        b: Graus do segundo fator

    Returns:
        Conjunto de graus do produto, sem repetições
    """
    products = {x * y for x in a for y in b}
    if max(products) >= DEGREE_LIMIT:
        raise CapacityError(f"Produto de graus {a.name} x {b.name} excede {DEGREE_BIT_LIMIT} bits")
    return DegreeSet(name=f"{a.name}x{b.name}", degrees=tuple(products))


def join_formula_graph(a: DegreeSet, b: DegreeSet) -> PrimeGraph:
    """
    Grafo do produto direto pela fórmula do join.

    Com F = rho(a) ∩ rho(b): K_F * Delta(a)[rho(a) - F] * Delta(b)[rho(b) - F].

    Args:
        a: Graus do primeiro fator
        b: Graus do segundo fator

    Returns:
        Grafo previsto para Delta(G x H)
    """
    return join_graphs_formula(character_graph(a), character_graph(b))
