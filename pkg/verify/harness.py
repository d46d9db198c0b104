"""
Harnesses com sementes fixas: identidade do produto direto sobre pares
aleatórios de conjuntos de graus e gerador de grafos aleatórios para o oráculo.

O gerador pseudoaleatório é o random.Random do Python (Mersenne Twister),
sempre instanciado com a semente registrada no relatório.
"""

import logging
import random
from itertools import combinations
from typing import List, Tuple

from data.models import DegreeSet, VerificationReport
from graphs.prime_graph import PrimeGraph
from verify.checks import check_join_formula
from utils.settings import DEFAULT_SEED

logger = logging.getLogger(__name__)

SMOOTH_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)
SMOOTH_BOUND = 10 ** 6
SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# cd(PSL2(5)), fornecido como dado
PSL2_5_DEGREES = DegreeSet(name="PSL2(5)", degrees=(1, 3, 4, 5))


def random_smooth_number(rng: random.Random) -> int:
    value = 1
    for _ in range(rng.randint(1, 6)):
        p = rng.choice(SMOOTH_PRIMES)
        if value * p <= SMOOTH_BOUND:
            value *= p
    return value


def random_degree_set(rng: random.Random, name: str) -> DegreeSet:
    """
    Conjunto de graus aleatório: 1 mais de 1 a 7 números suaves <= 10^6.

    Args:
        rng: Gerador com semente
        name: Nome do conjunto

    Returns:
        DegreeSet diferente de {1}, com 2 a 8 elementos
    """
    while True:
        extra = {random_smooth_number(rng) for _ in range(rng.randint(1, 7))}
        degrees = {1} | extra
        if len(degrees) >= 2:
            return DegreeSet(name=name, degrees=tuple(degrees))


def random_degree_pairs(pairs: int, seed: int = DEFAULT_SEED) -> List[Tuple[DegreeSet, DegreeSet]]:
    rng = random.Random(seed)
    return [
        (random_degree_set(rng, f"R{i}a"), random_degree_set(rng, f"R{i}b"))
        for i in range(pairs)
    ]


def random_prime_graph(rng: random.Random, max_vertices: int = 9, edge_probability: float = 0.5) -> PrimeGraph:
    """Grafo aleatório G(n, p) rotulado pelos primeiros n primos."""
    n = rng.randint(0, max_vertices)
    vertices = SMALL_PRIMES[:n]
    edges = [(u, v) for u, v in combinations(vertices, 2) if rng.random() < edge_probability]
    return PrimeGraph(vertices, edges)


def run_join_formula_harness(pairs: int = 100, seed: int = DEFAULT_SEED) -> VerificationReport:
    """
    Confere Delta(produto dos graus) == fórmula do join em pares aleatórios.

    Args:
        pairs: Quantidade de pares aleatórios
        seed: Semente do gerador

    Returns:
        Relatório com uma entrada por par, mais o exemplo PSL2(5) x PSL2(5)
    """
    report = VerificationReport(
        instance_name=f"join-formula(pairs={pairs},seed={seed})",
        family="products",
        group_realizable=None,
        note=f"seed={seed}",
    )
    report.checks.append(check_join_formula(PSL2_5_DEGREES, PSL2_5_DEGREES))
    for a, b in random_degree_pairs(pairs, seed):
        report.checks.append(check_join_formula(a, b))

    mismatches = len(report.failed_checks)
    logger.info(f"Harness do produto direto: {pairs} pares, {mismatches} divergências (semente {seed})")
    return report
