"""
Certificados aritméticos para ciclos ímpares no complemento de Delta:
os primos de pi - {u} alternam entre divisores ímpares de u^alpha + 1 e
u^alpha - 1.
"""

import logging
from typing import Iterable, List, Optional, Tuple

from data.models import PrimeSet, Psl2Spec, Psl2CycleCertificate
from graphs.prime_graph import PrimeGraph, complement, induced_cycle_order
from utils.errors import DomainError
from utils.settings import ALPHA_SEARCH_BOUND

logger = logging.getLogger(__name__)

PLUS = "+"
MINUS = "-"


def _side(prime: int, u: int, alpha: int) -> Optional[str]:
    """Em qual de u^alpha + 1 e u^alpha - 1 o primo (ímpar) aparece."""
    power = u ** alpha
    if (power + 1) % prime == 0:
        return PLUS
    if (power - 1) % prime == 0:
        return MINUS
    return None


def check_cycle_certificate(cert: Psl2CycleCertificate) -> bool:
    """
    Verifica a alternância do certificado.

    Percorrendo a ordem cíclica a partir de u, as entradas de pi - {u} precisam
    ser ímpares e alternar estritamente entre divisores de u^alpha + 1 e de
    u^alpha - 1; a quantidade de entradas é par, e u fecha o ciclo.

    Args:
        cert: Certificado

    Returns:
        True se a aritmética confere
    """
    ordering = cert.ordering
    if len(ordering) % 2 != 0:
        return False
    if any(p % 2 == 0 for p in ordering):
        return False

    sides = [_side(p, cert.u, cert.alpha) for p in ordering]
    if any(side is None for side in sides):
        return False
    return all(sides[i] != sides[i + 1] for i in range(len(sides) - 1))


def _ordering_from_cycle(cycle: List[int], u: int) -> Tuple[int, ...]:
    """Gira o ciclo para começar em u e fixa o sentido pelo menor vizinho."""
    start = cycle.index(u)
    rest = cycle[start + 1:] + cycle[:start]
    if rest and rest[0] > rest[-1]:
        rest = rest[::-1]
    return tuple(rest)


def _candidates(pi: PrimeSet, q_hint: Optional[Psl2Spec]) -> Iterable[Tuple[int, int]]:
    if q_hint is not None:
        if q_hint.p in pi:
            yield q_hint.p, q_hint.m
        return
    for u in pi:
        for alpha in range(1, ALPHA_SEARCH_BOUND + 1):
            yield u, alpha


def _complement_cycle(g: PrimeGraph, pi: Iterable[int]) -> Tuple[PrimeSet, Optional[List[int]]]:
    prime_set = PrimeSet(tuple(pi))
    if len(prime_set) <= 1 or len(prime_set) % 2 == 0:
        raise DomainError(f"|pi| deve ser ímpar e > 1 (recebido {len(prime_set)})")
    missing = [p for p in prime_set if p not in g]
    if missing:
        raise DomainError(f"Primos fora de V(g): {missing}")

    cycle = induced_cycle_order(complement(g), prime_set)
    if cycle is None:
        logger.info(f"pi={list(prime_set)} não induz um ciclo no complemento")
    return prime_set, cycle


def build_certificate(g: PrimeGraph, pi: Iterable[int], u: int, alpha: int) -> Optional[Psl2CycleCertificate]:
    """
    Monta o certificado para (u, alpha) dados, sem buscar.

    Args:
        g: Grafo de caracteres
        pi: Vértices do ciclo (|pi| ímpar e > 1)
        u: Primo de pi
        alpha: Expoente positivo

    Returns:
        Certificado (que pode não passar em check_cycle_certificate), ou None
        se pi não induz um ciclo no complemento
    """
    prime_set, cycle = _complement_cycle(g, pi)
    if cycle is None:
        return None
    if u not in prime_set:
        raise DomainError(f"u={u} não pertence a pi={list(prime_set)}")
    return Psl2CycleCertificate(
        pi=prime_set,
        u=u,
        alpha=alpha,
        variant="PSL2",
        ordering=_ordering_from_cycle(cycle, u),
    )


def find_certificate_for_cycle(
    g: PrimeGraph,
    pi: Iterable[int],
    q_hint: Optional[Psl2Spec] = None,
) -> Optional[Psl2CycleCertificate]:
    """
    Procura (u, alpha) que certifique um ciclo ímpar do complemento de g.

    Só a direção aritmética é implementada: nada é afirmado sobre o grupo.

    Args:
        g: Grafo de caracteres
        pi: Vértices do ciclo (|pi| ímpar e > 1)
        q_hint: Quando presente, testa apenas u = p e alpha = m

    Returns:
        Certificado que passa em check_cycle_certificate, ou None
    """
    prime_set, cycle = _complement_cycle(g, pi)
    if cycle is None:
        return None

    for u, alpha in _candidates(prime_set, q_hint):
        certificate = Psl2CycleCertificate(
            pi=prime_set,
            u=u,
            alpha=alpha,
            variant="PSL2",
            ordering=_ordering_from_cycle(cycle, u),
        )
        if check_cycle_certificate(certificate):
            logger.debug(f"Certificado encontrado para pi={list(prime_set)}: u={u}, alpha={alpha}")
            return certificate

    logger.info(f"Nenhum certificado para pi={list(prime_set)}")
    return None
