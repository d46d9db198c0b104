"""
Família PSL2(q): estrutura do grafo de caracteres caso a caso.
"""

import logging
from itertools import combinations
from typing import List, Tuple

from data.models import Psl2Spec, PrimeSet
from degrees.arithmetic import prime_support, is_prime_power, is_power_of_two
from graphs.prime_graph import PrimeGraph
from utils.errors import DomainError

logger = logging.getLogger(__name__)

CASE_EVEN = "a"
CASE_ODD_COMPLETE = "b-i"
CASE_ODD_SPLIT = "b-ii"
CASE_Q5 = "q5"

OUTSIDE_HYPOTHESES_NOTE = "outside lemma hypotheses"


def psl2_spec_from_q(q: int) -> Psl2Spec:
    """
    Cria a especificação a partir de q.

    Args:
        q: Potência de primo >= 4

    Returns:
        Psl2Spec correspondente
    """
    if not isinstance(q, int) or isinstance(q, bool) or q < 4:
        raise DomainError(f"PSL2(q) exige q >= 4 (recebido {q!r})")
    decomposition = is_prime_power(q)
    if decomposition is None:
        raise DomainError(f"q={q} não é potência de primo")
    p, m = decomposition
    return Psl2Spec(p=p, m=m)


def prime_powers(lo: int, hi: int) -> List[int]:
    """Potências de primos em [lo, hi], em ordem crescente."""
    return [q for q in range(max(lo, 2), hi + 1) if is_prime_power(q) is not None]


def m_set(spec: Psl2Spec) -> PrimeSet:
    """M = pi(q - 1) - {2}."""
    return prime_support(spec.q - 1).difference(PrimeSet((2,)))


def p_set(spec: Psl2Spec) -> PrimeSet:
    """P = pi(q + 1) - {2}."""
    return prime_support(spec.q + 1).difference(PrimeSet((2,)))


def psl2_case(spec: Psl2Spec) -> str:
    if spec.p == 2:
        return CASE_EVEN
    if spec.q == 5:
        return CASE_Q5
    if is_power_of_two(spec.q - 1) or is_power_of_two(spec.q + 1):
        return CASE_ODD_COMPLETE
    return CASE_ODD_SPLIT


def psl2_components(spec: Psl2Spec) -> List[Tuple[Tuple[int, ...], bool]]:
    """
    Partição em componentes conexas prevista para Delta(PSL2(q)).

    Args:
        spec: Parâmetros da família

    Returns:
        Lista de (componente ordenada, se é completa), ordenada pelo menor primo
    """
    q = spec.q
    case = psl2_case(spec)
    if case == CASE_EVEN:
        parts = [((2,), True), (tuple(prime_support(q - 1)), True), (tuple(prime_support(q + 1)), True)]
    elif case == CASE_Q5:
        parts = [((2,), True), ((3,), True), ((5,), True)]
    else:
        body = tuple(prime_support((q - 1) * (q + 1)))
        parts = [((spec.p,), True), (body, case == CASE_ODD_COMPLETE)]
    return sorted(parts)


def psl2_graph(spec: Psl2Spec) -> PrimeGraph:
    """
    Constrói Delta(PSL2(q)) a partir da análise de casos.

    - q par: união disjunta das cliques {2}, pi(q-1) e pi(q+1);
    - q ímpar, q-1 ou q+1 potência de 2: {p} isolado e clique em pi(q^2-1);
    - q ímpar nos demais casos: {p} isolado; 2 adjacente a todos de M e P,
      M e P cliques, nenhuma aresta entre M e P;
    - q = 5 fica fora das hipóteses e devolve o grafo vazio em {2, 3, 5}.

    Args:
        spec: Parâmetros da família

    Returns:
        Grafo de caracteres
    """
    q = spec.q
    case = psl2_case(spec)
    logger.debug(f"{spec.name}: caso {case}")

    if case == CASE_Q5:
        logger.info(f"{spec.name} está fora das hipóteses da análise de casos; usando grafo vazio")
        return PrimeGraph((2, 3, 5))

    if case == CASE_EVEN:
        cliques = [(2,), tuple(prime_support(q - 1)), tuple(prime_support(q + 1))]
        vertices = [v for clique in cliques for v in clique]
        edges = [e for clique in cliques for e in combinations(clique, 2)]
        return PrimeGraph(vertices, edges)

    body = tuple(prime_support((q - 1) * (q + 1)))
    if case == CASE_ODD_COMPLETE:
        return PrimeGraph((spec.p,) + body, combinations(body, 2))

    m_primes, p_primes = tuple(m_set(spec)), tuple(p_set(spec))
    edges = list(combinations(m_primes, 2)) + list(combinations(p_primes, 2))
    edges += [(2, v) for v in m_primes + p_primes]
    return PrimeGraph((spec.p, 2) + m_primes + p_primes, edges)
