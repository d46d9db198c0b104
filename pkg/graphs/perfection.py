"""
Reconhecimento de grafos perfeitos por busca de buracos e antiburacos ímpares,
com certificados verificáveis, e o oráculo pela definição.
"""

import logging
from typing import Dict, List, Optional, Iterator, FrozenSet

from data.models import HoleCertificate, PerfectionVerdict, HOLE, ANTIHOLE
from graphs.prime_graph import PrimeGraph, complement
from graphs.solvers import ensure_within_cap
from utils.settings import ORACLE_CAP

logger = logging.getLogger(__name__)


def _induced_cycles(g: PrimeGraph, min_length: int, odd_only: bool = True) -> Iterator[List[int]]:
    """
    Enumera ciclos induzidos por DFS sobre caminhos induzidos.

    Cada ciclo sai uma única vez, começando no menor vértice e seguindo para o
    menor dos dois vizinhos no ciclo. A ordem de saída é determinística
    (rótulos crescentes).
    """
    neighbors: Dict[int, FrozenSet[int]] = {v: g.neighbors(v) for v in g.vertices}

    def extend(path: List[int]) -> Iterator[List[int]]:
        start, last = path[0], path[-1]
        for w in sorted(neighbors[last]):
            if w <= start or w in path:
                continue
            if any(w in neighbors[x] for x in path[1:-1]):
                continue  # corda
            if w in neighbors[start]:
                if len(path) >= 2 and path[1] < w:
                    length = len(path) + 1
                    if length >= min_length and (length % 2 == 1 or not odd_only):
                        yield path + [w]
                continue
            yield from extend(path + [w])

    for s in g.vertices:
        for v in sorted(neighbors[s]):
            if v > s:
                yield from extend([s, v])


def find_odd_hole(g: PrimeGraph) -> Optional[HoleCertificate]:
    """
    Procura um ciclo induzido de ordem ímpar >= 5.

    Args:
        g: Grafo

    Returns:
        Certificado do tipo hole, ou None se não existe
    """
    for cycle in _induced_cycles(g, min_length=5):
        logger.debug(f"Buraco ímpar encontrado: {cycle}")
        return HoleCertificate(kind=HOLE, cycle=tuple(cycle))
    return None


def find_odd_antihole(g: PrimeGraph) -> Optional[HoleCertificate]:
    """Procura um antiburaco ímpar: um buraco ímpar do complemento."""
    hole = find_odd_hole(complement(g))
    if hole is None:
        return None
    return HoleCertificate(kind=ANTIHOLE, cycle=hole.cycle)


def complement_odd_cycles(g: PrimeGraph) -> List[List[int]]:
    """Todos os ciclos ímpares induzidos (triângulos incluídos) do complemento de g."""
    return list(_induced_cycles(complement(g), min_length=3))


def certificate_is_valid(g: PrimeGraph, certificate: HoleCertificate) -> bool:
    """
    Reverifica um certificado diretamente contra o grafo.

    Args:
        g: Grafo certificado
        certificate: Buraco ou antiburaco

    Returns:
        True se o padrão de adjacência confere
    """
    cycle = certificate.cycle
    if any(v not in g for v in cycle):
        return False
    k = len(cycle)
    expect_edge_on_cycle = certificate.kind == HOLE
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            should_be_adjacent = consecutive == expect_edge_on_cycle
            if g.adjacent(cycle[i], cycle[j]) != should_be_adjacent:
                return False
    return True


def is_perfect(g: PrimeGraph) -> PerfectionVerdict:
    """
    Decide a perfeição pela ausência de buracos e antiburacos ímpares.

    Args:
        g: Grafo

    Returns:
        PerfectionVerdict com o certificado quando o grafo não é perfeito
    """
    if len(g) < 5:
        return PerfectionVerdict(perfect=True)

    certificate = find_odd_hole(g) or find_odd_antihole(g)
    if certificate is not None:
        return PerfectionVerdict(perfect=False, certificate=certificate)
    return PerfectionVerdict(perfect=True)


def is_perfect_by_definition(g: PrimeGraph) -> bool:
    """
    Oráculo: omega == chi em todo subgrafo induzido.

    Programação dinâmica sobre as 2^n máscaras de vértices: omega por
    ramificação no menor vértice, chi pela partição em conjuntos independentes
    que contêm o menor vértice.

    Args:
        g: Grafo dentro do limite do oráculo

    Returns:
        True se o grafo é perfeito
    """
    ensure_within_cap(g, cap=ORACLE_CAP, operation="is_perfect_by_definition")
    vertices = g.vertices
    n = len(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    adjacency = [0] * n
    for u, v in g.edges:
        adjacency[index[u]] |= 1 << index[v]
        adjacency[index[v]] |= 1 << index[u]

    size = 1 << n
    omega = [0] * size
    independent = [False] * size
    chi = [0] * size
    independent[0] = True

    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        omega[mask] = max(omega[rest], 1 + omega[rest & adjacency[low]])
        independent[mask] = independent[rest] and not (adjacency[low] & rest)

        best = n
        sub = rest
        while True:
            if independent[sub | (1 << low)]:
                best = min(best, 1 + chi[rest & ~sub])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[mask] = best

        if omega[mask] != chi[mask]:
            witness = [vertices[i] for i in range(n) if mask >> i & 1]
            logger.debug(f"Subgrafo induzido com omega={omega[mask]} e chi={chi[mask]}: {witness}")
            return False
    return True
