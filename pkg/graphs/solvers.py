"""
Solvers exatos para grafos pequenos: número de clique, número cromático e
número de independência.
"""

import logging
from typing import Dict, List, Optional, Mapping

import networkx as nx

from data.models import ColoringResult
from graphs.prime_graph import PrimeGraph, complement
from utils.errors import CapacityError
from utils.settings import SOLVER_CAP

logger = logging.getLogger(__name__)


def ensure_within_cap(g: PrimeGraph, cap: int = SOLVER_CAP, operation: str = "solver") -> None:
    """Lança CapacityError quando o grafo excede o limite de vértices."""
    if len(g) > cap:
        raise CapacityError(f"{operation}: {len(g)} vértices excedem o limite de {cap}")


def maximum_clique(g: PrimeGraph) -> List[int]:
    """
    Obtém uma clique máxima (a lexicograficamente menor entre as máximas).

    Args:
        g: Grafo dentro do limite do solver

    Returns:
        Lista ordenada de vértices da clique
    """
    ensure_within_cap(g, operation="clique_number")
    if len(g) == 0:
        return []
    cliques = [sorted(c) for c in nx.find_cliques(g.nx_graph)]
    best = max(len(c) for c in cliques)
    return min(c for c in cliques if len(c) == best)


def clique_number(g: PrimeGraph) -> int:
    """Número de clique exato omega(g); 0 no grafo sem vértices."""
    return len(maximum_clique(g))


def maximum_independent_set(g: PrimeGraph) -> List[int]:
    ensure_within_cap(g, operation="independence_number")
    return maximum_clique(complement(g))


def independence_number(g: PrimeGraph) -> int:
    """alpha(g) = omega(complemento de g)."""
    return len(maximum_independent_set(g))


def is_proper_coloring(g: PrimeGraph, assignment: Mapping[int, int]) -> bool:
    if set(assignment) != set(g.vertices):
        return False
    return all(assignment[u] != assignment[v] for u, v in g.edges)


def _canonical(g: PrimeGraph, assignment: Mapping[int, int]) -> Dict[int, int]:
    """Renumera as cores pela ordem de aparição nos vértices ordenados."""
    relabel: Dict[int, int] = {}
    result: Dict[int, int] = {}
    for v in g.vertices:
        color = assignment[v]
        if color not in relabel:
            relabel[color] = len(relabel)
        result[v] = relabel[color]
    return result


def _find_k_coloring(g: PrimeGraph, k: int) -> Optional[Dict[int, int]]:
    """
    Backtracking com escolha dinâmica por saturação (DSATUR exato).

    Args:
        g: Grafo
        k: Número de cores disponíveis

    Returns:
        Coloração com no máximo k cores, ou None se não existe
    """
    coloring: Dict[int, int] = {}
    neighbors = {v: g.neighbors(v) for v in g.vertices}

    def pick_vertex() -> int:
        best = None
        best_key = None
        for v in g.vertices:
            if v in coloring:
                continue
            saturation = len({coloring[w] for w in neighbors[v] if w in coloring})
            key = (saturation, len(neighbors[v]), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def extend(used: int) -> bool:
        if len(coloring) == len(g):
            return True
        v = pick_vertex()
        forbidden = {coloring[w] for w in neighbors[v] if w in coloring}
        # uma cor nova só é tentada uma vez (simetria entre cores ainda não usadas)
        for color in range(min(used + 1, k)):
            if color in forbidden:
                continue
            coloring[v] = color
            if extend(max(used, color + 1)):
                return True
            del coloring[v]
        return False

    return dict(coloring) if extend(0) else None


def chromatic_number(g: PrimeGraph) -> ColoringResult:
    """
    Número cromático exato com coloração testemunha.

    O limite inferior é omega(g); o superior vem da coloração gulosa DSATUR
    do networkx. Cada k intermediário é decidido por backtracking.

    Args:
        g: Grafo dentro do limite do solver

    Returns:
        ColoringResult com chi e a atribuição vértice -> cor em [0, chi)
    """
    ensure_within_cap(g, operation="chromatic_number")
    if len(g) == 0:
        return ColoringResult(chi=0, assignment={})

    lower = clique_number(g)
    greedy = nx.greedy_color(g.nx_graph, strategy="DSATUR")
    upper = len(set(greedy.values()))
    logger.debug(f"chromatic_number: limites {lower} <= chi <= {upper} em {len(g)} vértices")

    best = greedy
    for k in range(lower, upper):
        found = _find_k_coloring(g, k)
        if found is not None:
            best = found
            break

    assignment = _canonical(g, best)
    return ColoringResult(chi=len(set(assignment.values())), assignment=assignment)
