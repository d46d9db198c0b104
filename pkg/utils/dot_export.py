"""
Exportação de grafos de caracteres para o formato DOT (Graphviz).
"""

import logging
from itertools import combinations
from pathlib import Path
from typing import Optional, Set, Tuple, Union

import graphviz

from data.models import HoleCertificate, HOLE
from graphs.perfection import certificate_is_valid
from graphs.prime_graph import PrimeGraph
from utils.errors import DomainError

logger = logging.getLogger(__name__)

HIGHLIGHT = {"color": "red", "penwidth": "2"}


def _highlighted_edges(g: PrimeGraph, certificate: HoleCertificate) -> Set[Tuple[int, int]]:
    """Arestas de g que pertencem ao buraco ou ao antiburaco."""
    if certificate.kind == HOLE:
        pairs = certificate.cycle_pairs()
    else:
        # antiburaco: arestas de g entre vértices não consecutivos do ciclo
        consecutive = {frozenset(p) for p in certificate.cycle_pairs()}
        pairs = [p for p in combinations(certificate.cycle, 2) if frozenset(p) not in consecutive]
    return {(min(u, v), max(u, v)) for u, v in pairs if g.adjacent(u, v)}


def export_dot(g: PrimeGraph, highlight: Optional[HoleCertificate] = None) -> str:
    """
    Gera a descrição DOT não direcionada de g.

    Vértices e arestas saem em ordem crescente; os do certificado recebem
    color=red e penwidth=2.

    Args:
        g: Grafo
        highlight: Certificado de buraco ou antiburaco a destacar

    Returns:
        Texto DOT
    """
    marked_vertices: Set[int] = set()
    marked_edges: Set[Tuple[int, int]] = set()
    if highlight is not None:
        if not certificate_is_valid(g, highlight):
            raise DomainError(f"Certificado {highlight.kind} {list(highlight.cycle)} não é válido para o grafo")
        marked_vertices = set(highlight.cycle)
        marked_edges = _highlighted_edges(g, highlight)

    dot = graphviz.Graph(name="Delta")
    for v in g.vertices:
        if v in marked_vertices:
            dot.node(str(v), **HIGHLIGHT)
        else:
            dot.node(str(v))
    for u, v in g.edges:
        if (u, v) in marked_edges:
            dot.edge(str(u), str(v), **HIGHLIGHT)
        else:
            dot.edge(str(u), str(v))
    return dot.source


def write_dot(path: Union[str, Path], g: PrimeGraph, highlight: Optional[HoleCertificate] = None) -> None:
    """Grava o texto DOT de g no caminho indicado."""
    Path(path).write_text(export_dot(g, highlight), encoding="utf-8")
    logger.info(f"DOT gravado em {path}")
