"""
Grafos simples com vértices rotulados por primos e as operações básicas:
complemento, subgrafo induzido e join.
"""

import logging
from itertools import combinations
from typing import Iterable, Tuple, FrozenSet, List, Optional

import networkx as nx
from sympy import isprime

from utils.errors import DomainError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class PrimeGraph:
    """
    Grafo simples imutável sobre primos.

    A igualdade é igualdade de rótulos (mesmo conjunto de vértices e mesmas
    arestas), nunca isomorfismo.
    """

    __slots__ = ("_graph",)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Tuple[int, int]] = ()):
        """
        Inicializa o grafo validando os invariantes.

        Args:
            vertices: Primos que rotulam os vértices
            edges: Pares de vértices distintos já presentes em vertices
        """
        vertex_set = set(vertices)
        for v in vertex_set:
            if not isinstance(v, int) or isinstance(v, bool) or not isprime(v):
                raise DomainError(f"Rótulo de vértice não primo: {v!r}")

        edge_set = set()
        for u, v in edges:
            if u == v:
                raise DomainError(f"Laço no vértice {u} não é permitido")
            missing = [x for x in (u, v) if x not in vertex_set]
            if missing:
                raise DomainError(f"Aresta {u}-{v} usa vértices inexistentes: {missing}")
            edge_set.add(_normalize_edge(u, v))

        graph = nx.Graph()
        graph.add_nodes_from(sorted(vertex_set))
        graph.add_edges_from(sorted(edge_set))
        self._graph = nx.freeze(graph)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "PrimeGraph":
        return cls(graph.nodes, graph.edges)

    @classmethod
    def complete(cls, vertices: Iterable[int]) -> "PrimeGraph":
        vs = sorted(set(vertices))
        return cls(vs, combinations(vs, 2))

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(self._graph.nodes))

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(_normalize_edge(u, v) for u, v in self._graph.edges))

    @property
    def nx_graph(self) -> nx.Graph:
        """Visão networkx congelada (somente leitura)."""
        return self._graph

    def adjacent(self, u: int, v: int) -> bool:
        return self._graph.has_edge(u, v)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset(self._graph.adj[v])

    def degree(self, v: int) -> int:
        return self._graph.degree[v]

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __contains__(self, v: object) -> bool:
        return v in self._graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimeGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __reduce__(self):
        return (PrimeGraph, (self.vertices, self.edges))

    def __repr__(self) -> str:
        edges = ", ".join(f"{u}-{v}" for u, v in self.edges)
        return f"PrimeGraph(vertices={list(self.vertices)}, edges=[{edges}])"


def complement(g: PrimeGraph) -> PrimeGraph:
    """Complemento: mesmos vértices, pares distintos adjacentes sse não adjacentes em g."""
    return PrimeGraph.from_networkx(nx.complement(g.nx_graph))


def induced(g: PrimeGraph, subset: Iterable[int]) -> PrimeGraph:
    """
    Subgrafo induzido g[X].

    Args:
        g: Grafo de origem
        subset: Conjunto X de vértices de g

    Returns:
        Grafo com vértices X e as arestas de g entre eles
    """
    chosen = set(subset)
    offending = sorted(x for x in chosen if x not in g)
    if offending:
        raise DomainError(f"Primos fora de V(g) no subgrafo induzido: {offending}")
    return PrimeGraph.from_networkx(g.nx_graph.subgraph(chosen))


def join(g: PrimeGraph, h: PrimeGraph) -> PrimeGraph:
    """Join g * h: união disjunta mais todas as arestas entre V(g) e V(h)."""
    overlap = sorted(set(g.vertices) & set(h.vertices))
    if overlap:
        raise DomainError(f"Join exige conjuntos de vértices disjuntos; em comum: {overlap}")
    union = nx.union(g.nx_graph, h.nx_graph)
    union.add_edges_from((u, v) for u in g.vertices for v in h.vertices)
    return PrimeGraph.from_networkx(union)


def join_graphs_formula(g: PrimeGraph, h: PrimeGraph) -> PrimeGraph:
    """
    Grafo do produto direto a partir dos dois grafos de caracteres.

    Com F = V(g) ∩ V(h), devolve K_F * g[V(g) - F] * h[V(h) - F].

    Args:
        g: Grafo de caracteres do primeiro fator
        h: Grafo de caracteres do segundo fator

    Returns:
        Grafo do produto
    """
    shared = set(g.vertices) & set(h.vertices)
    left = induced(g, set(g.vertices) - shared)
    right = induced(h, set(h.vertices) - shared)
    return join(join(PrimeGraph.complete(shared), left), right)


def connected_components(g: PrimeGraph) -> List[Tuple[int, ...]]:
    """Componentes conexas, cada uma ordenada, listadas pelo menor elemento."""
    return sorted(tuple(sorted(c)) for c in nx.connected_components(g.nx_graph))


def is_complete(g: PrimeGraph) -> bool:
    n = len(g)
    return g.nx_graph.number_of_edges() == n * (n - 1) // 2


def is_independent(g: PrimeGraph, subset: Iterable[int]) -> bool:
    return not any(g.adjacent(u, v) for u, v in combinations(sorted(set(subset)), 2))


def is_clique(g: PrimeGraph, subset: Iterable[int]) -> bool:
    return all(g.adjacent(u, v) for u, v in combinations(sorted(set(subset)), 2))


def induced_cycle_order(g: PrimeGraph, subset: Iterable[int]) -> Optional[List[int]]:
    """
    Ordem cíclica de g[X] quando esse subgrafo é um ciclo.

    O ciclo começa no menor vértice e segue pelo menor vizinho.

    Args:
        g: Grafo
        subset: Vértices X (pelo menos 3)

    Returns:
        Lista de vértices em ordem cíclica, ou None se g[X] não é um ciclo
    """
    sub = induced(g, subset)
    if len(sub) < 3 or not nx.is_connected(sub.nx_graph):
        return None
    if any(sub.degree(v) != 2 for v in sub.vertices):
        return None

    start = sub.vertices[0]
    order = [start]
    previous, current = start, min(sub.neighbors(start))
    while current != start:
        order.append(current)
        nxt = next(w for w in sorted(sub.neighbors(current)) if w != previous)
        previous, current = current, nxt
    return order
