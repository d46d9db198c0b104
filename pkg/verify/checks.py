"""
Verificações executáveis sobre grafos de caracteres, cada uma devolvendo uma
entrada de relatório com certificado em caso de falha.
"""

import logging
from typing import Any, Dict, List, Optional, Union

import networkx as nx

from data.models import (
    CheckResult, DegreeSet, HoleCertificate, Psl2Spec,
    PASS, FAIL, SKIPPED, HOLE, ANTIHOLE,
)
from degrees.character_graph import character_graph, product_degrees, join_formula_graph
from families.psl2 import psl2_components, psl2_graph, psl2_case, CASE_Q5, OUTSIDE_HYPOTHESES_NOTE
from graphs.perfection import is_perfect, find_odd_hole, certificate_is_valid
from graphs.prime_graph import (
    PrimeGraph, complement, connected_components, is_complete, induced,
    is_independent, is_clique, join_graphs_formula,
)
from graphs.solvers import (
    chromatic_number, clique_number, independence_number,
    maximum_independent_set, maximum_clique, is_proper_coloring,
)

logger = logging.getLogger(__name__)

THEOREM_A = "theorem-a"
COROLLARY_B = "corollary-b"
COROLLARY_B_CHAIN = "corollary-b-chain"
PALFY = "palfy"
MORETO_TIEP = "moreto-tiep"
SOLVABLE_BIPARTITE = "solvable-bipartite"
PSL2_STRUCTURE = "psl2-structure"
CASE_TWO_STRUCTURE = "case-two-structure"
JOIN_FORMULA = "join-formula"

TIGHTNESS_NOTE = "derived tightness witness"

GraphSource = Union[DegreeSet, PrimeGraph]


def _as_graph(source: GraphSource) -> PrimeGraph:
    if isinstance(source, DegreeSet):
        return character_graph(source)
    return source


def check_theorem_A(g: PrimeGraph) -> CheckResult:
    """
    Delta é perfeito.

    Args:
        g: Grafo de caracteres

    Returns:
        Entrada pass, ou fail com o buraco/antiburaco como certificado
    """
    verdict = is_perfect(g)
    if verdict.perfect:
        return CheckResult(check_id=THEOREM_A, status=PASS)
    certificate = verdict.certificate
    return CheckResult(
        check_id=THEOREM_A,
        status=FAIL,
        certificate=certificate.to_payload(),
        note=f"odd {certificate.kind} of length {certificate.length}",
    )


def check_corollary_B(g: PrimeGraph) -> CheckResult:
    """
    chi(complemento de Delta) <= 3, com a coloração como certificado.

    Args:
        g: Grafo de caracteres (complemento dentro do limite do solver)

    Returns:
        Entrada do relatório
    """
    co = complement(g)
    coloring = chromatic_number(co)
    payload = coloring.to_payload()

    if coloring.chi <= 3:
        note = None
        if coloring.chi == 3:
            payload["clique"] = maximum_clique(co)
            if len(payload["clique"]) == 3:
                note = TIGHTNESS_NOTE
        return CheckResult(check_id=COROLLARY_B, status=PASS, certificate=payload, note=note)

    payload["clique"] = maximum_clique(co)
    note = f"chi(complement)={coloring.chi} > 3"
    if len(payload["clique"]) >= 4:
        note += "; violates Moretó–Tiep"
    return CheckResult(check_id=COROLLARY_B, status=FAIL, certificate=payload, note=note)


def _independence_check(check_id: str, g: PrimeGraph, bound: int) -> CheckResult:
    if len(g) < bound + 1:
        return CheckResult(
            check_id=check_id,
            status=SKIPPED,
            note=f"|rho| = {len(g)} < {bound + 1}",
        )
    witness = maximum_independent_set(g)
    if len(witness) <= bound:
        return CheckResult(check_id=check_id, status=PASS, note=f"alpha={len(witness)}")
    return CheckResult(
        check_id=check_id,
        status=FAIL,
        certificate={"independent_set": witness[:bound + 1]},
        note=f"alpha={len(witness)}",
    )


def check_palfy(source: GraphSource, solvable: Optional[bool] = None) -> CheckResult:
    """
    Condição de Pálfy: entre quaisquer 3 primos de rho, dois são adjacentes.

    A hipótese de solubilidade não se lê de um conjunto de graus; sem
    anotação a verificação é apenas da conclusão.

    Args:
        source: Conjunto de graus ou grafo de caracteres
        solvable: Anotação de solubilidade do grupo de origem, se conhecida

    Returns:
        Entrada do relatório
    """
    result = _independence_check(PALFY, _as_graph(source), bound=2)
    if solvable is None:
        label = "conclusion-only"
    elif solvable:
        label = "hypothesis: solvable"
    else:
        label = "source group non-solvable; failure not a contradiction"
    note = f"{result.note}; {label}" if result.note else label
    return CheckResult(
        check_id=PALFY,
        status=result.status,
        certificate=result.certificate,
        note=note,
        conclusive=solvable is True,
    )


def check_moreto_tiep(source: GraphSource) -> CheckResult:
    """Condição de Moretó–Tiep: alpha(Delta) <= 3."""
    return _independence_check(MORETO_TIEP, _as_graph(source), bound=3)


def check_corollary_b_chain(g: PrimeGraph) -> CheckResult:
    """
    Cadeia do corolário: Delta perfeito implica chi(Delta^c) = omega(Delta^c) = alpha(Delta).

    Args:
        g: Grafo de caracteres

    Returns:
        Entrada do relatório (skipped se Delta não é perfeito)
    """
    if not is_perfect(g).perfect:
        return CheckResult(check_id=COROLLARY_B_CHAIN, status=SKIPPED, note="Delta not perfect")
    co = complement(g)
    chi = chromatic_number(co).chi
    omega = clique_number(co)
    alpha = independence_number(g)
    values = {"chi_complement": chi, "omega_complement": omega, "alpha": alpha}
    if chi == omega == alpha:
        return CheckResult(check_id=COROLLARY_B_CHAIN, status=PASS, note=f"chi=omega=alpha={alpha}")
    return CheckResult(check_id=COROLLARY_B_CHAIN, status=FAIL, certificate=values)


def _shortest_odd_cycle_in_complement(g: PrimeGraph) -> Optional[List[int]]:
    co = complement(g)
    for u, v in co.edges:
        common = sorted(co.neighbors(u) & co.neighbors(v))
        if common:
            return [u, v, common[0]]
    hole = find_odd_hole(co)
    return list(hole.cycle) if hole else None


def check_solvable_bipartite(g: PrimeGraph) -> CheckResult:
    """
    Para grupos solúveis o complemento de Delta é bipartido.

    Args:
        g: Grafo de caracteres de um conjunto anotado como solúvel

    Returns:
        Entrada do relatório; a falha traz um ciclo ímpar do complemento
    """
    if nx.is_bipartite(complement(g).nx_graph):
        return CheckResult(check_id=SOLVABLE_BIPARTITE, status=PASS)
    cycle = _shortest_odd_cycle_in_complement(g)
    return CheckResult(
        check_id=SOLVABLE_BIPARTITE,
        status=FAIL,
        certificate={"odd_cycle": cycle},
        note="complement has an odd cycle",
    )


def check_psl2_structure(spec: Psl2Spec, g: PrimeGraph) -> CheckResult:
    """
    Componentes conexas e completude de Delta(PSL2(q)) conferem com a análise de casos.

    Args:
        spec: Parâmetros da família
        g: Grafo a conferir

    Returns:
        Entrada do relatório
    """
    expected = psl2_components(spec)
    actual = [(component, is_complete(induced(g, component))) for component in connected_components(g)]
    note = OUTSIDE_HYPOTHESES_NOTE if psl2_case(spec) == CASE_Q5 else f"case {psl2_case(spec)}"
    if actual == expected:
        return CheckResult(check_id=PSL2_STRUCTURE, status=PASS, note=note)
    return CheckResult(
        check_id=PSL2_STRUCTURE,
        status=FAIL,
        certificate={
            "expected": [[list(c), complete] for c, complete in expected],
            "actual": [[list(c), complete] for c, complete in actual],
        },
        note=note,
    )


def complement_triangles(g: PrimeGraph) -> List[List[int]]:
    """Triângulos do complemento de g, em ordem lexicográfica."""
    co = complement(g)
    return [
        [u, v, w]
        for u, v in co.edges
        for w in sorted(co.neighbors(u) & co.neighbors(v))
        if w > v
    ]


def check_case_two_structure(first: Psl2Spec, second: Psl2Spec) -> CheckResult:
    """
    Dois triângulos disjuntos do complemento, vindos de dois fatores PSL2,
    ficam completamente ligados no grafo do produto direto.

    Args:
        first: Primeiro fator
        second: Segundo fator

    Returns:
        Entrada do relatório (skipped se não há par de triângulos disjuntos)
    """
    g, h = psl2_graph(first), psl2_graph(second)
    product = join_graphs_formula(g, h)
    pair = next(
        (
            (t1, t2)
            for t1 in complement_triangles(g)
            for t2 in complement_triangles(h)
            if not set(t1) & set(t2)
        ),
        None,
    )
    if pair is None:
        return CheckResult(check_id=CASE_TWO_STRUCTURE, status=SKIPPED, note="no disjoint complement triangles")

    pi1, pi2 = pair
    missing = [[x, y] for x in pi1 for y in pi2 if not product.adjacent(x, y)]
    note = f"pi1={pi1} pi2={pi2}"
    if not missing:
        return CheckResult(check_id=CASE_TWO_STRUCTURE, status=PASS, note=note)
    return CheckResult(
        check_id=CASE_TWO_STRUCTURE,
        status=FAIL,
        certificate={"pi1": pi1, "pi2": pi2, "missing_edges": missing},
        note=note,
    )


def check_join_formula(a: DegreeSet, b: DegreeSet) -> CheckResult:
    """
    Identidade do produto direto no nível dos graus:
    Delta(produto dos graus) == fórmula do join.

    Args:
        a: Graus do primeiro fator
        b: Graus do segundo fator

    Returns:
        Entrada do relatório (skipped se algum lado é {1})
    """
    if a.is_trivial or b.is_trivial:
        logger.warning(f"Par {a.name} x {b.name} ignorado: conjunto de graus {{1}}")
        return CheckResult(check_id=JOIN_FORMULA, status=SKIPPED, note="degree set {1} (abelian shadow)")

    direct = character_graph(product_degrees(a, b))
    formula = join_formula_graph(a, b)
    if direct == formula:
        return CheckResult(check_id=JOIN_FORMULA, status=PASS)

    direct_edges, formula_edges = set(direct.edges), set(formula.edges)
    return CheckResult(
        check_id=JOIN_FORMULA,
        status=FAIL,
        certificate={
            "only_in_product": [list(e) for e in sorted(direct_edges - formula_edges)],
            "only_in_formula": [list(e) for e in sorted(formula_edges - direct_edges)],
            "vertices_product": list(direct.vertices),
            "vertices_formula": list(formula.vertices),
        },
    )


def replay_check(g: PrimeGraph, entry: CheckResult) -> bool:
    """
    Reverifica o certificado de uma entrada com falha contra a instância.

    Args:
        g: Grafo da instância (para join-formula, o grafo do produto dos graus)
        entry: Entrada com status fail

    Returns:
        True se o certificado confirma a falha
    """
    if entry.status != FAIL:
        return False
    payload: Dict[str, Any] = entry.certificate or {}

    if entry.check_id == THEOREM_A:
        certificate = HoleCertificate(kind=payload["kind"], cycle=tuple(payload["cycle"]))
        return certificate.kind in (HOLE, ANTIHOLE) and certificate_is_valid(g, certificate)

    if entry.check_id == COROLLARY_B:
        co = complement(g)
        assignment = {int(v): c for v, c in payload["coloring"].items()}
        if not is_proper_coloring(co, assignment) or len(set(assignment.values())) != payload["chi"]:
            return False
        clique = payload.get("clique", [])
        if len(clique) >= 4 and is_clique(co, clique):
            return True
        return chromatic_number(co).chi == payload["chi"] > 3

    if entry.check_id in (PALFY, MORETO_TIEP):
        witness = payload["independent_set"]
        needed = 3 if entry.check_id == PALFY else 4
        return len(set(witness)) == needed and all(v in g for v in witness) and is_independent(g, witness)

    if entry.check_id == SOLVABLE_BIPARTITE:
        cycle = payload["odd_cycle"]
        k = len(cycle)
        return (
            k % 2 == 1 and len(set(cycle)) == k and all(v in g for v in cycle)
            and all(not g.adjacent(cycle[i], cycle[(i + 1) % k]) for i in range(k))
        )

    if entry.check_id == COROLLARY_B_CHAIN:
        co = complement(g)
        values = (chromatic_number(co).chi, clique_number(co), independence_number(g))
        return len(set(values)) > 1

    if entry.check_id == PSL2_STRUCTURE:
        actual = [[list(c), is_complete(induced(g, c))] for c in connected_components(g)]
        return actual == payload["actual"] and actual != payload["expected"]

    if entry.check_id == CASE_TWO_STRUCTURE:
        return all(not g.adjacent(x, y) for x, y in payload["missing_edges"])

    if entry.check_id == JOIN_FORMULA:
        return (
            all(g.adjacent(u, v) for u, v in payload["only_in_product"])
            and all(not (u in g and v in g and g.adjacent(u, v)) for u, v in payload["only_in_formula"])
        )

    logger.warning(f"Verificação desconhecida no replay: {entry.check_id}")
    return False
