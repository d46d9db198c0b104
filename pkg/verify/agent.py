"""
Agente de verificação: fluxo LangGraph que aplica as verificações a uma instância.
"""

import dataclasses
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Tuple, TypedDict

from langgraph.graph import StateGraph, END

from data.models import CheckResult, DegreeSet, Psl2Spec, VerificationReport, FAIL
from graphs.prime_graph import PrimeGraph
from verify.checks import (
    THEOREM_A, COROLLARY_B, COROLLARY_B_CHAIN, PALFY, MORETO_TIEP,
    SOLVABLE_BIPARTITE, PSL2_STRUCTURE,
    check_theorem_A, check_corollary_B, check_corollary_b_chain, check_palfy,
    check_moreto_tiep, check_solvable_bipartite, check_psl2_structure,
)

logger = logging.getLogger(__name__)

DEFAULT_CHECKS = (THEOREM_A, COROLLARY_B, MORETO_TIEP)

NOT_REALIZABLE_NOTE = "not group-realizable"


@dataclass(frozen=True)
class VerificationInstance:
    """Uma instância a verificar: grafo, graus (se houver) e anotações."""
    name: str
    graph: PrimeGraph
    family: str = "ingested"
    degree_set: Optional[DegreeSet] = None
    psl2_spec: Optional[Psl2Spec] = None
    annotations: Dict[str, Any] = field(default_factory=dict)
    checks: Tuple[str, ...] = DEFAULT_CHECKS

    @property
    def group_realizable(self) -> Optional[bool]:
        return self.annotations.get("group_realizable")

    @property
    def solvable(self) -> Optional[bool]:
        return self.annotations.get("solvable")


# Definir o schema de estado
class VerificationState(TypedDict):
    """Estado do agente de verificação."""
    instance: VerificationInstance
    checks: List[CheckResult]
    error: Optional[str]


def _run_theorem_a(instance: VerificationInstance) -> Optional[CheckResult]:
    return check_theorem_A(instance.graph)


def _run_corollary_b(instance: VerificationInstance) -> Optional[CheckResult]:
    return check_corollary_B(instance.graph)


def _run_corollary_b_chain(instance: VerificationInstance) -> Optional[CheckResult]:
    return check_corollary_b_chain(instance.graph)


def _run_moreto_tiep(instance: VerificationInstance) -> Optional[CheckResult]:
    return check_moreto_tiep(instance.graph)


def _run_palfy(instance: VerificationInstance) -> Optional[CheckResult]:
    return check_palfy(instance.graph, solvable=instance.solvable)


def _run_solvable_bipartite(instance: VerificationInstance) -> Optional[CheckResult]:
    if instance.solvable:
        return check_solvable_bipartite(instance.graph)
    return None


def _run_psl2_structure(instance: VerificationInstance) -> Optional[CheckResult]:
    if instance.psl2_spec is None:
        return None
    return check_psl2_structure(instance.psl2_spec, instance.graph)


# Ordem das verificações no relatório
PIPELINE: List[Tuple[str, Callable[[VerificationInstance], Optional[CheckResult]]]] = [
    (THEOREM_A, _run_theorem_a),
    (COROLLARY_B, _run_corollary_b),
    (COROLLARY_B_CHAIN, _run_corollary_b_chain),
    (MORETO_TIEP, _run_moreto_tiep),
    (PALFY, _run_palfy),
    (SOLVABLE_BIPARTITE, _run_solvable_bipartite),
    (PSL2_STRUCTURE, _run_psl2_structure),
]


def _make_node(check_id: str, runner: Callable[[VerificationInstance], Optional[CheckResult]]):
    """Cria o nó do grafo de estado para uma verificação."""

    def node(state: VerificationState) -> VerificationState:
        instance = state["instance"]
        if state.get("error") or check_id not in instance.checks:
            return state
        try:
            entry = runner(instance)
            checks = list(state["checks"])
            if entry is not None:
                checks.append(entry)
                logger.info(f"{instance.name}: {check_id} -> {entry.status}")
            return {"instance": instance, "checks": checks, "error": None}
        except Exception as e:
            error_message = f"Erro em {check_id} para {instance.name}: {str(e)}"
            logger.error(error_message)
            return {"instance": instance, "checks": state["checks"], "error": error_message}

    return node


def annotate_failures(state: VerificationState) -> VerificationState:
    """
    Marca falhas esperadas de controles negativos.

    Args:
        state: Estado atual

    Returns:
        Estado atualizado
    """
    instance = state["instance"]
    if instance.group_realizable is not False:
        return state
    checks = []
    for entry in state["checks"]:
        if entry.status == FAIL:
            note = f"{entry.note}; {NOT_REALIZABLE_NOTE}" if entry.note else NOT_REALIZABLE_NOTE
            entry = dataclasses.replace(entry, note=note)
        checks.append(entry)
    return {"instance": instance, "checks": checks, "error": state.get("error")}


@lru_cache(maxsize=1)
def create_graph():
    """
    Cria o grafo de estado para o agente de verificação.

    Returns:
        Grafo de estado compilado
    """
    workflow = StateGraph(VerificationState)

    previous = None
    for check_id, runner in PIPELINE:
        workflow.add_node(check_id, _make_node(check_id, runner))
        if previous is None:
            workflow.set_entry_point(check_id)
        else:
            workflow.add_edge(previous, check_id)
        previous = check_id

    workflow.add_node("annotate_failures", annotate_failures)
    workflow.add_edge(previous, "annotate_failures")
    workflow.add_edge("annotate_failures", END)

    return workflow.compile()


def run_verification_agent(instance: VerificationInstance) -> Dict[str, Any]:
    """
    Executa o agente de verificação para uma instância.

    Args:
        instance: Instância a verificar

    Returns:
        Dicionário com resultado da operação e o relatório
    """
    try:
        graph = create_graph()
        result = graph.invoke({"instance": instance, "checks": [], "error": None})

        if result.get("error"):
            return {"success": False, "error": result["error"]}

        report = VerificationReport(
            instance_name=instance.name,
            checks=list(result["checks"]),
            family=instance.family,
            group_realizable=instance.group_realizable,
            note=instance.annotations.get("source"),
        )
        return {"success": True, "report": report}
    except Exception as e:
        error_message = f"Erro ao executar agente de verificação: {str(e)}"
        logger.exception(error_message)
        return {"success": False, "error": error_message}
