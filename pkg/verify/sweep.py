"""
Varreduras em lote: famílias PSL2(q), S_n, conjuntos ingeridos e o harness
de produtos diretos.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from data.models import VerificationReport
from families.psl2 import prime_powers, psl2_spec_from_q, psl2_graph, psl2_case, CASE_Q5, OUTSIDE_HYPOTHESES_NOTE
from families.symmetric import sn_degrees
from degrees.character_graph import character_graph
from storage.files import load_degree_set
from verify.agent import VerificationInstance, run_verification_agent, DEFAULT_CHECKS
from verify.checks import PALFY, COROLLARY_B_CHAIN, PSL2_STRUCTURE, SOLVABLE_BIPARTITE
from verify.harness import run_join_formula_harness
from utils.errors import CharacterGraphError, DomainError
from utils.settings import SN_MAX_N, DEFAULT_SEED, get_workers

logger = logging.getLogger(__name__)

FAMILIES = ("psl2", "sn", "ingested", "products")


@dataclass
class SweepOutcome:
    """Relatórios de uma varredura, na ordem determinística das instâncias."""
    family: str
    reports: List[VerificationReport] = field(default_factory=list)
    strict: bool = False

    @property
    def failures(self) -> int:
        return sum(1 for r in self.reports if r.summary == "fail")

    @property
    def defects(self) -> List[VerificationReport]:
        """Falhas em instâncias derivadas de grupos (não controles negativos)."""
        return [r for r in self.reports if r.is_defect]

    @property
    def failed(self) -> bool:
        if self.strict:
            return self.failures > 0
        return bool(self.defects)


def _checks(include_palfy: bool, *extra: str):
    return DEFAULT_CHECKS + extra + ((PALFY,) if include_palfy else ())


def psl2_instances(q_min: int, q_max: int, include_palfy: bool = False) -> List[VerificationInstance]:
    """
    Instâncias PSL2(q) para toda potência de primo em [q_min, q_max].

    Args:
        q_min: Menor q (>= 4)
        q_max: Maior q

    Returns:
        Lista de instâncias em ordem crescente de q
    """
    if q_min < 4 or q_max < q_min:
        raise DomainError(f"Intervalo inválido para psl2: q em [{q_min}, {q_max}] (exige 4 <= q_min <= q_max)")

    instances = []
    for q in prime_powers(q_min, q_max):
        spec = psl2_spec_from_q(q)
        annotations = {"group_realizable": True}
        if psl2_case(spec) == CASE_Q5:
            annotations["source"] = OUTSIDE_HYPOTHESES_NOTE
        instances.append(VerificationInstance(
            name=spec.name,
            graph=psl2_graph(spec),
            family="psl2",
            psl2_spec=spec,
            annotations=annotations,
            checks=_checks(include_palfy, COROLLARY_B_CHAIN, PSL2_STRUCTURE),
        ))
    return instances


def sn_instances(n_min: int, n_max: int, include_palfy: bool = False) -> List[VerificationInstance]:
    """Instâncias Delta(S_n) para n em [n_min, n_max]; S_n é solúvel para n <= 4."""
    if n_min < 1 or n_max > SN_MAX_N or n_max < n_min:
        raise DomainError(f"Intervalo inválido para sn: n em [{n_min}, {n_max}] (exige 1 <= n_min <= n_max <= {SN_MAX_N})")

    instances = []
    for n in range(n_min, n_max + 1):
        degrees = sn_degrees(n)
        instances.append(VerificationInstance(
            name=degrees.name,
            graph=character_graph(degrees),
            family="sn",
            degree_set=degrees,
            annotations={"group_realizable": True, "solvable": n <= 4},
            checks=_checks(include_palfy, COROLLARY_B_CHAIN, SOLVABLE_BIPARTITE),
        ))
    return instances


def ingested_instances(directory: str, include_palfy: bool = False) -> List[VerificationInstance]:
    """
    Instâncias a partir de um diretório de arquivos de graus (*.json).

    Args:
        directory: Diretório com os arquivos

    Returns:
        Instâncias em ordem alfabética de arquivo
    """
    root = Path(directory)
    if not root.is_dir():
        raise DomainError(f"Diretório não encontrado: {directory}")

    instances = []
    for path in sorted(root.glob("*.json")):
        degrees, annotations = load_degree_set(path)
        instances.append(VerificationInstance(
            name=degrees.name,
            graph=character_graph(degrees),
            family="ingested",
            degree_set=degrees,
            annotations=annotations,
            checks=_checks(include_palfy, COROLLARY_B_CHAIN, SOLVABLE_BIPARTITE),
        ))
    logger.info(f"{len(instances)} conjuntos de graus carregados de {directory}")
    return instances


def verify_instance(instance: VerificationInstance) -> VerificationReport:
    """Executa o agente e devolve o relatório, levantando erro se o agente falhar."""
    result = run_verification_agent(instance)
    if not result.get("success", False):
        raise CharacterGraphError(result.get("error", f"Falha ao verificar {instance.name}"))
    return result["report"]


def run_instances(instances: List[VerificationInstance], workers: Optional[int] = None) -> List[VerificationReport]:
    """
    Verifica as instâncias, em paralelo quando workers > 1.

    A ordem dos relatórios é sempre a ordem das instâncias.
    """
    workers = get_workers(workers)
    if workers == 1 or len(instances) <= 1:
        return [verify_instance(instance) for instance in instances]

    logger.info(f"Verificando {len(instances)} instâncias com {workers} processos")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(verify_instance, instances, chunksize=16))


def sweep(
    family: str,
    q_min: int = 4,
    q_max: Optional[int] = None,
    n_min: int = 1,
    n_max: Optional[int] = None,
    directory: Optional[str] = None,
    pairs: int = 100,
    seed: int = DEFAULT_SEED,
    include_palfy: bool = False,
    workers: Optional[int] = None,
    strict: bool = False,
) -> SweepOutcome:
    """
    Executa uma varredura de verificação.

    Args:
        family: psl2, sn, ingested ou products
        q_min, q_max: Intervalo de q (psl2)
        n_min, n_max: Intervalo de n (sn)
        directory: Diretório de conjuntos de graus (ingested)
        pairs, seed: Parâmetros do harness (products)
        include_palfy: Inclui a condição de Pálfy
        workers: Grau de paralelismo
        strict: Controles negativos também contam como falha do processo

    Returns:
        SweepOutcome com os relatórios
    """
    if family == "psl2":
        if q_max is None:
            raise DomainError("psl2 exige q_max")
        instances = psl2_instances(q_min, q_max, include_palfy)
    elif family == "sn":
        if n_max is None:
            raise DomainError("sn exige n_max")
        instances = sn_instances(n_min, n_max, include_palfy)
    elif family == "ingested":
        if directory is None:
            raise DomainError("ingested exige um diretório")
        instances = ingested_instances(directory, include_palfy)
    elif family == "products":
        if pairs < 0:
            raise DomainError(f"Quantidade de pares inválida: {pairs}")
        return SweepOutcome(family=family, reports=[run_join_formula_harness(pairs, seed)], strict=strict)
    else:
        raise DomainError(f"Família desconhecida: {family!r} (esperado uma de {', '.join(FAMILIES)})")

    outcome = SweepOutcome(family=family, reports=run_instances(instances, workers), strict=strict)
    logger.info(f"Varredura {family}: {len(outcome.reports)} instâncias, {outcome.failures} falhas")
    return outcome
