"""
Formatação das saídas da linha de comando: estatísticas de um grafo,
entradas de relatório e linhas de varredura (registros chave=valor).
"""

import json
import logging
from typing import Any, Dict, List, Mapping

from data.models import CheckResult, VerificationReport, FAIL

logger = logging.getLogger(__name__)


def _json(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _primes(values) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def format_coloring(coloring: Mapping[Any, int]) -> str:
    """Coloração como "v:cor" em ordem crescente de vértice."""
    items = sorted((int(v), c) for v, c in coloring.items())
    return ",".join(f"{v}:{c}" for v, c in items)


def format_stats(stats: Dict[str, Any]) -> List[str]:
    """
    Formata as estatísticas de um grafo.

    Args:
        stats: Dicionário produzido pelo comando stats

    Returns:
        Linhas de saída
    """
    lines = [
        f"instance={stats['name']}",
        f"vertices={_primes(stats['vertices'])}",
        "edges=[" + ",".join(f"[{u},{v}]" for u, v in stats["edges"]) + "]",
        f"omega={stats['omega']} clique={_primes(stats['clique'])}",
        f"chi={stats['chi']} coloring={format_coloring(stats['coloring'])}",
        f"alpha={stats['alpha']} independent_set={_primes(stats['independent_set'])}",
        f"chi_complement={stats['chi_complement']} coloring={format_coloring(stats['complement_coloring'])}",
    ]
    if stats["perfect"]:
        lines.append("perfect=yes")
    else:
        lines.append(f"perfect=no certificate={_json(stats['certificate'])}")
    return lines


def format_check(entry: CheckResult) -> str:
    """Uma entrada do relatório em uma linha."""
    parts = [f"check={entry.check_id}", f"status={entry.status}"]
    if entry.note:
        parts.append(f"note={_json(entry.note)}")
    if entry.certificate is not None:
        parts.append(f"certificate={_json(entry.certificate)}")
    return " ".join(parts)


def format_report(report: VerificationReport) -> List[str]:
    """
    Formata um relatório completo (comando check).

    Args:
        report: Relatório da instância

    Returns:
        Linhas: uma por verificação e o resumo
    """
    lines = [format_check(entry) for entry in report.checks]
    lines.append(f"summary={report.summary}")
    return lines


def format_sweep_line(report: VerificationReport) -> str:
    """
    Registro de uma instância da varredura.

    Args:
        report: Relatório da instância

    Returns:
        Linha chave=valor
    """
    parts = [f"instance={report.instance_name}", f"family={report.family}", f"summary={report.summary}"]
    if report.family == "products":
        # um par por entrada
        parts.append(f"pairs={len(report.checks)} failed={len(report.failed_checks)}")
    else:
        parts.extend(f"{entry.check_id}={entry.status}" for entry in report.checks)
    if report.group_realizable is False:
        parts.append("group_realizable=false")
    if report.note:
        parts.append(f"note={_json(report.note)}")
    return " ".join(parts)


def format_sweep(reports: List[VerificationReport]) -> List[str]:
    """
    Linhas da varredura: um registro por instância, as falhas detalhadas
    logo abaixo (indentadas) e o resumo final.

    Args:
        reports: Relatórios em ordem determinística

    Returns:
        Linhas de saída
    """
    lines = []
    failures = 0
    for report in reports:
        lines.append(format_sweep_line(report))
        if report.summary == FAIL:
            failures += 1
            lines.extend(f"  {format_check(entry)}" for entry in report.failed_checks)
    lines.append(f"instances={len(reports)}, failures={failures}")
    return lines
