"""
Leitura e gravação dos arquivos JSON de conjuntos de graus, grafos e relatórios.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError

from data.models import DegreeSet, VerificationReport
from data.schema import (
    DegreeSetFileSchema, GraphFileSchema, CheckResultSchema, VerificationReportSchema,
)
from degrees.character_graph import character_graph
from graphs.prime_graph import PrimeGraph
from utils.errors import DomainError, InvalidDataError, ParseError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


@dataclass
class LoadedInstance:
    """Conteúdo de um arquivo de entrada: grafo, graus (se houver) e anotações."""
    name: str
    graph: PrimeGraph
    degree_set: Optional[DegreeSet] = None
    annotations: Dict[str, Any] = field(default_factory=dict)


def _dumps(payload: Any) -> str:
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _read_json(path: PathLike) -> Dict[str, Any]:
    """
    Lê um arquivo JSON cujo topo é um objeto.

    Args:
        path: Caminho do arquivo

    Returns:
        Objeto decodificado
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON malformado em {path}: {e.msg}", e.lineno, e.colno) from e

    if not isinstance(payload, dict):
        raise InvalidDataError(f"Esperado um objeto JSON no topo de {path}")
    return payload


def _validate(schema: type, payload: Dict[str, Any], path: PathLike) -> BaseModel:
    try:
        return schema.model_validate(payload)
    except ValidationError as e:
        raise InvalidDataError(f"Conteúdo inválido em {path}: {e}") from e


def _degree_set_from_payload(payload: Dict[str, Any], path: PathLike) -> Tuple[DegreeSet, Dict[str, Any]]:
    parsed = _validate(DegreeSetFileSchema, payload, path)
    name = parsed.name or Path(path).stem

    if len(set(parsed.degrees)) != len(parsed.degrees):
        logger.warning(f"Graus duplicados em {name} foram colapsados: {parsed.degrees}")

    annotations = parsed.annotations.model_dump(exclude_none=True) if parsed.annotations else {}
    return DegreeSet(name=name, degrees=tuple(parsed.degrees)), annotations


def _graph_from_payload(payload: Dict[str, Any], path: PathLike) -> PrimeGraph:
    parsed = _validate(GraphFileSchema, payload, path)
    try:
        return PrimeGraph(parsed.vertices, parsed.edges)
    except DomainError as e:
        raise InvalidDataError(f"Grafo inválido em {path}: {e}") from e


def load_degree_set(path: PathLike) -> Tuple[DegreeSet, Dict[str, Any]]:
    """
    Carrega um conjunto de graus com suas anotações.

    Args:
        path: Caminho do arquivo

    Returns:
        Tupla (DegreeSet, anotações)
    """
    degree_set, annotations = _degree_set_from_payload(_read_json(path), path)
    logger.info(f"Conjunto de graus {degree_set.name} carregado de {path}")
    return degree_set, annotations


def degree_set_to_payload(d: DegreeSet, annotations: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"name": d.name, "degrees": list(d.degrees)}
    if annotations:
        payload["annotations"] = {k: annotations[k] for k in sorted(annotations)}
    return payload


def degree_set_to_json(d: DegreeSet, annotations: Optional[Dict[str, Any]] = None) -> str:
    return _dumps(degree_set_to_payload(d, annotations))


def save_degree_set(path: PathLike, d: DegreeSet, annotations: Optional[Dict[str, Any]] = None) -> None:
    """
    Grava um conjunto de graus.

    Args:
        path: Caminho do arquivo
        d: Conjunto de graus
        annotations: Anotações opcionais (solvable, group_realizable, source)
    """
    Path(path).write_text(degree_set_to_json(d, annotations), encoding="utf-8")
    logger.info(f"Conjunto de graus {d.name} gravado em {path}")


def graph_to_payload(g: PrimeGraph) -> Dict[str, Any]:
    """Vértices crescentes; arestas com o menor primo primeiro, em ordem lexicográfica."""
    return {"vertices": list(g.vertices), "edges": [[u, v] for u, v in g.edges]}


def graph_to_json(g: PrimeGraph) -> str:
    return _dumps(graph_to_payload(g))


def save_graph(path: PathLike, g: PrimeGraph) -> None:
    """
    Grava um grafo.

    Args:
        path: Caminho do arquivo
        g: Grafo
    """
    Path(path).write_text(graph_to_json(g), encoding="utf-8")
    logger.info(f"Grafo com {len(g)} vértices gravado em {path}")


def load_graph(path: PathLike) -> PrimeGraph:
    """
    Carrega um grafo gravado por save_graph.

    Args:
        path: Caminho do arquivo

    Returns:
        PrimeGraph validado
    """
    return _graph_from_payload(_read_json(path), path)


def load_instance(path: PathLike) -> LoadedInstance:
    """
    Carrega um arquivo de conjunto de graus (chave "degrees") ou de grafo
    (chave "vertices").

    Args:
        path: Caminho do arquivo

    Returns:
        LoadedInstance com o grafo de caracteres já construído
    """
    payload = _read_json(path)
    if "degrees" in payload:
        degree_set, annotations = _degree_set_from_payload(payload, path)
        return LoadedInstance(
            name=degree_set.name,
            graph=character_graph(degree_set),
            degree_set=degree_set,
            annotations=annotations,
        )
    if "vertices" in payload:
        return LoadedInstance(name=Path(path).stem, graph=_graph_from_payload(payload, path))
    raise InvalidDataError(f"{path} não é um arquivo de graus nem de grafo (faltam 'degrees' e 'vertices')")


def report_to_payload(report: VerificationReport) -> Dict[str, Any]:
    schema = VerificationReportSchema(
        instance_name=report.instance_name,
        family=report.family,
        summary=report.summary,
        group_realizable=report.group_realizable,
        note=report.note,
        checks=[
            CheckResultSchema(
                check_id=c.check_id,
                status=c.status,
                certificate=c.certificate,
                note=c.note,
                conclusive=c.conclusive,
            )
            for c in report.checks
        ],
    )
    return schema.model_dump(mode="json")


def save_reports(path: PathLike, reports: Iterable[VerificationReport]) -> None:
    """
    Grava os relatórios como uma lista JSON, na ordem recebida.

    Args:
        path: Caminho do arquivo
        reports: Relatórios
    """
    payload = [report_to_payload(r) for r in reports]
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    logger.info(f"{len(payload)} relatórios gravados em {path}")
