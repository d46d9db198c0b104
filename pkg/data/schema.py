"""
Módulo para definição de esquemas de validação usando Pydantic.
"""

from typing import List, Dict, Any, Optional, Tuple, Literal

from pydantic import BaseModel, ConfigDict, StrictBool, StrictInt, field_validator


class DegreeSetAnnotationsSchema(BaseModel):
    """Esquema para as anotações de um conjunto de graus."""
    model_config = ConfigDict(extra="forbid")

    solvable: Optional[StrictBool] = None
    group_realizable: Optional[StrictBool] = None
    source: Optional[str] = None


class DegreeSetFileSchema(BaseModel):
    """Esquema para validação de arquivos de conjuntos de graus."""
    name: Optional[str] = None
    degrees: List[StrictInt]
    annotations: Optional[DegreeSetAnnotationsSchema] = None

    @field_validator('degrees')
    @classmethod
    def degrees_must_be_positive(cls, v):
        if not v:
            raise ValueError('A lista de graus não pode ser vazia')
        non_positive = [d for d in v if d < 1]
        if non_positive:
            raise ValueError(f'Os graus devem ser positivos: {non_positive}')
        return v


class GraphFileSchema(BaseModel):
    """Esquema para validação de arquivos de grafos."""
    vertices: List[StrictInt]
    edges: List[Tuple[StrictInt, StrictInt]] = []


class CheckResultSchema(BaseModel):
    """Esquema para uma entrada do relatório."""
    check_id: str
    status: Literal["pass", "fail", "skipped"]
    certificate: Optional[Dict[str, Any]] = None
    note: Optional[str] = None
    conclusive: bool = True


class VerificationReportSchema(BaseModel):
    """Esquema para os registros de relatório gravados com --report."""
    instance_name: str
    family: str
    summary: Literal["pass", "fail"]
    group_realizable: Optional[bool] = None
    note: Optional[str] = None
    checks: List[CheckResultSchema]
