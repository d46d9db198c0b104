"""
Exceções do verificador de grafos de graus de caracteres.
"""

from typing import Optional


class CharacterGraphError(Exception):
    """Erro base de todas as operações do pacote."""


class DomainError(CharacterGraphError, ValueError):
    """Pré-condição violada (vértices fora do grafo, conjuntos sobrepostos, q inválido...)."""


class CapacityError(CharacterGraphError):
    """Instância acima do limite do solver, do oráculo ou da aritmética de 128 bits."""


class InvalidDataError(CharacterGraphError, ValueError):
    """Arquivo bem formado, mas com conteúdo inválido (grau não positivo, lista vazia...)."""


class ParseError(CharacterGraphError):
    """Arquivo malformado; guarda a linha e a coluna do problema."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (linha {line}, coluna {column})"
        super().__init__(message)
