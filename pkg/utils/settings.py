"""
Configuração do verificador: limites dos solvers e paralelismo das varreduras.
"""

import os
import logging

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# Carregar variáveis de ambiente
load_dotenv()

# Limites exatos (número de vértices)
SOLVER_CAP = 24
ORACLE_CAP = 12

# Busca de certificados de ciclo: u^alpha com alpha <= 64
ALPHA_SEARCH_BOUND = 64

# Gerador de graus de S_n
SN_MAX_N = 20

# Graus e produtos de graus cabem em 128 bits
DEGREE_BIT_LIMIT = 128
DEGREE_LIMIT = 1 << DEGREE_BIT_LIMIT

# Semente do harness de produtos diretos
DEFAULT_SEED = 20240417

WORKERS_ENV_VAR = "CHARGRAPH_WORKERS"


def get_workers(override: int = None) -> int:
    """
    Obtém o grau de paralelismo das varreduras.

    Args:
        override: Valor explícito (flag --workers); tem prioridade sobre o ambiente

    Returns:
        Número de processos (>= 1)
    """
    if override is not None:
        return max(1, override)

    raw = os.getenv(WORKERS_ENV_VAR)
    if not raw:
        return 1

    try:
        workers = int(raw)
    except ValueError:
        logger.warning(f"Valor inválido em {WORKERS_ENV_VAR}: {raw!r}. Usando 1 processo.")
        return 1

    if workers < 1:
        logger.warning(f"{WORKERS_ENV_VAR} deve ser >= 1 (recebido {workers}). Usando 1 processo.")
        return 1
    return workers
