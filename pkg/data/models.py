"""
Módulo para definição de modelos de dados usando dataclasses.
"""

from dataclasses import dataclass, field
from typing import List, Dict, Any, Optional, Tuple, Iterator

from sympy import isprime

from utils.errors import DomainError, InvalidDataError, CapacityError
from utils.settings import DEGREE_LIMIT, DEGREE_BIT_LIMIT

HOLE = "hole"
ANTIHOLE = "antihole"

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

VARIANTS = ("SL2", "PSL2")


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class PrimeSet:
    """Conjunto finito de primos, ordenado de forma crescente (rho(G), pi(n))."""
    primes: Tuple[int, ...] = ()

    def __post_init__(self):
        normalized = tuple(sorted(set(self.primes)))
        for p in normalized:
            if not _is_int(p) or not isprime(p):
                raise DomainError(f"Rótulo não primo em PrimeSet: {p!r}")
        object.__setattr__(self, "primes", normalized)

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p: object) -> bool:
        return p in self.primes

    def union(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(self.primes + tuple(other))

    def difference(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(tuple(p for p in self.primes if p not in other))


@dataclass(frozen=True)
class DegreeSet:
    """Conjunto de graus de caracteres cd(G) com um nome curto."""
    name: str
    degrees: Tuple[int, ...]

    def __post_init__(self):
        values = list(self.degrees)
        if not values:
            raise InvalidDataError(f"Conjunto de graus '{self.name}' vazio")
        for value in values:
            if not _is_int(value):
                raise InvalidDataError(f"Grau não inteiro em '{self.name}': {value!r}")
            if value < 1:
                raise InvalidDataError(f"Grau não positivo em '{self.name}': {value}")
            if value >= DEGREE_LIMIT:
                raise CapacityError(f"Grau acima de {DEGREE_BIT_LIMIT} bits em '{self.name}'")
        object.__setattr__(self, "degrees", tuple(sorted(set(values))))

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    @property
    def is_trivial(self) -> bool:
        """Conjunto {1}: a sombra de um grupo abeliano no nível dos graus."""
        return self.degrees == (1,)


@dataclass(frozen=True)
class HoleCertificate:
    """Buraco ímpar induzido (hole) ou seu complemento (antihole)."""
    kind: str
    cycle: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in (HOLE, ANTIHOLE):
            raise DomainError(f"Tipo de certificado desconhecido: {self.kind!r}")
        cycle = tuple(self.cycle)
        if len(cycle) < 5 or len(cycle) % 2 == 0:
            raise DomainError(f"Ciclo de certificado deve ter ordem ímpar >= 5 (recebido {len(cycle)})")
        if len(set(cycle)) != len(cycle):
            raise DomainError("Vértices repetidos no certificado")
        object.__setattr__(self, "cycle", cycle)

    @property
    def length(self) -> int:
        return len(self.cycle)

    def cycle_pairs(self) -> List[Tuple[int, int]]:
        """Pares consecutivos (ciclicamente) do ciclo."""
        k = len(self.cycle)
        return [(self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k)]

    def to_payload(self) -> Dict[str, Any]:
        return {"kind": self.kind, "cycle": list(self.cycle)}


@dataclass(frozen=True)
class ColoringResult:
    """Número cromático exato com uma coloração própria que o realiza."""
    chi: int
    assignment: Dict[int, int] = field(default_factory=dict)

    def color_classes(self) -> List[List[int]]:
        classes: List[List[int]] = [[] for _ in range(self.chi)]
        for vertex in sorted(self.assignment):
            classes[self.assignment[vertex]].append(vertex)
        return classes

    def to_payload(self) -> Dict[str, Any]:
        return {"chi": self.chi, "coloring": {str(v): c for v, c in sorted(self.assignment.items())}}


@dataclass(frozen=True)
class PerfectionVerdict:
    """Resultado de is_perfect: veredito e, se imperfeito, o certificado."""
    perfect: bool
    certificate: Optional[HoleCertificate] = None


@dataclass(frozen=True)
class Psl2Spec:
    """Parâmetros da família PSL2(q), q = p^m >= 4."""
    p: int
    m: int
    q: int = field(init=False)

    def __post_init__(self):
        if not _is_int(self.p) or not isprime(self.p):
            raise DomainError(f"p deve ser primo (recebido {self.p!r})")
        if not _is_int(self.m) or self.m < 1:
            raise DomainError(f"m deve ser inteiro positivo (recebido {self.m!r})")
        q = self.p ** self.m
        if q < 4:
            raise DomainError(f"PSL2(q) exige q >= 4 (recebido q={q})")
        object.__setattr__(self, "q", q)

    @property
    def name(self) -> str:
        return f"PSL2({self.q})"


@dataclass(frozen=True)
class Psl2CycleCertificate:
    """Dados (pi, u, alpha, variante) de um ciclo ímpar do complemento de Delta(G)."""
    pi: PrimeSet
    u: int
    alpha: int
    variant: str
    ordering: Tuple[int, ...]

    def __post_init__(self):
        if len(self.pi) < 3 or len(self.pi) % 2 == 0:
            raise DomainError(f"|pi| deve ser ímpar e >= 3 (recebido {len(self.pi)})")
        if self.u not in self.pi:
            raise DomainError(f"u={self.u} não pertence a pi={list(self.pi)}")
        if not _is_int(self.alpha) or self.alpha < 1:
            raise DomainError(f"alpha deve ser inteiro positivo (recebido {self.alpha!r})")
        if self.variant not in VARIANTS:
            raise DomainError(f"Variante desconhecida: {self.variant!r}")
        ordering = tuple(self.ordering)
        if sorted(ordering) != [p for p in self.pi if p != self.u]:
            raise DomainError("ordering deve ser um arranjo de pi - {u}")
        object.__setattr__(self, "ordering", ordering)

    def to_payload(self) -> Dict[str, Any]:
        return {
            "pi": list(self.pi),
            "u": self.u,
            "alpha": self.alpha,
            "variant": self.variant,
            "ordering": list(self.ordering),
        }


@dataclass(frozen=True)
class Partition:
    """Partição de n em partes fracamente decrescentes."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not _is_int(x) or x < 1 for x in parts):
            raise DomainError(f"Partes devem ser inteiros positivos: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"Partes devem ser não crescentes: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def hook_lengths(self) -> List[int]:
        """Comprimento do gancho de cada célula: braço + perna + 1."""
        columns = self.conjugate().parts
        return [
            (row - j - 1) + (columns[j] - i - 1) + 1
            for i, row in enumerate(self.parts)
            for j in range(row)
        ]


@dataclass(frozen=True)
class CheckResult:
    """Uma entrada do relatório de verificação."""
    check_id: str
    status: str
    certificate: Optional[Dict[str, Any]] = None
    note: Optional[str] = None
    # False quando a hipótese da verificação não vale para a instância
    conclusive: bool = True

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED):
            raise DomainError(f"Status desconhecido: {self.status!r}")
        if self.status == FAIL and self.certificate is None:
            raise DomainError(f"Falha em '{self.check_id}' sem certificado")


@dataclass
class VerificationReport:
    """Relatório por instância: perfeição, cor do complemento e condições de Pálfy e Moretó–Tiep."""
    instance_name: str
    checks: List[CheckResult] = field(default_factory=list)
    family: str = "ingested"
    group_realizable: Optional[bool] = None
    note: Optional[str] = None

    @property
    def summary(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    @property
    def failed_checks(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def is_defect(self) -> bool:
        """Falha em dado derivado de grupo (não anotado como controle negativo)."""
        if self.group_realizable is False:
            return False
        return any(c.status == FAIL and c.conclusive for c in self.checks)

    def get(self, check_id: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.check_id == check_id:
                return check
        return None
