"""
Módulo principal do verificador de grafos de graus de caracteres.
"""

import sys
import logging
import argparse
from typing import Dict, Any, List, Optional, Sequence

from data.models import FAIL
from degrees.character_graph import character_graph, product_degrees, join_formula_graph
from families.cycle_certificates import build_certificate, check_cycle_certificate, find_certificate_for_cycle
from families.psl2 import psl2_spec_from_q, psl2_graph, psl2_case
from families.symmetric import sn_degrees
from graphs.perfection import is_perfect
from graphs.prime_graph import PrimeGraph, complement
from graphs.solvers import chromatic_number, maximum_clique, maximum_independent_set
from reporting.formatters import format_report, format_stats, format_sweep
from storage.files import (
    load_degree_set, load_instance, save_degree_set, save_graph, save_reports,
    graph_to_json, degree_set_to_json,
)
from utils.dot_export import write_dot
from utils.settings import DEFAULT_SEED
from verify.agent import VerificationInstance, run_verification_agent
from verify.checks import THEOREM_A, COROLLARY_B, PALFY, MORETO_TIEP
from verify.sweep import FAMILIES, sweep

# Configurar logging
logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

ALL_CHECKS = (THEOREM_A, COROLLARY_B, PALFY, MORETO_TIEP)


class CharacterGraphToolkit:
    """Fachada das operações da linha de comando."""

    def __init__(self):
        """Inicializa o verificador."""
        logger.info("Verificador de grafos de caracteres inicializado")

    def _write_graph(self, g: PrimeGraph, out: Optional[str], dot: Optional[str], highlight=None) -> None:
        if out:
            save_graph(out, g)
        if dot:
            write_dot(dot, g, highlight)

    def build(self, degrees_path: str, out: Optional[str] = None, dot: Optional[str] = None,
              highlight: bool = False) -> Dict[str, Any]:
        """
        Constrói Delta a partir de um arquivo de graus.

        Args:
            degrees_path: Arquivo do conjunto de graus
            out: Arquivo JSON do grafo
            dot: Arquivo DOT do grafo
            highlight: Destaca no DOT o certificado de imperfeição, se houver

        Returns:
            Dicionário com resultado da operação
        """
        try:
            degree_set, annotations = load_degree_set(degrees_path)
            g = character_graph(degree_set)
            certificate = is_perfect(g).certificate if highlight else None
            self._write_graph(g, out, dot, certificate)
            return {"success": True, "graph": g, "degree_set": degree_set, "annotations": annotations}
        except Exception as e:
            logger.error(f"Erro ao construir o grafo: {str(e)}")
            return {"success": False, "error": str(e)}

    def psl2(self, q: int, out: Optional[str] = None, dot: Optional[str] = None) -> Dict[str, Any]:
        """
        Gera Delta(PSL2(q)) pela análise de casos.

        Args:
            q: Potência de primo >= 4
            out: Arquivo JSON do grafo
            dot: Arquivo DOT do grafo

        Returns:
            Dicionário com resultado da operação
        """
        try:
            spec = psl2_spec_from_q(q)
            g = psl2_graph(spec)
            logger.info(f"{spec.name}: caso {psl2_case(spec)}")
            self._write_graph(g, out, dot)
            return {"success": True, "graph": g, "spec": spec}
        except Exception as e:
            logger.error(f"Erro ao gerar PSL2({q}): {str(e)}")
            return {"success": False, "error": str(e)}

    def sn(self, n: int, degrees_out: Optional[str] = None, out: Optional[str] = None) -> Dict[str, Any]:
        """
        Gera cd(S_n) pela fórmula dos ganchos e o grafo correspondente.

        Args:
            n: 1 <= n <= 20
            degrees_out: Arquivo do conjunto de graus
            out: Arquivo JSON do grafo

        Returns:
            Dicionário com resultado da operação
        """
        try:
            degree_set = sn_degrees(n)
            annotations = {"group_realizable": True, "solvable": n <= 4}
            g = character_graph(degree_set)
            if degrees_out:
                save_degree_set(degrees_out, degree_set, annotations)
            if out:
                save_graph(out, g)
            return {"success": True, "graph": g, "degree_set": degree_set, "annotations": annotations}
        except Exception as e:
            logger.error(f"Erro ao gerar S{n}: {str(e)}")
            return {"success": False, "error": str(e)}

    def product(self, a_path: str, b_path: str, out: Optional[str] = None) -> Dict[str, Any]:
        """
        Compara Delta do produto dos graus com a fórmula do join.

        Args:
            a_path: Graus do primeiro fator
            b_path: Graus do segundo fator
            out: Arquivo JSON do grafo do produto

        Returns:
            Dicionário com resultado da operação
        """
        try:
            a, _ = load_degree_set(a_path)
            b, _ = load_degree_set(b_path)
            degrees = product_degrees(a, b)
            direct = character_graph(degrees)
            formula = join_formula_graph(a, b)
            if out:
                save_graph(out, formula)
            return {
                "success": True,
                "degree_set": degrees,
                "graph": formula,
                "direct": direct,
                "equal": direct == formula,
                "trivial": a.is_trivial or b.is_trivial,
            }
        except Exception as e:
            logger.error(f"Erro ao calcular o produto: {str(e)}")
            return {"success": False, "error": str(e)}

    def stats(self, path: str) -> Dict[str, Any]:
        """
        Calcula omega, chi, alpha, chi do complemento e o veredito de perfeição.

        Args:
            path: Arquivo de graus ou de grafo

        Returns:
            Dicionário com resultado da operação
        """
        try:
            loaded = load_instance(path)
            g = loaded.graph
            coloring = chromatic_number(g)
            complement_coloring = chromatic_number(complement(g))
            verdict = is_perfect(g)
            clique = maximum_clique(g)
            independent_set = maximum_independent_set(g)
            stats = {
                "name": loaded.name,
                "vertices": list(g.vertices),
                "edges": list(g.edges),
                "omega": len(clique),
                "clique": clique,
                "chi": coloring.chi,
                "coloring": coloring.assignment,
                "alpha": len(independent_set),
                "independent_set": independent_set,
                "chi_complement": complement_coloring.chi,
                "complement_coloring": complement_coloring.assignment,
                "perfect": verdict.perfect,
                "certificate": verdict.certificate.to_payload() if verdict.certificate else None,
            }
            return {"success": True, "stats": stats}
        except Exception as e:
            logger.error(f"Erro ao calcular estatísticas: {str(e)}")
            return {"success": False, "error": str(e)}

    def check(self, path: str, checks: Sequence[str]) -> Dict[str, Any]:
        """
        Executa as verificações escolhidas sobre uma instância.

        Args:
            path: Arquivo de graus ou de grafo
            checks: Identificadores das verificações

        Returns:
            Dicionário com resultado da operação e o relatório
        """
        try:
            loaded = load_instance(path)
            instance = VerificationInstance(
                name=loaded.name,
                graph=loaded.graph,
                degree_set=loaded.degree_set,
                annotations=loaded.annotations,
                checks=tuple(checks),
            )
            result = run_verification_agent(instance)
            if not result.get("success", False):
                logger.error(result.get("error"))
            return result
        except Exception as e:
            logger.error(f"Erro ao verificar {path}: {str(e)}")
            return {"success": False, "error": str(e)}

    def certify_cycle(self, path: str, pi: List[int], u: Optional[int] = None,
                      alpha: Optional[int] = None) -> Dict[str, Any]:
        """
        Procura ou valida um certificado aritmético para um ciclo ímpar do complemento.

        Args:
            path: Arquivo de graus ou de grafo
            pi: Vértices do ciclo
            u: Primo de pi (validação com parâmetros dados)
            alpha: Expoente (validação com parâmetros dados)

        Returns:
            Dicionário com resultado da operação
        """
        try:
            g = load_instance(path).graph
            if u is not None:
                certificate = build_certificate(g, pi, u, alpha)
            else:
                certificate = find_certificate_for_cycle(g, pi)
            valid = certificate is not None and check_cycle_certificate(certificate)
            return {"success": True, "certificate": certificate, "valid": valid}
        except Exception as e:
            logger.error(f"Erro ao certificar o ciclo: {str(e)}")
            return {"success": False, "error": str(e)}

    def sweep(self, **kwargs) -> Dict[str, Any]:
        """
        Executa uma varredura em lote.

        Returns:
            Dicionário com resultado da operação e o SweepOutcome
        """
        try:
            return {"success": True, "outcome": sweep(**kwargs)}
        except Exception as e:
            logger.error(f"Erro na varredura: {str(e)}")
            return {"success": False, "error": str(e)}


def _prime_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de primos inválida: {text!r}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"inteiro inválido: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"esperado inteiro positivo: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Monta o parser de argumentos com todos os subcomandos."""
    parser = argparse.ArgumentParser(description="Verificador de grafos de graus de caracteres")
    parser.add_argument("-v", "--verbose", action="store_true", help="Mostra logs de progresso (INFO)")
    subparsers = parser.add_subparsers(dest="command", help="Comando a ser executado")

    # Comando build
    build_parser_ = subparsers.add_parser("build", help="Constrói Delta a partir de um conjunto de graus")
    build_parser_.add_argument("--degrees", required=True, help="Arquivo JSON do conjunto de graus")
    build_parser_.add_argument("--out", help="Grava o grafo em JSON")
    build_parser_.add_argument("--dot", help="Grava o grafo em DOT")
    build_parser_.add_argument("--highlight", action="store_true", help="Destaca no DOT o buraco/antiburaco encontrado")

    # Comando psl2
    psl2_parser = subparsers.add_parser("psl2", help="Gera Delta(PSL2(q))")
    psl2_parser.add_argument("--q", type=int, required=True, help="Potência de primo q >= 4")
    psl2_parser.add_argument("--out", help="Grava o grafo em JSON")
    psl2_parser.add_argument("--dot", help="Grava o grafo em DOT")

    # Comando sn
    sn_parser = subparsers.add_parser("sn", help="Gera cd(S_n) e Delta(S_n)")
    sn_parser.add_argument("--n", type=int, required=True, help="1 <= n <= 20")
    sn_parser.add_argument("--degrees-out", help="Grava o conjunto de graus")
    sn_parser.add_argument("--out", help="Grava o grafo em JSON")

    # Comando product
    product_parser = subparsers.add_parser("product", help="Grafo do produto direto pela fórmula do join")
    product_parser.add_argument("a", help="Graus do primeiro fator")
    product_parser.add_argument("b", help="Graus do segundo fator")
    product_parser.add_argument("--out", help="Grava o grafo em JSON")

    # Comando stats
    stats_parser = subparsers.add_parser("stats", help="omega, chi, alpha, chi do complemento e perfeição")
    stats_parser.add_argument("file", help="Arquivo de graus ou de grafo")

    # Comando check
    check_parser = subparsers.add_parser("check", help="Executa verificações sobre uma instância")
    check_parser.add_argument("file", help="Arquivo de graus ou de grafo")
    check_parser.add_argument("--theorem-a", dest="checks", action="append_const", const=THEOREM_A)
    check_parser.add_argument("--corollary-b", dest="checks", action="append_const", const=COROLLARY_B)
    check_parser.add_argument("--palfy", dest="checks", action="append_const", const=PALFY)
    check_parser.add_argument("--moreto-tiep", dest="checks", action="append_const", const=MORETO_TIEP)
    check_parser.add_argument("--report", help="Grava o relatório em JSON")

    # Comando certify-cycle
    certify_parser = subparsers.add_parser("certify-cycle", help="Certificado aritmético de um ciclo do complemento")
    certify_parser.add_argument("file", help="Arquivo de graus ou de grafo")
    certify_parser.add_argument("--pi", type=_prime_list, required=True, help="Primos do ciclo, separados por vírgula")
    certify_parser.add_argument("--u", type=int, help="Primo u de pi")
    certify_parser.add_argument("--alpha", type=_positive_int, help="Expoente alpha")

    # Comando sweep
    sweep_parser = subparsers.add_parser("sweep", help="Verificação em lote de uma família")
    sweep_parser.add_argument("--family", choices=FAMILIES, required=True)
    sweep_parser.add_argument("--q-min", type=int, default=4)
    sweep_parser.add_argument("--q-max", type=int)
    sweep_parser.add_argument("--n-min", type=int, default=1)
    sweep_parser.add_argument("--n-max", type=int)
    sweep_parser.add_argument("--dir", dest="directory", help="Diretório de conjuntos de graus")
    sweep_parser.add_argument("--pairs", type=int, default=100, help="Pares aleatórios (família products)")
    sweep_parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Semente (família products)")
    sweep_parser.add_argument("--palfy", action="store_true", help="Inclui a condição de Pálfy")
    sweep_parser.add_argument("--workers", type=_positive_int, help="Processos paralelos")
    sweep_parser.add_argument("--strict", action="store_true", help="Controles negativos também falham o processo")
    sweep_parser.add_argument("--report", help="Grava os relatórios em JSON")

    return parser


def _save_reports(path: str, reports) -> bool:
    try:
        save_reports(path, reports)
        return True
    except OSError as e:
        logger.error(f"Erro ao gravar relatórios em {path}: {str(e)}")
        return False


def _emit(lines) -> None:
    for line in lines:
        print(line)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Função principal para execução direta do módulo.

    Returns:
        0 em sucesso, 1 em falha de verificação, 2 em erro de uso, IO ou dados
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        logging.getLogger().setLevel(logging.INFO)

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    if args.command == "certify-cycle" and (args.u is None) != (args.alpha is None):
        parser.error("--u e --alpha devem ser usados juntos")

    toolkit = CharacterGraphToolkit()

    if args.command == "build":
        result = toolkit.build(args.degrees, args.out, args.dot, args.highlight)
        if not result.get("success", False):
            return EXIT_USAGE
        if not args.out and not args.dot:
            print(graph_to_json(result["graph"]), end="")
        return EXIT_OK

    if args.command == "psl2":
        result = toolkit.psl2(args.q, args.out, args.dot)
        if not result.get("success", False):
            return EXIT_USAGE
        if not args.out and not args.dot:
            print(graph_to_json(result["graph"]), end="")
        return EXIT_OK

    if args.command == "sn":
        result = toolkit.sn(args.n, args.degrees_out, args.out)
        if not result.get("success", False):
            return EXIT_USAGE
        if not args.degrees_out:
            print(degree_set_to_json(result["degree_set"], result["annotations"]), end="")
        if not args.out:
            print(graph_to_json(result["graph"]), end="")
        return EXIT_OK

    if args.command == "product":
        result = toolkit.product(args.a, args.b, args.out)
        if not result.get("success", False):
            return EXIT_USAGE
        degrees = result["degree_set"]
        print(f"product={degrees.name} degrees=[{','.join(str(d) for d in degrees.degrees)}]")
        print(f"join_formula={'equal' if result['equal'] else 'mismatch'}")
        if result["trivial"]:
            print('note="degree set {1} (abelian shadow)"')
        if not args.out:
            print(graph_to_json(result["graph"]), end="")
        return EXIT_OK if result["equal"] else EXIT_CHECK_FAILED

    if args.command == "stats":
        result = toolkit.stats(args.file)
        if not result.get("success", False):
            return EXIT_USAGE
        _emit(format_stats(result["stats"]))
        return EXIT_OK

    if args.command == "check":
        result = toolkit.check(args.file, args.checks or ALL_CHECKS)
        if not result.get("success", False):
            return EXIT_USAGE
        report = result["report"]
        _emit(format_report(report))
        if args.report and not _save_reports(args.report, [report]):
            return EXIT_USAGE
        return EXIT_CHECK_FAILED if report.summary == FAIL else EXIT_OK

    if args.command == "certify-cycle":
        result = toolkit.certify_cycle(args.file, args.pi, args.u, args.alpha)
        if not result.get("success", False):
            return EXIT_USAGE
        certificate = result["certificate"]
        if certificate is None:
            print("certificate=none")
            return EXIT_CHECK_FAILED
        payload = certificate.to_payload()
        print(
            f"pi=[{','.join(str(p) for p in payload['pi'])}] u={payload['u']} alpha={payload['alpha']} "
            f"variant={payload['variant']} ordering=[{','.join(str(p) for p in payload['ordering'])}] "
            f"valid={'true' if result['valid'] else 'false'}"
        )
        return EXIT_OK if result["valid"] else EXIT_CHECK_FAILED

    if args.command == "sweep":
        result = toolkit.sweep(
            family=args.family,
            q_min=args.q_min,
            q_max=args.q_max,
            n_min=args.n_min,
            n_max=args.n_max,
            directory=args.directory,
            pairs=args.pairs,
            seed=args.seed,
            include_palfy=args.palfy,
            workers=args.workers,
            strict=args.strict,
        )
        if not result.get("success", False):
            return EXIT_USAGE
        outcome = result["outcome"]
        _emit(format_sweep(outcome.reports))
        if args.report and not _save_reports(args.report, outcome.reports):
            return EXIT_USAGE
        return EXIT_CHECK_FAILED if outcome.failed else EXIT_OK

    parser.print_help()
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
