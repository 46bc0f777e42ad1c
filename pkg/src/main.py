"""Entry point da linha de comando.

Subcomandos ``check``, ``classify``, ``verify``, ``count``, ``trace``,
``sphere`` e ``atlas``. Saída de máquina vai para stdout; diagnósticos e logs
para stderr. Códigos de saída: 0 sucesso, 1 falha de propriedade, 2 erro de uso
ou de parse.
"""

import argparse
import csv
import json
import logging
import sys
from typing import Any, Dict, List, NoReturn, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

from .config import get_settings
from .group_core import GroupSpec, element_at, format_element, parse_group_spec
from .search import (
    CheckName,
    OutputFormat,
    SweepConfig,
    SweepMode,
    SweepReport,
    atlas_emit,
    check_subset,
    count_classes,
    exhaustive_verify,
    random_verify,
)
from .sphere import (
    equivalence_sweep_integers,
    equivalence_sweep_random,
    format_point,
    is_1_spherical,
    parse_points,
    semiaffine_on_line,
)
from .structure import (
    Classification,
    classify,
    periodic_semiaffine_classify,
    reconstruct,
    verify_theorem,
)
from .subsets import (
    SubsetBits,
    format_subset,
    is_affine,
    is_midconvex,
    is_semiaffine,
    parse_subset,
)
from .utils.errors import InvalidRangeError, ParseError, SemiaffineError
from .zline import trace_rows

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(SemiaffineError):
    """Combinação de opções inválida."""


class CliParser(argparse.ArgumentParser):
    """ArgumentParser com diagnóstico de uma linha e saída 2."""

    def error(self, message: str) -> NoReturn:
        sys.stderr.write(f"{self.prog}: erro: {message}\n")
        sys.exit(EXIT_USAGE)


def _emit(payload: Any, out: TextIO) -> None:
    out.write(json.dumps(payload) + "\n")


def _one_line(error: Exception) -> str:
    if isinstance(error, ValidationError):
        first = error.errors()[0]
        return str(first.get("msg", error)).replace("\n", " ")
    return str(error).replace("\n", " ")


def _parse_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError(text)
        return int(lo), int(hi)
    except ValueError as e:
        raise InvalidRangeError(f"Intervalo inválido: '{text}' (use lo:hi)") from e


def _parse_checks(text: str) -> Tuple[CheckName, ...]:
    checks = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            checks.append(CheckName(token))
        except ValueError as e:
            raise ParseError(f"Verificação desconhecida: '{token}'", token=token) from e
    return tuple(checks)


def _parse_groups(text: str) -> List[GroupSpec]:
    return [parse_group_spec(token) for token in text.split(",") if token.strip()]


def _subset_from_args(args: argparse.Namespace, group: GroupSpec) -> SubsetBits:
    """Conjunto de ``-s`` ou ``--bits``; o grupo já foi interpretado."""
    if args.set is not None and args.bits is not None:
        raise UsageError("Use -s/--set ou --bits, não ambos")
    if args.set is not None:
        return parse_subset(group, args.set)
    if args.bits is not None:
        return SubsetBits.from_hex(group, args.bits)
    raise UsageError("Informe o conjunto com -s/--set ou --bits")


def _predicates_payload(X: SubsetBits) -> Dict[str, Any]:
    return {
        "group": X.group.label,
        "set": format_subset(X),
        "affine": is_affine(X).to_payload(),
        "semiaffine": is_semiaffine(X).to_payload(),
        "midconvex": is_midconvex(X).to_payload(),
    }


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    group = parse_group_spec(args.group)
    X = _subset_from_args(args, group)
    _emit(_predicates_payload(X), out)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    group = parse_group_spec(args.group)
    if args.reconstruct:
        try:
            payload = json.load(sys.stdin)
        except json.JSONDecodeError as e:
            raise ParseError(f"JSON inválido na entrada: {e.msg}", token=e.doc[:20]) from e
        if not isinstance(payload, dict):
            raise ParseError("Classificação deve ser um objeto JSON")
        c = Classification.from_payload(group, payload)
        out.write(format_subset(reconstruct(c)) + "\n")
        return EXIT_OK

    X = _subset_from_args(args, group)
    c = periodic_semiaffine_classify(X) if args.periodic else classify(X)
    payload = c.to_payload()
    if args.lemma_trace and c.lemma_trace is not None:
        payload["lemma_trace"] = c.lemma_trace.to_payload(group)
    _emit(payload, out)
    return EXIT_OK


def _sweep_config(args: argparse.Namespace, group: GroupSpec) -> SweepConfig:
    settings = get_settings()
    lo, hi = _parse_range(args.range) if args.range else (0, None)
    random_mode = args.samples is not None or args.seed is not None
    if random_mode and args.exhaustive:
        raise UsageError("--exhaustive não combina com --samples/--seed")
    if random_mode and (args.samples is None or args.seed is None):
        raise UsageError("O modo aleatório exige --samples e --seed")
    return SweepConfig(
        group=group,
        lo=lo,
        hi=hi,
        mode=SweepMode.RANDOM if random_mode else SweepMode.EXHAUSTIVE,
        samples=args.samples or 0,
        seed=args.seed,
        workers=args.workers or settings.workers,
        checks=_parse_checks(args.checks),
        dedupe_shifts=args.dedupe_shifts,
    )


def _write_sweep(report: SweepReport, fmt: OutputFormat, timing: bool,
                 out: TextIO) -> None:
    if fmt == OutputFormat.JSON:
        _emit(report.to_payload(include_timing=timing), out)
        return
    line = f"checked={report.checked} failures={len(report.failures)}"
    if timing and report.seconds is not None:
        line += f" seconds={report.seconds:.3f}"
    out.write(line + "\n")
    for failure in report.failures:
        out.write(f"  {format(failure.subset, 'x')} {failure.check}: {failure.detail}\n")


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    group = parse_group_spec(args.group)
    sweeping = args.exhaustive or args.samples is not None or args.seed is not None
    if not sweeping:
        X = _subset_from_args(args, group)
        report = verify_theorem(X)
        extra = [c for c in _parse_checks(args.checks) if c != CheckName.THEOREM]
        failures = check_subset(X, extra, None)
        payload = report.to_payload()
        payload["set"] = format_subset(X)
        payload["extra_failures"] = [f.model_dump() for f in failures]
        _emit(payload, out)
        return EXIT_OK if report.passed and not failures else EXIT_FAILURE

    if args.set is not None or args.bits is not None:
        raise UsageError("Varreduras não aceitam -s/--set nem --bits")
    config = _sweep_config(args, group)
    if config.mode == SweepMode.EXHAUSTIVE:
        sweep = exhaustive_verify(config)
    else:
        sweep = random_verify(config)
    _write_sweep(sweep, OutputFormat(args.format), not args.no_timing, out)
    return EXIT_OK if sweep.passed else EXIT_FAILURE


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    group = parse_group_spec(args.group)
    counts = count_classes(group, workers=args.workers or get_settings().workers,
                           dedupe_shifts=args.dedupe_shifts)
    row = {"group": group.label, "N": group.total_order, **counts.model_dump()}
    fmt = OutputFormat(args.format)
    if fmt == OutputFormat.JSON:
        _emit(row, out)
    else:
        writer = csv.DictWriter(out, fieldnames=list(row),
                                delimiter="\t" if fmt == OutputFormat.TSV else ",",
                                lineterminator="\n")
        writer.writeheader()
        writer.writerow(row)
    return EXIT_OK


def cmd_trace(args: argparse.Namespace, out: TextIO) -> int:
    group = parse_group_spec(args.group)
    X = _subset_from_args(args, group)
    fmt = OutputFormat(args.format)
    if fmt == OutputFormat.TSV:
        out.write("x\tg\tmodulus\tresidues\td\n")
    for row in trace_rows(X):
        x = format_element(group, element_at(group, row.x))
        g = format_element(group, element_at(group, row.g))
        if fmt == OutputFormat.JSON:
            _emit({"x": x, "g": g, "modulus": row.modulus,
                   "residues": row.residues, "d": row.d}, out)
        else:
            residues = ",".join(str(r) for r in row.residues)
            d = "FAIL" if row.d is None else str(row.d)
            out.write(f"{x}\t{g}\t{row.modulus}\t{residues}\t{d}\n")
    return EXIT_OK


def cmd_sphere(args: argparse.Namespace, out: TextIO) -> int:
    if args.sweep:
        lo, hi = _parse_range(args.range) if args.range else (0, 12)
        report = equivalence_sweep_integers(lo, hi, args.max_size)
        if args.samples:
            randomized = equivalence_sweep_random(args.samples, args.seed or 0,
                                                  max_size=args.max_size)
            report.checked += randomized.checked
            report.disagreements.extend(randomized.disagreements)
            report.largest_spherical = max(report.largest_spherical,
                                           randomized.largest_spherical)
        _emit({**report.model_dump(), "passed": report.passed}, out)
        return EXIT_OK if report.passed else EXIT_FAILURE

    if args.points is None:
        raise UsageError("Informe os pontos com -p/--points ou use --sweep")
    P = parse_points(args.points)
    spherical = is_1_spherical(P)
    semiaffine = semiaffine_on_line(P)
    witness = ([format_point(p) for p in spherical.witness.elements]
               if spherical.witness else None)
    _emit({"spherical": spherical.holds, "witness": witness,
           "equivalent_semiaffine": spherical.holds == semiaffine.holds}, out)
    return EXIT_OK if spherical.holds == semiaffine.holds else EXIT_FAILURE


def cmd_atlas(args: argparse.Namespace, out: TextIO) -> int:
    groups = _parse_groups(args.group)
    fmt = OutputFormat(args.format)
    workers = args.workers or get_settings().workers
    checks = _parse_checks(args.checks)
    timing = not args.no_timing
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as sink:
            summary = atlas_emit(groups, sink, fmt, checks, workers, timing)
    else:
        summary = atlas_emit(groups, out, fmt, checks, workers, timing)
    return EXIT_OK if summary.failures == 0 else EXIT_FAILURE


def _add_set_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-s", "--set", help="Conjunto, ex.: {1,2,4,5} ou {(0,1),(1,0)}")
    parser.add_argument("--bits", help="Bitset hexadecimal (bit 0 = índice 0)")


def build_parser() -> argparse.ArgumentParser:
    """Parser com todos os subcomandos."""
    parser = CliParser(
        prog="semiaffine",
        description="Conjuntos afins, semiafins e midconvexos em grupos abelianos finitos")
    subparsers = parser.add_subparsers(dest="command", required=True,
                                       parser_class=CliParser)

    check = subparsers.add_parser("check", help="Avalia os três predicados")
    check.add_argument("-g", "--group", required=True, help="Grupo, ex.: Z4xZ2")
    _add_set_options(check)
    check.set_defaults(handler=cmd_check)

    classify_p = subparsers.add_parser("classify", help="Forma canônica do conjunto")
    classify_p.add_argument("-g", "--group", required=True)
    _add_set_options(classify_p)
    classify_p.add_argument("--periodic", action="store_true",
                            help="Forma (H - P) + g com P subgrupo")
    classify_p.add_argument("--lemma-trace", action="store_true",
                            help="Incluir o registro da extração por duas classes")
    classify_p.add_argument("--reconstruct", action="store_true",
                            help="Ler a classificação JSON de stdin e imprimir o conjunto")
    classify_p.set_defaults(handler=cmd_classify)

    verify = subparsers.add_parser("verify", help="Verifica o teorema")
    verify.add_argument("-g", "--group", required=True)
    _add_set_options(verify)
    verify.add_argument("--exhaustive", action="store_true",
                        help="Todos os subconjuntos do intervalo")
    verify.add_argument("--samples", type=int, help="Amostras aleatórias")
    verify.add_argument("--seed", type=int, help="Semente do gerador PCG64")
    verify.add_argument("--workers", type=int, help="Processos paralelos")
    verify.add_argument("--range", help="Intervalo de bitsets lo:hi")
    verify.add_argument("--checks", default=CheckName.THEOREM.value,
                        help="Lista de theorem,lemma1,lemma2,t2,t1")
    verify.add_argument("--dedupe-shifts", action="store_true",
                        help="Um representante por classe de translação")
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.add_argument("--no-timing", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    count = subparsers.add_parser("count", help="Conta subconjuntos por classe")
    count.add_argument("-g", "--group", required=True)
    count.add_argument("--workers", type=int)
    count.add_argument("--dedupe-shifts", action="store_true")
    count.add_argument("--format", choices=["json", "csv", "tsv"], default="json")
    count.set_defaults(handler=cmd_count)

    trace = subparsers.add_parser("trace", help="Traços em Z do conjunto")
    trace.add_argument("-g", "--group", required=True)
    _add_set_options(trace)
    trace.add_argument("--format", choices=["tsv", "json"], default="tsv")
    trace.set_defaults(handler=cmd_trace)

    sphere = subparsers.add_parser("sphere", help="1-esfericidade na reta")
    sphere.add_argument("-p", "--points", help="Racionais, ex.: 0,1/2,3")
    sphere.add_argument("--sweep", action="store_true",
                        help="Varredura de equivalência com semiafinidade")
    sphere.add_argument("--range", help="Janela inteira lo:hi da varredura")
    sphere.add_argument("--max-size", type=int, default=5)
    sphere.add_argument("--samples", type=int, default=0)
    sphere.add_argument("--seed", type=int)
    sphere.set_defaults(handler=cmd_sphere)

    atlas = subparsers.add_parser("atlas", help="Tabela de contagens por grupo")
    atlas.add_argument("-g", "--group", required=True,
                       help="Grupos separados por vírgula, ex.: Z1,Z2,Z2xZ2")
    atlas.add_argument("--format", choices=["csv", "json"], default="csv")
    atlas.add_argument("--output", help="Arquivo de saída (padrão stdout)")
    atlas.add_argument("--workers", type=int)
    atlas.add_argument("--checks", default=CheckName.THEOREM.value)
    atlas.add_argument("--no-timing", action="store_true")
    atlas.set_defaults(handler=cmd_atlas)

    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Executa a CLI.

    Args:
        argv: Argumentos (padrão ``sys.argv[1:]``)
        out: Destino da saída de máquina (padrão stdout)

    Returns:
        Código de saída
    """
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        settings = get_settings()
        logging.basicConfig(level=settings.log_level.upper(), stream=sys.stderr,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.handler(args, out)
    except (SemiaffineError, ValidationError) as e:
        sys.stderr.write(f"semiaffine: erro: {_one_line(e)}\n")
        return EXIT_USAGE
    except OSError as e:
        logger.debug(f"Erro de E/S em {args.command}", exc_info=True)
        sys.stderr.write(f"semiaffine: erro: {_one_line(e)}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
