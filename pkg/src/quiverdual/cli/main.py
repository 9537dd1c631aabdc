"""
Command-line entry point.

Exit codes: 0 when every check passes, 1 when some check fails, 2 on
configuration or input errors.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from pydantic import ValidationError

from quiverdual.algebra.exceptions import AlgebraException
from quiverdual.cli.config import BetaSource, OutputFormat, SuiteName, build_config
from quiverdual.cli.exceptions import ConfigError
from quiverdual.cli.suites import run_suites
from quiverdual.determinantal.exceptions import DeterminantalException
from quiverdual.determinantal.numerology import cy_classify
from quiverdual.determinantal.scenarios import scenario_catalogue, scenario_preset
from quiverdual.duality.exceptions import DualityException
from quiverdual.quiver import builders
from quiverdual.quiver.exceptions import QuiverException
from quiverdual.quiver.io import load_quiver, to_dot
from quiverdual.quiver.models import Quiver
from quiverdual.quiver.mutation import mutate

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2

QUIVER_BUILDERS = {
    "pax": builders.build_pax,
    "paxy": builders.build_paxy,
    "grassmannian": builders.build_grassmannian_bundle,
    "dual_grassmannian": builders.build_dual_grassmannian_bundle,
    "gn_extension": builders.build_gn_extension,
}


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        output.write_text(text)
        logger.info("wrote %s", output)


def _add_shape_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, help="rank of E")
    parser.add_argument("--n", type=int, help="rank of F")
    parser.add_argument("--r", type=int, help="gauge rank")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverdual",
        description="Exact verification of Seiberg-like duality identities.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="logging threshold for messages on stderr",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run verification suites")
    verify.add_argument("--config", type=Path, help="INI run configuration")
    verify.add_argument("--suite", choices=[s.value for s in SuiteName])
    _add_shape_flags(verify)
    verify.add_argument("--shapes", help="m,n,r triples separated by ';'")
    verify.add_argument("--a-max", dest="a_max", type=int)
    verify.add_argument("--order", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--points", type=int)
    verify.add_argument("--lemma-points", dest="lemma_points", type=int)
    verify.add_argument("--degree-count", dest="degree_count", type=int)
    verify.add_argument("--degree-bound", dest="degree_bound", type=int)
    verify.add_argument(
        "--beta-source", dest="beta_source", choices=[b.value for b in BetaSource]
    )
    verify.add_argument("--beta-count", dest="beta_count", type=int)
    verify.add_argument("--beta-bound", dest="beta_bound", type=int)
    verify.add_argument(
        "--ample", action=argparse.BooleanOptionalAction, default=None
    )
    verify.add_argument(
        "--all-fixed-points",
        dest="all_fixed_points",
        action=argparse.BooleanOptionalAction,
        default=None,
    )
    verify.add_argument("--num-jobs", dest="num_jobs", type=int)
    verify.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat]
    )
    verify.add_argument(
        "--fail-fast", dest="fail_fast", action="store_true", default=None
    )
    verify.add_argument(
        "--no-timing",
        dest="include_timing",
        action="store_false",
        help="omit elapsed_ms fields from JSON reports",
    )
    verify.add_argument("--output", type=Path)
    verify.set_defaults(handler=_verify)

    mutate_cmd = commands.add_parser("mutate", help="mutate a quiver at a node")
    mutate_cmd.add_argument("--input", type=Path, required=True)
    mutate_cmd.add_argument("--node", required=True)
    mutate_cmd.add_argument("--format", choices=["json", "dot"], default="json")
    mutate_cmd.add_argument("--output", type=Path)
    mutate_cmd.set_defaults(handler=_mutate)

    classify = commands.add_parser(
        "classify-cy", help="list Calabi-Yau determinantal loci in P^N"
    )
    classify.add_argument("--max-m", dest="max_m", type=int, default=8)
    classify.add_argument("--max-n", dest="max_N", type=int, default=30)
    classify.add_argument("--dimension", type=int, default=3)
    classify.set_defaults(handler=_classify)

    scenario = commands.add_parser("scenario", help="render a scenario preset")
    scenario.add_argument("name", choices=scenario_catalogue.list_items())
    _add_shape_flags(scenario)
    scenario.add_argument("--bound", type=int)
    scenario.add_argument("--limit", type=int)
    scenario.add_argument(
        "--ample", action=argparse.BooleanOptionalAction, default=None
    )
    scenario.add_argument("--format", choices=["ini", "json"], default="ini")
    scenario.add_argument("--output", type=Path)
    scenario.set_defaults(handler=_scenario)

    export = commands.add_parser("export-dot", help="render a quiver as DOT")
    source = export.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", type=Path)
    source.add_argument("--builder", choices=sorted(QUIVER_BUILDERS))
    _add_shape_flags(export)
    export.add_argument("--output", type=Path)
    export.set_defaults(handler=_export_dot)
    return parser


def _verify_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    keys = [
        "suite",
        "shapes",
        "a_max",
        "order",
        "seed",
        "points",
        "lemma_points",
        "degree_count",
        "degree_bound",
        "beta_source",
        "beta_count",
        "beta_bound",
        "ample",
        "all_fixed_points",
        "num_jobs",
        "output_format",
        "fail_fast",
    ]
    overrides = {key: getattr(args, key) for key in keys}
    shape = (args.m, args.n, args.r)
    if any(v is not None for v in shape):
        if None in shape:
            raise ConfigError("--m, --n and --r must be given together")
        if args.shapes is not None:
            raise ConfigError("Use either --m/--n/--r or --shapes, not both")
        overrides["shapes"] = (shape,)
    return overrides


def _verify(args: argparse.Namespace) -> int:
    config = build_config(args.config, overrides=_verify_overrides(args))
    logger.info("running %s with seed %d", config.suite.value, config.seed)
    report = run_suites(config)
    if config.output_format is OutputFormat.TEXT:
        text = report.to_text()
    else:
        text = report.to_json(include_timing=args.include_timing)
    _emit(text, args.output)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _mutate(args: argparse.Namespace) -> int:
    result = mutate(load_quiver(args.input), args.node)
    if args.format == "dot":
        _emit(to_dot(result.quiver), args.output)
    else:
        _emit(result.quiver.to_json(), args.output)
    return EXIT_OK


def _classify(args: argparse.Namespace) -> int:
    if args.max_m < 1 or args.max_N < 1:
        raise ConfigError("--max-m and --max-n must be at least 1")
    for s, m, N in cy_classify(args.max_m, args.max_N, dimension=args.dimension):
        sys.stdout.write(f"s={s} m={m} N={N}\n")
    return EXIT_OK


def _scenario(args: argparse.Namespace) -> int:
    params = {
        key: getattr(args, key)
        for key in ("m", "n", "r", "bound", "limit", "ample")
        if getattr(args, key) is not None
    }
    scenario = scenario_preset(args.name, **params)
    text = scenario.to_ini() if args.format == "ini" else scenario.to_json()
    _emit(text, args.output)
    return EXIT_OK


def _export_dot(args: argparse.Namespace) -> int:
    quiver: Quiver
    if args.input is not None:
        quiver = load_quiver(args.input)
        name = args.input.stem
    else:
        if None in (args.m, args.n, args.r):
            raise ConfigError(f"--builder {args.builder} needs --m, --n and --r")
        quiver = QUIVER_BUILDERS[args.builder](args.m, args.n, args.r)
        name = args.builder
    _emit(to_dot(quiver, name=name), args.output)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return int(args.handler(args))
    except (
        ConfigError,
        AlgebraException,
        DualityException,
        QuiverException,
        DeterminantalException,
        ValidationError,
        OSError,
    ) as e:
        logger.error("%s", e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
