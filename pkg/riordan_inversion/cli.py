"""Command-line front end: ``riordan-inversion <subcommand> …``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

import argparse
import logging
import sys
from typing import Sequence

from pydantic import ValidationError

from riordan_inversion.arrays.contfrac import cf_triangle, eval_cf_at
from riordan_inversion.arrays.exp_riordan import exp_bang, exp_to_matrix
from riordan_inversion.arrays.inversion import bang_riordan, revert_transform_terms
from riordan_inversion.arrays.riordan import to_matrix
from riordan_inversion.arrays.sources import exponential_from_text, ordinary_from_text
from riordan_inversion.config.settings import settings
from riordan_inversion.core.errors import RiordanError
from riordan_inversion.core.numbers import parse_rationals, to_rational
from riordan_inversion.core.triangle import SequenceView
from riordan_inversion.corpus.loader import load_cf_source, load_corpus
from riordan_inversion.corpus.render import OutputFormat, render, render_reports
from riordan_inversion.corpus.runner import build_cf, run_corpus
from riordan_inversion.models.corpus_models import CorpusSummary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _order(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if not 0 <= value <= settings.MAX_ORDER:
        raise argparse.ArgumentTypeError(f"N must be between 0 and {settings.MAX_ORDER}")
    return value


def _jobs(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("--jobs must be at least 1")
    return value


def _add_pair_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--g", help="g (or u with --exp): coefficients '1,-1' or an expression, or family:NAME:param")
    parser.add_argument("--f", help="f (or v with --exp): same forms as --g")
    parser.add_argument("--family", help="NAME:param, e.g. PASCAL_LIKE:2 (ordinary arrays only)")
    parser.add_argument("--exp", action="store_true", help="read --g/--f as an exponential pair [u, v]")
    parser.add_argument("-N", dest="order", type=_order, default=5, help="last row to compute (default 5)")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TABLE.value,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan-inversion",
        description="Exact Riordan arrays, their inversion, and the regression corpus.",
    )
    parser.add_argument("--log-level", default=None, help=f"overrides LOG_LEVEL (default {settings.LOG_LEVEL})")
    commands = parser.add_subparsers(dest="command", required=True)

    triangle = commands.add_parser("triangle", help="print the array (g, f) to row N")
    _add_pair_arguments(triangle)
    _add_format(triangle)

    bang = commands.add_parser("bang", help="print the inversion of (g, f) to row N")
    _add_pair_arguments(bang)
    _add_format(bang)

    revert = commands.add_parser("revert-seq", help="revert transform of a sequence prefix")
    revert.add_argument("--seq", required=True, help="comma-separated rationals")
    revert.add_argument("-N", dest="order", type=_order, default=None, help="last term (default: the prefix length)")
    _add_format(revert)

    verify = commands.add_parser("verify", help="run the regression corpus")
    verify.add_argument("--corpus", default=None, help="corpus YAML (default: CORPUS_FILE, then the packaged corpus)")
    verify.add_argument("--jobs", type=_jobs, default=settings.DEFAULT_JOBS)
    _add_format(verify)

    cf_eval = commands.add_parser("cf-eval", help="expand a continued fraction given as YAML")
    cf_eval.add_argument("--spec", required=True, help="YAML file with 'builder'/'param' or 'levels'")
    cf_eval.add_argument("-N", dest="order", type=_order, default=5)
    _add_format(cf_eval)

    commands.add_parser("serve", help="serve the HTTP API with uvicorn (HOST, PORT, RELOAD)")
    return parser


def _array(args: argparse.Namespace, bang: bool):
    if args.exp:
        spec = exponential_from_text(args.g, args.f)
        return exp_bang(spec, args.order) if bang else exp_to_matrix(spec, args.order)
    spec = ordinary_from_text(args.g, args.f, args.family)
    return bang_riordan(spec, args.order) if bang else to_matrix(spec, args.order)


def _revert(args: argparse.Namespace) -> SequenceView:
    terms = parse_rationals(args.seq)
    if not terms:
        raise ValueError("--seq needs at least one term")
    if len(terms) > settings.MAX_ORDER + 1:
        raise ValueError(f"--seq has {len(terms)} terms; at most {settings.MAX_ORDER + 1} are accepted")
    if args.order is not None:
        terms = terms[: args.order + 1] + [to_rational(0)] * (args.order + 1 - len(terms))
    return revert_transform_terms(terms)


def _cf_eval(args: argparse.Namespace):
    source = load_cf_source(args.spec)
    cf = build_cf(source)
    if source.y is not None:
        return SequenceView(eval_cf_at(cf, args.order, to_rational(source.y)).coeffs)
    return cf_triangle(cf, args.order)


def _verify(args: argparse.Namespace) -> int:
    reports = run_corpus(load_corpus(args.corpus), jobs=args.jobs)
    print(render_reports(reports, args.format))
    return EXIT_OK if CorpusSummary.from_reports(reports).ok else EXIT_VERIFY_FAILED


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings.configure_logging(args.log_level)

    if args.command == "serve":
        from riordan_inversion.main import run

        run()
        return EXIT_OK

    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "triangle":
            result = _array(args, bang=False)
        elif args.command == "bang":
            result = _array(args, bang=True)
        elif args.command == "revert-seq":
            result = _revert(args)
        else:
            result = _cf_eval(args)
    except (RiordanError, ValidationError, ValueError, ArithmeticError) as exc:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    print(render(result, args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
