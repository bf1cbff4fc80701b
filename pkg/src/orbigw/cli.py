"""Command line: ``orbigw compute|sectors|basis|git --config run.json``."""

import argparse
import logging
import sys

from .config import FORMATS, load_config
from .errors import EngineError
from .pipeline import run_pipeline
from .render import render

__all__ = ["main", "build_parser"]

_STAGE_OF_VERB = {"sectors": ("sectors",), "basis": ("basis",), "git": ("git",)}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orbigw",
        description="Exact genus-0 orbifold Gromov-Witten invariants of Calabi-Yau "
                    "threefold complete intersections in weighted projective stacks.")
    sub = parser.add_subparsers(dest="verb", required=True)
    helps = {"compute": "run the requested outputs of the config (default: invariants)",
             "sectors": "list the twisted sectors", "basis": "list the admissible basis",
             "git": "show the extended weight matrix and multi-degrees"}
    for verb, text in helps.items():
        p = sub.add_parser(verb, help=text)
        p.add_argument("--config", default="-",
                       help="path to a JSON run config, '-' for stdin (default)")
        p.add_argument("--emit", choices=FORMATS, default=None,
                       help="output format (overrides the config's format)")
        p.add_argument("--truncation", type=int, default=None, metavar="D",
                       help="override truncationTotalDegree")
        p.add_argument("--no-cache", action="store_true", help="ignore the cache directory")
        p.add_argument("-v", "--verbose", action="store_true", help="log stage timings to stderr")
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        try:
            text = _read(args.config)
        except OSError as exc:
            print("orbigw: cannot read config: %s" % exc, file=sys.stderr)
            return 2
        config = load_config(text)
        if args.truncation is not None:
            if args.truncation < 0:
                print("orbigw: --truncation must be >= 0", file=sys.stderr)
                return 2
            config = config.with_overrides(truncationTotalDegree=args.truncation)
        if args.verb in _STAGE_OF_VERB:
            config = config.with_overrides(outputs=_STAGE_OF_VERB[args.verb])
        bundle = run_pipeline(config, use_cache=not args.no_cache)
        sys.stdout.write(render(bundle, args.emit or config.format))
    except EngineError as exc:
        where = " in stage %s" % exc.stage if exc.stage else ""
        print("orbigw: %s%s: %s" % (type(exc).__name__, where, exc), file=sys.stderr)
        return exc.exit_code
    return 0
