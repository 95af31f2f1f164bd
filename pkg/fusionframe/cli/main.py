import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from fusionframe import __version__
from fusionframe.config.logging_config import setup_logging
from fusionframe.core.errors import DegenerateDrawError, FrameValidationError, FusionFrameError, StructuralError
from .commands import (
    EXIT_INPUT_ERROR, InputError, cmd_admissible, cmd_check, cmd_generate, cmd_reproduce_fig, cmd_tighten
)

logger = logging.getLogger("fusionframe.cli")

CHECKS = ("tight", "critical", "property-s", "certificate", "spectra")

def _add_frame_flags(p: argparse.ArgumentParser, seed_default: Optional[int] = 0):
    p.add_argument("--field", choices=["real", "complex"], default="real")
    p.add_argument("--d", type=int)
    p.add_argument("--ranks", type=str, help="comma separated ranks, e.g. 1,1,2")
    p.add_argument("--seed", type=int, default=seed_default)

def _add_descent_flags(p: argparse.ArgumentParser):
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--max-iters", type=int, default=None)
    p.add_argument("--grad-tol", type=float, default=None)

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fusionframe", description="Fusion frame tightening and certification")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--log-level", type=str, default=None)
    sub = p.add_subparsers(dest="command", required=True)

    pg = sub.add_parser("generate", help="random fusion frame to a JSON file")
    _add_frame_flags(pg)
    pg.add_argument("--out", type=str)
    pg.set_defaults(handler=cmd_generate)

    pt = sub.add_parser("tighten", help="gradient descent on the fusion frame potential")
    _add_frame_flags(pt)
    _add_descent_flags(pt)
    pt.add_argument("--in", dest="in_path", type=str)
    pt.add_argument("--out", type=str)
    pt.add_argument("--trace", type=str, help="trace CSV path (default <out>.trace.csv)")
    pt.set_defaults(handler=cmd_tighten)

    pc = sub.add_parser("check", help="verdicts about a frame file as JSON")
    pc.add_argument("--in", dest="in_path", type=str)
    pc.add_argument("--which", choices=CHECKS, required=True)
    pc.add_argument("--lambda", dest="lambda_", type=str)
    pc.add_argument("--r", type=str, help="per-block spectra, groups separated by ';'")
    pc.add_argument("--out", type=str)
    pc.set_defaults(handler=cmd_check)

    pr = sub.add_parser("reproduce", help="multi-seed run of the two-lines-and-a-plane experiment")
    pr.add_argument("--seeds", type=int, default=None)
    pr.add_argument("--seed", type=int, default=None, help="master seed")
    _add_descent_flags(pr)
    pr.add_argument("--out", type=str, help="output directory")
    pr.add_argument("--preset", type=str, default=None, help="experiment preset YAML")
    pr.add_argument("--progress", action="store_true")
    pr.set_defaults(handler=cmd_reproduce_fig)

    pa = sub.add_parser("admissible", help="majorization or tight fusion frame existence")
    _add_frame_flags(pa, seed_default=None)
    pa.add_argument("--lambda", dest="lambda_", type=str)
    pa.add_argument("--r", type=str)
    pa.add_argument("--out", type=str)
    pa.set_defaults(handler=cmd_admissible)
    return p

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse: --help / --version 는 0, 사용법 오류는 2
        return int(e.code or 0)

    setup_logging(args.log_level)
    try:
        return args.handler(args)
    except (InputError, StructuralError, FrameValidationError, ValidationError) as e:
        logger.error(f"입력 오류: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except DegenerateDrawError as e:
        logger.error(f"무작위 추출 실패: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except FusionFrameError as e:
        logger.error(f"처리 오류: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

if __name__ == "__main__":
    sys.exit(main())
