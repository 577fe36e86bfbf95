"""
Main entry point for the weighted contraharmonic mean verifier.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

import config
from errors import ContraharmonicError
from handlers import (
    compute_handlers,
    fuzz_handlers,
    selftest_handlers,
    store_handlers,
    verify_handlers,
)

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contraharmonic",
        description="Weighted contraharmonic means of positive definite matrices",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (compute_handlers, verify_handlers, fuzz_handlers, selftest_handlers, store_handlers):
        module.register(subparsers)
    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; 0 = pass, 1 = property violation, 2 = usage or I/O error."""
    logging.basicConfig(level=config.LOG_LEVEL, format=config.LOG_FORMAT)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return e.code if isinstance(e.code, int) else 2

    try:
        return args.handler(args)
    except (ContraharmonicError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        return 2


if __name__ == "__main__":
    try:
        sys.exit(cli_main())
    except KeyboardInterrupt:
        logger.info("Stopped by user")
        sys.exit(130)
