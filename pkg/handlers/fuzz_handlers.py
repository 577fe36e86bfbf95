"""
Fuzz handlers for the weighted contraharmonic mean verifier.
Runs a randomized campaign, writes the report and optionally stores the run.
"""

import argparse
import logging
from typing import Tuple

import config
from database import Database
from harness.campaign import CampaignConfig, fuzz_campaign
from harness.reports import render_summary, write_report
from means.inequality_suite import PropertyId
from utils.run_labels import generate_run_label

logger = logging.getLogger(__name__)


def dim_range(text: str) -> Tuple[int, int]:
    """Parse "lo..hi" (or a single dimension)."""
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi if sep else lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <lo>..<hi>, got {text!r}")
    return bounds


def property_list(text: str) -> Tuple[PropertyId, ...]:
    """Parse a comma-separated list of property ids."""
    try:
        return tuple(PropertyId(item.strip().upper()) for item in text.split(",") if item.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown property in {text!r}")


def register(subparsers) -> None:
    """Add the fuzz subcommand."""
    parser = subparsers.add_parser("fuzz", help="run a randomized campaign over every property")
    parser.add_argument("--dims", type=dim_range, default=config.DEFAULT_DIMS, metavar="LO..HI")
    parser.add_argument("--trials", type=int, default=config.DEFAULT_TRIALS)
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    parser.add_argument("--tol", type=float, default=config.DEFAULT_TOL)
    parser.add_argument("--cond-cap", type=float, default=config.DEFAULT_COND_CAP)
    parser.add_argument("--nu-extreme", action="store_true",
                        help="sample weights in [1e-3, 1 - 1e-3] with a relaxed tolerance")
    parser.add_argument("--properties", type=property_list, metavar="ID[,ID...]",
                        help="subset of properties (default all)")
    parser.add_argument("--workers", type=int, default=config.WORKERS)
    parser.add_argument("--report", help="report file")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--db", help="store the campaign in this SQLite file")
    parser.set_defaults(handler=cmd_fuzz)


def build_config(args: argparse.Namespace) -> CampaignConfig:
    cfg = CampaignConfig(
        dims=tuple(args.dims),
        trials=args.trials,
        seed=args.seed,
        tol=args.tol,
        cond_cap=args.cond_cap,
        properties=args.properties or tuple(PropertyId),
    )
    if args.nu_extreme:
        cfg = cfg.with_extreme_weights()
        logger.warning(f"Extreme weights {cfg.nu_range}: tolerance relaxed to {cfg.tol}")
    return cfg


def cmd_fuzz(args: argparse.Namespace) -> int:
    """Handle fuzz - exit 1 when any trial fails."""
    cfg = build_config(args)
    result = fuzz_campaign(cfg, workers=args.workers)

    if args.report:
        write_report(args.report, result, cfg, args.format)

    for line in render_summary(result.summary):
        print(line)
    print(config.MESSAGES["campaign_done"].format(total=result.total, failures=result.failures))

    if args.db:
        db = Database(args.db)
        label = generate_run_label(db, cfg.seed)
        if db.save_campaign(label, cfg, result):
            print(config.MESSAGES["stored"].format(label=label))
        else:
            logger.error(f"Campaign could not be stored in {args.db}")
            return 2

    return result.exit_code
