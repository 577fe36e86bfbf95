"""
Store handlers for the weighted contraharmonic mean verifier.
Lists, rescores and deletes campaigns kept in the SQLite store.
"""

import argparse
import logging

import config
from database import Database
from harness.reports import render_summary

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    """Add the rescore, history and delete subcommands."""
    rescore = subparsers.add_parser("rescore", help="re-apply a tolerance to a stored campaign")
    rescore.add_argument("label")
    rescore.add_argument("--tol", type=float, default=config.DEFAULT_TOL)
    rescore.add_argument("--db", default=config.DATABASE_PATH)
    rescore.set_defaults(handler=cmd_rescore)

    history = subparsers.add_parser("history", help="list stored campaigns")
    history.add_argument("--db", default=config.DATABASE_PATH)
    history.set_defaults(handler=cmd_history)

    delete = subparsers.add_parser("delete", help="remove a stored campaign")
    delete.add_argument("label")
    delete.add_argument("--db", default=config.DATABASE_PATH)
    delete.set_defaults(handler=cmd_delete)


def cmd_rescore(args: argparse.Namespace) -> int:
    """Handle rescore - exit 1 when any stored margin falls below -tol."""
    db = Database(args.db)
    result = db.rescore(args.label, args.tol)
    if result is None:
        logger.error(f"Campaign {args.label} not found in {args.db}")
        return 2

    for line in render_summary(result.summary):
        print(line)
    print(config.MESSAGES["campaign_done"].format(total=result.total, failures=result.failures))
    return result.exit_code


def cmd_history(args: argparse.Namespace) -> int:
    """Handle history - one row per stored campaign."""
    campaigns = Database(args.db).list_campaigns()
    if not campaigns:
        print(config.MESSAGES["no_campaigns"])
        return 0

    for campaign in campaigns:
        print(config.MESSAGES["campaign_row"].format(**campaign))
    return 0


def cmd_delete(args: argparse.Namespace) -> int:
    db = Database(args.db)
    if not db.label_exists(args.label):
        logger.error(f"Campaign {args.label} not found in {args.db}")
        return 2
    return 0 if db.delete_campaign(args.label) else 2
