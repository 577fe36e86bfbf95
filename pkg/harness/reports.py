"""
Report writers for fuzz campaigns: CSV, JSON, and terminal summaries.
Output depends only on the campaign contents, so a replayed seed gives identical bytes.
"""

import csv
import json
import logging
from typing import Dict, List, Optional

import config
from harness.campaign import CampaignConfig, CampaignResult, PropertyReport, PropertySummary
from means.inequality_suite import PropertyId

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["trial", "dim", "property", "nu", "mu", "lambda", "margin", "pass"]


def _number(value: Optional[float]) -> str:
    """repr round-trips doubles exactly; unset values stay empty."""
    return "" if value is None else repr(float(value))


def report_row(report: PropertyReport) -> Dict[str, str]:
    return {
        "trial": str(report.trial),
        "dim": str(report.dim),
        "property": report.property.value,
        "nu": _number(report.nu),
        "mu": _number(report.mu),
        "lambda": _number(report.lam),
        "margin": _number(report.margin),
        "pass": "true" if report.passed else "false",
    }


def _json_number(value: Optional[float]):
    # JSON has no infinities; a raised trial is stored as the string "-inf"
    if value is None:
        return None
    value = float(value)
    return value if value == value and abs(value) != float("inf") else repr(value)


def summary_dict(summary: Dict[PropertyId, PropertySummary]) -> Dict:
    return {
        pid.value: {
            "trials": s.trials,
            "failures": s.failures,
            "min_margin": _json_number(s.min_margin),
        }
        for pid, s in summary.items()
    }


def write_csv(path: str, result: CampaignResult) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for report in result.reports:
            writer.writerow(report_row(report))
    logger.info(f"Wrote {result.total} report rows to {path}")


def write_json(path: str, result: CampaignResult, cfg: CampaignConfig) -> None:
    document = {
        "config": cfg.as_dict(),
        "reports": [
            {
                "trial": r.trial,
                "dim": r.dim,
                "property": r.property.value,
                "nu": _json_number(r.nu),
                "mu": _json_number(r.mu),
                "lambda": _json_number(r.lam),
                "margin": _json_number(r.margin),
                "pass": r.passed,
            }
            for r in result.reports
        ],
        "summary": summary_dict(result.summary),
    }
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f, indent=2)
        f.write("\n")
    logger.info(f"Wrote JSON report with {result.total} trials to {path}")


def write_report(path: str, result: CampaignResult, cfg: CampaignConfig, fmt: str = "csv") -> None:
    if fmt == "json":
        write_json(path, result, cfg)
    else:
        write_csv(path, result)


def render_summary(summary: Dict[PropertyId, PropertySummary]) -> List[str]:
    lines = []
    for pid, s in summary.items():
        lines.append(config.MESSAGES["summary_line"].format(
            property=pid.value,
            trials=s.trials,
            failures=s.failures,
            min_margin=s.min_margin if s.min_margin is not None else 0.0,
        ))
    return lines
