"""
Database module for the weighted contraharmonic mean verifier.
Stores fuzz campaigns and their raw margins in SQLite so a tolerance
can be re-applied offline.
"""

import json
import logging
import sqlite3
from typing import Dict, List, Optional

import config
from harness.campaign import (
    CampaignConfig,
    CampaignResult,
    PropertyReport,
    rescore as rescore_reports,
    summarize,
)
from means.inequality_suite import PropertyId

logger = logging.getLogger(__name__)


class Database:
    """Database handler for stored campaigns and their per-trial reports."""

    def __init__(self, db_path: str = config.DATABASE_PATH):
        """Initialize database connection and create tables if they don't exist."""
        self.db_path = db_path
        self.init_database()

    def get_connection(self) -> sqlite3.Connection:
        """Get a database connection."""
        conn = sqlite3.connect(self.db_path)
        conn.row_factory = sqlite3.Row
        return conn

    def init_database(self):
        """Create all necessary tables if they don't exist."""
        conn = self.get_connection()
        cursor = conn.cursor()

        # Campaigns table - one row per stored fuzz run
        cursor.execute("""
            CREATE TABLE IF NOT EXISTS campaigns (
                label TEXT PRIMARY KEY,
                seed TEXT NOT NULL,
                dims_lo INTEGER NOT NULL,
                dims_hi INTEGER NOT NULL,
                trials INTEGER NOT NULL,
                tol REAL NOT NULL,
                nu_lo REAL NOT NULL,
                nu_hi REAL NOT NULL,
                cond_cap REAL NOT NULL,
                properties TEXT NOT NULL,
                total INTEGER NOT NULL,
                failures INTEGER NOT NULL,
                created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            )
        """)

        # Reports table - raw margins, one row per trial
        cursor.execute("""
            CREATE TABLE IF NOT EXISTS reports (
                report_id INTEGER PRIMARY KEY AUTOINCREMENT,
                label TEXT NOT NULL,
                trial INTEGER NOT NULL,
                dim INTEGER NOT NULL,
                property TEXT NOT NULL,
                nu REAL,
                mu REAL,
                lambda REAL,
                margin REAL NOT NULL,
                FOREIGN KEY (label) REFERENCES campaigns(label)
            )
        """)

        conn.commit()
        conn.close()
        logger.debug(f"Database initialized at {self.db_path}")

    # Campaign operations
    def label_exists(self, label: str) -> bool:
        """Check if a campaign label is taken."""
        conn = self.get_connection()
        cursor = conn.cursor()
        cursor.execute("SELECT COUNT(*) FROM campaigns WHERE label = ?", (label,))
        result = cursor.fetchone()
        conn.close()
        return result[0] > 0 if result else False

    def save_campaign(self, label: str, cfg: CampaignConfig, result: CampaignResult) -> bool:
        """Store a campaign and all of its reports."""
        conn = None
        try:
            conn = self.get_connection()
            cursor = conn.cursor()
            cursor.execute(
                """INSERT INTO campaigns
                   (label, seed, dims_lo, dims_hi, trials, tol, nu_lo, nu_hi, cond_cap,
                    properties, total, failures)
                   VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)""",
                (label, str(cfg.seed), cfg.dims[0], cfg.dims[1], cfg.trials, cfg.tol,
                 cfg.nu_range[0], cfg.nu_range[1], cfg.cond_cap,
                 json.dumps([p.value for p in cfg.properties]), result.total, result.failures)
            )
            cursor.executemany(
                """INSERT INTO reports (label, trial, dim, property, nu, mu, lambda, margin)
                   VALUES (?, ?, ?, ?, ?, ?, ?, ?)""",
                [
                    (label, r.trial, r.dim, r.property.value, r.nu, r.mu, r.lam, r.margin)
                    for r in result.reports
                ]
            )
            conn.commit()
            logger.info(f"Stored campaign {label} ({result.total} trials)")
            return True
        except Exception as e:
            logger.error(f"Error storing campaign: {e}")
            return False
        finally:
            if conn is not None:
                conn.close()

    def get_campaign(self, label: str) -> Optional[Dict]:
        """Get the stored parameters of a campaign."""
        conn = self.get_connection()
        cursor = conn.cursor()
        cursor.execute("SELECT * FROM campaigns WHERE label = ?", (label,))
        row = cursor.fetchone()
        conn.close()
        return self._campaign_dict(row) if row else None

    def list_campaigns(self) -> List[Dict]:
        """Get all stored campaigns, oldest first."""
        conn = self.get_connection()
        cursor = conn.cursor()
        cursor.execute("SELECT * FROM campaigns ORDER BY created_at, label")
        rows = cursor.fetchall()
        conn.close()
        return [self._campaign_dict(row) for row in rows]

    def get_reports(self, label: str, tol: Optional[float] = None) -> List[PropertyReport]:
        """Get the reports of a campaign in (dim, property, trial) order, judged against tol."""
        campaign = self.get_campaign(label)
        if campaign is None:
            return []
        tol = campaign["tol"] if tol is None else tol
        conn = self.get_connection()
        cursor = conn.cursor()
        cursor.execute(
            """SELECT trial, dim, property, nu, mu, lambda, margin
               FROM reports WHERE label = ?
               ORDER BY report_id""",
            (label,)
        )
        rows = cursor.fetchall()
        conn.close()
        return [
            PropertyReport(
                trial=row["trial"],
                dim=row["dim"],
                property=PropertyId(row["property"]),
                nu=row["nu"],
                mu=row["mu"],
                lam=row["lambda"],
                margin=row["margin"],
                passed=row["margin"] >= -tol,
            )
            for row in rows
        ]

    def rescore(self, label: str, tol: float) -> Optional[CampaignResult]:
        """Re-apply a tolerance to the stored raw margins of a campaign."""
        campaign = self.get_campaign(label)
        if campaign is None:
            logger.warning(f"No stored campaign named {label}")
            return None
        reports = rescore_reports(self.get_reports(label), tol)
        properties = [PropertyId(p) for p in campaign["properties"]]
        return CampaignResult(reports, summarize(reports, properties))

    def delete_campaign(self, label: str) -> bool:
        """Delete a campaign and its reports."""
        conn = None
        try:
            conn = self.get_connection()
            cursor = conn.cursor()
            cursor.execute("DELETE FROM reports WHERE label = ?", (label,))
            cursor.execute("DELETE FROM campaigns WHERE label = ?", (label,))
            conn.commit()
            return True
        except Exception as e:
            logger.error(f"Error deleting campaign: {e}")
            return False
        finally:
            if conn is not None:
                conn.close()

    @staticmethod
    def _campaign_dict(row: sqlite3.Row) -> Dict:
        return {
            "label": row["label"],
            "seed": int(row["seed"]),
            "dims_lo": row["dims_lo"],
            "dims_hi": row["dims_hi"],
            "trials": row["trials"],
            "tol": row["tol"],
            "nu_range": (row["nu_lo"], row["nu_hi"]),
            "cond_cap": row["cond_cap"],
            "properties": json.loads(row["properties"]),
            "total": row["total"],
            "failures": row["failures"],
            "created_at": row["created_at"],
        }
