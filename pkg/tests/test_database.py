import sqlite3

import pytest

from database import Database
from harness.campaign import CampaignConfig, fuzz_campaign
from means.inequality_suite import PropertyId
from utils.run_labels import generate_run_label


@pytest.fixture
def db(tmp_path):
    return Database(str(tmp_path / "campaigns.db"))


@pytest.fixture
def stored_run():
    cfg = CampaignConfig(dims=(1, 2), trials=2, seed=5, cond_cap=1e2,
                         properties=(PropertyId.SYMMETRY, PropertyId.CONTRACTION))
    return cfg, fuzz_campaign(cfg)


def test_save_and_load_campaign(db, stored_run):
    cfg, result = stored_run
    assert db.save_campaign("Run-5-1", cfg, result)

    campaign = db.get_campaign("Run-5-1")
    assert campaign["seed"] == 5
    assert (campaign["dims_lo"], campaign["dims_hi"]) == (1, 2)
    assert campaign["properties"] == ["SYMMETRY", "CONTRACTION"]
    assert campaign["total"] == result.total
    assert campaign["failures"] == 0
    assert db.get_reports("Run-5-1") == result.reports


def test_unknown_campaign(db):
    assert db.get_campaign("missing") is None
    assert db.get_reports("missing") == []
    assert db.rescore("missing", 1e-9) is None


def test_duplicate_label_is_rejected(db, stored_run):
    cfg, result = stored_run
    assert db.save_campaign("Run-5-1", cfg, result)
    assert not db.save_campaign("Run-5-1", cfg, result)


def test_rescore_uses_stored_margins(db, stored_run):
    cfg, result = stored_run
    db.save_campaign("Run-5-1", cfg, result)

    strict = db.rescore("Run-5-1", 1e-9)
    assert strict.total == result.total
    assert strict.failures == 0
    assert set(strict.summary) == {PropertyId.SYMMETRY, PropertyId.CONTRACTION}

    # every stored margin is below 1, so tol = -1 fails them all
    harsh = db.rescore("Run-5-1", -1.0)
    assert harsh.failures == harsh.total


def test_list_and_delete(db, stored_run):
    cfg, result = stored_run
    db.save_campaign("Run-5-1", cfg, result)
    db.save_campaign("Run-5-2", cfg, result)
    assert [c["label"] for c in db.list_campaigns()] == ["Run-5-1", "Run-5-2"]

    assert db.delete_campaign("Run-5-1")
    assert not db.label_exists("Run-5-1")
    assert db.get_reports("Run-5-1") == []
    assert [c["label"] for c in db.list_campaigns()] == ["Run-5-2"]


def test_generate_run_label(db, stored_run):
    cfg, result = stored_run
    assert generate_run_label(db, 5) == "Run-5-1"
    db.save_campaign("Run-5-1", cfg, result)
    assert generate_run_label(db, 5) == "Run-5-2"
    assert generate_run_label(db, 6) == "Run-6-1"


class TrackedConnection:
    """Wraps a sqlite3 connection and records whether it was closed."""

    def __init__(self, conn, fail_on_cursor=False):
        self.conn = conn
        self.fail_on_cursor = fail_on_cursor
        self.closed = False

    def cursor(self):
        if self.fail_on_cursor:
            raise sqlite3.OperationalError("database is locked")
        return self.conn.cursor()

    def commit(self):
        self.conn.commit()

    def close(self):
        self.closed = True
        self.conn.close()


@pytest.fixture
def tracked(db, monkeypatch):
    opened = []
    connect = db.get_connection

    def track(fail_on_cursor=False):
        def get_connection():
            opened.append(TrackedConnection(connect(), fail_on_cursor))
            return opened[-1]
        monkeypatch.setattr(db, "get_connection", get_connection)
        return opened

    return track


def test_failed_save_closes_connection(db, stored_run, tracked):
    cfg, result = stored_run
    db.save_campaign("Run-5-1", cfg, result)
    opened = tracked()
    assert not db.save_campaign("Run-5-1", cfg, result)
    assert len(opened) == 1 and opened[0].closed


def test_failed_delete_closes_connection(db, stored_run, tracked):
    cfg, result = stored_run
    db.save_campaign("Run-5-1", cfg, result)
    opened = tracked(fail_on_cursor=True)
    assert not db.delete_campaign("Run-5-1")
    assert len(opened) == 1 and opened[0].closed
