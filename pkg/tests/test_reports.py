import csv
import json

from harness.campaign import CampaignConfig, CampaignResult, PropertyReport, fuzz_campaign, summarize
from harness.reports import CSV_COLUMNS, render_summary, report_row, write_csv, write_json, write_report
from means.inequality_suite import PropertyId


def small_run(seed=3):
    cfg = CampaignConfig(dims=(1, 2), trials=2, seed=seed, cond_cap=1e2,
                         properties=(PropertyId.SYMMETRY, PropertyId.MIXED_MEAN, PropertyId.LAMBDA_FAMILY))
    return cfg, fuzz_campaign(cfg)


def test_csv_header_and_rows(tmp_path):
    cfg, result = small_run()
    path = tmp_path / "out.csv"
    write_csv(str(path), result)

    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0] == "trial,dim,property,nu,mu,lambda,margin,pass"
    rows = list(csv.DictReader(text.splitlines()))
    assert len(rows) == result.total
    for row, report in zip(rows, result.reports):
        assert float(row["margin"]) == report.margin
        assert float(row["nu"]) == report.nu
        assert row["pass"] == "true"
        assert (row["mu"] == "") == (report.mu is None)
        assert (row["lambda"] == "") == (report.lam is None)


def test_report_row_formats_unset_fields():
    report = PropertyReport(0, 1, PropertyId.SYMMETRY, 0.5, None, None, -0.25, False)
    row = report_row(report)
    assert list(row) == CSV_COLUMNS
    assert row["mu"] == "" and row["lambda"] == ""
    assert row["margin"] == "-0.25"
    assert row["pass"] == "false"


def test_seed_replay_gives_identical_bytes(tmp_path):
    for fmt in ("csv", "json"):
        outputs = []
        for name in ("first", "second"):
            cfg, result = small_run(seed=11)
            path = tmp_path / f"{name}.{fmt}"
            write_report(str(path), result, cfg, fmt)
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]


def test_json_document(tmp_path):
    cfg, result = small_run()
    path = tmp_path / "out.json"
    write_json(str(path), result, cfg)

    document = json.loads(path.read_text(encoding="utf-8"))
    assert document["config"]["seed"] == cfg.seed
    assert len(document["reports"]) == result.total
    assert list(document["reports"][0]) == ["trial", "dim", "property", "nu", "mu", "lambda", "margin", "pass"]
    assert set(document["summary"]) == {"SYMMETRY", "MIXED_MEAN", "LAMBDA_FAMILY"}
    assert document["summary"]["SYMMETRY"]["trials"] == 4


def test_json_writes_infinite_margin_as_string(tmp_path):
    cfg = CampaignConfig(dims=(1, 1), trials=1, properties=(PropertyId.SYMMETRY,))
    reports = [PropertyReport(0, 1, PropertyId.SYMMETRY, 0.5, None, None, float("-inf"), False)]
    result = CampaignResult(reports, summarize(reports, cfg.properties))
    path = tmp_path / "out.json"
    write_json(str(path), result, cfg)

    document = json.loads(path.read_text(encoding="utf-8"))
    assert document["reports"][0]["margin"] == "-inf"
    assert document["summary"]["SYMMETRY"]["min_margin"] == "-inf"
    assert document["summary"]["SYMMETRY"]["failures"] == 1


def test_render_summary():
    _, result = small_run()
    lines = render_summary(result.summary)
    assert len(lines) == 3
    assert lines[0].startswith("SYMMETRY")
    assert "failures=0" in lines[0]
