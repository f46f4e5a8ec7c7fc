"""
Serialise a VerificationReport as JSON, CSV or a Markdown summary.
"""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

import pandas as pd

from models.errors import UsageError
from models.report import FAIL, VerificationReport
from tools.constants import LATEST_JSON, RECORD_COLUMNS, REPORTS_DIR, SUMMARY_FAILURES_SHOWN, SWEEP_COLUMNS

logger = logging.getLogger(__name__)


def records_frame(report: VerificationReport) -> pd.DataFrame:
    """One row per check, in RECORD_COLUMNS order; inputs and values are JSON encoded."""
    rows = []
    for record in report.records:
        data = record.to_dict()
        for key in ("inputs", "computed", "expected"):
            data[key] = json.dumps(data[key], sort_keys=True)
        rows.append(data)
    return pd.DataFrame(rows, columns=RECORD_COLUMNS)


def sweep_frame(report: VerificationReport) -> pd.DataFrame:
    return pd.DataFrame(report.rows, columns=SWEEP_COLUMNS)


def default_path(report: VerificationReport, fmt: str) -> Path:
    stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S")
    return REPORTS_DIR / f"{report.suite}-{stamp}.{fmt}"


def write_report(report: VerificationReport, fmt: str = "json", out: Optional[str] = None) -> Path:
    """Write the report and return its path; JSON runs also refresh latest.json."""
    path = Path(out) if out else default_path(report, fmt)
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "json":
        with open(path, 'w') as f:
            json.dump(report.to_dict(), f, indent=2)
        with open(path.parent / LATEST_JSON, 'w') as f:
            json.dump(report.to_dict(), f, indent=2)
    elif fmt == "csv":
        frame = sweep_frame(report) if report.rows else records_frame(report)
        frame.to_csv(path, index=False)
    elif fmt == "md":
        path.write_text(markdown_summary(report), encoding="utf-8")
    else:
        raise UsageError(f"unknown format '{fmt}'")
    logger.info("Report written to %s", path)
    return path


def markdown_summary(report: VerificationReport) -> str:
    summary = report.summary()
    lines = [
        f"# Verification Summary: {report.suite}\n",
        f"Generated on: {datetime.now(timezone.utc).isoformat(timespec='seconds')}\n",
        f"Schema: {report.schema}\n",
        "| pass | fail | skipped | total |",
        "|---|---|---|---|",
        f"| {summary['pass']} | {summary['fail']} | {summary['skipped']} | {summary['total']} |\n",
    ]
    failures = [r for r in report.records if r.status == FAIL]
    lines.append("## Failures")
    if not failures:
        lines.append("None.")
    for record in failures[:SUMMARY_FAILURES_SHOWN]:
        lines.append(f"- `{record.check_id}`: {record.anchor} ({record.reason}, residual {record.residual})")
    if len(failures) > SUMMARY_FAILURES_SHOWN:
        lines.append(f"- ... and {len(failures) - SUMMARY_FAILURES_SHOWN} more.")
    if report.rows:
        lines.append("\n## Sweep")
        lines.append(f"{len(report.rows)} rows; worst residual "
                     f"{max(row['residual'] for row in report.rows):.3e}.")
    return "\n".join(lines) + "\n"


def load_latest(directory: Optional[Path] = None) -> Optional[dict]:
    path = Path(directory or REPORTS_DIR) / LATEST_JSON
    if not path.exists():
        return None
    with open(path) as f:
        return json.load(f)
