"""Text renderings of triangles, sequences and verification reports."""

import csv
import io
import json
from enum import Enum
from typing import Sequence

from riordan_inversion.core.triangle import SequenceView, Triangle
from riordan_inversion.models.corpus_models import CaseReport, CorpusSummary


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


def _cells(result: Triangle | SequenceView) -> list[list[str]]:
    if isinstance(result, Triangle):
        return result.to_strings()
    return [result.to_strings()]


def render(result: Triangle | SequenceView, format: OutputFormat | str = OutputFormat.TABLE) -> str:
    """
    table: right-aligned grid, one row per line.
    json: rows of decimal strings (a flat list for sequences).
    csv: one row per line, comma separated.
    """
    fmt = OutputFormat(format)
    rows = _cells(result)
    if fmt is OutputFormat.JSON:
        payload = rows if isinstance(result, Triangle) else rows[0]
        return json.dumps(payload)
    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    width = max((len(cell) for row in rows for cell in row), default=1)
    return "\n".join(" ".join(cell.rjust(width) for cell in row) for row in rows)


def render_reports(
    reports: Sequence[CaseReport], format: OutputFormat | str = OutputFormat.TABLE
) -> str:
    fmt = OutputFormat(format)
    if fmt is OutputFormat.JSON:
        return json.dumps(
            {
                "summary": CorpusSummary.from_reports(list(reports)).model_dump(),
                "cases": [report.model_dump(mode="json") for report in reports],
            }
        )
    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["id", "status", "expectation", "as_expected", "n", "k", "got", "want", "error"])
        for r in reports:
            m = r.first_mismatch
            writer.writerow(
                [
                    r.id,
                    r.status.value,
                    r.expectation.value,
                    "yes" if r.as_expected else "no",
                    m.n if m else "",
                    m.k if m else "",
                    m.got if m else "",
                    m.want if m else "",
                    r.error or "",
                ]
            )
        return buffer.getvalue().rstrip("\n")

    id_width = max((len(r.id) for r in reports), default=2)
    lines = []
    for r in reports:
        detail = ""
        if r.first_mismatch is not None:
            m = r.first_mismatch
            detail = f"first mismatch at ({m.n}, {m.k}): got {m.got}, want {m.want}"
        elif r.error:
            detail = f"{r.error_type}: {r.error}"
        marker = "" if r.as_expected else "  <-- unexpected"
        lines.append(f"{r.id.ljust(id_width)}  {r.status.value:<4}  {r.expectation.value:<17}  {detail}{marker}".rstrip())
    summary = CorpusSummary.from_reports(list(reports))
    lines.append(
        f"{summary.total} cases: {summary.passed} passed, {summary.failed} failed "
        f"({summary.known_discrepancies} known discrepancies), {len(summary.unexpected)} unexpected"
    )
    return "\n".join(lines)
