"""
Report models of the verification harness.
"""

import enum
import json
import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Optional, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

# Configure logging
logger = logging.getLogger(__name__)


class Check(str, enum.Enum):
    """Checks the harness can run on a stream."""

    THM21 = "thm21"
    THM31 = "thm31"
    COR32 = "cor32"
    THM34 = "thm34"
    DUALITY = "duality"
    THM44 = "thm44"
    COR45 = "cor45"
    COR46 = "cor46"
    PROP42 = "prop42"
    EXTREMAL = "extremal"


BOUND_CHECKS = (Check.THM21, Check.THM31, Check.COR32, Check.THM34)
CHARACTERIZATION_CHECKS = (Check.THM44, Check.COR45, Check.COR46, Check.PROP42)


class RowStatus(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    EXCLUDED = "excluded"
    SKIPPED = "skipped"


def fraction_text(value: Optional[Union[Fraction, int]]) -> Optional[str]:
    """Exact rational as text: ``5``, ``5/2`` or ``-1/2``."""
    if value is None:
        return None
    return str(Fraction(value))


class ReportRow(BaseModel):
    """
    Outcome of one check on one graph.

    Bound and slack are exact rationals rendered as text so that reports
    are byte-stable.
    """

    model_config = ConfigDict(frozen=True)

    check: Check
    graph6: str
    n: int
    k: Optional[int] = None
    connected: bool
    has_triangle: bool
    grundy: Optional[int] = None
    zgrundy: Optional[int] = None
    zero_forcing: Optional[int] = None
    bound: Optional[str] = None
    slack: Optional[str] = None
    extremal: Optional[bool] = None
    expected_extremal: Optional[bool] = None
    catalog_match: Optional[str] = None
    status: RowStatus
    note: str = ""

    @property
    def sort_key(self):
        return (self.n, self.graph6, self.check.value)


class VerificationReport(BaseModel):
    """Rows of a verification run plus a summary."""

    rows: List[ReportRow] = Field(default_factory=list)

    @property
    def failures(self) -> List[ReportRow]:
        return [row for row in self.rows if row.status == RowStatus.FAIL]

    @property
    def failed(self) -> bool:
        return bool(self.failures)

    def extremal_rows(self, check: Optional[Check] = None) -> List[ReportRow]:
        return [
            row for row in self.rows
            if row.extremal and (check is None or row.check == check)
        ]

    def summary(self) -> Dict[str, object]:
        counts = Counter(row.status.value for row in self.rows)
        return {
            "rows": len(self.rows),
            "graphs": len({row.graph6 for row in self.rows}),
            "pass": counts.get(RowStatus.PASS.value, 0),
            "fail": counts.get(RowStatus.FAIL.value, 0),
            "excluded": counts.get(RowStatus.EXCLUDED.value, 0),
            "skipped": counts.get(RowStatus.SKIPPED.value, 0),
            "extremal": sum(1 for row in self.rows if row.extremal),
            "failures": [f"{row.check.value} {row.graph6}: {row.note}" for row in self.failures],
        }

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(rows=sorted(self.rows + other.rows, key=lambda row: row.sort_key))

    def to_frame(self) -> pd.DataFrame:
        columns = list(ReportRow.model_fields)
        records = [row.model_dump(mode="json") for row in self.rows]
        return pd.DataFrame.from_records(records, columns=columns)

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator="\n")

    def to_json(self) -> str:
        payload = {
            "rows": [row.model_dump(mode="json") for row in self.rows],
            "summary": self.summary(),
        }
        return json.dumps(payload, indent=2)

    def to_text(self) -> str:
        if not self.rows:
            return "no rows\n"
        frame = self.to_frame()
        shown = frame[["check", "graph6", "n", "k", "grundy", "zgrundy", "zero_forcing",
                       "bound", "slack", "extremal", "catalog_match", "status"]]
        summary = self.summary()
        tail = (
            f"\n{summary['graphs']} graphs, {summary['pass']} pass, {summary['fail']} fail, "
            f"{summary['excluded']} excluded, {summary['skipped']} skipped, {summary['extremal']} extremal\n"
        )
        return shown.to_string(index=False) + tail
