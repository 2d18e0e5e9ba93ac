"""
Verification harness: graph streams, checks and reports.
"""

from grundylab.verify.enumeration import enumerate_cubic, ingest_cubic_file
from grundylab.verify.harness import (
    catalog_match, check_bounds, check_characterization, check_duality,
    evaluate_graph, extremal_scan, run_checks,
)
from grundylab.verify.models import (
    BOUND_CHECKS, CHARACTERIZATION_CHECKS, Check, ReportRow, RowStatus, VerificationReport,
)
