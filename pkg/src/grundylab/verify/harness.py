"""
Verification harness: runs bound, duality and characterization checks over
a stream of graphs and collects the outcomes in a report.

Graphs are evaluated independently, optionally in a process pool; rows are
sorted by (order, graph6, check) so the merged report does not depend on
scheduling.
"""

import functools
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from grundylab.domination.bounds import (
    grundy_bound_spec, zero_forcing_bound_spec, zgrundy_bound_spec,
)
from grundylab.domination.heuristics import family_m_witness
from grundylab.domination.sequences import Variant, validate_witness
from grundylab.domination.solvers import grundy_number, zero_forcing_number
from grundylab.families.catalog import Characterization, catalog, characterization_members
from grundylab.families.family_m import recognize_family_M
from grundylab.families.named import make_co_2c4, make_complete, make_complete_bipartite
from grundylab.graphs.graph import Graph
from grundylab.graphs.graph6 import graph6_encode
from grundylab.graphs.isomorphism import isomorphic
from grundylab.graphs.structure import has_triangle, is_connected, regularity
from grundylab.utils.config import SolverConfig, VerifyConfig
from grundylab.utils.error_handler import SolverInconsistencyError
from grundylab.utils.log_utils import describe_graph, log_timing
from grundylab.verify.models import (
    BOUND_CHECKS, CHARACTERIZATION_CHECKS, Check, ReportRow, RowStatus,
    VerificationReport, fraction_text,
)

# Configure logging
logger = logging.getLogger(__name__)


class GraphFacts:
    """Invariants of one graph, each computed at most once."""

    def __init__(self, g: Graph, config: SolverConfig):
        self.g = g
        self.config = config
        self.graph6 = graph6_encode(g)
        self.k = regularity(g)
        self.connected = is_connected(g)
        self.triangle = has_triangle(g)
        self._cache: Dict[str, int] = {}

    def _solve(self, key: str, compute: Callable[[], int]) -> int:
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    @property
    def grundy(self) -> int:
        return self._solve("grundy", lambda: grundy_number(self.g, Variant.GRUNDY, self.config).value)

    @property
    def zgrundy(self) -> int:
        return self._solve("zgrundy", lambda: grundy_number(self.g, Variant.ZGRUNDY, self.config).value)

    @property
    def zero_forcing(self) -> int:
        return self._solve("zero_forcing", lambda: zero_forcing_number(self.g, self.config).value)

    @property
    def is_cubic(self) -> bool:
        return self.k == 3

    def row(self, check: Check, status: RowStatus, **fields) -> ReportRow:
        return ReportRow(
            check=check,
            graph6=self.graph6,
            n=self.g.n,
            k=self.k,
            connected=self.connected,
            has_triangle=self.triangle,
            catalog_match=catalog_match(self.g),
            status=status,
            **fields,
        )


def catalog_match(g: Graph) -> Optional[str]:
    """Name of the catalog entry isomorphic to ``g``, if any."""
    edges = g.edge_count
    for entry in catalog():
        if entry.graph.n == g.n and entry.graph.edge_count == edges and isomorphic(entry.graph, g):
            return entry.name
    return None


@functools.lru_cache(maxsize=None)
def _exception_graphs(check: Check, k: int) -> Tuple[Graph, ...]:
    """Graphs the hypothesis of a bound excludes, for degree ``k``."""
    excluded = [make_complete(k + 1)]
    if check == Check.THM21 or check == Check.EXTREMAL:
        excluded.append(make_co_2c4())
    if check == Check.THM34:
        excluded.append(make_complete_bipartite(3, 3))
    return tuple(excluded)


def _excluded_by(facts: GraphFacts, check: Check) -> Optional[str]:
    for exception in _exception_graphs(check, facts.k):
        if exception.n == facts.g.n and isomorphic(exception, facts.g):
            return exception.label
    return None


def _skip(facts: GraphFacts, check: Check, reason: str) -> ReportRow:
    logger.info(f"{check.value}: skipped {describe_graph(facts.g)}: {reason}")
    return facts.row(check, RowStatus.SKIPPED, note=reason)


def _regular_precondition(facts: GraphFacts, check: Check, min_degree: int = 3) -> Optional[ReportRow]:
    if not facts.connected:
        return _skip(facts, check, "not connected")
    if facts.k is None:
        return _skip(facts, check, "not regular")
    if facts.k < min_degree:
        return _skip(facts, check, f"degree {facts.k} below {min_degree}")
    if check == Check.THM34 and facts.k != 3:
        return _skip(facts, check, "not cubic")
    excluded = _excluded_by(facts, check)
    if excluded is not None:
        logger.info(f"{check.value}: excluded {describe_graph(facts.g)} (isomorphic to {excluded})")
        return facts.row(check, RowStatus.EXCLUDED, note=f"isomorphic to {excluded}")
    return None


def _bound_row(facts: GraphFacts, check: Check) -> ReportRow:
    blocked = _regular_precondition(facts, check, min_degree=4 if check == Check.EXTREMAL else 3)
    if blocked is not None:
        return blocked
    n, k = facts.g.n, facts.k
    values: Dict[str, int] = {}
    if check in (Check.THM21, Check.EXTREMAL):
        bound = grundy_bound_spec(n, k).value
        observed = values["grundy"] = facts.grundy
        slack = observed - bound
    elif check == Check.THM31:
        bound = zgrundy_bound_spec(n, k, facts.triangle).value
        observed = values["zgrundy"] = facts.zgrundy
        slack = observed - bound
    elif check == Check.COR32:
        bound = zero_forcing_bound_spec(n, k, facts.triangle).value
        observed = values["zero_forcing"] = facts.zero_forcing
        slack = bound - observed
    else:
        bound = Fraction(n, 2)
        observed = values["zgrundy"] = facts.zgrundy
        slack = observed - bound
    status = RowStatus.PASS if slack >= 0 else RowStatus.FAIL
    if status == RowStatus.FAIL:
        logger.error(f"{check.value}: {describe_graph(facts.g)} violates the bound {bound} with value {observed}")
    return facts.row(
        check, status, bound=fraction_text(bound), slack=fraction_text(slack), extremal=slack == 0, **values,
    )


def _duality_row(facts: GraphFacts) -> ReportRow:
    if facts.g.isolated_vertices():
        return _skip(facts, Check.DUALITY, "isolated vertices")
    try:
        result = zero_forcing_number(facts.g, facts.config)
    except SolverInconsistencyError as e:
        return facts.row(Check.DUALITY, RowStatus.FAIL, note=e.message)
    zgrundy = facts.zgrundy
    if not result.stats.cross_checked:
        return facts.row(
            Check.DUALITY, RowStatus.SKIPPED, zgrundy=zgrundy, zero_forcing=result.value,
            note="direct search above the order limit",
        )
    passed = result.value + zgrundy == facts.g.n
    if not passed:
        logger.error(f"duality: {describe_graph(facts.g)} has Z={result.value}, zgrundy={zgrundy}")
    return facts.row(
        Check.DUALITY, RowStatus.PASS if passed else RowStatus.FAIL,
        zgrundy=zgrundy, zero_forcing=result.value,
        note="" if passed else "Z + zgrundy != n",
    )


@functools.lru_cache(maxsize=None)
def _members(which: Characterization) -> Tuple[Graph, ...]:
    return tuple(entry.graph for entry in characterization_members(which))


def _characterization_row(facts: GraphFacts, check: Check, config: VerifyConfig) -> ReportRow:
    if not facts.connected or not facts.is_cubic:
        return _skip(facts, check, "not a connected cubic graph")
    n = facts.g.n
    values: Dict[str, int] = {}
    note = ""
    if check == Check.PROP42:
        decomposition = recognize_family_M(facts.g)
        if decomposition is None:
            return _skip(facts, check, "not a member of the X/Y family")
        expected = decomposition.in_M_prime
        if expected or n <= config.exact_max_order:
            values["zgrundy"] = facts.zgrundy
            extremal = 2 * values["zgrundy"] == n
        else:
            witness = family_m_witness(decomposition)
            validate_witness(witness, Variant.ZGRUNDY)
            extremal = not 2 * len(witness) > n
            note = f"certified by a Z-sequence of length {len(witness)}"
    else:
        if check == Check.THM44:
            values["zgrundy"] = facts.zgrundy
            extremal = 2 * values["zgrundy"] == n
        elif check == Check.COR45:
            values["zero_forcing"] = facts.zero_forcing
            extremal = 2 * values["zero_forcing"] == n
        else:
            values["grundy"] = facts.grundy
            extremal = 2 * values["grundy"] == n
        members = _members(Characterization(check.value))
        expected = any(member.n == n and isomorphic(member, facts.g) for member in members)
    passed = extremal == expected
    if not passed:
        direction = "missed extremal" if expected else "false extremal"
        note = f"{direction}: {note}" if note else direction
        logger.error(f"{check.value}: {describe_graph(facts.g)} is a {direction}")
    return facts.row(
        check, RowStatus.PASS if passed else RowStatus.FAIL,
        bound=fraction_text(Fraction(n, 2)), extremal=extremal, expected_extremal=expected,
        note=note, **values,
    )


def evaluate_graph(g: Graph, checks: Sequence[Check], config: VerifyConfig) -> List[ReportRow]:
    """Run every requested check on one graph."""
    facts = GraphFacts(g, config.solver)
    rows = []
    for check in checks:
        check = Check(check)
        if check in BOUND_CHECKS or check == Check.EXTREMAL:
            rows.append(_bound_row(facts, check))
        elif check == Check.DUALITY:
            rows.append(_duality_row(facts))
        else:
            rows.append(_characterization_row(facts, check, config))
    return rows


def run_checks(
    stream: Iterable[Graph],
    checks: Sequence[Check],
    config: Optional[VerifyConfig] = None,
) -> VerificationReport:
    """
    Evaluate ``checks`` on every graph of ``stream``.

    Args:
        stream: Graphs to check
        checks: Which checks to run on each graph
        config: Worker count and solver limits

    Returns:
        Report with rows sorted by (order, graph6, check)
    """
    config = config or VerifyConfig()
    graphs = list(stream)
    checks = [Check(check) for check in checks]
    names = ", ".join(check.value for check in checks)
    with log_timing(f"Checks {names} on {len(graphs)} graphs", logger):
        if config.workers > 1 and len(graphs) > 1:
            worker = functools.partial(evaluate_graph, checks=checks, config=config)
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                batches = list(pool.map(worker, graphs))
        else:
            batches = [evaluate_graph(g, checks, config) for g in graphs]
    rows = sorted((row for batch in batches for row in batch), key=lambda row: row.sort_key)
    report = VerificationReport(rows=rows)
    logger.info(f"Checks {names}: {report.summary()['pass']} pass, {len(report.failures)} fail")
    return report


def check_bounds(
    stream: Iterable[Graph],
    which: Sequence[Check] = BOUND_CHECKS,
    config: Optional[VerifyConfig] = None,
) -> VerificationReport:
    """Compare the invariants with the regular-graph bounds; negative slack fails."""
    return run_checks(stream, [Check(check) for check in which], config)


def check_duality(stream: Iterable[Graph], config: Optional[VerifyConfig] = None) -> VerificationReport:
    """``Z + zgrundy = n`` with Z from the duality path and from a direct seed search."""
    return run_checks(stream, [Check.DUALITY], config)


def check_characterization(
    stream: Iterable[Graph],
    which: Sequence[Check] = CHARACTERIZATION_CHECKS,
    config: Optional[VerifyConfig] = None,
) -> VerificationReport:
    """
    Extremal predicate versus catalog membership; a false extremal and a
    missed extremal both fail.
    """
    return run_checks(stream, [Check(check) for check in which], config)


def extremal_scan(stream: Iterable[Graph], k: int, config: Optional[VerifyConfig] = None) -> List[str]:
    """
    Connected k-regular graphs of the stream whose Grundy domination number
    equals the regular lower bound exactly.

    Returns:
        graph6 strings in stream order
    """
    if k < 4:
        logger.warning(f"Extremal scan is meant for k >= 4, got k={k}")
    config = config or VerifyConfig()
    found = []
    for g in stream:
        if regularity(g) != k:
            logger.info(f"extremal: skipped {describe_graph(g)}: not {k}-regular")
            continue
        row = _bound_row(GraphFacts(g, config.solver), Check.THM21)
        if row.status == RowStatus.PASS and row.extremal:
            found.append(row.graph6)
    return found
