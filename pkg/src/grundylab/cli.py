"""
Command line for grundylab.

Subcommands: ``compute``, ``generate``, ``verify``, ``enumerate`` and
``recognize``. Exit code 0 on success, 1 when a verification fails, 2 on
usage or input errors. Output never carries timings so that it is
byte-stable for fixed inputs, flags and seeds.
"""

import argparse
import enum
import json
import logging
import sys
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from grundylab import __version__, setup_logging
from grundylab.domination.sequences import Variant, WitnessRecord, witness_from_json
from grundylab.domination.solvers import grundy_number, zero_forcing_number
from grundylab.families.catalog import catalog, named_graph
from grundylab.families.family_m import FamilyMDecomposition, assemble_family_m, recognize_family_M
from grundylab.families.sampler import random_k_regular
from grundylab.graphs.graph import Graph
from grundylab.graphs.graph6 import (
    graph6_decode, graph6_encode, read_graph6_file, read_graph6_lines, write_graph6_lines,
)
from grundylab.utils.config import SolverConfig, VerifyConfig
from grundylab.utils.error_handler import (
    AppError, SequenceError, SolverInconsistencyError, UsageError,
)
from grundylab.verify.enumeration import enumerate_cubic, ingest_cubic_file
from grundylab.verify.harness import run_checks
from grundylab.verify.models import Check

# Configure logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Checks that only make sense on connected cubic graphs
CUBIC_CHECKS = (Check.THM34, Check.THM44, Check.COR45, Check.COR46, Check.PROP42)


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"
    TEXT = "text"


class CliConfig(BaseModel):
    """
    Settings of one command line invocation.

    Attributes:
        command: Subcommand name
        graph6: Inline graph6 strings
        input: graph6 file
        enumerate_orders: Orders of built-in cubic enumeration (``verify``)
        catalog: Use every catalog graph (``verify``, ``generate``)
        random: ``(order, degree, count)`` of random regular graphs
        variants: Invariants to compute (``compute``)
        witness: Emit certificates next to the values
        witness_file: Certificates to re-validate (``verify``)
        checks: Checks to run (``verify``)
        target: Positional arguments of ``generate``, ``enumerate``
        output_format: csv, json or text
        workers: Worker processes (``verify``)
        seed: Seed of every random choice
        output: Output file instead of standard output
        dedup: Collapse isomorphic enumerated graphs
        exact_max_order: Exact-solve limit of the family check
    """

    model_config = ConfigDict(frozen=True)

    command: str
    graph6: List[str] = Field(default_factory=list)
    input: Optional[Path] = None
    enumerate_orders: List[int] = Field(default_factory=list)
    catalog: bool = False
    random: Optional[Tuple[int, int, int]] = None
    variants: List[str] = Field(default_factory=lambda: ["grundy"])
    witness: bool = False
    witness_file: Optional[Path] = None
    checks: List[Check] = Field(default_factory=list)
    target: List[str] = Field(default_factory=list)
    output_format: OutputFormat = OutputFormat.TEXT
    workers: int = Field(1, ge=1)
    seed: Optional[int] = None
    output: Optional[Path] = None
    dedup: bool = True
    exact_max_order: int = Field(24, ge=0)

    @property
    def sources(self) -> List[str]:
        given = []
        if self.graph6:
            given.append("--graph6")
        if self.input is not None:
            given.append("--input")
        if self.enumerate_orders:
            given.append("--enumerate")
        if self.catalog:
            given.append("--catalog")
        if self.random is not None:
            given.append("--random")
        return given

    @model_validator(mode="after")
    def _check_sources(self) -> "CliConfig":
        given = self.sources
        if len(given) > 1:
            raise ValueError(f"exactly one input source is allowed, got {' and '.join(given)}")
        if self.command == "verify":
            if not self.checks and self.witness_file is None:
                raise ValueError("verify needs at least one check or --witness FILE")
            if self.checks and not given:
                raise ValueError("verify needs an input source: --enumerate, --input, --graph6, --catalog or --random")
        if self.random is not None and self.seed is None:
            raise ValueError("--random needs an explicit --seed")
        return self

    def verify_config(self) -> VerifyConfig:
        return VerifyConfig(
            workers=self.workers, dedup=self.dedup,
            exact_max_order=self.exact_max_order, solver=SolverConfig(),
        )


def _add_output_options(parser: argparse.ArgumentParser, formats: bool = True) -> None:
    if formats:
        parser.add_argument(
            "--format", dest="output_format", choices=[f.value for f in OutputFormat], default="text",
            help="Output format (default: text)",
        )
    parser.add_argument("--output", type=Path, help="Write to this file instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grundylab",
        description="Grundy domination, Z-Grundy domination and zero forcing on graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default: WARNING)",
    )
    parser.add_argument("--log-file", help="Also write log records to this file")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="Invariants (and witnesses) of graphs")
    source = compute.add_mutually_exclusive_group()
    source.add_argument("--graph6", help="Inline graph6 string")
    source.add_argument("--input", type=Path, help="graph6 file, one graph per line")
    compute.add_argument(
        "--variant", choices=["grundy", "zgrundy", "forcing", "all"], default="grundy",
        help="Invariant to compute (default: grundy)",
    )
    compute.add_argument("--all", action="store_true", help="Same as --variant all")
    compute.add_argument("--witness", action="store_true", help="Emit a maximum sequence or minimum seed")
    _add_output_options(compute)

    generate = commands.add_parser(
        "generate",
        help="Emit graphs as graph6",
        description=(
            "Emit graphs as graph6. Forms: NAME (catalog names such as petersen, N_XY, "
            "X2Y, and C<n>, P<n>, K<n>, K<a>,<b>); family SKELETON UNITS with the "
            "skeleton as 0-1,0-2,0-3 and units as 1:X,2:Y,3:Y; random --order N "
            "--degree K --seed S [--count C]; or --catalog for every catalog graph."
        ),
    )
    generate.add_argument("target", nargs="*", help="NAME, 'family SKELETON UNITS' or 'random'")
    generate.add_argument("--catalog", action="store_true", help="Every catalog graph")
    generate.add_argument("--order", type=int, help="Order of random graphs")
    generate.add_argument("--degree", type=int, help="Degree of random graphs")
    generate.add_argument("--count", type=int, default=1, help="Number of random graphs (default: 1)")
    generate.add_argument("--seed", type=int, help="Seed of the random sampler")
    _add_output_options(generate, formats=False)

    verify = commands.add_parser("verify", help="Check bounds and characterizations over a stream of graphs")
    verify.add_argument(
        "checks", nargs="*", metavar="CHECK",
        help=f"One or more of: {', '.join(c.value for c in Check)}",
    )
    verify.add_argument(
        "--enumerate", dest="enumerate_orders", type=int, action="append", default=[], metavar="N",
        help="Connected cubic graphs of order N (repeatable)",
    )
    verify.add_argument("--input", type=Path, help="graph6 file")
    verify.add_argument("--graph6", action="append", default=[], help="Inline graph6 string (repeatable)")
    verify.add_argument("--catalog", action="store_true", help="Every catalog graph")
    verify.add_argument(
        "--random", nargs=3, type=int, metavar=("ORDER", "DEGREE", "COUNT"),
        help="COUNT random DEGREE-regular graphs of order ORDER (needs --seed)",
    )
    verify.add_argument("--seed", type=int, help="Seed of the random sampler")
    verify.add_argument("--witness", dest="witness_file", type=Path, help="Re-validate certificates from this file")
    verify.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")
    verify.add_argument("--no-dedup", dest="dedup", action="store_false", help="Keep isomorphic enumerated graphs")
    verify.add_argument(
        "--exact-max-order", type=int, default=24,
        help="Largest order solved exactly by the prop42 check (default: 24)",
    )
    _add_output_options(verify)

    enumerate_ = commands.add_parser("enumerate", help="Connected cubic graphs of one order, as graph6")
    enumerate_.add_argument("target", nargs=1, metavar="N", help="Order (even, at most 10)")
    enumerate_.add_argument("--no-dedup", dest="dedup", action="store_false", help="Keep isomorphic copies")
    _add_output_options(enumerate_, formats=False)

    recognize = commands.add_parser("recognize", help="Decompose cubic graphs of the X/Y unit family")
    source = recognize.add_mutually_exclusive_group()
    source.add_argument("--graph6", help="Inline graph6 string")
    source.add_argument("--input", type=Path, help="graph6 file")
    _add_output_options(recognize)
    return parser


def _as_list(value) -> List:
    if value is None:
        return []
    if isinstance(value, list):
        return value
    return [value]


def _cli_config(args: argparse.Namespace) -> CliConfig:
    """Turn the parsed namespace into a validated :class:`CliConfig`."""
    fields = dict(
        command=args.command,
        graph6=_as_list(getattr(args, "graph6", None)),
        input=getattr(args, "input", None),
        enumerate_orders=getattr(args, "enumerate_orders", []),
        catalog=getattr(args, "catalog", False),
        random=tuple(args.random) if getattr(args, "random", None) else None,
        witness=getattr(args, "witness", False),
        witness_file=getattr(args, "witness_file", None),
        checks=getattr(args, "checks", []),
        target=_as_list(getattr(args, "target", None)),
        output_format=getattr(args, "output_format", "text"),
        workers=getattr(args, "workers", 1),
        seed=getattr(args, "seed", None),
        output=getattr(args, "output", None),
        dedup=getattr(args, "dedup", True),
        exact_max_order=getattr(args, "exact_max_order", 24),
    )
    if args.command == "compute":
        variant = "all" if args.all else args.variant
        fields["variants"] = ["grundy", "zgrundy", "forcing"] if variant == "all" else [variant]
    try:
        return CliConfig(**fields)
    except ValidationError as e:
        messages = "; ".join(error["msg"].removeprefix("Value error, ") for error in e.errors())
        raise UsageError(messages)


def _emit(config: CliConfig, text: str) -> None:
    if config.output is not None:
        config.output.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {len(text)} characters to {config.output}")
    else:
        sys.stdout.write(text)


def _input_graphs(config: CliConfig) -> List[Graph]:
    """Graphs named by ``--graph6`` or ``--input``, or read from standard input."""
    if config.graph6:
        return [graph6_decode(text) for text in config.graph6]
    if config.input is not None:
        return read_graph6_file(config.input)
    graphs = list(read_graph6_lines(sys.stdin))
    if not graphs:
        raise UsageError("No graph given: use --graph6, --input or pipe graph6 lines on standard input")
    return graphs


def _frame_text(frame: pd.DataFrame, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.CSV:
        return frame.to_csv(index=False, lineterminator="\n")
    return frame.to_string(index=False) + "\n"


def _joined(vertices: Sequence[int]) -> str:
    return " ".join(str(v) for v in vertices)


def _compute_record(g: Graph, config: CliConfig) -> Dict[str, object]:
    record: Dict[str, object] = {"graph6": graph6_encode(g), "n": g.n, "m": g.edge_count}
    witnesses: List[Dict[str, object]] = []
    for name in config.variants:
        if name == "forcing":
            result = zero_forcing_number(g)
            record["zero_forcing"] = result.value
            if config.witness:
                record["zero_forcing_seed"] = list(result.seed)
            continue
        variant = Variant(name)
        result = grundy_number(g, variant)
        record[variant.value] = result.value
        if config.witness:
            order = list(result.sequence.order)
            record[f"{variant.value}_witness"] = order
            witnesses.append(
                WitnessRecord(graph=record["graph6"], order=order, variant=variant).model_dump(mode="json")
            )
    if witnesses:
        record["witnesses"] = witnesses
    return record


def _run_compute(config: CliConfig) -> int:
    records = [_compute_record(g, config) for g in _input_graphs(config)]
    if config.output_format == OutputFormat.JSON:
        _emit(config, json.dumps(records, indent=2) + "\n")
        return EXIT_OK
    rows = []
    for record in records:
        row = {key: value for key, value in record.items() if key != "witnesses"}
        for key, value in row.items():
            if isinstance(value, list):
                row[key] = _joined(value)
        rows.append(row)
    _emit(config, _frame_text(pd.DataFrame.from_records(rows), config.output_format))
    return EXIT_OK


def parse_skeleton(text: str) -> List[Tuple[int, int]]:
    """``0-1,0-2,0-3`` -> ``[(0, 1), (0, 2), (0, 3)]``."""
    edges = []
    for item in text.split(","):
        try:
            a, b = item.split("-")
            edges.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"Bad skeleton edge {item!r}; expected A-B, e.g. 0-1,0-2,0-3")
    return edges


def parse_units(text: str) -> Dict[int, str]:
    """``1:X,2:Y`` -> ``{1: "X", 2: "Y"}``."""
    units = {}
    for item in text.split(","):
        try:
            leaf, kind = item.split(":")
            units[int(leaf)] = kind.strip().upper()
        except ValueError:
            raise UsageError(f"Bad unit {item!r}; expected LEAF:X or LEAF:Y, e.g. 1:X,2:Y,3:Y")
    return units


def _random_graphs(order: int, degree: int, count: int, seed: int) -> Iterator[Graph]:
    for i in range(count):
        yield random_k_regular(order, degree, seed + i)


def _generated_graphs(config: CliConfig, args: argparse.Namespace) -> List[Graph]:
    target = config.target
    if config.catalog:
        if target:
            raise UsageError("--catalog takes no NAME")
        return [entry.graph for entry in catalog()]
    if not target:
        raise UsageError("generate needs NAME, 'family SKELETON UNITS', 'random' or --catalog")
    if target[0] == "family":
        if len(target) != 3:
            raise UsageError("usage: generate family SKELETON UNITS, e.g. family 0-1,0-2,0-3 1:X,2:Y,3:Y")
        return [assemble_family_m(parse_skeleton(target[1]), parse_units(target[2])).graph]
    if target[0] == "random":
        if args.order is None or args.degree is None or config.seed is None:
            raise UsageError("usage: generate random --order N --degree K --seed S [--count C]")
        if args.count < 1:
            raise UsageError("--count must be at least 1")
        return list(_random_graphs(args.order, args.degree, args.count, config.seed))
    if len(target) != 1:
        raise UsageError(f"generate takes one NAME, got {' '.join(target)}")
    return [named_graph(target[0])]


def _run_generate(config: CliConfig, args: argparse.Namespace) -> int:
    graphs = _generated_graphs(config, args)
    _emit(config, write_graph6_lines(graphs))
    return EXIT_OK


def _verification_stream(config: CliConfig) -> List[Graph]:
    if config.enumerate_orders:
        graphs = []
        for n in config.enumerate_orders:
            graphs.extend(enumerate_cubic(n, dedup=config.dedup))
        return graphs
    if config.catalog:
        return [entry.graph.with_label(entry.name) for entry in catalog()]
    if config.random is not None:
        order, degree, count = config.random
        return list(_random_graphs(order, degree, count, config.seed))
    if config.input is not None:
        if all(check in CUBIC_CHECKS for check in config.checks):
            return ingest_cubic_file(config.input)
        return read_graph6_file(config.input)
    return [graph6_decode(text) for text in config.graph6]


def _load_witnesses(path: Path) -> List[str]:
    """
    Witness records of a file: a JSON document written by ``compute
    --witness --format json``, a single record, or one record per line.

    Raises:
        UsageError: If an entry of a JSON document is not a witness record
    """
    text = path.read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError:
        return [line for line in text.splitlines() if line.strip()]
    if isinstance(document, dict):
        items = [document]
    elif isinstance(document, list):
        items = []
        for number, record in enumerate(document, start=1):
            if not isinstance(record, dict):
                raise UsageError(f"{path}: record {number} is not a JSON object")
            witnesses = record.get("witnesses", [])
            if not isinstance(witnesses, list):
                raise UsageError(f"{path}: record {number} has a malformed 'witnesses' entry")
            items.extend(witnesses)
    else:
        raise UsageError(f"{path}: expected a JSON object or list of compute records")
    records = []
    for number, item in enumerate(items, start=1):
        try:
            records.append(WitnessRecord.model_validate(item).model_dump_json())
        except ValidationError as e:
            raise UsageError(f"{path}: witness {number} is malformed: {e.errors()[0]['msg']}")
    return records


def _verify_witnesses(path: Path) -> Tuple[List[str], bool]:
    lines = []
    failed = False
    for number, text in enumerate(_load_witnesses(path), start=1):
        try:
            seq, variant = witness_from_json(text)
        except ValidationError as e:
            raise UsageError(f"{path}: witness {number} is malformed: {e.errors()[0]['msg']}")
        except SequenceError as e:
            failed = True
            lines.append(f"witness {number}: invalid: {e.message}")
            continue
        lines.append(f"witness {number}: ok {variant.value} length {len(seq)} on {graph6_encode(seq.graph)}")
    return lines, failed


def _run_verify(config: CliConfig) -> int:
    failed = False
    if config.witness_file is not None:
        lines, failed = _verify_witnesses(config.witness_file)
        if not config.checks:
            _emit(config, "".join(line + "\n" for line in lines))
            return EXIT_FAILURE if failed else EXIT_OK
        for line in lines:
            sys.stderr.write(line + "\n")

    report = run_checks(_verification_stream(config), config.checks, config.verify_config())
    if config.output_format == OutputFormat.CSV:
        text = report.to_csv()
    elif config.output_format == OutputFormat.JSON:
        text = report.to_json() + "\n"
    else:
        text = report.to_text()
    _emit(config, text)
    for line in report.summary()["failures"]:
        logger.error(f"Verification failure: {line}")
    return EXIT_FAILURE if failed or report.failed else EXIT_OK


def _run_enumerate(config: CliConfig) -> int:
    try:
        n = int(config.target[0])
    except ValueError:
        raise UsageError(f"enumerate needs an integer order, got {config.target[0]!r}")
    graphs = enumerate_cubic(n, dedup=config.dedup)
    _emit(config, write_graph6_lines(graphs))
    return EXIT_OK


def _decomposition_record(g: Graph, found: Optional[FamilyMDecomposition]) -> Dict[str, object]:
    record: Dict[str, object] = {
        "graph6": graph6_encode(g), "n": g.n, "member": found is not None,
        "skeleton": "", "units": "", "signature": "", "extremal": False,
    }
    if found is None:
        return record
    record["skeleton"] = ",".join(f"{a}-{b}" for a, b in found.skeleton_edges)
    record["units"] = ",".join(f"{leaf}:{found.units[leaf].value}" for leaf in found.leaves)
    record["signature"] = found.unit_signature()
    record["extremal"] = found.in_M_prime
    return record


def _run_recognize(config: CliConfig) -> int:
    records = [_decomposition_record(g, recognize_family_M(g)) for g in _input_graphs(config)]
    if config.output_format == OutputFormat.JSON:
        _emit(config, json.dumps(records, indent=2) + "\n")
    else:
        _emit(config, _frame_text(pd.DataFrame.from_records(records), config.output_format))
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name; ``sys.argv[1:]`` if omitted

    Returns:
        0 on success, 1 on a verification failure, 2 on a usage or input error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 after --help / --version
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.log_level, args.log_file)
    try:
        config = _cli_config(args)
        logger.debug(f"Running {config.command} with {config.model_dump(exclude_defaults=True)}")
        if config.command == "compute":
            return _run_compute(config)
        if config.command == "generate":
            return _run_generate(config, args)
        if config.command == "verify":
            return _run_verify(config)
        if config.command == "enumerate":
            return _run_enumerate(config)
        return _run_recognize(config)
    except SolverInconsistencyError as e:
        print(f"grundylab: inconsistency: {e.message}", file=sys.stderr)
        return EXIT_FAILURE
    except AppError as e:
        print(f"grundylab: error: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"grundylab: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except UnicodeDecodeError as e:
        print(f"grundylab: error: input is not valid text: {e.reason} at byte {e.start}", file=sys.stderr)
        return EXIT_USAGE
