"""Command-line entry point: ``localization <command> ...``.

Every command prints one report (JSON by default) and returns an exit code: 0 when the result
confirms, 1 on a mismatch or refutation, 2 when a budget ran out and 3 on a usage error.
"""
# Import built-in modules
import argparse
from dataclasses import dataclass
import json
from pathlib import Path
import sys
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence

# Import local modules
from localization.__version__ import __version__
from localization.api import Graph
from localization.api import PairFamily
from localization.api import SolverBudget
from localization.api import acceptance_matrix
from localization.api import cartesian_product
from localization.api import check_bounds
from localization.api import check_bounds_battery
from localization.api import cop_wins
from localization.api import graph_from_tag
from localization.api import load_battery
from localization.api import localization_number
from localization.api import make_complete
from localization.api import make_complete_bipartite
from localization.api import make_cycle
from localization.api import make_path
from localization.api import make_torus
from localization.api import metric_dimension
from localization.api import psi
from localization.api import safe_sets
from localization.api import set_debug
from localization.api import verify_cop_strategy
from localization.api import verify_hideout_family
from localization.api.constants import DEFAULT_BATTERY
from localization.api.constants import DEFAULT_MAX_EVALUATIONS
from localization.api.constants import DEFAULT_MAX_STATES
from localization.api.constants import DEFAULT_MAX_TURNS
from localization.api.constants import DEFAULT_SEARCH_DEPTH
from localization.api.constants import DEFAULT_SUBSET_BUDGET
from localization.api.constants import DEFAULT_TIME_LIMIT
from localization.api.constants import HIDEOUT_TAGS
from localization.api.constants import OUTPUT_FORMATS
from localization.api.constants import STRATEGY_TAGS
from localization.api.enumerations import ExitCode
from localization.api.enumerations import Outcome
from localization.api.enumerations import OutputFormat
from localization.api.enumerations import SearchStatus
from localization.api.enumerations import Verdict
from localization.api.errors import CertificateError
from localization.api.errors import LocalizationGameError
from localization.api.errors import ParameterError
from localization.api.errors import SoundnessViolationError
from localization.api.errors import UnexpectedStateError
from localization.api.errors import UsageError
from localization.api.strategies import infer_params
from localization.api.strategies import make_hideout_family
from localization.api.strategies import make_strategy


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by every command.

    Raises:
        ParameterError: If the subset budget or the worker count is below 1.

    """

    budget: SolverBudget
    subset_budget: int = DEFAULT_SUBSET_BUDGET
    workers: int = 1
    output_format: OutputFormat = OutputFormat.Json
    battery: Path = DEFAULT_BATTERY
    debug: bool = False

    def __post_init__(self):
        if self.subset_budget < 1:
            raise ParameterError(f"The subset budget must be positive, got {self.subset_budget}.")
        if self.workers < 1:
            raise ParameterError(f"At least one worker is needed, got {self.workers}.")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        budget = SolverBudget(
            max_states=args.budget_states,
            max_evaluations=args.budget_evaluations,
            time_limit=args.time_limit,
            search_depth=args.search_depth,
        )
        return cls(
            budget=budget,
            subset_budget=args.subset_budget,
            workers=args.workers,
            output_format=OUTPUT_FORMATS[args.format],
            battery=Path(getattr(args, "battery", None) or DEFAULT_BATTERY),
            debug=args.debug,
        )


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _read_graph(path: str) -> Graph:
    return Graph.from_json(Path(path).read_text(encoding="utf-8"), name=Path(path).stem)


def _write(text: str, output: Optional[str]):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit(config: RunConfig, data: Dict[str, Any]):
    if config.output_format == OutputFormat.Json:
        sys.stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
        return
    for key in sorted(data):
        value = data[key]
        text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
        sys.stdout.write(f"{key}: {text}\n")


def _parse_probe(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as err:
        raise UsageError(f"--probe: expected comma-separated vertex ids, got {text!r}.") from err


def _search_exit(status: SearchStatus) -> ExitCode:
    return ExitCode.Success if status == SearchStatus.Found else ExitCode.BudgetExceeded


# Commands


def _cmd_gen(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    params = args.params
    builders = {
        "cycle": (make_cycle, 1),
        "path": (make_path, 1),
        "complete": (make_complete, 1),
        "bipartite": (make_complete_bipartite, 2),
        "torus": (make_torus, 2),
    }
    if args.family == "tag":
        if len(params) != 1:
            raise UsageError("gen tag: expected exactly one tag such as C5xC4.")
        graph = graph_from_tag(params[0])
    else:
        builder, arity = builders[args.family]
        if len(params) != arity or not all(param.isdigit() for param in params):
            raise UsageError(f"gen {args.family}: expected {arity} non-negative integer parameter(s).")
        graph = builder(*(int(param) for param in params))
    _write(graph.to_json() + "\n", args.output)
    return ExitCode.Success


def _cmd_product(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    product = cartesian_product(_read_graph(args.first), _read_graph(args.second))
    _write(product.to_json() + "\n", args.output)
    return ExitCode.Success


def _cmd_dot(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    _write(_read_graph(args.graph).to_dot(), args.output)
    return ExitCode.Success


def _cmd_dim(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    result = metric_dimension(_read_graph(args.graph), config.subset_budget)
    _emit(config, {"dim": result.value, **result.to_dict()})
    return _search_exit(result.status)


def _cmd_psi(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    result = psi(_read_graph(args.graph), config.subset_budget)
    _emit(config, {"psi": result.value, **result.to_dict()})
    return _search_exit(result.status)


def _cmd_zeta(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    number = localization_number(_read_graph(args.graph), args.max_cops, config.budget)
    _emit(config, number.to_dict())
    return {
        Outcome.CopWins: ExitCode.Success,
        Outcome.RobberWins: ExitCode.Mismatch,
        Outcome.BudgetExceeded: ExitCode.BudgetExceeded,
    }[number.outcome]


def _cmd_cop_wins(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    report = cop_wins(_read_graph(args.graph), args.cops, config.budget)
    _emit(config, report.to_dict())
    return {
        Outcome.CopWins: ExitCode.Success,
        Outcome.RobberWins: ExitCode.Mismatch,
        Outcome.BudgetExceeded: ExitCode.BudgetExceeded,
    }[report.outcome]


def _cmd_safe_sets(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    graph = _read_graph(args.graph)
    probe = _parse_probe(args.probe)
    classes = safe_sets(graph.distances, probe)
    _emit(config, {"probe": probe, "safe_sets": [list(cls.sorted()) for cls in classes]})
    return ExitCode.Success


def _cmd_verify_cop(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    graph = _read_graph(args.graph)
    params = infer_params(graph, STRATEGY_TAGS[args.strategy], args.p, args.q, args.inner_cops)
    strategy = make_strategy(graph, params, config.budget)
    report = verify_cop_strategy(graph, strategy, args.max_turns, record_trace=args.trace)
    _emit(config, {"strategy": args.strategy, "cops": strategy.cop_count, **report.to_dict()})
    return ExitCode.Success if report.won else ExitCode.Mismatch


def _cmd_verify_hideout(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    graph = _read_graph(args.graph)
    if args.pairs:
        family = PairFamily.from_json(Path(args.pairs).read_text(encoding="utf-8"), graph.vertex_count)
    else:
        family = make_hideout_family(graph, HIDEOUT_TAGS[args.family], args.p)
    verdict = verify_hideout_family(graph.distances, args.cops, family)
    _emit(config, {"cops": args.cops, "pairs": len(family), **verdict.to_dict()})
    return ExitCode.Success if verdict.certified else ExitCode.Mismatch


def _cmd_check_bounds(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    if len(args.graphs) == 2:
        first, second = (_read_graph(path) for path in args.graphs)
        report = check_bounds(first, second, config.budget, config.subset_budget)
    elif not args.graphs:
        pairs = load_battery(config.battery).bounds_pairs()
        report = check_bounds_battery(pairs, config.budget, config.subset_budget, config.workers)
    else:
        raise UsageError("check-bounds: expected two graph files, or none to run the battery.")
    _emit(config, report.to_dict())
    if not report.holds:
        return ExitCode.Mismatch
    return ExitCode.Success if report.resolved else ExitCode.BudgetExceeded


def _cmd_acceptance(args: argparse.Namespace, config: RunConfig) -> ExitCode:
    table = acceptance_matrix(load_battery(config.battery), config.budget, config.workers)
    _emit(config, table.to_dict())
    return {
        Verdict.Match: ExitCode.Success,
        Verdict.Mismatch: ExitCode.Mismatch,
        Verdict.Unresolved: ExitCode.BudgetExceeded,
    }[table.verdict]


# Parser


def _common_options() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--debug", action="store_true", help="Log solver and verifier progress to stderr.")
    common.add_argument("--format", choices=sorted(OUTPUT_FORMATS), default="json", help="Report format.")
    common.add_argument("--workers", type=int, default=1, help="Processes for battery runs.")
    common.add_argument("--budget-states", type=int, default=DEFAULT_MAX_STATES, help="Solver state budget.")
    common.add_argument(
        "--budget-evaluations", type=int, default=DEFAULT_MAX_EVALUATIONS, help="Solver evaluation budget."
    )
    common.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT, help="Solver wall-clock seconds.")
    common.add_argument("--search-depth", type=int, default=DEFAULT_SEARCH_DEPTH, help="Fast-path search depth.")
    common.add_argument(
        "--subset-budget", type=int, default=DEFAULT_SUBSET_BUDGET, help="Subsets examined by dim and psi."
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(prog="localization", description="The localization game on graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    gen = commands.add_parser("gen", parents=[common], help="Write a generated graph as JSON.")
    gen.add_argument("family", choices=["cycle", "path", "complete", "bipartite", "torus", "tag"])
    gen.add_argument("params", nargs="+")
    gen.add_argument("-o", "--output")
    gen.set_defaults(handler=_cmd_gen)

    product = commands.add_parser("product", parents=[common], help="Write the Cartesian product of two graphs.")
    product.add_argument("first")
    product.add_argument("second")
    product.add_argument("-o", "--output")
    product.set_defaults(handler=_cmd_product)

    dot = commands.add_parser("dot", parents=[common], help="Write a graph in DOT format.")
    dot.add_argument("graph")
    dot.add_argument("-o", "--output")
    dot.set_defaults(handler=_cmd_dot)

    for name, handler, text in (("dim", _cmd_dim, "Metric dimension."), ("psi", _cmd_psi, "Doubly resolving number.")):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument("graph")
        command.set_defaults(handler=handler)

    zeta = commands.add_parser("zeta", parents=[common], help="Localization number.")
    zeta.add_argument("graph")
    zeta.add_argument("--max-cops", type=int, required=True)
    zeta.set_defaults(handler=_cmd_zeta)

    wins = commands.add_parser("cop-wins", parents=[common], help="Decide the game for a fixed number of cops.")
    wins.add_argument("graph")
    wins.add_argument("--cops", type=int, required=True)
    wins.set_defaults(handler=_cmd_cop_wins)

    sets = commands.add_parser("safe-sets", parents=[common], help="Non-singleton classes of one probe.")
    sets.add_argument("graph")
    sets.add_argument("--probe", required=True)
    sets.set_defaults(handler=_cmd_safe_sets)

    verify_cop = commands.add_parser("verify-cop", parents=[common], help="Verify a Cop strategy exhaustively.")
    verify_cop.add_argument("graph")
    verify_cop.add_argument("--strategy", choices=sorted(STRATEGY_TAGS), required=True)
    verify_cop.add_argument("--p", type=int)
    verify_cop.add_argument("--q", type=int)
    verify_cop.add_argument("--inner-cops", type=int, default=1)
    verify_cop.add_argument("--max-turns", type=int, default=DEFAULT_MAX_TURNS)
    verify_cop.add_argument("--trace", action="store_true", help="Include every visited node in the report.")
    verify_cop.set_defaults(handler=_cmd_verify_cop)

    verify_hideout = commands.add_parser("verify-hideout", parents=[common], help="Check a Robber hideout family.")
    verify_hideout.add_argument("graph")
    source = verify_hideout.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", choices=sorted(HIDEOUT_TAGS))
    source.add_argument("--pairs")
    verify_hideout.add_argument("--p", type=int)
    verify_hideout.add_argument("--cops", type=int, required=True)
    verify_hideout.set_defaults(handler=_cmd_verify_hideout)

    bounds = commands.add_parser("check-bounds", parents=[common], help="Check the product bounds.")
    bounds.add_argument("graphs", nargs="*")
    bounds.add_argument("--battery")
    bounds.set_defaults(handler=_cmd_check_bounds)

    acceptance = commands.add_parser("acceptance", parents=[common], help="Run the torus acceptance matrix.")
    acceptance.add_argument("--battery")
    acceptance.set_defaults(handler=_cmd_acceptance)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = RunConfig.from_args(args)
        if config.debug:
            set_debug()
        return int(args.handler(args, config))
    except (SoundnessViolationError, UnexpectedStateError, CertificateError) as err:
        sys.stderr.write(f"internal error: {err}\n")
        return int(ExitCode.InternalError)
    except (LocalizationGameError, OSError) as err:
        sys.stderr.write(f"error: {err}\n")
        return int(ExitCode.UsageError)
