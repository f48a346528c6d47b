"""Exhaustive verification of Cop strategies and batch checks of the product bounds.

``verify_cop_strategy`` plays a strategy against every Robber: after each probe it follows every
non-singleton class in order of distance vectors, so a failure trace is reproducible. The bound
checks compute localization numbers and psi with the budgeted solvers and report an inequality as
unresolved, never as passed or failed, when one of its terms could not be computed.

"""
# Import built-in modules
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from dataclasses import field
from itertools import repeat
import json
from pathlib import Path
from typing import Any
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

# Import local modules
from localization.api._core import get_logger
from localization.api._solver import SolverBudget
from localization.api.constants import DEFAULT_BATTERY
from localization.api.constants import DEFAULT_MAX_TURNS
from localization.api.constants import DEFAULT_SUBSET_BUDGET
from localization.api.constants import HIDEOUT_TAGS
from localization.api.constants import STRATEGY_TAGS
from localization.api.enumerations import Outcome
from localization.api.enumerations import Verdict
from localization.api.errors import GraphFormatError
from localization.api.errors import LocalizationGameError
from localization.api.errors import ParameterError
from localization.api.errors import StrategyMismatchError
from localization.api.errors import TrivialGraphError
from localization.api.errors import UnreachableVertexError
from localization.api.graph_core import Graph
from localization.api.graph_core import cartesian_product
from localization.api.graph_core import graph_from_tag
from localization.api.graph_core import make_torus
from localization.api.localization_game import KnowledgeState
from localization.api.localization_game import cop_wins
from localization.api.localization_game import localization_number
from localization.api.localization_game import partition_by_probe
from localization.api.localization_game import robber_expand
from localization.api.localization_game import verify_hideout_family
from localization.api.resolving import psi
from localization.api.strategies import CopStrategy
from localization.api.strategies import TurnRecord
from localization.api.strategies import infer_params
from localization.api.strategies import make_hideout_family
from localization.api.strategies import make_strategy


@dataclass(frozen=True)
class TraceNode:
    """One visited node of the game tree: the probe, all classes, and the class followed."""

    turn: int
    probe: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]
    chosen: Optional[int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "turn": self.turn,
            "probe": list(self.probe),
            "classes": [list(cls) for cls in self.classes],
            "chosen": self.chosen,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of playing a strategy against the exhaustive adversary.

    ``max_turns`` is the deepest turn in which a probe was played, so a winning report gives the
    worst-case number of probes.
    """

    won: bool
    max_turns: int
    branches_explored: int
    failure_trace: Tuple[TurnRecord, ...] = ()
    error: Optional[str] = None
    trace: Tuple[TraceNode, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "won": self.won,
            "max_turns": self.max_turns,
            "branches_explored": self.branches_explored,
            "failure_trace": [record.to_dict() for record in self.failure_trace] if not self.won else None,
            "error": self.error,
        }
        if self.trace:
            data["trace"] = [node.to_dict() for node in self.trace]
        return data


class _Adversary:
    """Depth-first walk over every Robber answer, stopping at the first failure."""

    def __init__(self, graph: Graph, strategy: CopStrategy, max_turns: int, record_trace: bool):
        self.graph = graph
        self.strategy = strategy
        self.max_turns = max_turns
        self.record_trace = record_trace
        self.deepest = 0
        self.branches = 0
        self.failure: Tuple[TurnRecord, ...] = ()
        self.error: Optional[str] = None
        self.trace: List[TraceNode] = []

    def fail(self, history: Sequence[TurnRecord], error: str) -> bool:
        self.failure = tuple(history)
        self.error = error
        get_logger().debug(f"{self.strategy} fails after {len(history)} turns: {error}")
        return False

    def explore(self, turn: int, state: KnowledgeState, history: List[TurnRecord]) -> bool:
        if turn > self.max_turns:
            return self.fail(history, f"state {sorted(state)} is still open after {self.max_turns} turns.")
        try:
            probe = self.strategy.next_probe(turn, state, history)
        except LocalizationGameError as err:
            return self.fail(history, f"{err.__class__.__name__}: {err}")
        self.deepest = max(self.deepest, turn)
        classes = partition_by_probe(self.graph.distances, state, probe)
        open_classes = [index for index, cls in enumerate(classes) if len(cls) >= 2]
        if self.record_trace and not open_classes:
            self.trace.append(TraceNode(turn, tuple(probe), tuple(cls.sorted() for cls in classes), None))
        for index in open_classes:
            self.branches += 1
            if self.record_trace:
                self.trace.append(TraceNode(turn, tuple(probe), tuple(cls.sorted() for cls in classes), index))
            record = TurnRecord(turn, probe, classes[index])
            if not self.explore(turn + 1, robber_expand(self.graph, classes[index]), history + [record]):
                return False
        return True


def verify_cop_strategy(
    graph: Graph,
    strategy: CopStrategy,
    max_turns: int = DEFAULT_MAX_TURNS,
    record_trace: bool = False,
) -> VerificationReport:
    """Play ``strategy`` against every Robber behaviour on ``graph``.

    Args:
        graph: The graph to play on.
        strategy: A strategy bound to ``graph``.
        max_turns: Probes allowed before an open branch counts as a loss.
        record_trace: Keep every visited node for export.

    Raises:
        StrategyMismatchError: If the strategy is bound to another graph.

    """
    if strategy.graph != graph:
        raise StrategyMismatchError(f"{strategy} is bound to {strategy.graph.name}, not {graph.name}.")
    if max_turns < 1:
        raise ParameterError(f"max_turns must be at least 1, got {max_turns}.")
    start = KnowledgeState(graph.vertices)
    if len(start) < 2:
        return VerificationReport(True, 0, 0)
    adversary = _Adversary(graph, strategy, max_turns, record_trace)
    won = adversary.explore(1, start, [])
    return VerificationReport(
        won,
        adversary.deepest,
        adversary.branches,
        adversary.failure,
        adversary.error,
        tuple(adversary.trace),
    )


# Product bounds


@dataclass(frozen=True)
class BoundsRecord:
    first: str
    second: str
    zeta_first: Optional[int]
    zeta_second: Optional[int]
    psi_second: Optional[int]
    zeta_product: Optional[int]
    lower_ok: Optional[bool]
    upper_ok: Optional[bool]
    corollary_ok: Optional[bool]
    statuses: Dict[str, str] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        """No inequality was refuted; unresolved ones do not count against it."""
        return False not in (self.lower_ok, self.upper_ok, self.corollary_ok)

    @property
    def resolved(self) -> bool:
        return self.lower_ok is not None and self.upper_ok is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "G": self.first,
            "H": self.second,
            "zeta_G": self.zeta_first,
            "zeta_H": self.zeta_second,
            "psi_H": self.psi_second,
            "zeta_GH": self.zeta_product,
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
            "corollary_ok": self.corollary_ok,
            "statuses": dict(self.statuses),
        }


@dataclass(frozen=True)
class BoundsReport:
    records: Tuple[BoundsRecord, ...]

    @property
    def holds(self) -> bool:
        return all(record.holds for record in self.records)

    @property
    def resolved(self) -> bool:
        return all(record.resolved for record in self.records)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "resolved": self.resolved,
            "records": [record.to_dict() for record in self.records],
        }


def _require_nontrivial(graph: Graph):
    if graph.vertex_count < 2:
        raise TrivialGraphError(f"{graph.name} needs at least two vertices.")
    if not graph.is_connected():
        raise UnreachableVertexError(f"{graph.name} is not connected.")


def _bounds_record(
    first: Graph,
    second: Graph,
    budget: Optional[SolverBudget],
    subset_budget: int,
) -> BoundsRecord:
    product = cartesian_product(first, second)
    zeta_g = localization_number(first, first.vertex_count - 1, budget)
    zeta_h = localization_number(second, second.vertex_count - 1, budget)
    psi_h = psi(second, subset_budget)
    zeta_gh = localization_number(product, product.vertex_count - 1, budget)
    zg, zh, ph, zgh = zeta_g.value, zeta_h.value, psi_h.value, zeta_gh.value

    lower_ok = None if None in (zg, zh, zgh) else zgh >= max(zg, zh)
    upper_ok = None if None in (zg, ph, zgh) else zgh <= zg + ph - 1
    corollary_ok = None
    if zg == 1 and ph == 2 and zgh is not None:
        corollary_ok = zgh == 2
    statuses = {
        "zeta_G": zeta_g.outcome.name,
        "zeta_H": zeta_h.outcome.name,
        "psi_H": psi_h.status.name,
        "zeta_GH": zeta_gh.outcome.name,
    }
    get_logger().debug(f"Bounds for {product.name}: zeta={zgh}, lower={lower_ok}, upper={upper_ok}.")
    return BoundsRecord(first.name, second.name, zg, zh, ph, zgh, lower_ok, upper_ok, corollary_ok, statuses)


def check_bounds(
    first: Graph,
    second: Graph,
    budget: Optional[SolverBudget] = None,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
) -> BoundsReport:
    """Evaluate ``max(zeta(G), zeta(H)) <= zeta(G □ H) <= zeta(G) + psi(H) - 1`` for one pair.

    Raises:
        TrivialGraphError: If a factor has fewer than two vertices.
        UnreachableVertexError: If a factor is disconnected.

    """
    _require_nontrivial(first)
    _require_nontrivial(second)
    return BoundsReport((_bounds_record(first, second, budget, subset_budget),))


def check_bounds_battery(
    pairs: Iterable[Tuple[Graph, Graph]],
    budget: Optional[SolverBudget] = None,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
    workers: int = 1,
) -> BoundsReport:
    """``check_bounds`` for every pair, in input order whatever the number of workers."""
    pairs = list(pairs)
    for first, second in pairs:
        _require_nontrivial(first)
        _require_nontrivial(second)
    firsts = [first for first, _ in pairs]
    seconds = [second for _, second in pairs]
    if workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_bounds_record, firsts, seconds, repeat(budget), repeat(subset_budget)))
    else:
        records = list(map(_bounds_record, firsts, seconds, repeat(budget), repeat(subset_budget)))
    return BoundsReport(tuple(records))


# Acceptance battery


@dataclass(frozen=True)
class Battery:
    """The data-driven instances: torus entries for the acceptance matrix and factor pairs for bounds."""

    acceptance: Tuple[Dict[str, Any], ...]
    bounds_graphs: Tuple[str, ...]
    max_vertices: int

    def bounds_pairs(self) -> List[Tuple[Graph, Graph]]:
        graphs = [graph_from_tag(tag) for tag in self.bounds_graphs]
        return [
            (first, second)
            for first in graphs
            for second in graphs
            if first.vertex_count * second.vertex_count <= self.max_vertices
        ]


def _require(condition: bool, message: str):
    if not condition:
        raise GraphFormatError(message)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def load_battery(path: Optional[Path] = None) -> Battery:
    """Read a battery file, the packaged default when ``path`` is omitted.

    Raises:
        GraphFormatError: If the file is not valid JSON or an entry is malformed; the message names the field.

    """
    path = Path(path or DEFAULT_BATTERY)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise GraphFormatError(f"battery: invalid JSON ({err.msg} at line {err.lineno}).") from err
    _require(isinstance(data, dict), "battery: expected a JSON object.")
    entries = data.get("acceptance", [])
    _require(isinstance(entries, list), "acceptance: expected a list.")
    for index, entry in enumerate(entries):
        where = f"acceptance[{index}]"
        _require(isinstance(entry, dict), f"{where}: expected an object.")
        for key in ("m", "n", "expected"):
            _require(_is_int(entry.get(key)), f"{where}.{key}: expected an integer.")
        if not entry.get("exact"):
            _require(isinstance(entry.get("upper"), dict), f"{where}.upper: expected an object.")
            _require(isinstance(entry.get("lower"), dict), f"{where}.lower: expected an object.")
            upper, lower = entry["upper"], entry["lower"]
            _require(
                upper.get("strategy") in STRATEGY_TAGS or _is_int(upper.get("solver")),
                f"{where}.upper: expected a known strategy tag or a solver cop count.",
            )
            _require(
                lower.get("family") in HIDEOUT_TAGS or _is_int(lower.get("solver")),
                f"{where}.lower: expected a known family tag or a solver cop count.",
            )
            _require("family" not in lower or _is_int(lower.get("cops")), f"{where}.lower.cops: expected an integer.")
    bounds = data.get("bounds", {})
    _require(isinstance(bounds, dict), "bounds: expected an object.")
    graphs = bounds.get("graphs", [])
    _require(isinstance(graphs, list) and all(isinstance(tag, str) for tag in graphs), "bounds.graphs: expected tags.")
    max_vertices = bounds.get("max_vertices", 25)
    _require(_is_int(max_vertices), "bounds.max_vertices: expected an integer.")
    return Battery(tuple(entries), tuple(graphs), max_vertices)


@dataclass(frozen=True)
class AcceptanceRow:
    m: int
    n: int
    expected: int
    observed: Optional[int]
    lower: Optional[int]
    upper: Optional[int]
    method: str
    status: Verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "expected": self.expected,
            "observed": self.observed,
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method,
            "status": self.status.name.lower(),
        }


@dataclass(frozen=True)
class AcceptanceTable:
    rows: Tuple[AcceptanceRow, ...]

    @property
    def verdict(self) -> Verdict:
        statuses = {row.status for row in self.rows}
        if Verdict.Mismatch in statuses:
            return Verdict.Mismatch
        if Verdict.Unresolved in statuses:
            return Verdict.Unresolved
        return Verdict.Match

    def to_dict(self) -> Dict[str, Any]:
        return {"verdict": self.verdict.name.lower(), "rows": [row.to_dict() for row in self.rows]}


def _upper_bound(graph: Graph, spec: Dict[str, Any], budget: Optional[SolverBudget]) -> Tuple[Optional[int], str, bool]:
    """(bound or None, method, refuted)."""
    if "strategy" in spec:
        family = STRATEGY_TAGS[spec["strategy"]]
        params = infer_params(graph, family, spec.get("p"), spec.get("q"), spec.get("inner_cops", 1))
        strategy = make_strategy(graph, params, budget)
        report = verify_cop_strategy(graph, strategy, spec.get("max_turns", DEFAULT_MAX_TURNS))
        method = f"strategy:{spec['strategy']}"
        return (strategy.cop_count if report.won else None), method, not report.won
    k = spec["solver"]
    report = cop_wins(graph, k, budget)
    method = f"solver:{k}"
    return (k if report.outcome == Outcome.CopWins else None), method, report.outcome == Outcome.RobberWins


def _lower_bound(graph: Graph, spec: Dict[str, Any], budget: Optional[SolverBudget]) -> Tuple[Optional[int], str, bool]:
    if "family" in spec:
        k = spec["cops"]
        family = make_hideout_family(graph, HIDEOUT_TAGS[spec["family"]], spec.get("p"))
        verdict = verify_hideout_family(graph.distances, k, family)
        return (k + 1 if verdict.certified else None), f"hideout:{spec['family']}", not verdict.certified
    k = spec["solver"]
    report = cop_wins(graph, k, budget)
    method = f"solver:{k}"
    return (k + 1 if report.outcome == Outcome.RobberWins else None), method, report.outcome == Outcome.CopWins


def _acceptance_row(entry: Dict[str, Any], budget: Optional[SolverBudget]) -> AcceptanceRow:
    m, n, expected = entry["m"], entry["n"], entry["expected"]
    graph = make_torus(m, n)
    if entry.get("exact"):
        number = localization_number(graph, expected + 1, budget)
        observed = number.value
        if number.outcome == Outcome.BudgetExceeded:
            status = Verdict.Unresolved
        else:
            status = Verdict.Match if observed == expected else Verdict.Mismatch
        return AcceptanceRow(m, n, expected, observed, observed, observed, "solver", status)

    try:
        upper, upper_method, upper_refuted = _upper_bound(graph, entry["upper"], budget)
        lower, lower_method, lower_refuted = _lower_bound(graph, entry["lower"], budget)
    except LocalizationGameError as err:
        get_logger().debug(f"Acceptance C{m}□C{n}: {err}")
        return AcceptanceRow(m, n, expected, None, None, None, type(err).__name__, Verdict.Mismatch)
    observed = upper if upper is not None and upper == lower else None
    if upper_refuted or lower_refuted:
        status = Verdict.Mismatch
    elif observed is None:
        status = Verdict.Unresolved
    else:
        status = Verdict.Match if observed == expected else Verdict.Mismatch
    get_logger().debug(f"Acceptance C{m}□C{n}: lower={lower} upper={upper} -> {status.name}.")
    return AcceptanceRow(m, n, expected, observed, lower, upper, f"{upper_method}+{lower_method}", status)


def acceptance_matrix(
    battery: Optional[Battery] = None,
    budget: Optional[SolverBudget] = None,
    workers: int = 1,
) -> AcceptanceTable:
    """Expected against observed localization numbers of the battery's tori, in battery order."""
    battery = battery or load_battery()
    entries = list(battery.acceptance)
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_acceptance_row, entries, repeat(budget)))
    else:
        rows = [_acceptance_row(entry, budget) for entry in entries]
    return AcceptanceTable(tuple(rows))


__all__ = [
    "TraceNode",
    "VerificationReport",
    "verify_cop_strategy",
    "BoundsRecord",
    "BoundsReport",
    "check_bounds",
    "check_bounds_battery",
    "Battery",
    "load_battery",
    "AcceptanceRow",
    "AcceptanceTable",
    "acceptance_matrix",
]
