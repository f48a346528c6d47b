# Import third-party modules
import pytest

# Import local modules
from localization.api import Battery
from localization.api import Graph
from localization.api import SolverBudget
from localization.api import acceptance_matrix
from localization.api import check_bounds
from localization.api import check_bounds_battery
from localization.api import graph_from_tag
from localization.api import load_battery
from localization.api import make_cycle
from localization.api import make_path
from localization.api import verify_cop_strategy
from localization.api.enumerations import Verdict
from localization.api.errors import GraphFormatError
from localization.api.errors import ParameterError
from localization.api.errors import StrategyMismatchError
from localization.api.errors import TrivialGraphError
from localization.api.errors import UnreachableVertexError
from localization.api.strategies import CopStrategy
from localization.api.strategies import SolverStrategy
from localization.api.strategies import strategy_c5c5


class ConstantStrategy(CopStrategy):
    """Probes the same vertices every turn."""

    def __init__(self, graph, probe):
        super().__init__(graph, len(probe))
        self.probe = probe

    def _probe(self, turn, state, history):
        return self.probe


class TestVerifyCopStrategy:
    def test_c5c5(self):
        strategy = strategy_c5c5()
        report = verify_cop_strategy(strategy.graph, strategy, max_turns=2)
        assert report.won
        assert report.max_turns == 2
        assert report.branches_explored > 0
        assert report.to_dict()["failure_trace"] is None

    def test_constant_probe_fails(self, c4):
        report = verify_cop_strategy(c4, ConstantStrategy(c4, [0]), max_turns=3)
        assert not report.won
        assert "still open after 3 turns" in report.error
        assert len(report.failure_trace) == 3
        assert report.failure_trace[0].robber_class == {1, 3}
        assert report.to_dict()["failure_trace"][0]["class"] == [1, 3]

    def test_trace(self, c5):
        report = verify_cop_strategy(c5, ConstantStrategy(c5, [0, 1]), record_trace=True)
        assert report.won
        assert report.max_turns == 1
        assert len(report.trace) == 1
        assert report.trace[0].chosen is None
        assert report.to_dict()["trace"][0]["probe"] == [0, 1]

    def test_single_vertex(self):
        graph = make_path(1)
        report = verify_cop_strategy(graph, SolverStrategy(graph, 1))
        assert report.won
        assert report.max_turns == 0

    def test_strategy_on_another_graph(self, c4, c5):
        with pytest.raises(StrategyMismatchError):
            verify_cop_strategy(c4, ConstantStrategy(c5, [0]))

    def test_max_turns(self, c4):
        with pytest.raises(ParameterError):
            verify_cop_strategy(c4, ConstantStrategy(c4, [0]), max_turns=0)


class TestBounds:
    def test_paths(self):
        report = check_bounds(make_path(2), make_path(2))
        assert report.holds
        assert report.resolved
        record = report.records[0]
        assert (record.zeta_first, record.psi_second, record.zeta_product) == (1, 2, 2)
        assert record.corollary_ok
        assert report.to_dict()["records"][0]["zeta_GH"] == 2

    def test_unresolved_terms(self):
        report = check_bounds(make_cycle(5), make_path(3), budget=SolverBudget(max_states=1))
        record = report.records[0]
        assert record.zeta_product is None
        assert record.upper_ok is None
        assert report.holds
        assert not report.resolved
        assert record.statuses["zeta_GH"] == "BudgetExceeded"

    def test_trivial_factor(self, c4):
        with pytest.raises(TrivialGraphError):
            check_bounds(make_path(1), c4)

    def test_disconnected_factor(self, c4):
        with pytest.raises(UnreachableVertexError):
            check_bounds(c4, Graph(4, [(0, 1), (2, 3)]))

    def test_battery_keeps_order(self):
        pairs = [(make_path(2), make_path(3)), (graph_from_tag("C3"), make_path(2))]
        report = check_bounds_battery(pairs)
        assert [(record.first, record.second) for record in report.records] == [("P2", "P3"), ("C3", "P2")]
        assert report.holds


class TestBattery:
    def test_default(self):
        battery = load_battery()
        assert len(battery.acceptance) == 12
        pairs = battery.bounds_pairs()
        assert all(first.vertex_count * second.vertex_count <= 25 for first, second in pairs)
        assert ("P2", "P2") in [(first.name, second.name) for first, second in pairs]

    @pytest.mark.parametrize(
        "data, field",
        [
            ([], "battery"),
            ({"acceptance": [{"m": 3, "n": "3", "expected": 3}]}, r"acceptance\[0\]\.n"),
            ({"acceptance": [{"m": 5, "n": 5, "expected": 2}]}, r"acceptance\[0\]\.upper"),
            (
                {"acceptance": [{"m": 5, "n": 5, "expected": 2, "upper": {"solver": 2}, "lower": {"family": "c9"}}]},
                r"acceptance\[0\]\.lower",
            ),
            (
                {
                    "acceptance": [
                        {"m": 5, "n": 5, "expected": 2, "upper": {"solver": 2}, "lower": {"family": "short_cycle"}}
                    ]
                },
                r"acceptance\[0\]\.lower\.cops",
            ),
            ({"bounds": {"graphs": [3]}}, r"bounds\.graphs"),
        ],
    )
    def test_malformed(self, json_file, data, field):
        with pytest.raises(GraphFormatError, match=field):
            load_battery(json_file(data))

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "battery.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(GraphFormatError, match="battery"):
            load_battery(path)


class TestAcceptance:
    def test_small_battery(self):
        battery = Battery(
            (
                {"m": 3, "n": 3, "expected": 3, "exact": True},
                {
                    "m": 5,
                    "n": 5,
                    "expected": 2,
                    "upper": {"strategy": "c5c5"},
                    "lower": {"family": "short_cycle", "cops": 1},
                },
            ),
            (),
            25,
        )
        table = acceptance_matrix(battery)
        assert table.verdict == Verdict.Match
        assert [row.observed for row in table.rows] == [3, 2]
        assert table.rows[1].method == "strategy:c5c5+hideout:short_cycle"
        assert table.to_dict()["rows"][0]["status"] == "match"

    def test_wrong_expectation(self):
        table = acceptance_matrix(Battery(({"m": 4, "n": 3, "expected": 3, "exact": True},), (), 25))
        assert table.rows[0].observed == 2
        assert table.verdict == Verdict.Mismatch

    def test_refuted_upper_bound(self):
        entry = {"m": 5, "n": 5, "expected": 2, "upper": {"solver": 1}, "lower": {"family": "short_cycle", "cops": 1}}
        table = acceptance_matrix(Battery((entry,), (), 25))
        assert table.rows[0].status == Verdict.Mismatch

    def test_budget(self):
        battery = Battery(({"m": 3, "n": 3, "expected": 3, "exact": True},), (), 25)
        table = acceptance_matrix(battery, budget=SolverBudget(max_states=1))
        assert table.verdict == Verdict.Unresolved
        assert table.to_dict()["verdict"] == "unresolved"

    @pytest.mark.slow
    def test_default_battery(self):
        table = acceptance_matrix(workers=2)
        assert table.verdict == Verdict.Match, table.to_dict()

    def test_strategy_for_another_torus_reports_a_mismatch(self):
        entry = {
            "m": 5,
            "n": 5,
            "expected": 2,
            "upper": {"strategy": "c5c3"},
            "lower": {"family": "short_cycle", "cops": 1},
        }
        table = acceptance_matrix(Battery((entry, {"m": 4, "n": 3, "expected": 2, "exact": True}), (), 25))
        assert table.rows[0].status == Verdict.Mismatch
        assert table.rows[0].method == "StrategyMismatchError"
        assert table.rows[0].observed is None
        assert table.rows[1].status == Verdict.Match
        assert table.verdict == Verdict.Mismatch
