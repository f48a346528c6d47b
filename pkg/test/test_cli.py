# Import built-in modules
import json

# Import third-party modules
import pytest

# Import local modules
from localization.api import make_cycle
from localization.api import make_path
from localization.api import make_torus
from localization.api.errors import SoundnessViolationError
from localization.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _run_json(capsys, *argv):
    code, out, _ = _run(capsys, *argv)
    return code, json.loads(out)


class TestGraphCommands:
    def test_gen_to_file(self, capsys, tmp_path):
        output = tmp_path / "c5.json"
        code, out, _ = _run(capsys, "gen", "cycle", "5", "-o", str(output))
        assert code == 0
        assert out == ""
        assert json.loads(output.read_text(encoding="utf-8"))["n"] == 5

    def test_gen_torus(self, capsys):
        code, data = _run_json(capsys, "gen", "torus", "5", "4")
        assert code == 0
        assert data["n"] == 20
        assert len(data["edges"]) == 40

    def test_gen_tag(self, capsys):
        code, data = _run_json(capsys, "gen", "tag", "K2,3")
        assert code == 0
        assert data["n"] == 5

    @pytest.mark.parametrize("argv", [["gen", "cycle", "x"], ["gen", "torus", "5"], ["gen", "cycle", "2"]])
    def test_gen_usage(self, capsys, argv):
        code, _, err = _run(capsys, *argv)
        assert code == 3
        assert err.startswith("error:")

    def test_product(self, capsys, graph_file):
        code, data = _run_json(capsys, "product", graph_file(make_cycle(5)), graph_file(make_path(3)))
        assert code == 0
        assert data["n"] == 15

    def test_dot(self, capsys, graph_file):
        code, out, _ = _run(capsys, "dot", graph_file(make_cycle(4)))
        assert code == 0
        assert out.startswith('graph "C4" {')

    def test_malformed_graph(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"n": 3, "edges": [[0, 7]]}', encoding="utf-8")
        code, _, err = _run(capsys, "dim", str(path))
        assert code == 3
        assert "edges" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = _run(capsys, "dim", str(tmp_path / "nowhere.json"))
        assert code == 3


class TestAnalysisCommands:
    def test_dim(self, capsys, graph_file):
        code, data = _run_json(capsys, "dim", graph_file(make_cycle(5)))
        assert code == 0
        assert data["dim"] == 2

    def test_psi_budget(self, capsys, graph_file):
        code, data = _run_json(capsys, "psi", graph_file(make_cycle(6)), "--subset-budget", "1")
        assert code == 2
        assert data["psi"] is None

    def test_zeta(self, capsys, graph_file):
        code, data = _run_json(capsys, "zeta", graph_file(make_cycle(5)), "--max-cops", "2")
        assert code == 0
        assert data["zeta"] == 2

    def test_zeta_not_reached(self, capsys, graph_file):
        code, data = _run_json(capsys, "zeta", graph_file(make_cycle(5)), "--max-cops", "1")
        assert code == 1
        assert data["outcome"] == "RobberWins"

    def test_zeta_budget(self, capsys, graph_file):
        path = graph_file(make_torus(5, 5), name="c5c5")
        code, data = _run_json(capsys, "zeta", path, "--max-cops", "2", "--budget-states", "10")
        assert code == 2
        assert data["outcome"] == "BudgetExceeded"

    def test_zeta_text(self, capsys, graph_file):
        code, out, _ = _run(capsys, "zeta", graph_file(make_cycle(5)), "--max-cops", "2", "--format", "text")
        assert code == 0
        assert "zeta: 2\n" in out

    def test_cop_wins(self, capsys, graph_file):
        code, data = _run_json(capsys, "cop-wins", graph_file(make_cycle(4)), "--cops", "1")
        assert code == 1
        assert data["outcome"] == "RobberWins"

    def test_safe_sets(self, capsys, graph_file):
        code, data = _run_json(capsys, "safe-sets", graph_file(make_cycle(5)), "--probe", "0")
        assert code == 0
        assert data["safe_sets"] == [[1, 4], [2, 3]]

    def test_safe_sets_bad_probe(self, capsys, graph_file):
        code, _, _ = _run(capsys, "safe-sets", graph_file(make_cycle(5)), "--probe", "a,b")
        assert code == 3


class TestVerifyCommands:
    def test_verify_cop(self, capsys, graph_file):
        path = graph_file(make_torus(5, 5), name="c5c5")
        code, data = _run_json(capsys, "verify-cop", path, "--strategy", "c5c5")
        assert code == 0
        assert data["won"]
        assert data["cops"] == 2

    def test_verify_cop_failure(self, capsys, graph_file):
        code, data = _run_json(capsys, "verify-cop", graph_file(make_cycle(5)), "--strategy", "solver")
        assert code == 1
        assert not data["won"]
        assert data["failure_trace"] == []

    def test_verify_cop_wrong_graph(self, capsys, graph_file):
        code, _, _ = _run(capsys, "verify-cop", graph_file(make_cycle(5)), "--strategy", "c5c5")
        assert code == 3

    def test_verify_hideout_family(self, capsys, graph_file):
        path = graph_file(make_torus(6, 4), name="c6c4")
        code, data = _run_json(capsys, "verify-hideout", path, "--family", "c2pc4", "--p", "3", "--cops", "2")
        assert code == 0
        assert data["certified"]
        assert data["pairs"] == 60

    def test_verify_hideout_pairs(self, capsys, graph_file, json_file):
        pairs = json_file([[0, 1]], name="pairs")
        code, data = _run_json(capsys, "verify-hideout", graph_file(make_cycle(7)), "--pairs", pairs, "--cops", "1")
        assert code == 1
        assert data["counterexample"]["pair"] == [0, 1]

    @pytest.mark.parametrize("source", [[], ["--family", "c3c3", "--pairs", "pairs.json"]])
    def test_verify_hideout_sources(self, capsys, graph_file, source):
        code, _, _ = _run(capsys, "verify-hideout", graph_file(make_cycle(5)), "--cops", "1", *source)
        assert code == 3

    def test_check_bounds(self, capsys, graph_file):
        path = graph_file(make_path(2))
        code, data = _run_json(capsys, "check-bounds", path, path)
        assert code == 0
        assert data["holds"]

    def test_check_bounds_arity(self, capsys, graph_file):
        code, _, _ = _run(capsys, "check-bounds", graph_file(make_path(2)))
        assert code == 3

    def test_acceptance(self, capsys, json_file):
        battery = json_file({"acceptance": [{"m": 4, "n": 3, "expected": 2, "exact": True}]}, name="battery")
        code, data = _run_json(capsys, "acceptance", "--battery", battery)
        assert code == 0
        assert data["verdict"] == "match"


class TestOptions:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert "localization" in capsys.readouterr().out

    def test_no_command(self, capsys):
        code, _, _ = _run(capsys)
        assert code == 3

    def test_invalid_workers(self, capsys, graph_file):
        code, _, _ = _run(capsys, "dim", graph_file(make_cycle(5)), "--workers", "0")
        assert code == 3

    def test_invalid_budget(self, capsys, graph_file):
        code, _, _ = _run(capsys, "zeta", graph_file(make_cycle(5)), "--max-cops", "2", "--budget-states", "0")
        assert code == 3

    def test_internal_errors_have_their_own_code(self, capsys, graph_file, monkeypatch):
        def _unsound(*_args, **_kwargs):
            raise SoundnessViolationError("rank went up")

        monkeypatch.setattr("localization.cli.metric_dimension", _unsound)
        code, _, err = _run(capsys, "dim", graph_file(make_cycle(5)))
        assert code == 4
        assert err.startswith("internal error:")
