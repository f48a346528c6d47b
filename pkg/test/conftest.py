# Import built-in modules
import json

# Import third-party modules
import pytest

# Import local modules
from localization.api import make_cycle
from localization.api import make_path
from localization.api import make_torus


@pytest.fixture()
def c4():
    return make_cycle(4)


@pytest.fixture()
def c5():
    return make_cycle(5)


@pytest.fixture()
def p3():
    return make_path(3)


@pytest.fixture()
def torus():
    def _get_torus(columns, rows):
        return make_torus(columns, rows)

    return _get_torus


@pytest.fixture()
def graph_file(tmp_path):
    def _write_graph(graph, name=None):
        path = tmp_path / f"{name or graph.name}.json"
        path.write_text(graph.to_json(), encoding="utf-8")
        return str(path)

    return _write_graph


@pytest.fixture()
def json_file(tmp_path):
    def _write_json(data, name="data"):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write_json
