# Import third-party modules
import numpy as np
import pytest

# Import local modules
from localization.api import Graph
from localization.api import TorusLabels
from localization.api import cartesian_product
from localization.api import closed_neighborhood
from localization.api import graph_from_tag
from localization.api import make_complete
from localization.api import make_complete_bipartite
from localization.api import make_cycle
from localization.api import make_path
from localization.api import make_torus
from localization.api import product_factors
from localization.api.errors import GraphFormatError
from localization.api.errors import InvalidOrderError
from localization.api.errors import NotAProductError
from localization.api.errors import ParameterError
from localization.api.errors import UnreachableVertexError
from localization.api.errors import VertexIndexError


def test_cycle_distances(c5):
    assert c5.distances[0, 2] == 2
    assert c5.distances[0, 3] == 2
    assert c5.distances.diameter == 2


def test_cycle_needs_three_vertices():
    with pytest.raises(InvalidOrderError):
        make_cycle(2)


def test_disconnected_graph_has_no_distances():
    graph = Graph(4, [(0, 1), (2, 3)])
    assert not graph.is_connected()
    with pytest.raises(UnreachableVertexError):
        graph.distances


def test_self_loop_is_rejected():
    with pytest.raises(GraphFormatError):
        Graph(3, [(1, 1)])


def test_edge_out_of_range():
    with pytest.raises(VertexIndexError):
        Graph(3, [(0, 3)])


def test_distance_matrix_is_read_only(c4):
    with pytest.raises(ValueError):
        c4.distances.dist[0, 1] = 7


def test_closed_neighborhood(c5):
    assert closed_neighborhood(c5, [0]) == {0, 1, 4}
    assert closed_neighborhood(c5, [0, 2]) == {0, 1, 2, 3, 4}


def test_bipartite(c4, c5):
    assert c4.is_bipartite()
    assert not c5.is_bipartite()


class TestTorusLabels:
    # pylint: disable=attribute-defined-outside-init
    @pytest.fixture(autouse=True)
    def setup(self):
        self.labels = TorusLabels(5, 4)
        yield

    def test_vertex(self):
        assert self.labels.vertex(2, 3) == 17

    def test_vertex_wraps(self):
        assert self.labels.vertex(-1, 4) == 4
        assert self.labels.vertex(7, -1) == 17

    def test_coordinates(self):
        assert self.labels.coordinates(17) == (2, 3)

    def test_wraparound_distances(self):
        assert self.labels.column_distance(0, 4) == 1
        assert self.labels.row_distance(0, 2) == 2


class TestCartesianProduct:
    # pylint: disable=attribute-defined-outside-init
    @pytest.fixture(autouse=True)
    def setup(self):
        self.product = cartesian_product(make_cycle(5), make_cycle(4))
        yield

    def test_order_and_size(self):
        assert self.product.vertex_count == 20
        assert self.product.edge_count == 40

    def test_name(self):
        assert self.product.name == "C5□C4"

    def test_labels(self):
        assert self.product.labels == TorusLabels(5, 4)

    def test_distance_is_sum_of_factor_distances(self):
        labels = self.product.labels
        assert self.product.distances[labels.vertex(0, 0), labels.vertex(2, 2)] == 4
        assert self.product.distances[labels.vertex(0, 0), labels.vertex(3, 1)] == 3

    def test_factors(self):
        first, second = product_factors(self.product)
        assert first.edges == make_cycle(5).edges
        assert second.edges == make_cycle(4).edges
        assert (first.name, second.name) == ("C5", "C4")

    def test_torus_shortcut(self):
        assert make_torus(5, 4) == self.product


def test_factors_need_labels(c5):
    with pytest.raises(NotAProductError):
        product_factors(c5)


def test_grid_distances():
    grid = cartesian_product(make_path(3), make_path(4))
    assert grid.distances.diameter == 5


class TestSerialization:
    def test_json_round_trip(self):
        graph = make_torus(3, 4)
        text = graph.to_json()
        again = Graph.from_json(text)
        assert again == graph
        assert again.to_json() == text

    def test_canonical_json(self):
        graph = Graph(3, [(2, 1), (1, 0)])
        assert graph.to_json() == '{"edges": [[0, 1], [1, 2]], "n": 3, "torus": null}'

    def test_invalid_json(self):
        with pytest.raises(GraphFormatError, match="graph"):
            Graph.from_json("{not json")

    @pytest.mark.parametrize(
        "text, field",
        [
            ('{"n": -1, "edges": []}', "n"),
            ('{"n": 3, "edges": [[0, 5]]}', "edges"),
            ('{"n": 3, "edges": "0-1"}', "edges"),
            ('{"n": 4, "edges": [], "torus": {"m": 2, "rows": 0}}', "torus.rows"),
        ],
    )
    def test_malformed_fields(self, text, field):
        with pytest.raises(GraphFormatError, match=field):
            Graph.from_json(text)

    def test_networkx_round_trip(self, c5):
        assert Graph.from_networkx(c5.to_networkx()) == c5

    def test_dot(self, c4):
        dot = c4.to_dot()
        assert dot.startswith('graph "C4" {')
        assert "  0 -- 1;" in dot
        assert dot.rstrip().endswith("}")

    def test_dot_torus_labels(self):
        assert '[label="v1,2"]' in make_torus(3, 3).to_dot()


@pytest.mark.parametrize(
    "tag, order, size",
    [
        ("P5", 5, 4),
        ("C6", 6, 6),
        ("K4", 4, 6),
        ("K2,3", 5, 6),
        ("C5xC4", 20, 40),
        ("P2□P2", 4, 4),
    ],
)
def test_graph_from_tag(tag, order, size):
    graph = graph_from_tag(tag)
    assert graph.vertex_count == order
    assert graph.edge_count == size


@pytest.mark.parametrize("tag", ["Q3", "P2,3", ""])
def test_unknown_tag(tag):
    with pytest.raises(ParameterError):
        graph_from_tag(tag)


def test_complete_graph_diameter():
    assert make_complete(4).distances.diameter == 1


def test_complete_bipartite():
    graph = make_complete_bipartite(2, 4)
    assert graph.edge_count == 8
    assert graph.is_bipartite()


@pytest.mark.parametrize("sides", [(1, 3), (3, 1), (0, 2)])
def test_complete_bipartite_needs_two_per_side(sides):
    with pytest.raises(InvalidOrderError):
        make_complete_bipartite(*sides)


@pytest.mark.parametrize(
    "first, second",
    [
        (make_cycle(8), make_cycle(8)),
        (make_path(5), make_cycle(6)),
        (make_cycle(7), make_path(4)),
        (make_complete(4), make_path(3)),
    ],
)
def test_product_distance_is_additive(first, second):
    product = cartesian_product(first, second)
    labels = product.labels
    rng = np.random.default_rng(20261019)
    for a, b, c, d in zip(
        rng.integers(first.vertex_count, size=200),
        rng.integers(second.vertex_count, size=200),
        rng.integers(first.vertex_count, size=200),
        rng.integers(second.vertex_count, size=200),
    ):
        expected = first.distances[a, c] + second.distances[b, d]
        assert product.distances[labels.vertex(a, b), labels.vertex(c, d)] == expected


@pytest.mark.parametrize("columns, rows", [(8, 8), (5, 6), (3, 7)])
def test_torus_labels_round_trip(columns, rows):
    labels = TorusLabels(columns, rows)
    for vertex in range(columns * rows):
        assert labels.vertex(*labels.coordinates(vertex)) == vertex
    for i in range(columns):
        for j in range(rows):
            assert labels.coordinates(labels.vertex(i, j)) == (i, j)
