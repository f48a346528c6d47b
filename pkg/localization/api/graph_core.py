"""Graph construction, generators, Cartesian products, torus indexing and BFS distances.

Vertices are contiguous integer ids. A graph may carry a torus labeling: with ``m`` columns and
``n`` rows the vertex ``v_{i,j}`` has the id ``j * m + i``, with ``i`` and ``j`` reduced modulo ``m``
and ``n``. Cartesian products always carry this labeling, ``i`` being the coordinate in the first
factor and ``j`` the coordinate in the second.

Examples:
    ```python

    from localization.api.graph_core import make_cycle
    from localization.api.graph_core import cartesian_product

    torus = cartesian_product(make_cycle(5), make_cycle(5))
    v00 = torus.labels.vertex(0, 0)
    v22 = torus.labels.vertex(2, 2)
    assert torus.distances[v00, v22] == 4

    ```

"""
# Import built-in modules
from dataclasses import dataclass
from functools import cached_property
import json
import re
from typing import Any
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

# Import third-party modules
import networkx as nx
import numpy as np

# Import local modules
from localization.api.constants import PRODUCT_SIGN
from localization.api.errors import GraphFormatError
from localization.api.errors import InvalidOrderError
from localization.api.errors import NotAProductError
from localization.api.errors import ParameterError
from localization.api.errors import UnreachableVertexError
from localization.api.errors import VertexIndexError


Edge = Tuple[int, int]


@dataclass(frozen=True)
class TorusLabels:
    """Row-major labeling of a product graph: ``m`` columns, ``n`` rows."""

    m: int
    n: int

    def vertex(self, i: int, j: int) -> int:
        """int: The id of ``v_{i,j}``, indices taken modulo ``m`` and ``n``."""
        return (j % self.n) * self.m + (i % self.m)

    def coordinates(self, vertex: int) -> Tuple[int, int]:
        """tuple: The ``(i, j)`` label of a vertex id."""
        return vertex % self.m, vertex // self.m

    def column_distance(self, i: int, k: int) -> int:
        """int: Wraparound distance between two columns."""
        gap = (i - k) % self.m
        return min(gap, self.m - gap)

    def row_distance(self, j: int, k: int) -> int:
        """int: Wraparound distance between two rows."""
        gap = (j - k) % self.n
        return min(gap, self.n - gap)


class DistanceMatrix:
    """All-pairs hop distances of a connected graph, stored read-only."""

    def __init__(self, dist: np.ndarray):
        self._dist = np.array(dist, dtype=np.int64)
        self._dist.setflags(write=False)

    def __getitem__(self, item):
        return self._dist[item]

    def __len__(self) -> int:
        return self._dist.shape[0]

    def __repr__(self):
        return f"DistanceMatrix(n={len(self)})"

    @property
    def dist(self) -> np.ndarray:
        """numpy.ndarray: The ``n x n`` distance array."""
        return self._dist

    @property
    def vertex_count(self) -> int:
        return self._dist.shape[0]

    @property
    def diameter(self) -> int:
        if not len(self):
            return 0
        return int(self._dist.max())

    def distance(self, u: int, v: int) -> int:
        self.check_vertex(u)
        self.check_vertex(v)
        return int(self._dist[u, v])

    def vectors(self, probe: Sequence[int]) -> np.ndarray:
        """numpy.ndarray: Row ``v`` holds the distance vector of ``v`` to the probe."""
        for vertex in probe:
            self.check_vertex(vertex)
        return self._dist[:, list(probe)]

    def check_vertex(self, vertex: int):
        if not 0 <= vertex < len(self):
            raise VertexIndexError(f"Vertex {vertex} is out of range for a graph of order {len(self)}.")


class Graph:
    """Immutable simple undirected graph on the vertices ``0 .. vertex_count - 1``.

    Args:
        vertex_count: Number of vertices.
        edges: Iterable of vertex pairs; each undirected edge may appear in either orientation.
        labels: Optional torus labeling, requires ``labels.m * labels.n == vertex_count``.
        name: Display name, not part of the graph's identity.

    Raises:
        GraphFormatError: For self-loops, or a labeling of the wrong size.
        VertexIndexError: For an edge endpoint out of range.

    """

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Optional[TorusLabels] = None,
        name: str = "",
    ):
        if vertex_count < 0:
            raise InvalidOrderError(f"A graph cannot have {vertex_count} vertices.")
        neighbours: List[set] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            u, v = int(u), int(v)
            for vertex in (u, v):
                if not 0 <= vertex < vertex_count:
                    raise VertexIndexError(f"Edge ({u}, {v}) leaves the vertex range 0..{vertex_count - 1}.")
            if u == v:
                raise GraphFormatError(f"edges: self-loop at vertex {u}.")
            neighbours[u].add(v)
            neighbours[v].add(u)
        if labels is not None and labels.m * labels.n != vertex_count:
            raise GraphFormatError(f"torus: {labels.m} x {labels.n} labels do not fit {vertex_count} vertices.")
        self._vertex_count = vertex_count
        self._adjacency = tuple(tuple(sorted(row)) for row in neighbours)
        self._labels = labels
        self.name = name or f"G{vertex_count}"

    def __len__(self) -> int:
        return self._vertex_count

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self):
        return f"Graph(name={self.name!r}, vertex_count={self._vertex_count}, edges={self.edge_count})"

    def __str__(self):
        return self.name

    @property
    def _key(self):
        return self._vertex_count, self.edges, self._labels

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def vertices(self) -> range:
        return range(self._vertex_count)

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """tuple: Per-vertex sorted neighbour ids."""
        return self._adjacency

    @property
    def labels(self) -> Optional[TorusLabels]:
        return self._labels

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """tuple: Every edge once as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return tuple((u, v) for u, row in enumerate(self._adjacency) for v in row if u < v)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def distances(self) -> DistanceMatrix:
        """DistanceMatrix: All-pairs hop distances, computed on first use."""
        return all_pairs_distances(self)

    def neighbours(self, vertex: int) -> Tuple[int, ...]:
        self.check_vertex(vertex)
        return self._adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self.neighbours(vertex))

    def check_vertex(self, vertex: int):
        if not 0 <= vertex < self._vertex_count:
            raise VertexIndexError(f"Vertex {vertex} is out of range for {self.name} of order {self._vertex_count}.")

    def is_connected(self) -> bool:
        if self._vertex_count == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph(name=self.name)
        graph.add_nodes_from(range(self._vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph, name: str = "", labels: Optional[TorusLabels] = None) -> "Graph":
        """Relabel the nodes of a networkx graph, in sorted order, to contiguous ids."""
        index = {node: position for position, node in enumerate(sorted(graph.nodes))}
        edges = [(index[u], index[v]) for u, v in graph.edges]
        return cls(len(index), edges, labels=labels, name=name or graph.name)

    def to_dict(self) -> Dict[str, Any]:
        torus = None if self._labels is None else {"m": self._labels.m, "rows": self._labels.n}
        return {"n": self._vertex_count, "edges": [list(edge) for edge in self.edges], "torus": torus}

    def to_json(self) -> str:
        """str: Canonical JSON, sorted keys and lexicographically sorted edges."""
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Any, name: str = "") -> "Graph":
        if not isinstance(data, dict):
            raise GraphFormatError("graph: expected a JSON object.")
        vertex_count = data.get("n")
        if isinstance(vertex_count, bool) or not isinstance(vertex_count, int) or vertex_count < 0:
            raise GraphFormatError(f"n: expected a nonnegative integer, got {vertex_count!r}.")
        edges = data.get("edges")
        if not isinstance(edges, list):
            raise GraphFormatError(f"edges: expected a list of vertex pairs, got {edges!r}.")
        for edge in edges:
            if (
                not isinstance(edge, list)
                or len(edge) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in edge)
            ):
                raise GraphFormatError(f"edges: malformed entry {edge!r}.")
            if not all(0 <= x < vertex_count for x in edge):
                raise GraphFormatError(f"edges: entry {edge!r} leaves the vertex range.")
        labels = None
        torus = data.get("torus")
        if torus is not None:
            if not isinstance(torus, dict):
                raise GraphFormatError(f"torus: expected an object or null, got {torus!r}.")
            for field in ("m", "rows"):
                value = torus.get(field)
                if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                    raise GraphFormatError(f"torus.{field}: expected a positive integer, got {value!r}.")
            labels = TorusLabels(torus["m"], torus["rows"])
        return cls(vertex_count, edges, labels=labels, name=name)

    @classmethod
    def from_json(cls, text: str, name: str = "") -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise GraphFormatError(f"graph: invalid JSON ({err.msg} at line {err.lineno}).") from err
        return cls.from_dict(data, name=name)

    def to_dot(self) -> str:
        """str: Graphviz DOT text; torus-labelled vertices get their ``v_{i,j}`` label."""
        lines = [f'graph "{self.name}" {{']
        for vertex in self.vertices:
            if self._labels is None:
                lines.append(f"  {vertex};")
            else:
                i, j = self._labels.coordinates(vertex)
                lines.append(f'  {vertex} [label="v{i},{j}"];')
        lines.extend(f"  {u} -- {v};" for u, v in self.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"


def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    """Hop distances between every pair of vertices, one BFS per vertex.

    Raises:
        UnreachableVertexError: If the graph is disconnected.

    """
    order = graph.vertex_count
    dist = np.full((order, order), -1, dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(graph.to_networkx()):
        if len(lengths) != order:
            missing = min(set(graph.vertices) - set(lengths))
            raise UnreachableVertexError(f"Vertex {missing} cannot be reached from vertex {source} in {graph.name}.")
        for target, length in lengths.items():
            dist[source, target] = length
    return DistanceMatrix(dist)


def closed_neighborhood(graph: Graph, vertices: Iterable[int]) -> FrozenSet[int]:
    """The vertices themselves together with all of their neighbours."""
    result = set()
    for vertex in vertices:
        result.add(vertex)
        result.update(graph.neighbours(vertex))
    return frozenset(result)


def make_cycle(order: int) -> Graph:
    if order < 3:
        raise InvalidOrderError(f"A cycle needs at least 3 vertices, got {order}.")
    return Graph.from_networkx(nx.cycle_graph(order), name=f"C{order}")


def make_path(order: int) -> Graph:
    if order < 1:
        raise InvalidOrderError(f"A path needs at least 1 vertex, got {order}.")
    return Graph.from_networkx(nx.path_graph(order), name=f"P{order}")


def make_complete(order: int) -> Graph:
    if order < 1:
        raise InvalidOrderError(f"A complete graph needs at least 1 vertex, got {order}.")
    return Graph.from_networkx(nx.complete_graph(order), name=f"K{order}")


def make_complete_bipartite(left: int, right: int) -> Graph:
    """K_{left,right}; the left side holds the ids ``0 .. left - 1``."""
    if left < 2 or right < 2:
        raise InvalidOrderError(f"Each side of K{left},{right} needs at least 2 vertices.")
    return Graph.from_networkx(nx.complete_bipartite_graph(left, right), name=f"K{left},{right}")


def cartesian_product(first: Graph, second: Graph) -> Graph:
    """The Cartesian product ``first □ second`` with its torus labeling.

    ``(u, u')`` is adjacent to ``(v, v')`` when one coordinate is equal and the other is an edge
    of its factor. The vertex ``(u, u')`` gets the id ``u' * |first| + u``.

    """
    if not first.vertex_count or not second.vertex_count:
        raise InvalidOrderError(f"Cannot take the product of {first.name} and {second.name}: empty factor.")
    labels = TorusLabels(first.vertex_count, second.vertex_count)
    edges = []
    for row in second.vertices:
        edges.extend((labels.vertex(u, row), labels.vertex(v, row)) for u, v in first.edges)
    for column in first.vertices:
        edges.extend((labels.vertex(column, u), labels.vertex(column, v)) for u, v in second.edges)
    name = f"{first.name}{PRODUCT_SIGN}{second.name}"
    return Graph(labels.m * labels.n, edges, labels=labels, name=name)


def product_factors(product: Graph) -> Tuple[Graph, Graph]:
    """Recover ``(first, second)`` from a graph carrying a product labeling.

    Raises:
        NotAProductError: If the graph has no labeling or is not the product of its row and column.

    """
    labels = product.labels
    if labels is None:
        raise NotAProductError(f"{product.name} has no product labeling.")
    names = product.name.split(PRODUCT_SIGN) if product.name.count(PRODUCT_SIGN) == 1 else ["G", "H"]
    row = [(u % labels.m, v % labels.m) for u, v in product.edges if u < labels.m and v < labels.m]
    column = [(u // labels.m, v // labels.m) for u, v in product.edges if u % labels.m == 0 and v % labels.m == 0]
    first = Graph(labels.m, row, name=names[0])
    second = Graph(labels.n, column, name=names[1])
    if cartesian_product(first, second).edges != product.edges:
        raise NotAProductError(f"{product.name} is not the product of its first row and first column.")
    return first, second


def make_torus(columns: int, rows: int) -> Graph:
    """C_columns □ C_rows."""
    return cartesian_product(make_cycle(columns), make_cycle(rows))


_TAG_PATTERN = re.compile(r"^([PCK])(\d+)(?:,(\d+))?$")


def graph_from_tag(tag: str) -> Graph:
    """Build a graph from a short tag such as ``P5``, ``C6``, ``K4``, ``K2,3`` or ``C5xC4``.

    Raises:
        ParameterError: If the tag is not understood.

    """
    text = tag.strip()
    for separator in (PRODUCT_SIGN, "x"):
        if separator in text:
            first, second = text.split(separator, 1)
            return cartesian_product(graph_from_tag(first), graph_from_tag(second))
    match = _TAG_PATTERN.match(text)
    if not match:
        raise ParameterError(f"Unknown graph tag {tag!r}.")
    family, order, other = match.group(1), int(match.group(2)), match.group(3)
    if other is not None:
        if family != "K":
            raise ParameterError(f"Unknown graph tag {tag!r}.")
        return make_complete_bipartite(order, int(other))
    builders = {"P": make_path, "C": make_cycle, "K": make_complete}
    return builders[family](order)


__all__ = [
    "Graph",
    "TorusLabels",
    "DistanceMatrix",
    "all_pairs_distances",
    "closed_neighborhood",
    "make_cycle",
    "make_path",
    "make_complete",
    "make_complete_bipartite",
    "cartesian_product",
    "make_torus",
    "product_factors",
    "graph_from_tag",
]
