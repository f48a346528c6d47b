"""Resolving sets, metric dimension, doubly resolving sets and projections onto product factors.

Subset searches enumerate candidate sets by increasing cardinality and, within one cardinality,
lexicographically over sorted vertex ids; the first witness found is returned. Each search is
guarded by a subset budget and reports ``SearchStatus.BudgetExceeded`` instead of an answer when
the budget runs out.

"""
# Import built-in modules
from dataclasses import dataclass
from itertools import combinations
from typing import Any
from typing import Callable
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

# Import third-party modules
import numpy as np

# Import local modules
from localization.api._core import get_logger
from localization.api.constants import DEFAULT_SUBSET_BUDGET
from localization.api.enumerations import Factor
from localization.api.enumerations import SearchStatus
from localization.api.errors import DegeneratePairError
from localization.api.errors import InvalidProbeError
from localization.api.errors import NotAProductError
from localization.api.errors import TrivialGraphError
from localization.api.graph_core import DistanceMatrix
from localization.api.graph_core import Graph


VertexSubset = Tuple[int, ...]


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a budgeted subset search.

    Attributes:
        value: Smallest cardinality found, ``None`` when the budget ran out.
        witness: The lexicographically first set of that cardinality.
        status: ``Found`` or ``BudgetExceeded``.
        subsets_checked: Number of candidate subsets examined.

    """

    value: Optional[int]
    witness: Optional[VertexSubset]
    status: SearchStatus
    subsets_checked: int

    def to_dict(self) -> Dict[str, Any]:
        witness = None if self.witness is None else list(self.witness)
        return {"value": self.value, "witness": witness, "status": self.status.name}


def _as_subset(graph: Graph, vertices: Iterable[int]) -> VertexSubset:
    members = tuple(sorted(set(vertices)))
    for vertex in members:
        graph.check_vertex(vertex)
    return members


def _distinct_rows(rows: np.ndarray) -> bool:
    if rows.shape[0] <= 1:
        return True
    if rows.shape[1] == 0:
        return False
    return np.unique(rows, axis=0).shape[0] == rows.shape[0]


def distance_vector(dm: DistanceMatrix, probe: Sequence[int], vertex: int) -> List[int]:
    """The distances from ``vertex`` to each probed vertex, in probe order.

    Raises:
        InvalidProbeError: For an empty probe.

    """
    if not len(probe):
        raise InvalidProbeError("A probe needs at least one vertex.")
    dm.check_vertex(vertex)
    return [int(x) for x in dm.vectors(probe)[vertex]]


def is_resolving_set(graph: Graph, vertices: Iterable[int]) -> bool:
    """Whether every vertex has a distinct distance vector to ``vertices``."""
    members = _as_subset(graph, vertices)
    return _distinct_rows(graph.distances.vectors(members))


def is_doubly_resolving_set(graph: Graph, vertices: Iterable[int]) -> bool:
    """Whether every pair of distinct vertices is doubly resolved by two members of ``vertices``.

    ``W`` doubly resolves ``v1, v2`` exactly when ``d(v1, w) - d(v2, w)`` is not constant over
    ``w in W``, that is when the vectors ``d(v, W) - d(v, w0)`` of ``v1`` and ``v2`` differ.

    Raises:
        TrivialGraphError: For graphs with fewer than two vertices.

    """
    if graph.vertex_count < 2:
        raise TrivialGraphError(f"{graph.name} has fewer than two vertices.")
    members = _as_subset(graph, vertices)
    if len(members) < 2:
        return False
    vectors = graph.distances.vectors(members)
    return _distinct_rows(vectors - vectors[:, :1])


def doubly_resolves(dm: DistanceMatrix, u1: int, u2: int, v1: int, v2: int) -> bool:
    """Whether ``u1, u2`` doubly resolve the pair ``v1, v2``.

    Raises:
        DegeneratePairError: If ``v1 == v2``.

    """
    if v1 == v2:
        raise DegeneratePairError(f"Cannot doubly resolve vertex {v1} against itself.")
    return dm.distance(v1, u1) - dm.distance(v2, u1) != dm.distance(v1, u2) - dm.distance(v2, u2)


def _smallest_subset(
    graph: Graph,
    start: int,
    predicate: Callable[[VertexSubset], bool],
    budget: int,
    label: str,
) -> SearchResult:
    logr = get_logger()
    checked = 0
    for size in range(start, graph.vertex_count + 1):
        logr.debug(f"{label}({graph.name}): trying subsets of size {size}.")
        for subset in combinations(graph.vertices, size):
            if checked >= budget:
                logr.debug(f"{label}({graph.name}): subset budget of {budget} exhausted.")
                return SearchResult(None, None, SearchStatus.BudgetExceeded, checked)
            checked += 1
            if predicate(subset):
                return SearchResult(size, subset, SearchStatus.Found, checked)
    # The whole vertex set always qualifies, so this is unreachable for valid graphs.
    return SearchResult(None, None, SearchStatus.BudgetExceeded, checked)


def metric_dimension(graph: Graph, budget: int = DEFAULT_SUBSET_BUDGET) -> SearchResult:
    """Smallest cardinality of a resolving set, with a witness.

    Raises:
        TrivialGraphError: For graphs with fewer than two vertices.

    """
    if graph.vertex_count < 2:
        raise TrivialGraphError(f"{graph.name} has fewer than two vertices.")
    vectors = graph.distances.dist
    return _smallest_subset(graph, 1, lambda subset: _distinct_rows(vectors[:, subset]), budget, "dim")


def psi(graph: Graph, budget: int = DEFAULT_SUBSET_BUDGET) -> SearchResult:
    """Smallest cardinality of a doubly resolving set, with a witness.

    Raises:
        TrivialGraphError: For graphs with fewer than two vertices.

    """
    if graph.vertex_count < 2:
        raise TrivialGraphError(f"{graph.name} has fewer than two vertices.")
    dist = graph.distances.dist

    def _doubly(subset: VertexSubset) -> bool:
        vectors = dist[:, subset]
        return _distinct_rows(vectors - vectors[:, :1])

    return _smallest_subset(graph, 2, _doubly, budget, "psi")


def project_onto_factor(product: Graph, vertices: Iterable[int], factor: Factor) -> FrozenSet[int]:
    """The first (``Factor.G``) or second (``Factor.H``) coordinates of ``vertices``.

    Raises:
        NotAProductError: If the graph carries no product labeling.

    """
    labels = product.labels
    if labels is None:
        raise NotAProductError(f"{product.name} has no product labeling.")
    members = _as_subset(product, vertices)
    if factor == Factor.G:
        return frozenset(v % labels.m for v in members)
    return frozenset(v // labels.m for v in members)


def fibers_resolved(product: Graph, vertices: Iterable[int], factor: Factor) -> bool:
    """Whether every copy of ``factor`` inside the product is resolved by ``vertices``.

    A copy of ``H`` is a column (first coordinate fixed), a copy of ``G`` is a row.

    Raises:
        NotAProductError: If the graph carries no product labeling.

    """
    labels = product.labels
    if labels is None:
        raise NotAProductError(f"{product.name} has no product labeling.")
    vectors = product.distances.vectors(_as_subset(product, vertices))
    if factor == Factor.H:
        fibers = ([labels.vertex(i, j) for j in range(labels.n)] for i in range(labels.m))
    else:
        fibers = ([labels.vertex(i, j) for i in range(labels.m)] for j in range(labels.n))
    return all(_distinct_rows(vectors[fiber]) for fiber in fibers)


__all__ = [
    "SearchResult",
    "distance_vector",
    "is_resolving_set",
    "metric_dimension",
    "doubly_resolves",
    "is_doubly_resolving_set",
    "psi",
    "project_onto_factor",
    "fibers_resolved",
]
