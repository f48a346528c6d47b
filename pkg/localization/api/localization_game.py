"""Knowledge-set semantics of the localization game.

Each turn the Cop probes ``k`` vertices and learns the distance vector of the Robber's vertex to
them. The Cop's knowledge is the set of vertices consistent with everything seen so far: a probe
splits it into classes of equal distance vectors, the Robber's class survives, and the Robber then
moves to any vertex of its closed neighbourhood. The Cop wins once the class is a single vertex.

This module holds the value types of the game, the analytics around safe sets, safe houses and cop
houses, the exact ``cop_wins`` decision and the co-inductive check of Robber hideout families.

"""
# Import built-in modules
from dataclasses import dataclass
from dataclasses import field
from itertools import combinations
import json
from typing import Any
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

# Import third-party modules
import numpy as np

# Import local modules
from localization.api import _bitset
from localization.api._core import get_logger
from localization.api.enumerations import Outcome
from localization.api.errors import ArityError
from localization.api.errors import DegeneratePairError
from localization.api.errors import GraphFormatError
from localization.api.errors import InvalidProbeError
from localization.api.errors import ParameterError
from localization.api.graph_core import DistanceMatrix
from localization.api.graph_core import Graph
from localization.api.graph_core import TorusLabels
from localization.api.graph_core import closed_neighborhood


Pair = Tuple[int, int]


class Probe(tuple):
    """Ordered probe of ``k`` distinct vertices; the order fixes the distance-vector components."""

    def __new__(cls, vertices: Iterable[int], vertex_count: Optional[int] = None):
        members = tuple(int(v) for v in vertices)
        if not members:
            raise InvalidProbeError("A probe needs at least one vertex.")
        if len(set(members)) != len(members):
            raise InvalidProbeError(f"Probe {list(members)} repeats a vertex.")
        for vertex in members:
            if vertex < 0 or (vertex_count is not None and vertex >= vertex_count):
                raise InvalidProbeError(f"Probe vertex {vertex} is out of range.")
        return super().__new__(cls, members)

    def __repr__(self):
        return f"Probe({list(self)})"

    @property
    def k(self) -> int:
        return len(self)


class KnowledgeState(frozenset):
    """The set of vertices the Robber may occupy, as far as the Cop knows."""

    def __repr__(self):
        return f"KnowledgeState({sorted(self)})"

    @classmethod
    def from_mask(cls, mask: int) -> "KnowledgeState":
        return cls(_bitset.members(mask))

    @property
    def mask(self) -> int:
        return _bitset.mask_of(self)

    @property
    def is_located(self) -> bool:
        return len(self) == 1

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self))


@dataclass(frozen=True)
class SafeSetForm:
    """A rectangle ``{v_{a+x, b+y} : x in {0, d_i}, y in {0, d_j}}`` on a torus.

    ``d_i`` and ``d_j`` are wraparound distances, so ``0 <= d_i <= m // 2`` and ``0 <= d_j <= n // 2``.
    """

    a: int
    b: int
    d_i: int
    d_j: int

    def vertices(self, labels: TorusLabels) -> FrozenSet[int]:
        return frozenset(
            labels.vertex(self.a + x, self.b + y) for x in {0, self.d_i} for y in {0, self.d_j}
        )

    @classmethod
    def fit(cls, labels: TorusLabels, vertices: Iterable[int]) -> Optional["SafeSetForm"]:
        """The lexicographically first ``(a, b, d_i, d_j)`` whose rectangle equals ``vertices``."""
        target = frozenset(vertices)
        if not target:
            return None
        coordinates = [labels.coordinates(v) for v in target]
        columns = sorted({i for i, _ in coordinates})
        rows = sorted({j for _, j in coordinates})
        for a in columns:
            for b in rows:
                for d_i in range(labels.m // 2 + 1):
                    for d_j in range(labels.n // 2 + 1):
                        form = cls(a, b, d_i, d_j)
                        if form.vertices(labels) == target:
                            return form
        return None


class PairFamily:
    """A nonempty set of unordered vertex pairs, used as a Robber survival certificate.

    Args:
        pairs: Iterable of two-vertex sequences.
        vertex_count: Optional order of the graph, enables range checks.

    Raises:
        ParameterError: For an empty family.
        DegeneratePairError: For a pair ``{u, u}``.

    """

    def __init__(self, pairs: Iterable[Sequence[int]], vertex_count: Optional[int] = None):
        normalized = set()
        for pair in pairs:
            u, v = (int(x) for x in pair)
            if u == v:
                raise DegeneratePairError(f"Pair ({u}, {v}) is not a pair of distinct vertices.")
            for vertex in (u, v):
                if vertex < 0 or (vertex_count is not None and vertex >= vertex_count):
                    raise ParameterError(f"Pair ({u}, {v}) leaves the vertex range.")
            normalized.add((min(u, v), max(u, v)))
        if not normalized:
            raise ParameterError("A pair family needs at least one pair.")
        self._pairs: Tuple[Pair, ...] = tuple(sorted(normalized))

    def __len__(self) -> int:
        return len(self._pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self._pairs)

    def __contains__(self, pair: Any) -> bool:
        u, v = pair
        return (min(u, v), max(u, v)) in set(self._pairs)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PairFamily):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __repr__(self):
        return f"PairFamily({len(self)} pairs)"

    @property
    def pairs(self) -> Tuple[Pair, ...]:
        return self._pairs

    def to_json(self) -> str:
        return json.dumps([list(pair) for pair in self._pairs])

    @classmethod
    def from_json(cls, text: str, vertex_count: Optional[int] = None) -> "PairFamily":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise GraphFormatError(f"pairs: invalid JSON ({err.msg} at line {err.lineno}).") from err
        if not isinstance(data, list):
            raise GraphFormatError("pairs: expected a JSON list of vertex pairs.")
        for index, pair in enumerate(data):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
            ):
                raise GraphFormatError(f"pairs[{index}]: expected two vertex ids, got {pair!r}.")
        return cls(data, vertex_count=vertex_count)


@dataclass(frozen=True)
class SolveReport:
    """Result of deciding the knowledge-set game for ``k`` cops.

    ``turns_to_win`` is present exactly when the Cop wins; it is the least number of probes that
    guarantees location from the start state.
    """

    outcome: Outcome
    k: int
    turns_to_win: Optional[int] = None
    states_explored: int = 0
    witness: Optional[Probe] = None
    evaluations: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "outcome": self.outcome.name,
            "k": self.k,
            "turns": self.turns_to_win,
            "states_explored": self.states_explored,
            "witness": None if self.witness is None else list(self.witness),
        }


@dataclass(frozen=True)
class LocalizationNumber:
    """Smallest ``k <= k_max`` with a Cop win, or why there is none."""

    value: Optional[int]
    outcome: Outcome
    k_max: int
    reports: Tuple[SolveReport, ...] = field(default=())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "zeta": self.value,
            "outcome": self.outcome.name,
            "k_max": self.k_max,
            "reports": [report.to_dict() for report in self.reports],
        }


@dataclass(frozen=True)
class HideoutVerdict:
    certified: bool
    pair: Optional[Pair] = None
    probe: Optional[Probe] = None
    probes_checked: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "certified": self.certified,
            "counterexample": None
            if self.pair is None
            else {"pair": list(self.pair), "probe": list(self.probe)},
            "probes_checked": self.probes_checked,
        }


def as_probe(dm: DistanceMatrix, vertices: Iterable[int]) -> Probe:
    return Probe(vertices, vertex_count=len(dm))


def _as_state(dm: DistanceMatrix, vertices: Iterable[int]) -> KnowledgeState:
    state = KnowledgeState(vertices)
    for vertex in state:
        dm.check_vertex(vertex)
    return state


def partition_by_probe(dm: DistanceMatrix, state: Iterable[int], probe: Sequence[int]) -> List[KnowledgeState]:
    """Split ``state`` into classes of equal distance vectors to ``probe``.

    Returns:
        The classes, ordered lexicographically by their distance vectors.

    """
    state = _as_state(dm, state)
    probe = as_probe(dm, probe)
    if not state:
        raise ParameterError("Cannot partition an empty knowledge state.")
    ordered = state.sorted()
    vectors = dm.vectors(probe)[list(ordered)]
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for vertex, vector in zip(ordered, vectors.tolist()):
        groups.setdefault(tuple(vector), []).append(vertex)
    return [KnowledgeState(groups[key]) for key in sorted(groups)]


def robber_expand(graph: Graph, state: Iterable[int]) -> KnowledgeState:
    """N[state]: where a Robber known to be in ``state`` can be after its move."""
    return KnowledgeState(closed_neighborhood(graph, state))


def second_difference(dm: DistanceMatrix, probe: Sequence[int], vertex: int) -> int:
    """DD(B, v) = d(v, b_2) - d(v, b_1) for a 2-probe ``B = (b_1, b_2)``.

    Raises:
        ArityError: If the probe does not have exactly two vertices.

    """
    if len(probe) != 2:
        raise ArityError(f"The second difference needs a 2-probe, got {len(probe)} vertices.")
    probe = as_probe(dm, probe)
    return dm.distance(vertex, probe[1]) - dm.distance(vertex, probe[0])


def safe_sets(dm: DistanceMatrix, probe: Sequence[int]) -> List[KnowledgeState]:
    """The non-singleton classes of the whole vertex set under ``probe``."""
    return [cls for cls in partition_by_probe(dm, range(len(dm)), probe) if len(cls) >= 2]


def safe_houses(dm: DistanceMatrix, probe: Sequence[int]) -> Dict[int, KnowledgeState]:
    """Group every vertex by its second difference to a 2-probe, keyed by increasing DD."""
    houses: Dict[int, List[int]] = {}
    for vertex in range(len(dm)):
        houses.setdefault(second_difference(dm, probe, vertex), []).append(vertex)
    return {value: KnowledgeState(houses[value]) for value in sorted(houses)}


def is_cop_house(dm: DistanceMatrix, region: Iterable[int], probe: Sequence[int]) -> bool:
    """Whether no two vertices of ``region`` share a distance vector to ``probe``."""
    region = _as_state(dm, region)
    if len(region) <= 1:
        return True
    return all(len(cls) == 1 for cls in partition_by_probe(dm, region, probe))


def cop_wins(graph: Graph, k: int, budget=None) -> SolveReport:
    """Decide whether ``k`` cops locate the Robber on ``graph``.

    The Cop wins from a state ``S`` when some probe sends every non-singleton class ``T`` to a
    winning state ``N[T]``; the decision is the least fixed point of that rule over the states
    reachable from ``V``. Budget exhaustion is reported as ``Outcome.BudgetExceeded``.

    """
    # Import local modules
    from localization.api._solver import KnowledgeGameSolver

    return KnowledgeGameSolver(graph, k, budget=budget).solve()


def localization_number(graph: Graph, k_max: int, budget=None) -> LocalizationNumber:
    """The smallest ``k <= k_max`` for which the Cop wins.

    Stops at the first ``k`` whose decision exceeds the budget, since larger ``k`` cannot settle
    whether that ``k`` was already enough.

    """
    # Import local modules
    from localization.api._solver import KnowledgeGameSolver

    if k_max < 1:
        raise ParameterError(f"k_max must be at least 1, got {k_max}.")
    logr = get_logger()
    reports = []
    for k in range(1, k_max + 1):
        report = KnowledgeGameSolver(graph, k, budget=budget).solve()
        reports.append(report)
        logr.debug(f"zeta({graph.name}): k={k} -> {report.outcome.name}.")
        if report.outcome == Outcome.CopWins:
            return LocalizationNumber(k, Outcome.CopWins, k_max, tuple(reports))
        if report.outcome == Outcome.BudgetExceeded:
            return LocalizationNumber(None, Outcome.BudgetExceeded, k_max, tuple(reports))
    return LocalizationNumber(None, Outcome.RobberWins, k_max, tuple(reports))


def verify_hideout_family(dm: DistanceMatrix, k: int, family: PairFamily) -> HideoutVerdict:
    """Check that ``family`` lets the Robber survive every ``k``-probe forever.

    For every pair ``{u, v}`` of the family and every ``k``-probe there must be a pair ``{u', v'}``
    of the family inside ``N[{u, v}]`` whose two vertices share a distance vector. A Robber whose
    candidate set contains a family pair can then always answer with a class that again contains
    one. Probes are enumerated lexicographically, pairs in sorted order; the first failure is
    returned as the counterexample.

    """
    if k < 1:
        raise ParameterError(f"The number of cops must be at least 1, got {k}.")
    order = len(dm)
    for pair in family:
        for vertex in pair:
            dm.check_vertex(vertex)
    dist = dm.dist
    neighbourhoods = [_bitset.mask_of(np.flatnonzero(dist[v] <= 1).tolist()) for v in range(order)]
    pairs = family.pairs
    firsts = np.array([u for u, _ in pairs])
    seconds = np.array([v for _, v in pairs])
    pair_masks = [(1 << u) | (1 << v) for u, v in pairs]
    regions = [neighbourhoods[u] | neighbourhoods[v] for u, v in pairs]
    powers = (order + 1) ** np.arange(min(k, order), dtype=np.int64)
    checked = 0
    for probe in combinations(range(order), min(k, order)):
        checked += 1
        keys = dist[:, probe] @ powers
        colliding = [pair_masks[i] for i in np.flatnonzero(keys[firsts] == keys[seconds])]
        for pair, region in zip(pairs, regions):
            if not any(_bitset.is_subset(mask, region) for mask in colliding):
                get_logger().debug(f"Hideout family fails at pair {pair} under probe {list(probe)}.")
                return HideoutVerdict(False, pair, Probe(probe), checked)
    return HideoutVerdict(True, probes_checked=checked)


__all__ = [
    "Probe",
    "KnowledgeState",
    "SafeSetForm",
    "PairFamily",
    "SolveReport",
    "LocalizationNumber",
    "HideoutVerdict",
    "partition_by_probe",
    "robber_expand",
    "second_difference",
    "safe_sets",
    "safe_houses",
    "is_cop_house",
    "cop_wins",
    "localization_number",
    "verify_hideout_family",
]
