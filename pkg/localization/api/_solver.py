"""Exact solver for the knowledge-set localization game.

States are candidate sets packed into integers. ``WIN(S)`` holds when some probe sends every
non-singleton class ``T`` of ``S`` to a winning ``N[T]``; ``rank(S)`` is the least number of probes
that guarantees location from ``S``. The solver first runs a memoised iterative-deepening search
for small ranks and otherwise explores every state reachable from the root and computes the least
fixed point by rank sweeps. States never labelled form the Robber's survival certificate.

Two reductions keep the state graph small:

- a probe that resolves ``S`` settles ``rank(S) = 1``, no other probe of ``S`` is expanded;
- a probe with a class ``T`` such that ``N[T]`` contains ``S`` is never expanded, since ``WIN`` is
  closed under subsets and such a probe can never be the first to win ``S``.

"""
# Import built-in modules
from dataclasses import dataclass
from itertools import combinations
import time
from typing import Any
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

# Import third-party modules
import numpy as np

# Import local modules
from localization.api import _bitset
from localization.api._core import GraphObject
from localization.api.constants import CLOCK_CHECK_INTERVAL
from localization.api.constants import DEFAULT_MAX_EVALUATIONS
from localization.api.constants import DEFAULT_MAX_STATES
from localization.api.constants import DEFAULT_SEARCH_DEPTH
from localization.api.constants import DEFAULT_TIME_LIMIT
from localization.api.enumerations import Outcome
from localization.api.errors import CertificateError
from localization.api.errors import ParameterError
from localization.api.graph_core import Graph
from localization.api.localization_game import KnowledgeState
from localization.api.localization_game import Probe
from localization.api.localization_game import SolveReport


@dataclass(frozen=True)
class SolverBudget:
    """Limits on one solve.

    Attributes:
        max_states: Distinct knowledge states the solver may register.
        max_evaluations: State-probe evaluations.
        time_limit: Wall-clock seconds.
        search_depth: Deepest rank tried by the iterative-deepening search, 0 disables it.

    """

    max_states: int = DEFAULT_MAX_STATES
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS
    time_limit: float = DEFAULT_TIME_LIMIT
    search_depth: int = DEFAULT_SEARCH_DEPTH

    def __post_init__(self):
        for name in ("max_states", "max_evaluations", "time_limit"):
            if getattr(self, name) <= 0:
                raise ParameterError(f"Solver budget {name} must be positive, got {getattr(self, name)}.")
        if self.search_depth < 0:
            raise ParameterError(f"Solver budget search_depth must be nonnegative, got {self.search_depth}.")


class _BudgetTripped(Exception):
    pass


@dataclass(frozen=True)
class SurvivalCertificate:
    """Knowledge states (as bit masks) from which ``k`` cops cannot force location on ``graph``."""

    graph: Graph
    k: int
    states: FrozenSet[int]

    def __contains__(self, state: Any) -> bool:
        mask = state if isinstance(state, int) else _bitset.mask_of(state)
        return mask in self.states

    def covers(self, state: Any) -> bool:
        """Whether ``state`` contains a certified state, so the Cop cannot win from it either."""
        mask = state if isinstance(state, int) else _bitset.mask_of(state)
        return mask in self.states or any(_bitset.is_subset(certified, mask) for certified in self.states)

    def validate(self) -> "SurvivalCertificate":
        """Check closure: every probe leaves some class whose expansion is covered again.

        Raises:
            CertificateError: If the certificate is empty or not closed.

        """
        if not self.states:
            raise CertificateError(f"The certificate for {self.graph.name} is empty.")
        solver = KnowledgeGameSolver(self.graph, self.k)
        for state in sorted(self.states):
            for index in range(len(solver.probes)):
                if not any(self.covers(successor) for successor in solver.expansions(state, index)):
                    raise CertificateError(
                        f"Probe {list(solver.probes[index])} locates the Robber from certified state "
                        f"{list(_bitset.members(state))} on {self.graph.name}."
                    )
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph": self.graph.name,
            "k": self.k,
            "states": [list(_bitset.members(state)) for state in sorted(self.states)],
        }


class KnowledgeGameSolver(GraphObject):
    """Decide the knowledge-set game on one graph for a fixed number of cops.

    Args:
        graph: A connected graph.
        k: Number of cops; more cops than vertices probe every vertex.
        budget: Optional limits, defaults to ``SolverBudget()``.

    """

    def __init__(self, graph: Graph, k: int, budget: Optional[SolverBudget] = None):
        super().__init__(graph)
        if k < 1:
            raise ParameterError(f"The number of cops must be at least 1, got {k}.")
        self.k = k
        self.budget = budget or SolverBudget()
        order = graph.vertex_count
        self._full = (1 << order) - 1
        self._probes = list(combinations(range(order), min(k, order)))
        self._neighbourhoods = [_bitset.mask_of((v, *graph.adjacency[v])) for v in graph.vertices]
        self._expanded: Dict[int, int] = {}
        self._fibers: Optional[List[Tuple[int, ...]]] = None
        self._class_ids: Optional[np.ndarray] = None
        self._win_bound: Dict[int, int] = {}
        self._fail_depth: Dict[int, int] = {}
        self._witness: Dict[int, int] = {}
        self._losing: Optional[FrozenSet[int]] = None
        self._last: Optional[SolveReport] = None
        self._reset_counters()

    """
    * Properties
    """

    @property
    def probes(self) -> List[Tuple[int, ...]]:
        """list: Every probe, as vertex tuples in lexicographic order."""
        return self._probes

    @property
    def last_report(self) -> Optional[SolveReport]:
        return self._last

    """
    * Private Methods
    """

    def _reset_counters(self):
        self._evaluations = 0
        self._next_clock_check = CLOCK_CHECK_INTERVAL
        self._started = time.monotonic()
        self._seen = set()

    def _prepare(self):
        if self._fibers is not None:
            return
        dist = self.distances.dist
        fibers = []
        class_ids = np.zeros((len(self._probes), self.graph.vertex_count), dtype=np.int32)
        for index, probe in enumerate(self._probes):
            _, inverse = np.unique(dist[:, probe], axis=0, return_inverse=True)
            inverse = np.asarray(inverse).reshape(-1)
            class_ids[index] = inverse
            masks = [0] * (int(inverse.max()) + 1)
            for vertex, class_id in enumerate(inverse.tolist()):
                masks[class_id] |= 1 << vertex
            fibers.append(tuple(masks))
        self._fibers = fibers
        self._class_ids = class_ids

    def _tick(self, count: int = 1):
        self._evaluations += count
        if self._evaluations > self.budget.max_evaluations:
            raise _BudgetTripped(f"evaluation budget of {self.budget.max_evaluations} exhausted")
        if self._evaluations >= self._next_clock_check:
            self._next_clock_check = self._evaluations + CLOCK_CHECK_INTERVAL
            if time.monotonic() - self._started > self.budget.time_limit:
                raise _BudgetTripped(f"time limit of {self.budget.time_limit}s exhausted")

    def _touch(self, state: int):
        self._seen.add(state)
        if len(self._seen) > self.budget.max_states:
            raise _BudgetTripped(f"state budget of {self.budget.max_states} exhausted")

    def _expand(self, state: int) -> int:
        expanded = self._expanded.get(state)
        if expanded is None:
            expanded = 0
            for vertex in _bitset.members(state):
                expanded |= self._neighbourhoods[vertex]
            self._expanded[state] = expanded
        return expanded

    def _first_resolving(self, state: int) -> Optional[int]:
        """The index of the first probe giving every vertex of ``state`` its own class."""
        self._tick(len(self._probes))
        ids = np.sort(self._class_ids[:, list(_bitset.members(state))], axis=1)
        resolved = np.all(np.diff(ids, axis=1) != 0, axis=1)
        if not resolved.any():
            return None
        return int(np.argmax(resolved))

    def _successors(self, state: int, index: int) -> Optional[List[int]]:
        """``N[T]`` for every non-singleton class ``T``, or ``None`` when the probe is dominated."""
        successors = []
        for fiber in self._fibers[index]:
            part = state & fiber
            if _bitset.has_two(part):
                expanded = self._expand(part)
                if _bitset.is_subset(state, expanded):
                    return None
                successors.append(expanded)
        return successors

    def _search(self, state: int, depth: int) -> bool:
        """Whether the Cop locates the Robber from ``state`` within ``depth`` probes."""
        if not _bitset.has_two(state):
            return True
        bound = self._win_bound.get(state)
        if bound is not None and bound <= depth:
            return True
        if self._fail_depth.get(state, 0) >= depth:
            return False
        self._touch(state)
        first = self._first_resolving(state)
        if first is not None:
            self._win_bound[state] = 1
            self._witness[state] = first
            return True
        if depth >= 2:
            for index in range(len(self._probes)):
                self._tick()
                successors = self._successors(state, index)
                if not successors:
                    continue
                if all(self._search(successor, depth - 1) for successor in sorted(set(successors))):
                    self._win_bound[state] = depth
                    self._witness[state] = index
                    return True
        self._fail_depth[state] = max(depth, self._fail_depth.get(state, 0))
        return False

    def _fixed_point(self, root: int) -> SolveReport:
        ids = {root: 0}
        masks = [root]
        options: List[List[Tuple[int, Tuple[int, ...]]]] = []
        ranks: List[Optional[int]] = []
        witnesses: List[Optional[int]] = []
        position = 0
        while position < len(masks):
            state = masks[position]
            position += 1
            self._touch(state)
            first = self._first_resolving(state)
            ranks.append(None if first is None else 1)
            witnesses.append(first)
            state_options = []
            if first is None:
                distinct = set()
                for index in range(len(self._probes)):
                    self._tick()
                    successors = self._successors(state, index)
                    if successors is None:
                        continue
                    key = tuple(sorted(set(successors)))
                    if key in distinct:
                        continue
                    distinct.add(key)
                    targets = []
                    for successor in key:
                        if successor not in ids:
                            ids[successor] = len(masks)
                            masks.append(successor)
                        targets.append(ids[successor])
                    state_options.append((index, tuple(targets)))
            options.append(state_options)
        self._logger.debug(f"{self}: explored {len(masks)} states for k={self.k}.")

        rank = 1
        while ranks[0] is None:
            rank += 1
            progressed = False
            for state_id, state_options in enumerate(options):
                if ranks[state_id] is not None:
                    continue
                self._tick(len(state_options))
                for index, targets in state_options:
                    if all(ranks[t] is not None and ranks[t] < rank for t in targets):
                        ranks[state_id] = rank
                        witnesses[state_id] = index
                        progressed = True
                        break
            self._logger.debug(f"{self}: rank sweep {rank} labelled new states: {progressed}.")
            if not progressed:
                break

        for mask, state_rank, witness in zip(masks, ranks, witnesses):
            if state_rank is not None and state_rank < self._win_bound.get(mask, state_rank + 1):
                self._win_bound[mask] = state_rank
                self._witness[mask] = witness
        if ranks[0] is None:
            self._losing = frozenset(mask for mask, state_rank in zip(masks, ranks) if state_rank is None)
            return SolveReport(Outcome.RobberWins, self.k, None, len(masks), None, self._evaluations)
        return SolveReport(
            Outcome.CopWins, self.k, ranks[0], len(masks), Probe(self._probes[witnesses[0]]), self._evaluations
        )

    """
    * Public Methods
    """

    def expansions(self, state: int, index: int) -> List[int]:
        """``N[T]`` for every non-singleton class ``T`` of ``state`` under probe ``index``."""
        self._prepare()
        return [self._expand(state & fiber) for fiber in self._fibers[index] if _bitset.has_two(state & fiber)]

    def solve(self, start: Optional[Iterable[int]] = None) -> SolveReport:
        """Decide the game from ``start`` (the whole vertex set by default).

        Returns:
            A ``SolveReport``; exhausted budgets give ``Outcome.BudgetExceeded``.

        """
        root = self._full if start is None else _bitset.mask_of(start)
        if not root:
            raise ParameterError("Cannot solve from an empty knowledge state.")
        self._reset_counters()
        if not _bitset.has_two(root):
            self._last = SolveReport(Outcome.CopWins, self.k, 0, 1, None, 0)
            return self._last
        self._prepare()
        try:
            for depth in range(1, self.budget.search_depth + 1):
                self._logger.debug(f"{self}: iterative search at depth {depth}.")
                if self._search(root, depth):
                    self._last = SolveReport(
                        Outcome.CopWins,
                        self.k,
                        depth,
                        len(self._seen),
                        Probe(self._probes[self._witness[root]]),
                        self._evaluations,
                    )
                    return self._last
            self._last = self._fixed_point(root)
        except _BudgetTripped as reason:
            self._logger.debug(f"{self}: {reason}.")
            self._last = SolveReport(Outcome.BudgetExceeded, self.k, None, len(self._seen), None, self._evaluations)
        return self._last

    def winning_probe(self, state: Iterable[int]) -> Optional[Probe]:
        """The witness probe of a winning state, solving from it when it was not seen before."""
        mask = _bitset.mask_of(state)
        if not _bitset.has_two(mask):
            return None
        if mask not in self._witness:
            losing, last = self._losing, self._last
            try:
                report = self.solve(KnowledgeState(state))
            finally:
                self._losing, self._last = losing, last
            if report.outcome != Outcome.CopWins:
                return None
        return Probe(self._probes[self._witness[mask]])

    def certificate(self) -> SurvivalCertificate:
        """The states from which the Robber survives; solves first if needed.

        Raises:
            CertificateError: If the Cop wins or the budget ran out.

        """
        if self._losing is None:
            report = self.solve()
            if report.outcome != Outcome.RobberWins:
                raise CertificateError(
                    f"No survival certificate for {self.graph.name} with k={self.k}: {report.outcome.name}."
                )
        return SurvivalCertificate(self.graph, self.k, self._losing)
