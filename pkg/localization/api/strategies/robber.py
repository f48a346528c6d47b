"""Robber side: hideout families and the projection policy on products.

A hideout family is a set of vertex pairs such that, whatever ``k`` vertices the Cop probes, some
family pair inside the neighbourhood of the current pair shares a distance vector. Checking that
closure is ``verify_hideout_family``; this module only builds the families.
"""
# Import built-in modules
from itertools import combinations
from typing import List
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

# Import local modules
from localization.api import _bitset
from localization.api._core import GraphObject
from localization.api._solver import SurvivalCertificate
from localization.api.enumerations import Factor
from localization.api.enumerations import HideoutFamily
from localization.api.enumerations import ProbeType
from localization.api.errors import ArityError
from localization.api.errors import CertificateError
from localization.api.errors import InvalidProbeError
from localization.api.errors import NotAProductError
from localization.api.errors import ParameterError
from localization.api.errors import StrategyMismatchError
from localization.api.graph_core import Graph
from localization.api.graph_core import TorusLabels
from localization.api.graph_core import cartesian_product
from localization.api.graph_core import make_torus
from localization.api.localization_game import KnowledgeState
from localization.api.localization_game import PairFamily
from localization.api.localization_game import Probe
from localization.api.localization_game import partition_by_probe
from localization.api.localization_game import robber_expand
from localization.api.resolving import project_onto_factor


def robber_family_c3c3() -> PairFamily:
    """Every pair of C3 □ C3: no two probed vertices separate a whole closed neighbourhood there."""
    return PairFamily(combinations(range(9), 2))


def robber_family_c2pc4(p: int) -> PairFamily:
    """Diagonal pairs and vertical pairs at distance 2 of C_{2p} □ C4.

    Raises:
        ParameterError: If ``p < 2``.

    """
    if p < 2:
        raise ParameterError(f"The C_2p □ C4 family needs p >= 2, got {p}.")
    labels = TorusLabels(2 * p, 4)
    pairs = []
    for a in range(labels.m):
        for b in range(labels.n):
            corner = labels.vertex(a, b)
            pairs.append((corner, labels.vertex(a + 1, b + 1)))
            pairs.append((corner, labels.vertex(a + 1, b - 1)))
            pairs.append((corner, labels.vertex(a, b + 2)))
    return PairFamily(pairs, vertex_count=labels.m * labels.n)


def short_cycle_family(graph: Graph) -> PairFamily:
    """All pairs lying on a triangle or a 4-cycle of ``graph``.

    A single probed vertex never separates the closed neighbourhood of such a pair, so the family
    certifies that one cop does not suffice.

    Raises:
        ParameterError: If ``graph`` has neither triangles nor 4-cycles.

    """
    pairs: Set[Tuple[int, int]] = set()
    neighbours = [set(graph.neighbours(v)) for v in graph.vertices]
    for u, v in graph.edges:
        for w in neighbours[u] & neighbours[v]:
            pairs.update({(u, v), (min(u, w), max(u, w)), (min(v, w), max(v, w))})
    for a, c in combinations(graph.vertices, 2):
        for b, d in combinations(sorted(neighbours[a] & neighbours[c]), 2):
            pairs.update((min(x, y), max(x, y)) for x, y in combinations((a, b, c, d), 2))
    if not pairs:
        raise ParameterError(f"{graph.name} has no cycle of length 3 or 4.")
    return PairFamily(pairs, vertex_count=graph.vertex_count)


def make_hideout_family(graph: Graph, family: HideoutFamily, p: Optional[int] = None) -> PairFamily:
    """Build the pair family named by ``family`` for ``graph``.

    Raises:
        StrategyMismatchError: If a torus family is requested for a graph of another shape.

    """
    if family == HideoutFamily.C3C3:
        _require_shape(graph, 3, 3)
        return robber_family_c3c3()
    if family == HideoutFamily.C2pC4:
        if p is None:
            if graph.labels is None:
                raise StrategyMismatchError(f"{graph.name} carries no torus labeling.")
            p = graph.labels.m // 2
        _require_shape(graph, 2 * p, 4)
        return robber_family_c2pc4(p)
    if family == HideoutFamily.ShortCycle:
        return short_cycle_family(graph)
    return PairFamily(combinations(graph.vertices, 2), vertex_count=graph.vertex_count)


def _require_shape(graph: Graph, columns: int, rows: int):
    if graph.labels != TorusLabels(columns, rows) or graph.edges != make_torus(columns, rows).edges:
        raise StrategyMismatchError(f"Expected C{columns}□C{rows}, got {graph.name}.")


def probe_type(labels: TorusLabels, probe: Sequence[int]) -> ProbeType:
    """How a 2-probe of ``C_{2p} □ C4`` meets the rows: one row, adjacent rows or opposite rows.

    Raises:
        ArityError: If the probe does not have exactly two vertices.

    """
    if len(probe) != 2:
        raise ArityError(f"Probe types are defined for 2-probes, got {len(probe)} vertices.")
    (_, first), (_, second) = (labels.coordinates(v) for v in probe)
    return {0: ProbeType.SingleRow, 1: ProbeType.AdjacentRows}.get(
        labels.row_distance(first, second), ProbeType.OppositeRows
    )


class RobberProjectionPolicy(GraphObject):
    """A Robber on ``G □ H`` that plays a certified losing region of ``G`` inside one row.

    Each probe is projected onto ``G`` (and padded to ``k`` vertices); the Robber picks a class
    of its imagined ``G`` knowledge whose neighbourhood still contains a certified state and
    answers with the product class containing that class in its row.

    Args:
        product: ``G □ H`` built by ``cartesian_product``.
        certificate: A survival certificate for ``G``.
        row: The vertex of ``H`` the Robber never leaves.

    Raises:
        CertificateError: If the certificate is not closed.
        NotAProductError: If ``product`` is not a product over the certificate's graph.

    """

    def __init__(self, product: Graph, certificate: SurvivalCertificate, row: int = 0):
        super().__init__(product)
        labels = product.labels
        if labels is None or labels.m != certificate.graph.vertex_count:
            raise NotAProductError(f"{product.name} is not a product over {certificate.graph.name}.")
        if not 0 <= row < labels.n:
            raise ParameterError(f"Row {row} is outside the second factor of {product.name}.")
        self.certificate = certificate.validate()
        self.labels = labels
        self.row = row
        self.reset()

    def reset(self):
        full = _bitset.mask_of(self.certificate.graph.vertices)
        start = full if full in self.certificate.states else min(self.certificate.states)
        self.inner_state = KnowledgeState.from_mask(start)
        self.state = KnowledgeState(self.graph.vertices)
        self.position = self.labels.vertex(0, self.row)
        self.turns = 0

    def project(self, probe: Sequence[int]) -> Probe:
        """The projection of ``probe`` onto ``G``, padded with the smallest unused vertices."""
        inner = self.certificate.graph
        size = min(self.certificate.k, inner.vertex_count)
        projected = sorted(project_onto_factor(self.graph, probe, Factor.G))
        padding = [v for v in inner.vertices if v not in projected]
        return Probe(projected + padding[: size - len(projected)], vertex_count=inner.vertex_count)

    def respond(self, probe: Sequence[int]) -> KnowledgeState:
        """Answer ``probe`` with the Robber's class and move on.

        Raises:
            InvalidProbeError: If the probe has more than ``k`` vertices.
            CertificateError: If no class keeps the Robber inside the certificate.

        """
        probe = Probe(probe, vertex_count=self.graph.vertex_count)
        if len(probe) > self.certificate.k:
            raise InvalidProbeError(f"{self}: probe of {len(probe)} vertices against k={self.certificate.k}.")
        inner = self.certificate.graph
        choice = self._choose(partition_by_probe(inner.distances, self.inner_state, self.project(probe)))
        if choice is None:
            raise CertificateError(f"{self}: every class of {sorted(self.inner_state)} escapes the certificate.")
        chosen, certified = choice
        self.position = self.labels.vertex(min(chosen), self.row)
        answer = next(cls for cls in partition_by_probe(self.distances, self.state, probe) if self.position in cls)
        self.inner_state = KnowledgeState.from_mask(certified)
        self.state = robber_expand(self.graph, answer)
        self.turns += 1
        self._logger.debug(f"{self}: turn {self.turns} answers {sorted(answer)} at vertex {self.position}.")
        return answer

    def _choose(self, classes: List[KnowledgeState]):
        for cls in classes:
            if len(cls) < 2:
                continue
            region = robber_expand(self.certificate.graph, cls).mask
            for certified in sorted(self.certificate.states):
                if _bitset.is_subset(certified, region):
                    return cls, certified
        return None


def robber_projection_strategy(certificate: SurvivalCertificate, second: Graph, row: int = 0) -> RobberProjectionPolicy:
    """The Robber policy on ``certificate.graph □ second`` pinned to ``row``."""
    return RobberProjectionPolicy(cartesian_product(certificate.graph, second), certificate, row)
