# Import third-party modules
import pytest

# Import local modules
from localization.api import KnowledgeState
from localization.api import PairFamily
from localization.api import Probe
from localization.api import SafeSetForm
from localization.api import TorusLabels
from localization.api import cop_wins
from localization.api import graph_from_tag
from localization.api import is_cop_house
from localization.api import is_resolving_set
from localization.api import localization_number
from localization.api import make_complete
from localization.api import make_cycle
from localization.api import make_path
from localization.api import partition_by_probe
from localization.api import robber_expand
from localization.api import safe_houses
from localization.api import safe_sets
from localization.api import second_difference
from localization.api import verify_hideout_family
from localization.api.enumerations import Outcome
from localization.api.errors import ArityError
from localization.api.errors import DegeneratePairError
from localization.api.errors import GraphFormatError
from localization.api.errors import InvalidProbeError
from localization.api.errors import ParameterError


class TestProbe:
    def test_order_is_kept(self):
        assert list(Probe([3, 1])) == [3, 1]
        assert Probe([3, 1]).k == 2

    @pytest.mark.parametrize("vertices", [[], [1, 1]])
    def test_invalid(self, vertices):
        with pytest.raises(InvalidProbeError):
            Probe(vertices)

    def test_out_of_range(self):
        with pytest.raises(InvalidProbeError):
            Probe([0, 5], vertex_count=5)


def test_knowledge_state_mask():
    state = KnowledgeState.from_mask(0b10101)
    assert state == {0, 2, 4}
    assert state.mask == 0b10101
    assert state.sorted() == (0, 2, 4)
    assert not state.is_located
    assert KnowledgeState([3]).is_located


class TestPartition:
    # pylint: disable=attribute-defined-outside-init
    @pytest.fixture(autouse=True)
    def setup(self, torus):
        self.graph = torus(5, 5)
        self.labels = self.graph.labels
        self.probe = [self.labels.vertex(2, 4), self.labels.vertex(2, 2)]
        yield

    def test_classes(self):
        classes = partition_by_probe(self.graph.distances, self.graph.vertices, self.probe)
        assert len(classes) == 15
        assert sum(len(cls) == 2 for cls in classes) == 10
        for cls in classes:
            if len(cls) == 1:
                assert self.labels.coordinates(next(iter(cls)))[0] == 2
            else:
                (i, j), (other_i, other_j) = sorted(self.labels.coordinates(v) for v in cls)
                assert (other_i, other_j) == (4 - i, j)

    def test_classes_are_ordered_by_distance_vector(self):
        classes = partition_by_probe(self.graph.distances, self.graph.vertices, self.probe)
        assert classes[0] == {self.labels.vertex(2, 4)}

    def test_singleton_state(self):
        assert partition_by_probe(self.graph.distances, [7], self.probe) == [{7}]

    def test_probe_covering_the_state(self):
        classes = partition_by_probe(self.graph.distances, self.probe, self.probe)
        assert all(len(cls) == 1 for cls in classes)

    def test_empty_state(self):
        with pytest.raises(ParameterError):
            partition_by_probe(self.graph.distances, [], self.probe)

    def test_probe_out_of_range(self):
        with pytest.raises(InvalidProbeError):
            partition_by_probe(self.graph.distances, [0, 1], [25])


class TestRobberExpand:
    def test_adjacent_pair_on_c3c3(self, torus):
        graph = torus(3, 3)
        assert len(robber_expand(graph, [0, 1])) >= 5

    def test_whole_vertex_set(self, c5):
        assert robber_expand(c5, c5.vertices) == set(c5.vertices)

    def test_single_vertex_on_torus(self, torus):
        assert len(robber_expand(torus(5, 4), [6])) == 5


class TestSecondDifference:
    # pylint: disable=attribute-defined-outside-init
    @pytest.fixture(autouse=True)
    def setup(self, torus):
        self.graph = torus(7, 6)
        self.labels = self.graph.labels
        self.probe = [self.labels.vertex(3, 5), self.labels.vertex(3, 2)]
        yield

    def test_corner(self):
        assert second_difference(self.graph.distances, self.probe, self.labels.vertex(0, 0)) == 1

    def test_equidistant_vertex(self, c5):
        assert second_difference(c5.distances, [1, 4], 0) == 0

    @pytest.mark.parametrize("p, q", [(1, 2), (2, 3), (3, 3)])
    def test_closed_form(self, torus, p, q):
        graph = torus(2 * p + 1, 2 * q)
        labels = graph.labels
        probe = [labels.vertex(p, 2 * q - 1), labels.vertex(p, q - 1)]
        for vertex in graph.vertices:
            _, j = labels.coordinates(vertex)
            assert second_difference(graph.distances, probe, vertex) == 2 * abs(q - 1 - j) - q

    def test_needs_two_vertices(self):
        with pytest.raises(ArityError):
            second_difference(self.graph.distances, [0], 3)


class TestSafeSets:
    # pylint: disable=attribute-defined-outside-init
    @pytest.fixture(autouse=True)
    def setup(self, torus):
        self.p, self.q = 3, 3
        self.graph = torus(2 * self.p + 1, 2 * self.q)
        self.labels = self.graph.labels
        self.probe = [self.labels.vertex(self.p, 2 * self.q - 1), self.labels.vertex(self.p, self.q - 1)]
        yield

    def expected_safe_set(self, vertex):
        i, j = self.labels.coordinates(vertex)
        mirror_i, mirror_j = 2 * self.p - i, 2 * self.q - 2 - j
        return {
            self.labels.vertex(i, j),
            self.labels.vertex(mirror_i, j),
            self.labels.vertex(i, mirror_j),
            self.labels.vertex(mirror_i, mirror_j),
        }

    def test_closed_form(self):
        sets = safe_sets(self.graph.distances, self.probe)
        assert sets
        for safe_set in sets:
            assert safe_set == self.expected_safe_set(min(safe_set))

    def test_safe_sets_lie_in_one_house(self):
        houses = safe_houses(self.graph.distances, self.probe)
        for safe_set in safe_sets(self.graph.distances, self.probe):
            assert sum(safe_set <= house for house in houses.values()) == 1

    def test_houses_are_at_most_two_rows(self):
        for house in safe_houses(self.graph.distances, self.probe).values():
            rows = {self.labels.coordinates(v)[1] for v in house}
            assert len(rows) <= 2
            assert len(house) == len(rows) * self.labels.m

    def test_houses_are_keyed_in_order(self):
        keys = list(safe_houses(self.graph.distances, self.probe))
        assert keys == sorted(keys)

    def test_resolving_probe_has_no_safe_sets(self, c5):
        assert safe_sets(c5.distances, [0, 1]) == []

    def test_cop_house(self):
        region = [self.labels.vertex(i, j) for i in range(self.p + 1) for j in range(self.q - 1, 2 * self.q)]
        assert is_cop_house(self.graph.distances, region, self.probe)

    def test_translated_cop_house(self):
        shift = (2, 1)
        region = [
            self.labels.vertex(i + shift[0], j + shift[1])
            for i in range(self.p + 1)
            for j in range(self.q - 1, 2 * self.q)
        ]
        probe = [
            self.labels.vertex(self.p + shift[0], 2 * self.q - 1 + shift[1]),
            self.labels.vertex(self.p + shift[0], self.q - 1 + shift[1]),
        ]
        assert is_cop_house(self.graph.distances, region, probe)

    def test_region_with_a_safe_pair(self):
        region = [self.labels.vertex(0, 0), self.labels.vertex(6, 0)]
        assert not is_cop_house(self.graph.distances, region, self.probe)


class TestSafeSetForm:
    # pylint: disable=attribute-defined-outside-init
    @pytest.fixture(autouse=True)
    def setup(self):
        self.labels = TorusLabels(7, 6)
        yield

    def test_fit_rectangle(self):
        vertices = [self.labels.vertex(i, j) for i in (1, 3) for j in (1, 3)]
        assert SafeSetForm.fit(self.labels, vertices) == SafeSetForm(1, 1, 2, 2)

    def test_fit_wraps(self):
        vertices = [self.labels.vertex(0, 0), self.labels.vertex(6, 0)]
        assert SafeSetForm.fit(self.labels, vertices) == SafeSetForm(6, 0, 1, 0)

    def test_vertices(self):
        assert SafeSetForm(6, 0, 1, 0).vertices(self.labels) == {self.labels.vertex(0, 0), self.labels.vertex(6, 0)}

    def test_no_fit(self):
        vertices = [self.labels.vertex(i, 0) for i in range(3)]
        assert SafeSetForm.fit(self.labels, vertices) is None
        assert SafeSetForm.fit(self.labels, []) is None


class TestPairFamily:
    def test_pairs_are_normalized(self):
        family = PairFamily([(3, 1), [1, 3], (0, 2)])
        assert family.pairs == ((0, 2), (1, 3))
        assert (3, 1) in family
        assert len(family) == 2

    def test_json(self):
        family = PairFamily([(2, 0), (1, 3)])
        assert family.to_json() == "[[0, 2], [1, 3]]"
        assert PairFamily.from_json(family.to_json()) == family

    def test_degenerate_pair(self):
        with pytest.raises(DegeneratePairError):
            PairFamily([(1, 1)])

    def test_empty_family(self):
        with pytest.raises(ParameterError):
            PairFamily([])

    def test_vertex_range(self):
        with pytest.raises(ParameterError):
            PairFamily([(0, 9)], vertex_count=9)

    @pytest.mark.parametrize("text", ["[[0, 1", '{"pairs": []}', "[[0, 1, 2]]", "[[0, true]]"])
    def test_malformed_json(self, text):
        with pytest.raises(GraphFormatError, match="pairs"):
            PairFamily.from_json(text)


@pytest.mark.parametrize("p, q", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_safe_sets_closed_form(torus, p, q):
    graph = torus(2 * p + 1, 2 * q)
    labels = graph.labels
    probe = [labels.vertex(p, 2 * q - 1), labels.vertex(p, q - 1)]
    sets = safe_sets(graph.distances, probe)
    assert sets
    for safe_set in sets:
        i, j = labels.coordinates(min(safe_set))
        mirror_i, mirror_j = 2 * p - i, 2 * q - 2 - j
        assert safe_set == {
            labels.vertex(i, j),
            labels.vertex(mirror_i, j),
            labels.vertex(i, mirror_j),
            labels.vertex(mirror_i, mirror_j),
        }


class TestCopWins:
    @pytest.mark.parametrize(
        "tag, k, outcome",
        [
            ("C3xC3", 2, Outcome.RobberWins),
            ("C3xC3", 3, Outcome.CopWins),
            ("C7", 1, Outcome.CopWins),
            ("C6", 1, Outcome.RobberWins),
            ("C6", 2, Outcome.CopWins),
            ("K2,3", 2, Outcome.CopWins),
        ],
    )
    def test_outcomes(self, tag, k, outcome):
        report = cop_wins(graph_from_tag(tag), k)
        assert report.outcome == outcome
        assert (report.turns_to_win is not None) == (outcome == Outcome.CopWins)

    def test_resolving_probe_wins_in_one_turn(self, c5):
        report = cop_wins(c5, 2)
        assert report.turns_to_win == 1
        assert is_resolving_set(c5, report.witness)

    def test_single_vertex(self):
        report = cop_wins(make_path(1), 1)
        assert report.outcome == Outcome.CopWins
        assert report.turns_to_win == 0

    def test_more_cops_than_vertices(self):
        assert cop_wins(make_complete(3), 5).outcome == Outcome.CopWins

    def test_report_dict(self, c5):
        data = cop_wins(c5, 1).to_dict()
        assert data["outcome"] == "RobberWins"
        assert data["turns"] is None
        assert data["witness"] is None


class TestLocalizationNumber:
    @pytest.mark.parametrize("tag, expected", [("P7", 1), ("K4", 3), ("C4xC3", 2), ("C5", 2)])
    def test_values(self, tag, expected):
        graph = graph_from_tag(tag)
        result = localization_number(graph, graph.vertex_count - 1)
        assert result.outcome == Outcome.CopWins
        assert result.value == expected
        assert len(result.reports) == expected

    def test_not_within_k_max(self):
        result = localization_number(make_complete(4), 2)
        assert result.value is None
        assert result.outcome == Outcome.RobberWins
        assert result.to_dict()["zeta"] is None

    def test_k_max_must_be_positive(self, c5):
        with pytest.raises(ParameterError):
            localization_number(c5, 0)


class TestHideoutFamily:
    def test_all_pairs_on_c3c3(self, torus):
        graph = torus(3, 3)
        family = PairFamily((u, v) for u in graph.vertices for v in graph.vertices if u < v)
        assert verify_hideout_family(graph.distances, 2, family).certified

    def test_all_pairs_fail_on_c5c5(self, torus):
        graph = torus(5, 5)
        family = PairFamily((u, v) for u in graph.vertices for v in graph.vertices if u < v)
        verdict = verify_hideout_family(graph.distances, 2, family)
        assert not verdict.certified
        assert verdict.pair in family
        assert verdict.probe.k == 2
        assert verdict.to_dict()["counterexample"]["pair"] == list(verdict.pair)

    def test_cycle_survives_one_cop(self, c5):
        family = PairFamily((u, v) for u in c5.vertices for v in c5.vertices if u < v)
        verdict = verify_hideout_family(c5.distances, 1, family)
        assert verdict.certified
        assert verdict.probes_checked == 5

    def test_single_pair_is_not_a_hideout(self):
        graph = make_cycle(7)
        family = PairFamily([(0, 1)])
        assert not verify_hideout_family(graph.distances, 1, family).certified

    def test_cops_must_be_positive(self, c5):
        with pytest.raises(ParameterError):
            verify_hideout_family(c5.distances, 0, PairFamily([(0, 1)]))
