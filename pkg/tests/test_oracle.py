import itertools

import pytest

from app.core.config import settings
from app.core.exceptions import DomainError, NotApplicableError
from app.models import (
    Condition,
    Digraph,
    INDEX_ALIASES,
    SearchDirection,
    TheoremVariant,
    parse_index_name,
    slot_index,
)
from app.models.phi import general_randic, general_sumconn
from app.services.catalog import corollary_catalog
from app.services.families import star_orientations
from app.services.oracle import (
    canonical_mask,
    count_nonisolated,
    enumerate_nonisolated,
    expected_nonisolated_count,
    extremal_search,
    verify_bound,
)
from app.services.spectrum import classify_condition, has_isolated_vertex
from app.services.theorems import check_hypothesis, theorem_statements

MIN = SearchDirection.MIN
MAX = SearchDirection.MAX


def statement(n, name, statement_id):
    return next(s for s in corollary_catalog(n, parse_index_name(name)) if s.id == statement_id)


class TestEnumeration:
    @pytest.mark.parametrize("n, expected", [(2, 3), (3, 54), (4, 3861), (5, 1028700)])
    def test_closed_form(self, n, expected):
        assert expected_nonisolated_count(n) == expected

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_count_matches_closed_form(self, n):
        assert count_nonisolated(n) == expected_nonisolated_count(n)

    def test_count_five_vertices(self):
        assert count_nonisolated(5) == 1028700

    def test_stream_is_ascending_and_isolated_free(self):
        enumeration = enumerate_nonisolated(3)
        masks = list(enumeration.masks())
        assert len(masks) == enumeration.count == 54
        assert masks == sorted(masks)
        assert not any(has_isolated_vertex(d) for d in enumeration)

    def test_direct_filter_agrees(self):
        kept = [m for m in range(1 << 12) if not has_isolated_vertex(Digraph.from_mask(4, m))]
        assert kept == list(enumerate_nonisolated(4).masks())

    @pytest.mark.parametrize("n", [0, 1, 7])
    def test_out_of_range(self, n):
        with pytest.raises(DomainError):
            enumerate_nonisolated(n)

    def test_six_vertices_is_opt_in(self, harmonic):
        with pytest.raises(DomainError):
            extremal_search(6, harmonic, MIN)


class TestExtremalSearch:
    def test_harmonic_min_three_vertices(self, harmonic):
        report = extremal_search(3, harmonic, MIN)
        assert report.extremal_value == pytest.approx(2 / 3)
        assert report.attaining == [d.mask for d in star_orientations(3)]
        assert len(report.attaining) == 6
        assert report.enumerated_count == 54

    def test_ga_max_is_unique(self):
        report = extremal_search(4, INDEX_ALIASES["ga"], MAX)
        assert report.extremal_value == pytest.approx(6.0)
        assert report.attaining == [(1 << 12) - 1]

    def test_harmonic_max_is_the_diagonal_class(self, harmonic):
        report = extremal_search(4, harmonic, MAX)
        expected = sorted(d.mask for d in enumerate_nonisolated(4) if Condition.COND7 in classify_condition(d))
        assert report.extremal_value == pytest.approx(2.0)
        assert report.attaining == expected

    def test_two_vertices_modified_zagreb(self):
        report = extremal_search(2, INDEX_ALIASES["mzagreb2"], MIN)
        assert report.extremal_value == pytest.approx(0.5)
        assert report.attaining == [1 << slot_index(2, 0, 1), 1 << slot_index(2, 1, 0)]

    def test_dedup_gives_two_star_classes(self, harmonic):
        report = extremal_search(4, harmonic, MIN, dedup=True)
        assert len(report.attaining) == 8
        assert len(report.canonical_attaining) == 2

    def test_workers_and_blocks_do_not_change_the_report(self, harmonic, monkeypatch):
        baseline = extremal_search(4, harmonic, MAX, workers=1)
        monkeypatch.setattr(settings, "BLOCK_SIZE", 256)
        serial = extremal_search(4, harmonic, MAX, workers=1)
        parallel = extremal_search(4, harmonic, MAX, workers=3)
        assert serial == baseline
        assert parallel == baseline
        assert parallel.model_dump_json() == baseline.model_dump_json()

    @pytest.mark.parametrize("workers", [2, 4, 8])
    @pytest.mark.parametrize("direction", [MIN, MAX])
    def test_reports_identical_across_worker_counts(self, harmonic, monkeypatch, workers, direction):
        monkeypatch.setattr(settings, "BLOCK_SIZE", 256)
        baseline = extremal_search(4, harmonic, direction, workers=1)
        report = extremal_search(4, harmonic, direction, workers=workers)
        assert report.model_dump_json() == baseline.model_dump_json()

    def test_second_zagreb_max(self):
        report = extremal_search(4, INDEX_ALIASES["zagreb2"], MAX)
        assert report.extremal_value == 54.0
        assert report.attaining == [0xFFF]

    def test_ga_min_is_two_disjoint_arcs(self):
        report = extremal_search(4, INDEX_ALIASES["ga"], MIN)
        assert report.extremal_value == pytest.approx(1.0)
        assert len(report.attaining) == 12
        for mask in report.attaining:
            arcs = Digraph.from_mask(4, mask).arcs
            assert len(arcs) == 2
            assert len({v for arc in arcs for v in arc}) == 4
        # the star value sits strictly above the true minimum
        assert 3 ** 1.5 / 4 - report.extremal_value > 0.29

    def test_hex_encoding_in_json(self):
        report = extremal_search(4, INDEX_ALIASES["ga"], MAX)
        assert report.model_dump(mode="json")["attaining"] == ["0xfff"]


class TestCanonicalMask:
    def test_relabeling_invariance(self):
        mask = 0b000101100011
        n = 4
        arcs = [(u, v) for u, v in itertools.permutations(range(n), 2) if mask >> slot_index(n, u, v) & 1]
        for perm in itertools.permutations(range(n)):
            relabeled = sum(1 << slot_index(n, perm[u], perm[v]) for u, v in arcs)
            assert canonical_mask(n, relabeled) == canonical_mask(n, mask)

    def test_stars_collapse_by_direction(self):
        assert len({canonical_mask(5, d.mask) for d in star_orientations(5)}) == 2


class TestVerifyBound:
    def test_harmonic_star_bound(self):
        outcome = verify_bound(4, statement(4, "harmonic", "COR11min"))
        assert outcome.hypothesis_holds
        assert outcome.bound_respected
        assert outcome.tight
        assert outcome.equality_set_matches
        assert outcome.attaining_count == outcome.expected_count == 8
        assert outcome.consistent

    def test_harmonic_diagonal_bound(self):
        outcome = verify_bound(4, statement(4, "harmonic", "COR11max"))
        assert outcome.tight and outcome.equality_set_matches

    def test_modified_zagreb_strict_above_two_vertices(self):
        outcome = verify_bound(3, statement(3, "mzagreb2", "COR5"))
        assert outcome.bound_respected
        assert not outcome.tight
        assert outcome.observed_extremal == pytest.approx(0.5)
        assert outcome.consistent

    def test_modified_zagreb_tight_on_two_vertices(self):
        outcome = verify_bound(2, statement(2, "mzagreb2", "COR5"))
        assert outcome.tight and outcome.equality_set_matches

    def test_abc_unique_attainer(self):
        outcome = verify_bound(4, statement(4, "abc", "COR10"))
        assert outcome.tight
        assert outcome.attaining_count == 1
        assert outcome.equality_set_matches

    def test_randic_star_bound_three_vertices(self):
        outcome = verify_bound(3, statement(3, "randic", "COR6a"))
        assert outcome.observed_extremal == pytest.approx(2 ** 0.5 / 2)
        assert outcome.consistent

    def test_wrong_bound_is_caught(self):
        wrong = statement(4, "harmonic", "COR11min").model_copy(update={"bound_value": 0.8})
        outcome = verify_bound(4, wrong)
        assert not outcome.bound_respected
        assert outcome.counterexamples
        assert not outcome.consistent

    def test_statement_for_another_n(self):
        with pytest.raises(NotApplicableError):
            verify_bound(3, statement(4, "harmonic", "COR11min"))

    @pytest.mark.parametrize("n", [3, 4])
    @pytest.mark.parametrize("spec", [
        INDEX_ALIASES["harmonic"],
        INDEX_ALIASES["mzagreb2"],
        general_randic(-0.5),
        INDEX_ALIASES["ga"],
    ], ids=lambda s: s.name)
    def test_theorem_statements_agree_with_enumeration(self, n, spec):
        for stmt in theorem_statements(n, spec):
            assert verify_bound(n, stmt).consistent, stmt.id


class TestCorollaryValues:
    """Exhaustive extrema against the corollary closed forms"""

    @pytest.mark.parametrize("n", [3, 4, 5])
    @pytest.mark.parametrize("name, statement_id, expected", [
        ("harmonic", "COR11min", lambda n: (n - 1) / n),
        ("harmonic", "COR11max", lambda n: n / 2),
        ("randic", "COR6a", lambda n: 0.5 * (n - 1) ** 0.5),
        ("randic", "COR4b", lambda n: n / 2),
    ], ids=["harmonic-min", "harmonic-max", "randic-min", "randic-max"])
    def test_tight_with_stated_attainers(self, n, name, statement_id, expected):
        outcome = verify_bound(n, statement(n, name, statement_id))
        assert outcome.observed_extremal == pytest.approx(expected(n), abs=1e-9)
        assert outcome.tight
        assert outcome.equality_set_matches
        assert outcome.consistent

    @pytest.mark.parametrize("n", [3, 4, 5])
    @pytest.mark.parametrize("name", ["harmonic", "randic"])
    def test_minimum_attained_by_star_orientations(self, n, name):
        report = extremal_search(n, parse_index_name(name), MIN)
        assert report.attaining == [d.mask for d in star_orientations(n)]
        assert len(report.attaining) == 2 * n

    @pytest.mark.parametrize("n", [4, 5])
    def test_sumconn_minus_one(self, n):
        high = verify_bound(n, statement(n, "sumconn:-1", "COR7b"))
        low = verify_bound(n, statement(n, "sumconn:-1", "COR8"))
        assert high.observed_extremal == pytest.approx(n / 4, abs=1e-9)
        assert high.tight and high.equality_set_matches
        assert low.hypothesis_holds
        assert low.observed_extremal == pytest.approx(0.5 * (n - 1) / n, abs=1e-9)
        assert low.tight and low.equality_set_matches
        assert low.attaining_count == 2 * n

    def test_sumconn_minus_one_max_is_the_diagonal_class(self):
        report = extremal_search(4, general_sumconn(-1.0), MAX)
        expected = sorted(d.mask for d in enumerate_nonisolated(4) if Condition.COND7 in classify_condition(d))
        assert report.attaining == expected

    def test_abc_five_vertices(self):
        outcome = verify_bound(5, statement(5, "abc", "COR10"))
        assert outcome.observed_extremal == pytest.approx(2.5 * 6 ** 0.5, abs=1e-9)
        assert outcome.tight
        assert outcome.attaining_count == 1
        assert outcome.equality_set_matches

    def test_abc_five_vertices_unique_attainer(self):
        report = extremal_search(5, INDEX_ALIASES["abc"], MAX)
        assert report.attaining == [(1 << 20) - 1]

    def test_second_zagreb_upper_bound(self):
        outcome = verify_bound(4, statement(4, "zagreb2", "COR4a"))
        assert outcome.observed_extremal == 54.0
        assert outcome.tight and outcome.attaining_count == 1

    @pytest.mark.parametrize("n", [3, 4])
    def test_single_arc_bound_strict_above_two_vertices(self, n):
        outcome = verify_bound(n, statement(n, "mzagreb2", "COR5"))
        assert outcome.bound_respected
        assert not outcome.tight
        assert outcome.observed_extremal - outcome.statement.bound_value > 1e-9
        assert outcome.consistent

    def test_single_arc_bound_value_four_vertices(self):
        assert statement(4, "mzagreb2", "COR5").bound_value == pytest.approx(1 / 3)

    def test_ga_star_regime_fails_at_four_vertices(self):
        report = check_hypothesis(TheoremVariant.T1I, 4, INDEX_ALIASES["ga"])
        assert not report.holds
        assert (report.violations[0].i, report.violations[0].j) == (1, 1)

    def test_ga_star_bound_on_two_vertices(self):
        outcome = verify_bound(2, statement(2, "ga", "COR9min"))
        assert outcome.tight
        assert outcome.equality_set_matches
        assert outcome.consistent


class TestBoundSoundness:
    @pytest.mark.parametrize("n", [3, 4, 5])
    @pytest.mark.parametrize("alpha", [-1.0, -0.5, 1.0])
    @pytest.mark.parametrize("make_spec", [general_randic, general_sumconn], ids=["randic", "sumconn"])
    def test_catalog_bounds_hold(self, n, alpha, make_spec):
        spec = make_spec(alpha)
        for stmt in corollary_catalog(n, spec):
            if not check_hypothesis(stmt.hypothesis, n, spec).holds:
                continue
            outcome = verify_bound(n, stmt)
            assert outcome.bound_respected, stmt.id
            assert outcome.consistent, stmt.id


class TestVerifyDedup:
    def test_tight_outcome_lists_classes(self):
        outcome = verify_bound(4, statement(4, "harmonic", "COR11min"), dedup=True)
        assert outcome.attaining_count == 8
        assert len(outcome.canonical_attaining) == 2
        assert outcome.model_dump(mode="json")["canonical_attaining"][0].startswith("0x")

    def test_strict_outcome_has_no_classes(self):
        outcome = verify_bound(4, statement(4, "mzagreb2", "COR5"), dedup=True)
        assert outcome.canonical_attaining is None

    def test_off_by_default(self):
        assert verify_bound(4, statement(4, "harmonic", "COR11min")).canonical_attaining is None
