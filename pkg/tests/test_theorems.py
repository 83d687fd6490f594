import math

import pytest

from app.core.exceptions import DomainError
from app.models import BoundDirection, INDEX_ALIASES, TheoremVariant, parse_index_name
from app.models.phi import general_randic, general_sumconn
from app.services.indices import index_arc_sum
from app.services.spectrum import degree_spectrum
from app.services.theorems import (
    bound_value,
    check_hypothesis,
    hypothesis_grid,
    hypothesis_profile,
    hypothesis_scan,
    minimal_n,
    refined_bound,
    theorem_statements,
    threshold_L,
    threshold_M,
)
from tests.strategies import SHIPPED_SPECS

T = TheoremVariant


class TestVariants:
    @pytest.mark.parametrize("raw, expected", [("1i", T.T1I), ("T2ii", T.T2II), ("3II", T.T3II)])
    def test_parse(self, raw, expected):
        assert TheoremVariant.parse(raw) == expected

    def test_direction(self):
        assert T.T1I.direction == BoundDirection.LOWER
        assert T.T3II.direction == BoundDirection.UPPER

    def test_grids(self):
        assert list(hypothesis_grid(T.T1I, 3)) == [(1, 1), (2, 2)]
        assert list(hypothesis_grid(T.T2I, 3)) == [(1, 1), (1, 2)]
        assert list(hypothesis_grid(T.T3II, 3)) == [(1, 2)]
        assert list(hypothesis_grid(T.T1I, 2)) == []


class TestThresholds:
    def test_harmonic_l(self):
        assert threshold_L(1, 1, 3, INDEX_ALIASES["harmonic"]) == pytest.approx(8 / 9)

    def test_harmonic_m(self):
        assert threshold_M(1, 1, 3, INDEX_ALIASES["harmonic"]) == pytest.approx(1.0)

    @pytest.mark.parametrize("spec", SHIPPED_SPECS, ids=lambda s: s.name)
    def test_excluded_pair_sits_on_its_threshold(self, spec):
        for n in range(2, 30):
            assert threshold_L(1, n - 1, n, spec) == spec.evaluate(1, n - 1)
            assert threshold_M(n - 1, n - 1, n, spec) == spec.evaluate(n - 1, n - 1)


class TestCheckHypothesis:
    def test_harmonic_star_regime(self):
        assert check_hypothesis(T.T1I, 10, INDEX_ALIASES["harmonic"]).holds

    def test_ga_complete_regime(self):
        assert check_hypothesis(T.T2II, 10, INDEX_ALIASES["ga"]).holds

    def test_ga_diagonal_identity_fails(self):
        report = check_hypothesis(T.T3II, 10, INDEX_ALIASES["ga"])
        assert report.diagonal_ok is False
        assert not report.holds

    def test_harmonic_diagonal_identity(self):
        report = check_hypothesis(T.T3II, 10, INDEX_ALIASES["harmonic"])
        assert report.diagonal_ok is True
        assert report.holds

    def test_equality_point_is_a_violation(self):
        # M(1,1) = phi(1,1) for harmonic at n = 4
        report = check_hypothesis(T.T2II, 4, INDEX_ALIASES["harmonic"])
        assert not report.holds
        assert (report.violations[0].i, report.violations[0].j) == (1, 1)

    def test_n_below_two(self):
        with pytest.raises(DomainError):
            check_hypothesis(T.T1I, 1, INDEX_ALIASES["harmonic"])


class TestBoundValues:
    def test_harmonic_star(self):
        assert bound_value(T.T1I, 4, INDEX_ALIASES["harmonic"]) == pytest.approx(0.75)

    def test_ga_complete(self):
        assert bound_value(T.T2II, 4, INDEX_ALIASES["ga"]) == pytest.approx(6.0)

    def test_modified_zagreb_single_arc(self):
        assert bound_value(T.T2I, 2, INDEX_ALIASES["mzagreb2"]) == pytest.approx(0.5)

    @pytest.mark.parametrize("spec", SHIPPED_SPECS, ids=lambda s: s.name)
    def test_refined_bound_reduces_to_plain_bound(self, spec):
        for n in range(2, 9):
            assert refined_bound(T.T1I, n, n, spec) == pytest.approx(bound_value(T.T1I, n, spec))
            assert refined_bound(T.T1II, n, 0, spec) == pytest.approx(bound_value(T.T1II, n, spec))
            assert refined_bound(T.T2I, n, n, spec) == pytest.approx(bound_value(T.T2I, n, spec))
            assert refined_bound(T.T3II, n, 0, spec) == pytest.approx(bound_value(T.T3II, n, spec))

    def test_refined_bounds_hold_on_corpus(self, corpus):
        spec = INDEX_ALIASES["harmonic"]
        for digraph in corpus:
            n = digraph.n
            if n < 3:
                continue
            value = index_arc_sum(digraph, spec)
            n0 = degree_spectrum(digraph).n0
            assert value >= refined_bound(T.T1I, n, n0, spec) - 1e-9
            assert value <= refined_bound(T.T3II, n, n0, spec) + 1e-9

    def test_refined_n0_range(self):
        with pytest.raises(DomainError):
            refined_bound(T.T1I, 4, 9, INDEX_ALIASES["harmonic"])


class TestMinimalN:
    @pytest.mark.parametrize("spec, expected", [
        (general_sumconn(-0.5), 6),
        (general_sumconn(-1.0), 3),
        (INDEX_ALIASES["harmonic"], 3),
    ], ids=lambda v: getattr(v, "name", str(v)))
    def test_star_regime(self, spec, expected):
        assert minimal_n(T.T1I, spec, 50) == expected

    def test_sumconn_half_fails_below_six(self):
        spec = general_sumconn(-0.5)
        assert [n for n in range(3, 6) if check_hypothesis(T.T1I, n, spec).holds] == []

    def test_ga_never_meets_diagonal_identity(self):
        scan = hypothesis_scan(T.T3II, INDEX_ALIASES["ga"], 50)
        assert scan.minimal_n is None
        assert scan.reason == "diagonal condition fails"

    def test_scan_reports_persistence(self):
        scan = hypothesis_scan(T.T1I, INDEX_ALIASES["harmonic"], 30)
        assert scan.minimal_n == 3
        assert scan.holds_through_n_max
        assert scan.failing_after_minimal == []

    def test_profile(self):
        assert hypothesis_profile(T.T1I, general_sumconn(-0.5), 10, n_min=3) == [6, 7, 8, 9, 10]

    def test_n_max_too_small(self):
        with pytest.raises(DomainError):
            minimal_n(T.T1I, INDEX_ALIASES["harmonic"], 1)


class TestTheoremStatements:
    def test_harmonic(self):
        statements = theorem_statements(4, INDEX_ALIASES["harmonic"])
        assert [s.id for s in statements] == ["THM1i", "THM3ii"]
        assert statements[0].bound_value == pytest.approx(0.75)
        assert statements[1].bound_value == pytest.approx(2.0)

    def test_single_arc_bound_not_claimed_tight_above_two(self):
        statements = {s.id: s for s in theorem_statements(3, INDEX_ALIASES["mzagreb2"])}
        assert "THM2i" in statements
        assert statements["THM2i"].tight_claimed is False

    def test_zero_anchor_not_claimed_tight(self):
        for statement in theorem_statements(2, INDEX_ALIASES["abc"]):
            assert statement.tight_claimed is False

    def test_randic_star_bound(self):
        statements = {s.id: s for s in theorem_statements(3, general_randic(-0.5))}
        assert statements["THM1i"].bound_value == pytest.approx(math.sqrt(2) / 2)
