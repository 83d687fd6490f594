import math

import pytest

from app.core.exceptions import DomainError
from app.models import BoundDirection, EqualityClass, INDEX_ALIASES
from app.models.phi import general_randic, general_sumconn
from app.services.catalog import corollary_catalog, corollary_catalog_for_alpha


def by_id(statements):
    return {s.id: s for s in statements}


def test_harmonic_pair():
    statements = by_id(corollary_catalog(4, INDEX_ALIASES["harmonic"]))
    low, high = statements["COR11min"], statements["COR11max"]
    assert low.direction == BoundDirection.LOWER
    assert low.bound_value == pytest.approx(0.75)
    assert low.equality_class == EqualityClass.STAR_ORIENTATIONS
    assert high.direction == BoundDirection.UPPER
    assert high.bound_value == pytest.approx(2.0)
    assert high.equality_class == EqualityClass.COND7


def test_randic_half():
    statements = by_id(corollary_catalog(4, INDEX_ALIASES["randic"]))
    assert statements["COR6a"].bound_value == pytest.approx(math.sqrt(3) / 2)
    assert statements["COR4b"].bound_value == pytest.approx(2.0)
    assert statements["COR4b"].equality_class == EqualityClass.COND7
    assert "COR4a" not in statements


def test_abc():
    statement = by_id(corollary_catalog(4, INDEX_ALIASES["abc"]))["COR10"]
    assert statement.bound_value == pytest.approx(4.0)
    assert statement.equality_class == EqualityClass.SYM_COMPLETE


def test_abc_needs_three_vertices():
    assert corollary_catalog(2, INDEX_ALIASES["abc"]) == []


def test_ga():
    statements = by_id(corollary_catalog(4, INDEX_ALIASES["ga"]))
    assert statements["COR9max"].bound_value == pytest.approx(6.0)
    assert "COR9min" not in statements


def test_ga_star_bound_only_where_the_star_regime_holds():
    at_two = by_id(corollary_catalog(2, INDEX_ALIASES["ga"]))["COR9min"]
    assert at_two.bound_value == pytest.approx(0.5)
    assert at_two.applicability == "star-regime hypothesis holds at n=2"
    for n in (3, 4, 5):
        assert "COR9min" not in by_id(corollary_catalog(n, INDEX_ALIASES["ga"]))


def test_second_zagreb_upper():
    statement = by_id(corollary_catalog(4, INDEX_ALIASES["zagreb2"]))["COR4a"]
    assert statement.bound_value == pytest.approx(54.0)


def test_first_zagreb_upper():
    statement = by_id(corollary_catalog(3, INDEX_ALIASES["zagreb1"]))["COR7a"]
    assert statement.bound_value == pytest.approx(12.0)


def test_modified_zagreb_lower_bound_tight_only_on_two_vertices():
    at_two = by_id(corollary_catalog(2, INDEX_ALIASES["mzagreb2"]))["COR5"]
    at_three = by_id(corollary_catalog(3, INDEX_ALIASES["mzagreb2"]))["COR5"]
    assert at_two.direction == BoundDirection.LOWER
    assert at_two.bound_value == pytest.approx(0.5)
    assert at_two.tight_claimed
    assert at_three.bound_value == pytest.approx(0.375)
    assert not at_three.tight_claimed


def test_sumconn_half_star_bound_from_six_vertices():
    assert "COR8" not in by_id(corollary_catalog(5, INDEX_ALIASES["sumconn"]))
    statement = by_id(corollary_catalog(6, INDEX_ALIASES["sumconn"]))["COR8"]
    assert not statement.conditional
    assert statement.minimal_n == 6
    assert statement.bound_value == pytest.approx(2.5 / math.sqrt(6))


def test_sumconn_minus_one():
    statements = by_id(corollary_catalog(3, general_sumconn(-1.0)))
    assert statements["COR7b"].bound_value == pytest.approx(0.75)
    # below six vertices the star bound rests on the scanned threshold
    assert statements["COR8"].conditional
    assert statements["COR8"].minimal_n == 3


def test_conditional_randic_threshold():
    for n in (3, 10, 40):
        for statement in corollary_catalog(n, general_randic(-0.25), n_max=60):
            if statement.id == "COR6b":
                assert statement.conditional
                assert statement.minimal_n <= n


def test_for_alpha_covers_all_families():
    ids = {s.id for s in corollary_catalog_for_alpha(4, -0.5)}
    assert {"COR4b", "COR6a", "COR9max", "COR10", "COR11max", "COR11min"} <= ids


def test_for_alpha_without_alpha():
    ids = {s.id for s in corollary_catalog_for_alpha(4)}
    assert ids == {"COR9max", "COR10", "COR11max", "COR11min"}


def test_n_below_two():
    with pytest.raises(DomainError):
        corollary_catalog(1, INDEX_ALIASES["harmonic"])
