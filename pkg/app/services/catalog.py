"""
Catalog of corollary bounds for the named index families
"""
from functools import lru_cache
from typing import List, Optional
import math

import structlog

from app.core.config import IDENTITY_TOLERANCE, settings
from app.core.exceptions import DomainError
from app.models import (
    BoundDirection,
    BoundStatement,
    EqualityClass,
    INDEX_ALIASES,
    PhiFamily,
    PhiSpec,
    TheoremVariant,
)
from app.models.phi import general_randic, general_sumconn
from app.services.theorems import check_hypothesis, minimal_n

logger = structlog.get_logger()

LOWER = BoundDirection.LOWER
UPPER = BoundDirection.UPPER


def _is(alpha: float, value: float) -> bool:
    return math.isclose(alpha, value, rel_tol=0.0, abs_tol=IDENTITY_TOLERANCE)


@lru_cache(maxsize=256)
def _empirical_threshold(spec: PhiSpec, n_max: int) -> Optional[int]:
    return minimal_n(TheoremVariant.T1I, spec, n_max)


def _statement(
    statement_id: str,
    direction: BoundDirection,
    spec: PhiSpec,
    n: int,
    value: float,
    applicability: str,
    equality_class: EqualityClass,
    hypothesis: TheoremVariant,
    **extra
) -> BoundStatement:
    return BoundStatement(
        id=statement_id,
        direction=direction,
        spec=spec,
        n=n,
        bound_value=value,
        applicability=applicability,
        equality_class=equality_class,
        hypothesis=hypothesis,
        **extra
    )


def _randic(n: int, spec: PhiSpec, n_max: int) -> List[BoundStatement]:
    alpha = spec.alpha
    out = []
    if alpha > -0.5 and not _is(alpha, -0.5):
        out.append(_statement(
            "COR4a", UPPER, spec, n, 0.5 * n * (n - 1) ** (2 * alpha + 1),
            "alpha > -1/2", EqualityClass.SYM_COMPLETE, TheoremVariant.T2II,
        ))
    if _is(alpha, -0.5):
        out.append(_statement(
            "COR4b", UPPER, spec, n, n / 2,
            "alpha = -1/2", EqualityClass.COND7, TheoremVariant.T3II,
        ))
    if alpha <= -1 or _is(alpha, -1):
        # a minimum: it rests on the single-arc lower bound, strict for n >= 3
        out.append(_statement(
            "COR5", LOWER, spec, n, 0.25 * n * (n - 1) ** (2 * alpha + 1),
            "alpha <= -1; attained only at n = 2", EqualityClass.SINGLE_ARC, TheoremVariant.T2I,
            tight_claimed=n == 2,
        ))
    if _is(alpha, -0.5) and n >= 3:
        out.append(_statement(
            "COR6a", LOWER, spec, n, 0.5 * math.sqrt(n - 1),
            "alpha = -1/2, n >= 3", EqualityClass.STAR_ORIENTATIONS, TheoremVariant.T1I,
        ))
    if -0.5 < alpha < 0 and not _is(alpha, -0.5):
        threshold = _empirical_threshold(spec, n_max)
        if threshold is not None and n >= threshold:
            out.append(_statement(
                "COR6b", LOWER, spec, n, 0.5 * (n - 1) ** (alpha + 1),
                f"-1/2 < alpha < 0, n >= {threshold} (scanned up to {n_max})",
                EqualityClass.STAR_ORIENTATIONS, TheoremVariant.T1I,
                conditional=True, minimal_n=threshold,
            ))
    return out


def _sumconn(n: int, spec: PhiSpec, n_max: int) -> List[BoundStatement]:
    alpha = spec.alpha
    out = []
    if alpha > -0.5 and not _is(alpha, -0.5):
        out.append(_statement(
            "COR7a", UPPER, spec, n, 2 ** (alpha - 1) * n * (n - 1) ** (alpha + 1),
            "alpha > -1/2", EqualityClass.SYM_COMPLETE, TheoremVariant.T2II,
        ))
    if _is(alpha, -1):
        out.append(_statement(
            "COR7b", UPPER, spec, n, n / 4,
            "alpha = -1", EqualityClass.COND7, TheoremVariant.T3II,
        ))
    if (-1 <= alpha < 0) or _is(alpha, -1):
        stated = (alpha <= -0.5 or _is(alpha, -0.5)) and n >= 6
        threshold = _empirical_threshold(spec, n_max)
        if stated or (threshold is not None and n >= threshold):
            note = "-1 <= alpha <= -1/2, n >= 6"
            if not stated:
                note = f"-1 <= alpha < 0, n >= {threshold} (scanned up to {n_max})"
            out.append(_statement(
                "COR8", LOWER, spec, n, 0.5 * (n - 1) * n ** alpha,
                note, EqualityClass.STAR_ORIENTATIONS, TheoremVariant.T1I,
                conditional=not stated, minimal_n=threshold,
            ))
    return out


def _ga(n: int, spec: PhiSpec) -> List[BoundStatement]:
    out = [
        _statement(
            "COR9max", UPPER, spec, n, 0.5 * n * (n - 1),
            "all n >= 2", EqualityClass.SYM_COMPLETE, TheoremVariant.T2II,
        ),
    ]
    # the star bound is false from n = 4 on (two disjoint arcs give 1.0 at n = 4)
    star_regime = check_hypothesis(TheoremVariant.T1I, n, spec)
    if star_regime.holds:
        out.append(_statement(
            "COR9min", LOWER, spec, n, (n - 1) ** 1.5 / n,
            f"star-regime hypothesis holds at n={n}",
            EqualityClass.STAR_ORIENTATIONS, TheoremVariant.T1I,
        ))
    else:
        logger.debug(
            "Star bound withheld",
            n=n,
            index=spec.name,
            violations=len(star_regime.violations),
        )
    return out


def _abc(n: int, spec: PhiSpec) -> List[BoundStatement]:
    if n < 3:
        # phi(1,1) = 0 makes every digraph on two vertices extremal
        return []
    return [
        _statement(
            "COR10", UPPER, spec, n, 0.5 * n * math.sqrt(2 * n - 4),
            "n >= 3", EqualityClass.SYM_COMPLETE, TheoremVariant.T2II,
        ),
    ]


def _harmonic(n: int, spec: PhiSpec) -> List[BoundStatement]:
    return [
        _statement(
            "COR11max", UPPER, spec, n, n / 2,
            "all n >= 2", EqualityClass.COND7, TheoremVariant.T3II,
        ),
        _statement(
            "COR11min", LOWER, spec, n, (n - 1) / n,
            "all n >= 2", EqualityClass.STAR_ORIENTATIONS, TheoremVariant.T1I,
        ),
    ]


def corollary_catalog(n: int, spec: PhiSpec, n_max: Optional[int] = None) -> List[BoundStatement]:
    """Corollary bounds applicable to the index at n"""
    if n < 2:
        raise DomainError(f"corollaries are stated for n >= 2, got n={n}")
    n_max = settings.HYPOTHESIS_N_MAX if n_max is None else n_max
    if spec.family == PhiFamily.GENERAL_RANDIC:
        statements = _randic(n, spec, n_max)
    elif spec.family == PhiFamily.GENERAL_SUMCONN:
        statements = _sumconn(n, spec, n_max)
    elif spec.family == PhiFamily.GA:
        statements = _ga(n, spec)
    elif spec.family == PhiFamily.ABC:
        statements = _abc(n, spec)
    else:
        statements = _harmonic(n, spec)
    logger.debug("Corollary catalog", n=n, index=spec.name, statements=[s.id for s in statements])
    return statements


def corollary_catalog_for_alpha(n: int, alpha: Optional[float] = None, n_max: Optional[int] = None) -> List[BoundStatement]:
    """Catalog over all five families; the general families use alpha when given"""
    specs = [INDEX_ALIASES["ga"], INDEX_ALIASES["abc"], INDEX_ALIASES["harmonic"]]
    if alpha is not None:
        specs = [general_randic(alpha), general_sumconn(alpha)] + specs
    return [s for spec in specs for s in corollary_catalog(n, spec, n_max)]
