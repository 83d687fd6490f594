"""
Hypothesis grids and bound formulas of the three extremal theorems

The star regime (T1) compares phi(i,j) with L_ij = (n-1)/n (1/i + 1/j) phi(1,n-1)
on S1 = {i <= j} minus (1,n-1); the complete regime (T2) with
M_ij = (n-1)/2 (1/i + 1/j) phi(n-1,n-1) on S2 = {i <= j} minus (n-1,n-1); the
diagonal regime (T3) with M_ij on the off-diagonal pairs plus the diagonal
identity i phi(i,i) = (n-1) phi(n-1,n-1).
Variant i needs strict >, variant ii strict <.
"""
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import structlog

from app.core.config import RELATIVE_TOLERANCE, STRICT_TOLERANCE, settings
from app.core.exceptions import DomainError
from app.models import (
    BoundDirection,
    BoundStatement,
    HypothesisReport,
    HypothesisScan,
    PhiSpec,
    TheoremVariant,
    Violation,
)

logger = structlog.get_logger()


def _check_n(n: int) -> None:
    if n < 2:
        raise DomainError(f"theorems are stated for n >= 2, got n={n}")


def threshold_L(i: int, j: int, n: int, spec: PhiSpec) -> float:
    # rational coefficient first so L(1, n-1) == phi(1, n-1) exactly
    coefficient = Fraction(n - 1, n) * Fraction(i + j, i * j)
    return float(coefficient) * spec.evaluate(1, n - 1)


def threshold_M(i: int, j: int, n: int, spec: PhiSpec) -> float:
    coefficient = Fraction(n - 1, 2) * Fraction(i + j, i * j)
    return float(coefficient) * spec.evaluate(n - 1, n - 1)


def hypothesis_grid(theorem: TheoremVariant, n: int) -> Iterator[Tuple[int, int]]:
    """Index set S1, S2 or S3 (off-diagonal pairs taken once, i < j)"""
    for i in range(1, n):
        for j in range(i, n):
            if theorem.number == 1 and (i, j) == (1, n - 1):
                continue
            if theorem.number == 2 and (i, j) == (n - 1, n - 1):
                continue
            if theorem.number == 3 and i == j:
                continue
            yield i, j


def _diagonal_identity_holds(n: int, spec: PhiSpec) -> bool:
    target = (n - 1) * spec.evaluate(n - 1, n - 1)
    for i in range(1, n - 1):
        value = i * spec.evaluate(i, i)
        if abs(value - target) > RELATIVE_TOLERANCE * max(abs(value), abs(target)):
            return False
    return True


def check_hypothesis(theorem: TheoremVariant, n: int, spec: PhiSpec) -> HypothesisReport:
    """Scan the theorem's integer grid at n for points breaking the strict inequality"""
    _check_n(n)
    threshold = threshold_L if theorem.number == 1 else threshold_M
    lower = theorem.direction == BoundDirection.LOWER

    violations: List[Violation] = []
    for i, j in hypothesis_grid(theorem, n):
        phi = spec.evaluate(i, j)
        bound = threshold(i, j, n, spec)
        margin = phi - bound if lower else bound - phi
        if not margin > STRICT_TOLERANCE:
            violations.append(Violation(i=i, j=j, phi_value=phi, threshold_value=bound))

    diagonal_ok = _diagonal_identity_holds(n, spec) if theorem.number == 3 else None
    holds = not violations and diagonal_ok is not False
    return HypothesisReport(
        theorem=theorem,
        n=n,
        spec=spec,
        holds=holds,
        violations=violations,
        diagonal_ok=diagonal_ok,
    )


def bound_value(theorem: TheoremVariant, n: int, spec: PhiSpec) -> float:
    """Extremal value the theorem asserts when its hypothesis holds"""
    _check_n(n)
    if theorem == TheoremVariant.T1I:
        return (n - 1) / 2 * spec.evaluate(1, n - 1)
    if theorem == TheoremVariant.T1II:
        return (n - 1) * spec.evaluate(1, n - 1)
    if theorem in (TheoremVariant.T2I, TheoremVariant.T3I):
        return n * (n - 1) / 4 * spec.evaluate(n - 1, n - 1)
    return n * (n - 1) / 2 * spec.evaluate(n - 1, n - 1)


def anchor_value(theorem: TheoremVariant, n: int, spec: PhiSpec) -> float:
    """phi(1, n-1) for T1, phi(n-1, n-1) for T2 and T3"""
    if theorem.number == 1:
        return spec.evaluate(1, n - 1)
    return spec.evaluate(n - 1, n - 1)


def refined_bound(theorem: TheoremVariant, n: int, n0: int, spec: PhiSpec) -> float:
    """Bound depending on the number n0 of zero-degree roles

    Reduces to bound_value at n0 = n (variants i) and n0 = 0 (variants ii).
    """
    _check_n(n)
    if not 0 <= n0 <= 2 * n:
        raise DomainError(f"n0 must lie in 0..{2 * n}, got {n0}")
    if theorem.number == 1:
        return 0.5 * (2 * (n - 1) - (n - 1) / n * n0) * spec.evaluate(1, n - 1)
    return 0.25 * (2 * n - n0) * (n - 1) * spec.evaluate(n - 1, n - 1)


def hypothesis_profile(theorem: TheoremVariant, spec: PhiSpec, n_max: int, n_min: int = 2) -> List[int]:
    """Every n in n_min..n_max at which the hypothesis holds"""
    return [n for n in range(max(2, n_min), n_max + 1) if check_hypothesis(theorem, n, spec).holds]


def minimal_n(theorem: TheoremVariant, spec: PhiSpec, n_max: Optional[int] = None) -> Optional[int]:
    """Smallest n >= 3 at which the hypothesis holds

    n = 2 is skipped: every grid is empty there and the hypothesis holds
    vacuously.
    """
    n_max = settings.HYPOTHESIS_N_MAX if n_max is None else n_max
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    for n in range(3, n_max + 1):
        if check_hypothesis(theorem, n, spec).holds:
            return n
    return None


def hypothesis_scan(theorem: TheoremVariant, spec: PhiSpec, n_max: Optional[int] = None) -> HypothesisScan:
    """minimal_n plus whether the hypothesis keeps holding up to n_max"""
    n_max = settings.HYPOTHESIS_N_MAX if n_max is None else n_max
    holding = set(hypothesis_profile(theorem, spec, n_max, n_min=3))
    first = min(holding) if holding else None
    reason = None
    failing: List[int] = []
    if first is None:
        reason = "hypothesis fails for every n in 3..n_max"
        if theorem.number == 3 and not any(_diagonal_identity_holds(n, spec) for n in range(3, n_max + 1)):
            reason = "diagonal condition fails"
    else:
        failing = [n for n in range(first, n_max + 1) if n not in holding]
    logger.debug(
        "Hypothesis scan",
        theorem=theorem.value,
        index=spec.name,
        n_max=n_max,
        minimal_n=first,
    )
    return HypothesisScan(
        theorem=theorem,
        spec=spec,
        n_max=n_max,
        minimal_n=first,
        holds_through_n_max=first is not None and not failing,
        failing_after_minimal=failing,
        reason=reason,
    )


def theorem_statements(n: int, spec: PhiSpec) -> List[BoundStatement]:
    """A bound statement for every theorem variant whose hypothesis holds at n"""
    statements = []
    for theorem in TheoremVariant:
        if not check_hypothesis(theorem, n, spec).holds:
            continue
        # the only digraph with n0 = n and only (n-1,n-1)-arcs is the single arc
        tight_claimed = not (theorem == TheoremVariant.T2I and n > 2)
        # a zero anchor removes the n0 term, so equality no longer pins the class
        tight_claimed = tight_claimed and anchor_value(theorem, n, spec) > 0
        statements.append(BoundStatement(
            id=f"THM{theorem.value[1:]}",
            direction=theorem.direction,
            spec=spec,
            n=n,
            bound_value=bound_value(theorem, n, spec),
            applicability=f"hypothesis of {theorem.value} holds at n={n}",
            equality_class=theorem.equality_class,
            hypothesis=theorem,
            tight_claimed=tight_claimed,
        ))
    return statements
