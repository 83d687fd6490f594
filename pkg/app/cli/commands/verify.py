"""
verify: catalog, hypothesis check, then the exhaustive oracle per statement
"""
import structlog

from app.cli.render import CommandResult, format_value, hex_masks, outcome_row, statement_row
from app.models import Command, RunConfig, parse_index_name
from app.services.catalog import corollary_catalog
from app.services.oracle import check_enumeration_n, verify_bound
from app.services.theorems import check_hypothesis, theorem_statements

logger = structlog.get_logger()


def run(config: RunConfig) -> CommandResult:
    n = config.n
    check_enumeration_n(n, config.allow_n6)
    spec = parse_index_name(config.index_name)
    statements = corollary_catalog(n, spec, config.n_max)
    if config.include_theorems:
        statements += theorem_statements(n, spec)
    if config.direction is not None:
        statements = [s for s in statements if s.search_direction == config.direction]

    rows = []
    skipped = []
    text = [f"{spec.name}, n = {n}"]
    consistent = True
    for statement in statements:
        if not check_hypothesis(statement.hypothesis, n, spec).holds:
            skipped.append(statement_row(statement))
            text.append(f"{statement.id}: skipped (hypothesis {statement.hypothesis.value} fails at n = {n})")
            continue
        outcome = verify_bound(
            n, statement, workers=config.workers, allow_large=config.allow_n6, dedup=config.dedup
        )
        rows.append(outcome_row(outcome))
        consistent = consistent and outcome.consistent
        verdict = "ok" if outcome.consistent else "INCONSISTENT"
        line = (
            f"{statement.id}: {statement.direction.value} bound {format_value(statement.bound_value)},"
            f" observed {format_value(outcome.observed_extremal)}"
            f" ({'tight' if outcome.tight else 'not tight'}),"
            f" attaining {outcome.attaining_count}, expected {outcome.expected_count} -> {verdict}"
        )
        text.append(line)
        if outcome.counterexamples:
            text.append(f"  counterexamples: {hex_masks(outcome.counterexamples)}")
        if outcome.canonical_attaining is not None:
            classes = outcome.canonical_attaining
            text.append(f"  isomorphism classes: {len(classes)} ({hex_masks(classes)})")

    logger.info("Verification run finished", index=spec.name, n=n, verified=len(rows), consistent=consistent)
    payload = {
        "index": spec.name,
        "n": n,
        "consistent": consistent,
        "outcomes": rows,
        "skipped": skipped,
    }
    return CommandResult(
        command=Command.VERIFY,
        payload=payload,
        rows=rows,
        text=text,
        consistent=consistent,
    )
