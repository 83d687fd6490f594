"""
bounds: catalogued bound statements applicable at n
"""
from app.cli.render import CommandResult, format_value, statement_row
from app.models import Command, RunConfig, parse_index_name
from app.services.catalog import corollary_catalog
from app.services.theorems import check_hypothesis, theorem_statements


def run(config: RunConfig) -> CommandResult:
    spec = parse_index_name(config.index_name)
    statements = corollary_catalog(config.n, spec, config.n_max)
    if config.include_theorems:
        statements += theorem_statements(config.n, spec)
    if config.direction is not None:
        statements = [s for s in statements if s.search_direction == config.direction]

    rows = []
    text = [f"{spec.name}, n = {config.n}: {len(statements)} statement(s)"]
    for statement in statements:
        holds = check_hypothesis(statement.hypothesis, config.n, spec).holds
        rows.append({**statement_row(statement), "hypothesis_holds": holds})
        flags = [] if statement.tight_claimed else ["not claimed tight"]
        if statement.conditional:
            flags.append(f"conditional, minimal n = {statement.minimal_n}")
        text.append(
            f"{statement.id}: {statement.direction.value} bound {format_value(statement.bound_value)}"
            f" [{statement.equality_class.value}] hypothesis {statement.hypothesis.value}"
            f" {'holds' if holds else 'fails'}" + (f" ({'; '.join(flags)})" if flags else "")
        )

    payload = {
        "index": spec.name,
        "n": config.n,
        "statements": rows,
    }
    return CommandResult(command=Command.BOUNDS, payload=payload, rows=rows, text=text)
