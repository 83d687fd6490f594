"""
Report rendering: key-sorted JSON, flat CSV rows and plain text
"""
from typing import Any, Dict, List
import json

import pandas as pd
from pydantic import BaseModel

from app.models import BoundStatement, Command, OutputFormat, VerificationOutcome


class CommandResult(BaseModel):
    """Everything a command produced, ready for any output format"""
    command: Command
    payload: Dict[str, Any]
    rows: List[Dict[str, Any]] = []
    text: List[str] = []
    consistent: bool = True


def format_value(value: float) -> str:
    return str(round(value, 12))


def hex_masks(masks: List[int]) -> str:
    return " ".join(f"{m:#x}" for m in masks)


def statement_row(statement: BoundStatement) -> Dict[str, Any]:
    return {
        "id": statement.id,
        "index": statement.spec.name,
        "n": statement.n,
        "direction": statement.direction.value,
        "bound_value": statement.bound_value,
        "equality_class": statement.equality_class.value,
        "hypothesis": statement.hypothesis.value,
        "tight_claimed": statement.tight_claimed,
        "conditional": statement.conditional,
        "minimal_n": statement.minimal_n,
        "applicability": statement.applicability,
    }


def outcome_row(outcome: VerificationOutcome) -> Dict[str, Any]:
    row = statement_row(outcome.statement)
    row.update({
        "hypothesis_holds": outcome.hypothesis_holds,
        "observed_extremal": outcome.observed_extremal,
        "bound_respected": outcome.bound_respected,
        "tight": outcome.tight,
        "equality_set_matches": outcome.equality_set_matches,
        "attaining_count": outcome.attaining_count,
        "expected_count": outcome.expected_count,
        "consistent": outcome.consistent,
        "counterexamples": hex_masks(outcome.counterexamples),
    })
    if outcome.canonical_attaining is not None:
        row["canonical_attaining"] = hex_masks(outcome.canonical_attaining)
    return row


def render(result: CommandResult, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.JSON:
        return json.dumps(result.payload, sort_keys=True, indent=2) + "\n"
    if output_format == OutputFormat.CSV:
        rows = result.rows or [result.payload]
        return pd.DataFrame(rows).to_csv(index=False)
    return "\n".join(result.text) + "\n"
