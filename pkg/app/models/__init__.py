"""
Domain models for the VDB digraph toolkit
"""
from app.models.digraph import Digraph, DegreeSpectrum, Condition, slot_index, slot_pairs
from app.models.phi import PhiSpec, PhiFamily, parse_index_name, INDEX_ALIASES, SHIPPED_INDEX_NAMES
from app.models.family import FamilyId, FamilyKind
from app.models.reports import (
    BoundDirection,
    BoundStatement,
    EqualityClass,
    ExtremalReport,
    HypothesisReport,
    HypothesisScan,
    SearchDirection,
    TheoremVariant,
    VerificationOutcome,
    Violation,
)
from app.models.run_config import Command, OutputFormat, RunConfig

__all__ = [
    "Digraph",
    "DegreeSpectrum",
    "Condition",
    "slot_index",
    "slot_pairs",
    "PhiSpec",
    "PhiFamily",
    "parse_index_name",
    "INDEX_ALIASES",
    "SHIPPED_INDEX_NAMES",
    "FamilyId",
    "FamilyKind",
    "BoundDirection",
    "BoundStatement",
    "EqualityClass",
    "ExtremalReport",
    "HypothesisReport",
    "HypothesisScan",
    "SearchDirection",
    "TheoremVariant",
    "VerificationOutcome",
    "Violation",
    "Command",
    "OutputFormat",
    "RunConfig",
]
