"""
Report models for the theorem verifier and the exhaustive oracle
"""
from typing import List, Optional
import enum
import math

from pydantic import BaseModel, ConfigDict, computed_field, field_serializer, field_validator

from app.models.phi import PhiSpec


class BoundDirection(str, enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


class SearchDirection(str, enum.Enum):
    MIN = "min"
    MAX = "max"


class EqualityClass(str, enum.Enum):
    """Digraphs a bound statement claims to be attained by"""
    STAR_ORIENTATIONS = "star-orientations"
    COND5 = "cond5"
    COND6 = "cond6"
    COND7 = "cond7"
    SINGLE_ARC = "single-arc"
    SYM_COMPLETE = "sym-complete"
    NONE_STATED = "none-stated"


class TheoremVariant(str, enum.Enum):
    """Extremal theorem variant: i gives a lower bound, ii an upper bound"""
    T1I = "T1i"
    T1II = "T1ii"
    T2I = "T2i"
    T2II = "T2ii"
    T3I = "T3i"
    T3II = "T3ii"

    @property
    def direction(self) -> BoundDirection:
        return BoundDirection.UPPER if self.value.endswith("ii") else BoundDirection.LOWER

    @property
    def number(self) -> int:
        return int(self.value[1])

    @property
    def equality_class(self) -> EqualityClass:
        return _THEOREM_EQUALITY[self]

    @classmethod
    def parse(cls, raw: str) -> "TheoremVariant":
        key = raw.strip()
        if not key.upper().startswith("T"):
            key = "T" + key
        key = "T" + key[1:].lower()
        return cls(key)


_THEOREM_EQUALITY = {
    TheoremVariant.T1I: EqualityClass.STAR_ORIENTATIONS,
    TheoremVariant.T1II: EqualityClass.COND5,
    TheoremVariant.T2I: EqualityClass.SINGLE_ARC,
    TheoremVariant.T2II: EqualityClass.SYM_COMPLETE,
    TheoremVariant.T3I: EqualityClass.COND6,
    TheoremVariant.T3II: EqualityClass.COND7,
}


class Violation(BaseModel):
    """Grid point where the strict hypothesis inequality fails"""
    i: int
    j: int
    phi_value: float
    threshold_value: float


class HypothesisReport(BaseModel):
    """Result of scanning a theorem's hypothesis grid at one n"""
    theorem: TheoremVariant
    n: int
    spec: PhiSpec
    holds: bool
    violations: List[Violation] = []
    diagonal_ok: Optional[bool] = None


class HypothesisScan(BaseModel):
    """minimal_n search over n = 3..n_max"""
    theorem: TheoremVariant
    spec: PhiSpec
    n_max: int
    minimal_n: Optional[int] = None
    holds_through_n_max: bool = False
    failing_after_minimal: List[int] = []
    reason: Optional[str] = None


class BoundStatement(BaseModel):
    """One theorem/corollary instance at a fixed n"""
    model_config = ConfigDict(frozen=True)

    id: str
    direction: BoundDirection
    spec: PhiSpec
    n: int
    bound_value: float
    applicability: str
    equality_class: EqualityClass
    hypothesis: TheoremVariant
    tight_claimed: bool = True
    conditional: bool = False
    minimal_n: Optional[int] = None

    @field_validator("bound_value")
    @classmethod
    def check_finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("bound value must be finite")
        return v

    @property
    def search_direction(self) -> SearchDirection:
        return SearchDirection.MIN if self.direction == BoundDirection.LOWER else SearchDirection.MAX


class ExtremalReport(BaseModel):
    """Exact extremum of an index over all isolated-free digraphs on n vertices"""
    n: int
    spec: PhiSpec
    direction: SearchDirection
    extremal_value: float
    attaining: List[int]
    enumerated_count: int
    tie_tolerance: float
    canonical_attaining: Optional[List[int]] = None

    @field_serializer("attaining", when_used="json")
    def serialize_attaining(self, masks: List[int]) -> List[str]:
        return [f"{m:#x}" for m in masks]

    @field_serializer("canonical_attaining", when_used="json")
    def serialize_canonical(self, masks: Optional[List[int]]) -> Optional[List[str]]:
        if masks is None:
            return None
        return [f"{m:#x}" for m in masks]


class VerificationOutcome(BaseModel):
    """Oracle verdict on a bound statement"""
    statement: BoundStatement
    hypothesis_holds: bool
    observed_extremal: float
    bound_respected: bool
    tight: bool
    equality_set_matches: bool
    attaining_count: int
    expected_count: int
    counterexamples: List[int] = []
    canonical_attaining: Optional[List[int]] = None

    @field_serializer("counterexamples", when_used="json")
    def serialize_counterexamples(self, masks: List[int]) -> List[str]:
        return [f"{m:#x}" for m in masks]

    @field_serializer("canonical_attaining", when_used="json")
    def serialize_canonical(self, masks: Optional[List[int]]) -> Optional[List[str]]:
        return None if masks is None else [f"{m:#x}" for m in masks]

    @computed_field
    @property
    def consistent(self) -> bool:
        if not self.bound_respected:
            return False
        if self.statement.tight_claimed:
            return self.equality_set_matches
        return True
