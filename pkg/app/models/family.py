"""
Named extremal digraph families
"""
import enum

from pydantic import BaseModel, ConfigDict, model_validator


class FamilyKind(str, enum.Enum):
    STAR_OUT = "star-out"
    STAR_IN = "star-in"
    SYM_STAR = "sym-star"
    SINGLE_ARC = "single-arc"
    D1 = "d1"
    D2 = "d2"
    D3 = "d3"
    DICYCLE = "dicycle"
    SYM_COMPLETE = "sym-complete"


# (min n, max n); None means unbounded
_N_RANGE = {
    FamilyKind.STAR_OUT: (2, None),
    FamilyKind.STAR_IN: (2, None),
    FamilyKind.SYM_STAR: (2, None),
    FamilyKind.SINGLE_ARC: (2, 2),
    FamilyKind.D1: (3, None),
    FamilyKind.D2: (4, 4),
    FamilyKind.D3: (4, 4),
    FamilyKind.DICYCLE: (2, None),
    FamilyKind.SYM_COMPLETE: (2, None),
}


class FamilyId(BaseModel):
    """A family kind at a concrete vertex count"""
    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    n: int

    @model_validator(mode="after")
    def check_n(self) -> "FamilyId":
        low, high = _N_RANGE[self.kind]
        if self.n < low or (high is not None and self.n > high):
            expected = f"n={low}" if low == high else f"n >= {low}"
            raise ValueError(f"{self.kind.value} requires {expected}, got n={self.n}")
        return self
