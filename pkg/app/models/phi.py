"""
VDB index families: the symmetric weight function phi(i, j)
"""
from typing import Callable, Dict, List, Optional
import enum
import math

from pydantic import BaseModel, ConfigDict, model_validator

from app.core.exceptions import DomainError, UnknownIndexError


class PhiFamily(str, enum.Enum):
    """Index family"""
    GENERAL_RANDIC = "general-randic"
    GENERAL_SUMCONN = "general-sumconn"
    GA = "ga"
    ABC = "abc"
    HARMONIC = "harmonic"


PhiFunction = Callable[[int, int, Optional[float]], float]


def _general_randic(i: int, j: int, alpha: Optional[float]) -> float:
    return float(i * j) ** alpha


def _general_sumconn(i: int, j: int, alpha: Optional[float]) -> float:
    return float(i + j) ** alpha


def _ga(i: int, j: int, alpha: Optional[float]) -> float:
    return math.sqrt(i * j) / ((i + j) / 2)


def _abc(i: int, j: int, alpha: Optional[float]) -> float:
    return math.sqrt((i + j - 2) / (i * j))


def _harmonic(i: int, j: int, alpha: Optional[float]) -> float:
    return 2 / (i + j)


# Every entry must be symmetric and non-negative on positive integers
PHI_FUNCTIONS: Dict[PhiFamily, PhiFunction] = {
    PhiFamily.GENERAL_RANDIC: _general_randic,
    PhiFamily.GENERAL_SUMCONN: _general_sumconn,
    PhiFamily.GA: _ga,
    PhiFamily.ABC: _abc,
    PhiFamily.HARMONIC: _harmonic,
}

ALPHA_FAMILIES = (PhiFamily.GENERAL_RANDIC, PhiFamily.GENERAL_SUMCONN)

# CLI prefix for the parameterised families
_PREFIXES = {
    "randic": PhiFamily.GENERAL_RANDIC,
    "sumconn": PhiFamily.GENERAL_SUMCONN,
}


class PhiSpec(BaseModel):
    """A VDB index: family plus the exponent alpha for the general families"""
    model_config = ConfigDict(frozen=True)

    family: PhiFamily
    alpha: Optional[float] = None

    @model_validator(mode="after")
    def check_alpha(self) -> "PhiSpec":
        if self.family in ALPHA_FAMILIES:
            if self.alpha is None or not math.isfinite(self.alpha):
                raise ValueError(f"{self.family.value} needs a finite alpha")
        elif self.alpha is not None:
            raise ValueError(f"{self.family.value} takes no alpha")
        return self

    def evaluate(self, i: int, j: int) -> float:
        if i < 1 or j < 1:
            raise DomainError(f"phi is defined for degrees >= 1, got ({i}, {j})")
        return PHI_FUNCTIONS[self.family](i, j, self.alpha)

    @property
    def name(self) -> str:
        """CLI name; aliases win over the prefixed form"""
        for alias, spec in INDEX_ALIASES.items():
            if spec == self:
                return alias
        if self.family in ALPHA_FAMILIES:
            prefix = next(k for k, v in _PREFIXES.items() if v == self.family)
            return f"{prefix}:{self.alpha:g}"
        return self.family.value

    @property
    def integral_alpha(self) -> Optional[int]:
        """alpha as an int when the family takes integer values for it"""
        if self.family in ALPHA_FAMILIES and self.alpha >= 0 and float(self.alpha).is_integer():
            return int(self.alpha)
        return None

    def __repr__(self):
        return f"<PhiSpec({self.name})>"


def general_randic(alpha: float) -> PhiSpec:
    return PhiSpec(family=PhiFamily.GENERAL_RANDIC, alpha=alpha)


def general_sumconn(alpha: float) -> PhiSpec:
    return PhiSpec(family=PhiFamily.GENERAL_SUMCONN, alpha=alpha)


INDEX_ALIASES: Dict[str, PhiSpec] = {
    "harmonic": PhiSpec(family=PhiFamily.HARMONIC),
    "ga": PhiSpec(family=PhiFamily.GA),
    "abc": PhiSpec(family=PhiFamily.ABC),
    "randic": general_randic(-0.5),
    "zagreb2": general_randic(1.0),
    "mzagreb2": general_randic(-1.0),
    "sumconn": general_sumconn(-0.5),
    "zagreb1": general_sumconn(1.0),
}

SHIPPED_INDEX_NAMES: List[str] = [
    "harmonic",
    "ga",
    "abc",
    "randic",
    "sumconn",
    "zagreb1",
    "zagreb2",
    "mzagreb2",
    "sumconn:-1",
]


def parse_index_name(name: str) -> PhiSpec:
    """Resolve `harmonic`, `randic:-0.25`, ... to a PhiSpec"""
    key = name.strip()
    if key in INDEX_ALIASES:
        return INDEX_ALIASES[key]
    prefix, sep, raw_alpha = key.partition(":")
    if not sep or prefix not in _PREFIXES:
        raise UnknownIndexError(name)
    try:
        alpha = float(raw_alpha)
    except ValueError:
        raise UnknownIndexError(name)
    if not math.isfinite(alpha):
        raise UnknownIndexError(name)
    return PhiSpec(family=_PREFIXES[prefix], alpha=alpha)
