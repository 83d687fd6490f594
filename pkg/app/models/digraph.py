"""
Digraph and degree-spectrum models
"""
from typing import Dict, Iterable, List, Tuple
import enum

from pydantic import BaseModel, ConfigDict, Field, ValidationError, ValidationInfo, field_validator

from app.core.exceptions import InvalidDigraphError


Arc = Tuple[int, int]


def slot_index(n: int, u: int, v: int) -> int:
    """Bit position of arc uv: row-major over ordered pairs, diagonal skipped"""
    return u * (n - 1) + (v if v < u else v - 1)


def slot_pairs(n: int) -> List[Arc]:
    """Ordered pairs in slot order"""
    return [(u, v) for u in range(n) for v in range(n) if u != v]


class Digraph(BaseModel):
    """Strict loop-free digraph D = (V, A) with V = {0, ..., n-1}

    Arcs are kept sorted row-major, which is also the bitmask slot order, so a
    digraph built from an arc list and one built from a bitmask compare equal.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    arcs: Tuple[Arc, ...] = ()

    @field_validator("arcs")
    @classmethod
    def check_arcs(cls, v: Tuple[Arc, ...], info: ValidationInfo) -> Tuple[Arc, ...]:
        n = info.data.get("n")
        if n is None:
            return v
        seen = set()
        for u, w in v:
            if u == w:
                raise ValueError(f"loop arc ({u}, {w})")
            if not (0 <= u < n and 0 <= w < n):
                raise ValueError(f"arc ({u}, {w}) has a vertex id outside 0..{n - 1}")
            if (u, w) in seen:
                raise ValueError(f"duplicate arc ({u}, {w})")
            seen.add((u, w))
        return tuple(sorted(v))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> "Digraph":
        try:
            return cls(n=n, arcs=tuple((int(u), int(v)) for u, v in arcs))
        except ValidationError as e:
            raise InvalidDigraphError(
                "; ".join(err["msg"] for err in e.errors()),
                details={"n": n}
            )

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Digraph":
        if mask < 0 or mask >> (n * (n - 1)):
            raise InvalidDigraphError(f"mask {mask:#x} has bits outside the {n * (n - 1)} slots")
        arcs = [pair for s, pair in enumerate(slot_pairs(n)) if mask >> s & 1]
        return cls(n=n, arcs=tuple(arcs))

    @property
    def mask(self) -> int:
        value = 0
        for u, v in self.arcs:
            value |= 1 << slot_index(self.n, u, v)
        return value

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def out_degrees(self) -> Tuple[int, ...]:
        degrees = [0] * self.n
        for u, _ in self.arcs:
            degrees[u] += 1
        return tuple(degrees)

    def in_degrees(self) -> Tuple[int, ...]:
        degrees = [0] * self.n
        for _, v in self.arcs:
            degrees[v] += 1
        return tuple(degrees)

    def __repr__(self):
        return f"<Digraph(n={self.n}, arcs={len(self.arcs)}, mask={self.mask:#x})>"


class Condition(str, enum.Enum):
    """Extremal arc-type regimes"""
    COND5 = "cond5"  # only (1, n-1)-type arcs, n0 = 0
    COND6 = "cond6"  # only diagonal arcs, n0 = n
    COND7 = "cond7"  # only diagonal arcs, n0 = 0


class DegreeSpectrum(BaseModel):
    """Arc-type counts a_ij, symmetrized counts p_ij and degree-role counts n_i

    All maps are sparse: a missing key means a count of zero.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    arc_count: int
    a: Dict[Tuple[int, int], int]
    p: Dict[Tuple[int, int], int]
    n_class: Dict[int, int]

    def a_count(self, i: int, j: int) -> int:
        return self.a.get((i, j), 0)

    def p_count(self, i: int, j: int) -> int:
        """p(i, j) for either argument order"""
        if i > j:
            i, j = j, i
        return self.p.get((i, j), 0)

    def n_class_count(self, i: int) -> int:
        return self.n_class.get(i, 0)

    @property
    def n0(self) -> int:
        return self.n_class_count(0)

    def to_records(self) -> Dict[str, object]:
        """JSON-friendly view with the sparse maps flattened to sorted rows"""
        return {
            "n": self.n,
            "arc_count": self.arc_count,
            "a": [{"i": i, "j": j, "count": c} for (i, j), c in sorted(self.a.items())],
            "p": [{"i": i, "j": j, "count": c} for (i, j), c in sorted(self.p.items())],
            "n_class": [{"i": i, "count": c} for i, c in sorted(self.n_class.items())],
        }
