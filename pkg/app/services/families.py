"""
Extremal digraph families and random digraphs
"""
from typing import Dict, List, Optional

import numpy as np
from pydantic import ValidationError
import structlog

from app.core.exceptions import DomainError, UnknownFamilyError
from app.models import Digraph, FamilyId, FamilyKind, PhiSpec, slot_pairs
from app.services.spectrum import has_isolated_vertex

logger = structlog.get_logger()


def make_family(kind: str, n: int) -> FamilyId:
    try:
        family_kind = FamilyKind(kind)
    except ValueError:
        raise UnknownFamilyError(kind)
    try:
        return FamilyId(kind=family_kind, n=n)
    except ValidationError as e:
        raise DomainError(e.errors()[0]["msg"], details={"family": kind, "n": n})


def construct(family: FamilyId) -> Digraph:
    """Literal arc set of a named family; vertex 0 is the center where there is one"""
    n = family.n
    kind = family.kind
    if kind == FamilyKind.STAR_OUT:
        arcs = [(0, v) for v in range(1, n)]
    elif kind == FamilyKind.STAR_IN:
        arcs = [(v, 0) for v in range(1, n)]
    elif kind == FamilyKind.SYM_STAR:
        arcs = [arc for v in range(1, n) for arc in ((0, v), (v, 0))]
    elif kind == FamilyKind.SINGLE_ARC:
        arcs = [(0, 1)]
    elif kind == FamilyKind.D1:
        arcs = [(0, 1), (1, 0)] + [(v, 0) for v in range(2, n)] + [(1, v) for v in range(2, n)]
    elif kind == FamilyKind.D2:
        arcs = [(0, 2), (0, 3), (1, 2), (1, 3)]
    elif kind == FamilyKind.D3:
        arcs = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (3, 1)]
    elif kind == FamilyKind.DICYCLE:
        arcs = list({(v, (v + 1) % n) for v in range(n)})
    else:
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
    return Digraph.from_arcs(n, arcs)


def family_index(family: FamilyId, spec: PhiSpec) -> float:
    """Closed-form index of a family, read off its degree spectrum"""
    n = family.n
    kind = family.kind
    phi = spec.evaluate
    if kind in (FamilyKind.STAR_OUT, FamilyKind.STAR_IN):
        return (n - 1) / 2 * phi(1, n - 1)
    if kind == FamilyKind.SYM_STAR:
        return (n - 1) * phi(1, n - 1)
    if kind == FamilyKind.SYM_COMPLETE:
        return n * (n - 1) / 2 * phi(n - 1, n - 1)
    if kind == FamilyKind.DICYCLE:
        return n / 2 * phi(1, 1)
    if kind == FamilyKind.SINGLE_ARC:
        return phi(1, 1) / 2
    if kind == FamilyKind.D1:
        # one (1,1)-arc, one (n-1,n-1)-arc, 2(n-2) arcs of type (1,n-1) or (n-1,1)
        return (phi(1, 1) + phi(n - 1, n - 1)) / 2 + (n - 2) * phi(1, n - 1)
    if kind == FamilyKind.D2:
        return 2 * phi(2, 2)
    # d3: two (1,1)-arcs and four (2,2)-arcs
    return phi(1, 1) + 2 * phi(2, 2)


def labeled_copies(family: FamilyId) -> List[Digraph]:
    """All n center choices of a star orientation"""
    if family.kind not in (FamilyKind.STAR_OUT, FamilyKind.STAR_IN):
        raise DomainError(f"labeled copies are generated for stars only, not {family.kind.value}")
    n = family.n
    copies = []
    for center in range(n):
        leaves = [v for v in range(n) if v != center]
        if family.kind == FamilyKind.STAR_OUT:
            copies.append(Digraph.from_arcs(n, [(center, v) for v in leaves]))
        else:
            copies.append(Digraph.from_arcs(n, [(v, center) for v in leaves]))
    return copies


def star_orientations(n: int) -> List[Digraph]:
    """Distinct labeled out- and in-stars on n vertices (2n of them for n >= 3)"""
    by_mask: Dict[int, Digraph] = {}
    for kind in (FamilyKind.STAR_OUT, FamilyKind.STAR_IN):
        for digraph in labeled_copies(FamilyId(kind=kind, n=n)):
            by_mask.setdefault(digraph.mask, digraph)
    return [by_mask[m] for m in sorted(by_mask)]


def random_nonisolated_digraph(
    n: int,
    rng: np.random.Generator,
    density: float = 0.5,
    max_tries: int = 10_000
) -> Digraph:
    """Random isolated-free digraph: each ordered pair is an arc with probability density"""
    if n < 2:
        raise DomainError("isolated-free digraphs need n >= 2")
    if not 0.0 < density <= 1.0:
        raise DomainError(f"density must be in (0, 1], got {density}")
    pairs = slot_pairs(n)
    for _ in range(max_tries):
        chosen = rng.random(len(pairs)) < density
        digraph = Digraph.from_arcs(n, [pair for pair, keep in zip(pairs, chosen) if keep])
        if not has_isolated_vertex(digraph):
            return digraph
    raise DomainError(f"no isolated-free digraph drawn in {max_tries} tries (n={n}, density={density})")


def random_corpus(
    count: int,
    seed: int,
    n_min: int = 2,
    n_max: int = 8,
    density: Optional[float] = None
) -> List[Digraph]:
    """Seeded list of random isolated-free digraphs with n_min <= n <= n_max"""
    rng = np.random.default_rng(seed)
    corpus = []
    for _ in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        p = density if density is not None else float(rng.uniform(0.2, 0.9))
        corpus.append(random_nonisolated_digraph(n, rng, p))
    logger.debug("Random corpus drawn", count=count, seed=seed)
    return corpus
