"""
Degrees, degree spectrum and extremal-condition classification
"""
from collections import Counter
from typing import FrozenSet, Iterable, List, Tuple

import structlog

from app.core.exceptions import DomainError, InvalidDigraphError, IsolatedVertexError
from app.models import Condition, DegreeSpectrum, Digraph

logger = structlog.get_logger()


def out_degree(digraph: Digraph, u: int) -> int:
    """Number of arcs with tail u"""
    _check_vertex(digraph, u)
    return sum(1 for tail, _ in digraph.arcs if tail == u)


def in_degree(digraph: Digraph, u: int) -> int:
    """Number of arcs with head u"""
    _check_vertex(digraph, u)
    return sum(1 for _, head in digraph.arcs if head == u)


def _check_vertex(digraph: Digraph, u: int) -> None:
    if not 0 <= u < digraph.n:
        raise DomainError(f"vertex {u} outside 0..{digraph.n - 1}", details={"vertex": u, "n": digraph.n})


def isolated_vertices(digraph: Digraph) -> List[int]:
    outs, ins = digraph.out_degrees(), digraph.in_degrees()
    return [v for v in range(digraph.n) if outs[v] == 0 and ins[v] == 0]


def has_isolated_vertex(digraph: Digraph) -> bool:
    return bool(isolated_vertices(digraph))


def require_no_isolated(digraph: Digraph) -> None:
    isolated = isolated_vertices(digraph)
    if isolated:
        raise IsolatedVertexError(isolated[0], digraph.n)


def degree_spectrum(digraph: Digraph) -> DegreeSpectrum:
    """Count (i, j)-arcs and degree roles of an isolated-free digraph"""
    require_no_isolated(digraph)
    outs, ins = digraph.out_degrees(), digraph.in_degrees()

    a = Counter((outs[u], ins[v]) for u, v in digraph.arcs)
    p: Counter = Counter()
    for (i, j), count in a.items():
        p[(min(i, j), max(i, j))] += count

    # one role per vertex for its out-degree and one for its in-degree
    n_class = Counter(outs) + Counter(ins)
    return DegreeSpectrum(
        n=digraph.n,
        arc_count=digraph.arc_count,
        a=dict(a),
        p=dict(p),
        n_class=dict(n_class),
    )


def spectrum_identity_violations(spectrum: DegreeSpectrum) -> List[str]:
    """Names of the spectrum identities that fail; empty when all hold

    Exact integer arithmetic throughout.
    """
    n = spectrum.n
    violations = []
    for i in range(1, n):
        lhs = sum(spectrum.p_count(i, j) for j in range(1, n)) + spectrum.p_count(i, i)
        if lhs != i * spectrum.n_class_count(i):
            violations.append(f"degree-role sum at i={i}")
    if sum(spectrum.n_class_count(i) for i in range(1, n)) != 2 * n - spectrum.n0:
        violations.append("degree-role total")
    if sum(spectrum.a.values()) != spectrum.arc_count:
        violations.append("arc total")
    for i in range(1, n):
        for j in range(i, n):
            expected = spectrum.a_count(i, i) if i == j else spectrum.a_count(i, j) + spectrum.a_count(j, i)
            if spectrum.p_count(i, j) != expected:
                violations.append(f"symmetrized count at ({i}, {j})")
    return violations


def classify_spectrum(spectrum: DegreeSpectrum) -> FrozenSet[Condition]:
    n = spectrum.n
    present = [pair for pair, count in spectrum.p.items() if count]
    off_diagonal = any(i < j for i, j in present)
    conditions = set()
    if spectrum.n0 == 0 and all(pair == (1, n - 1) for pair in present):
        conditions.add(Condition.COND5)
    if not off_diagonal and spectrum.n0 == n:
        conditions.add(Condition.COND6)
    if not off_diagonal and spectrum.n0 == 0:
        conditions.add(Condition.COND7)
    return frozenset(conditions)


def classify_condition(digraph: Digraph) -> FrozenSet[Condition]:
    """Which of the extremal arc-type regimes the digraph satisfies"""
    return classify_spectrum(degree_spectrum(digraph))


def symmetrize(edges: Iterable[Tuple[int, int]], n: int) -> Digraph:
    """Symmetric digraph of a simple graph: each edge becomes two opposite arcs"""
    pairs = set()
    for u, v in edges:
        if u == v:
            raise InvalidDigraphError(f"loop edge {{{u}, {v}}}")
        pairs.add((min(u, v), max(u, v)))
    arcs = [arc for u, v in sorted(pairs) for arc in ((u, v), (v, u))]
    return Digraph.from_arcs(n, arcs)
